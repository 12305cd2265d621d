#include "qcox/hurwitz.hpp"

#include <algorithm>
#include <set>

#include "qcox/factor_enum.hpp"

namespace qcox {

factor_tuple::factor_tuple(group_params params, std::vector<element> refls)
    : gp(params), factors(std::move(refls)) {
  for (const auto& f : factors) {
    if (f.params() != gp) throw domain_error("factor from a different group");
    if (!as_reflection(f)) throw domain_error("factor is not a reflection");
  }
}

element factor_tuple::product() const {
  element acc = element::identity(gp);
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

factor_tuple braid_act(int i, const factor_tuple& t, bool inverse) {
  const auto& fs = t.factors;
  if (i < 1 || i >= static_cast<int>(fs.size()))
    throw domain_error("braid generator index out of range");
  std::vector<element> next(fs);
  const element& a = fs[i - 1];
  const element& b = fs[i];
  if (!inverse) {
    // (..., a, b, ...) -> (..., b, b^{-1} a b, ...)
    next[i - 1] = b;
    next[i] = multiply(multiply(::qcox::inverse(b), a), b);
  } else {
    // (..., a, b, ...) -> (..., a b a^{-1}, a, ...)
    next[i - 1] = multiply(multiply(a, b), ::qcox::inverse(a));
    next[i] = a;
  }
  return factor_tuple(t.gp, std::move(next));
}

std::vector<factor_tuple> hurwitz_orbit(const factor_tuple& t, long long cap) {
  std::set<factor_tuple> seen{t};
  std::vector<factor_tuple> frontier{t};
  const int len = static_cast<int>(t.factors.size());
  while (!frontier.empty()) {
    std::vector<factor_tuple> next;
    for (const auto& cur : frontier)
      for (int i = 1; i < len; ++i)
        for (bool inv : {false, true}) {
          factor_tuple moved = braid_act(i, cur, inv);
          if (seen.insert(moved).second) {
            if (static_cast<long long>(seen.size()) > cap)
              throw cap_error("Hurwitz orbit exceeds cap");
            next.push_back(std::move(moved));
          }
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_hurwitz_transitive_on_reduced(const element& g, long long cap) {
  auto reduced = enumerate_reduced(g);
  const auto& gp = g.params();
  auto lift = [&](const std::vector<reflection>& rs) {
    std::vector<element> fs;
    for (const auto& r : rs) fs.push_back(reflection_element(r, gp));
    return factor_tuple(gp, std::move(fs));
  };
  auto orbit = hurwitz_orbit(lift(reduced.front()), cap);
  if (orbit.size() != reduced.size()) return false;
  std::vector<factor_tuple> all;
  all.reserve(reduced.size());
  for (const auto& rs : reduced) all.push_back(lift(rs));
  std::sort(all.begin(), all.end());
  return std::equal(orbit.begin(), orbit.end(), all.begin(), all.end());
}

}  // namespace qcox
