#include "qcox/factor_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qcox/lengths.hpp"
#include "qcox/pqc_rgs.hpp"

namespace qcox {

using boost::multiprecision::cpp_rational;

namespace {

big_int factorial(long long n) {
  big_int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

big_int int_pow(big_int base, long long e) {
  big_int r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

cpp_rational rat_pow(const cpp_rational& base, long long e) {
  cpp_rational r = 1;
  for (long long i = 0; i < std::llabs(e); ++i) r *= base;
  if (e < 0) {
    if (r == 0) throw error("zero to a negative power");
    r = 1 / r;
  }
  return r;
}

big_int to_integer(const cpp_rational& r, const char* what) {
  if (denominator(r) != 1) throw error(std::string(what) + " is not integral");
  return numerator(r);
}

big_int multinomial(const std::vector<int>& parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  big_int r = factorial(total);
  for (int p : parts) r /= factorial(p);
  return r;
}

}  // namespace

std::vector<std::vector<reflection>> enumerate_reduced(const element& g,
                                                       int depth_cap) {
  const auto& gp = g.params();
  const int total = refl_length(g);
  if (total > depth_cap) throw cap_error("reflection length exceeds depth cap");
  auto refls = all_reflections(gp);
  std::vector<element> relems;
  for (const auto& r : refls) relems.push_back(reflection_element(r, gp));

  std::vector<std::vector<reflection>> out;
  std::vector<reflection> current;
  auto dfs = [&](auto&& self, const element& rest, int len) -> void {
    if (len == 0) {
      out.push_back(current);
      return;
    }
    for (size_t i = 0; i < refls.size(); ++i) {
      element next = multiply(inverse(relems[i]), rest);
      if (refl_length(next) == len - 1) {
        current.push_back(refls[i]);
        self(self, next, len - 1);
        current.pop_back();
      }
    }
  };
  dfs(dfs, g, total);
  return out;
}

big_int count_reduced(const element& g) {
  const auto& gp = g.params();
  auto refls = all_reflections(gp);
  std::vector<element> relems;
  for (const auto& r : refls) relems.push_back(reflection_element(r, gp));
  std::map<element, big_int> memo;
  auto count = [&](auto&& self, const element& rest, int len) -> big_int {
    if (len == 0) return 1;
    auto found = memo.find(rest);
    if (found != memo.end()) return found->second;
    big_int total = 0;
    for (const auto& t : relems) {
      element next = multiply(inverse(t), rest);
      if (refl_length(next) == len - 1) total += self(self, next, len - 1);
    }
    memo.emplace(rest, total);
    return total;
  };
  return count(count, g, refl_length(g));
}

generalized_cycle_decomposition generalized_cycles(const element& g) {
  const auto& gp = g.params();
  if (!is_parabolic_qc(g).is_pqc)
    throw domain_error("generalized cycles need a parabolic quasi-Coxeter element");
  auto cc = cycles_of(g);
  generalized_cycle_decomposition out;
  std::vector<const colored_cycle*> nonzero;
  auto restrict_to = [&](const std::vector<int>& support) {
    std::vector<int> perm(gp.n), colors(gp.n, 0);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i : support) {
      perm[i] = g.perm()[i];
      colors[i] = g.colors()[i];
    }
    return element(gp, std::move(perm), std::move(colors));
  };
  for (const auto& c : cc.cycles) {
    if (c.color == 0 && c.length == 1) continue;  // fixed point
    if (c.color != 0 && gp.p == gp.m && gp.m > 1) {
      nonzero.push_back(&c);
      continue;
    }
    std::vector<int> support = c.support;
    std::sort(support.begin(), support.end());
    element restricted = restrict_to(support);
    if (c.color == 0)
      out.components.push_back({generalized_cycle::tag_t::symmetric_cycle,
                                std::move(support), std::move(restricted),
                                c.length - 1});
    else
      out.components.push_back({generalized_cycle::tag_t::single_colored_cycle,
                                std::move(support), std::move(restricted),
                                c.length});
  }
  if (!nonzero.empty()) {
    std::vector<int> support;
    for (const auto* c : nonzero)
      support.insert(support.end(), c->support.begin(), c->support.end());
    std::sort(support.begin(), support.end());
    element restricted = restrict_to(support);
    const int len = static_cast<int>(support.size());
    out.components.push_back({generalized_cycle::tag_t::colored_pair,
                              std::move(support), std::move(restricted), len});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const generalized_cycle& a, const generalized_cycle& b) {
              return a.support.front() < b.support.front();
            });
  return out;
}

namespace {

// closed form for one generalized cycle living in its own small group
big_int fred_of_component(const generalized_cycle& comp, int m) {
  const int size = static_cast<int>(comp.support.size());
  switch (comp.tag) {
    case generalized_cycle::tag_t::symmetric_cycle:
      return to_integer(rat_pow(size, size - 2), "fred");
    case generalized_cycle::tag_t::single_colored_cycle:
      return int_pow(size, size);
    default: {
      // two cycle lengths a, b inside the pair
      auto cc = cycles_of(comp.restricted);
      std::vector<int> lens;
      for (const auto& c : cc.cycles)
        if (c.color != 0) lens.push_back(c.length);
      int a = lens.at(0), b = lens.at(1);
      big_int r = m * (size - 1);
      r *= multinomial({a - 1, b - 1});
      r *= int_pow(a, a);
      r *= int_pow(b, b);
      return r;
    }
  }
}

}  // namespace

big_int fred_formula_qc(const element& g) {
  const auto& gp = g.params();
  auto verdict = is_parabolic_qc(g);
  if (!verdict.is_qc)
    throw domain_error("fred_formula_qc needs a quasi-Coxeter element");
  if (gp.rank() == 0) return 1;
  if (gp.m == 1)
    return to_integer(rat_pow(gp.n, gp.n - 2), "fred");
  if (gp.p == 1) return int_pow(gp.n, gp.n);
  auto cc = cycles_of(g);
  int a = cc.cycles[0].length, b = cc.cycles[1].length;
  big_int r = gp.m * (gp.n - 1);
  r *= multinomial({a - 1, b - 1});
  r *= int_pow(a, a);
  r *= int_pow(b, b);
  return r;
}

big_int fred_formula_pqc(const element& g) {
  const auto& gp = g.params();
  if (!is_parabolic_qc(g).is_pqc)
    throw domain_error("fred_formula_pqc needs a parabolic quasi-Coxeter element");
  auto decomp = generalized_cycles(g);
  std::vector<int> lens;
  big_int prod = 1;
  for (const auto& comp : decomp.components) {
    lens.push_back(comp.refl_len);
    prod *= fred_of_component(comp, gp.m);
  }
  return multinomial(lens) * prod;
}

std::vector<std::vector<reflection>> enumerate_full_min(const element& g,
                                                        long long closure_cap,
                                                        int depth_cap) {
  const auto& gp = g.params();
  const int total = full_refl_length(g);
  if (total > depth_cap) throw cap_error("full length exceeds depth cap");
  auto elems = enumerate_group(gp, closure_cap);
  std::map<element, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], (int)i);

  auto refls = all_reflections(gp);
  std::vector<element> relems, rinv;
  for (const auto& r : refls) {
    relems.push_back(reflection_element(r, gp));
    rinv.push_back(inverse(relems.back()));
  }

  // reflection length of every element, breadth first (valid for every p)
  std::vector<int> dist(elems.size(), -1);
  {
    std::vector<int> frontier{index.at(element::identity(gp))};
    dist[frontier[0]] = 0;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (const auto& t : relems) {
          int y = index.at(multiply(elems[x], t));
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }

  const long long order = static_cast<long long>(elems.size());
  std::map<std::vector<int>, bool> closure_memo;
  auto generates = [&](std::vector<int> used) {
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto found = closure_memo.find(used);
    if (found != closure_memo.end()) return found->second;
    std::vector<element> gens;
    for (int i : used) gens.push_back(relems[i]);
    bool full = gens.empty()
                    ? order == 1
                    : subgroup_closure(gens, order).order() == order;
    closure_memo.emplace(std::move(used), full);
    return full;
  };

  std::vector<std::vector<reflection>> out;
  std::vector<int> current;
  auto dfs = [&](auto&& self, const element& rest, int slots) -> void {
    if (slots == 0) {
      if (rest.is_identity() && generates(current)) {
        std::vector<reflection> tuple;
        for (int i : current) tuple.push_back(refls[i]);
        out.push_back(std::move(tuple));
      }
      return;
    }
    for (size_t i = 0; i < refls.size(); ++i) {
      element next = multiply(rinv[i], rest);
      if (dist[index.at(next)] <= slots - 1) {
        current.push_back(static_cast<int>(i));
        self(self, next, slots - 1);
        current.pop_back();
      }
    }
  };
  dfs(dfs, g, total);
  return out;
}

big_int hurwitz_number(const std::vector<int>& lambda) {
  if (lambda.empty()) throw domain_error("empty cycle type");
  long long n = 0;
  for (int part : lambda) {
    if (part < 1) throw domain_error("cycle type parts must be positive");
    n += part;
  }
  const long long k = static_cast<long long>(lambda.size());
  cpp_rational h = rat_pow(n, k - 3);
  h *= factorial(n + k - 2);
  for (int part : lambda) {
    h *= int_pow(part, part);
    h /= factorial(part - 1);
  }
  return to_integer(h, "Hurwitz number");
}

big_int dps_cacti_count(const std::vector<long long>& mvec) {
  if (mvec.empty()) throw domain_error("empty polygon type");
  long long n = 0, k = 0;
  for (size_t i = 0; i < mvec.size(); ++i) {
    if (mvec[i] < 0) throw domain_error("polygon multiplicities must be >= 0");
    n += static_cast<long long>(i + 1) * mvec[i];
    k += mvec[i];
  }
  if (k < 1) throw domain_error("need at least one polygon");
  big_int multi = factorial(k);
  for (long long c : mvec) multi /= factorial(c);
  cpp_rational r = cpp_rational(multi) / k * rat_pow(n, k - 1);
  return to_integer(r, "cactus count");
}

bool dps_identity_check(const std::vector<long long>& mvec) {
  long long n = 0, k = 0;
  std::vector<big_int> lambda;
  for (size_t i = 0; i < mvec.size(); ++i) {
    n += static_cast<long long>(i + 1) * mvec[i];
    k += mvec[i];
    for (long long c = 0; c < mvec[i]; ++c)
      lambda.push_back(static_cast<long long>(i + 1));
  }
  if (k < 1) throw domain_error("need at least one polygon");
  big_int multi = factorial(k);
  for (long long c : mvec) multi /= factorial(c);
  big_int prod_lambda = 1;
  for (const auto& part : lambda) prod_lambda *= part;
  // relative trees and cacti count the same tree sum, up to a root choice
  big_int lhs = big_int(n) * multi * weighted_cayley(lambda);
  big_int rhs = big_int(k) * prod_lambda * dps_cacti_count(mvec);
  return lhs == rhs;
}

exponent_vector exponents(const element& g) {
  const int m = g.params().m;
  // rotation numbers (c + t m) / (m len) per cycle
  std::vector<std::pair<long long, long long>> rots;
  long long order = 1;
  for (const auto& c : cycles_of(g).cycles) {
    for (int t = 0; t < c.length; ++t) {
      long long num = c.color + static_cast<long long>(t) * m;
      long long den = static_cast<long long>(m) * c.length;
      long long q = std::gcd(num, den);
      if (num == 0)
        den = 1;
      else {
        num /= q;
        den /= q;
      }
      rots.emplace_back(num, den);
      order = std::lcm(order, den);
    }
  }
  exponent_vector out;
  out.order = order;
  for (auto [num, den] : rots) out.exponents.push_back(num * (order / den));
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

regular_fred_report regular_fred_check_Dn(int n) {
  if (n < 2 || n % 2 != 0)
    throw domain_error("the class D_n(n/2,n/2) needs even n >= 2");
  group_params gp{2, 2, n};
  const int half = n / 2;
  std::vector<int> perm(n), colors(n, 0);
  for (int i = 0; i < half; ++i) perm[i] = (i + 1) % half;
  for (int i = 0; i < half; ++i) perm[half + i] = half + (i + 1) % half;
  colors[0] = 1;
  colors[half] = 1;
  element g(gp, std::move(perm), std::move(colors));

  regular_fred_report report;
  report.fred = fred_formula_qc(g);
  auto ev = exponents(g);
  big_int denom = 1;
  for (long long e : ev.exponents) denom *= e + 1;
  cpp_rational base = rat_pow(ev.order, n) * factorial(n) / cpp_rational(denom);
  report.base = to_integer(base, "regular base count");
  if (report.fred % report.base != 0)
    throw error("regular base does not divide the factorization count");
  report.delta = report.fred / report.base;
  return report;
}

}  // namespace qcox
