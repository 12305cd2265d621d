#include "qcox/pqc_rgs.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "qcox/lengths.hpp"

namespace qcox {

using boost::multiprecision::cpp_rational;

bool subgroup::contains(const element& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

subgroup subgroup_closure(const std::vector<element>& gens, long long cap) {
  if (gens.empty()) throw domain_error("closure needs the ambient group; pass at least the identity");
  const group_params gp = gens.front().params();
  for (const auto& g : gens)
    if (g.params() != gp) throw domain_error("generators live in different groups");
  std::vector<element> step;
  for (const auto& g : gens) {
    step.push_back(g);
    step.push_back(inverse(g));
  }
  std::set<element> members{element::identity(gp)};
  std::vector<element> work(members.begin(), members.end());
  while (!work.empty()) {
    element x = work.back();
    work.pop_back();
    for (const auto& s : step) {
      element y = multiply(s, x);
      if (members.insert(y).second) {
        if (static_cast<long long>(members.size()) > cap)
          throw cap_error("subgroup closure exceeds cap");
        work.push_back(y);
      }
    }
  }
  return subgroup{std::vector<element>(members.begin(), members.end())};
}

big_int parabolic_type::order() const {
  big_int o = 1;
  if (nonreal) {
    for (int i = 0; i < nonreal->n; ++i) o *= nonreal->m;
    for (int i = 2; i <= nonreal->n; ++i) o *= i;
    o /= nonreal->p;
  }
  for (int l : symmetric_parts)
    for (int i = 2; i <= l; ++i) o *= i;
  return o;
}

parabolic_type parabolic_closure_type(const element& g) {
  const auto& gp = g.params();
  if (!gp.well_generated())
    throw domain_error("parabolic closure types need p = 1 or p = m");
  auto cc = cycles_of(g);
  std::vector<std::vector<int>> blocks;
  std::vector<int> merged;
  std::vector<int> parts;
  for (const auto& c : cc.cycles) {
    if (c.color == 0) {
      parts.push_back(c.length);
      std::vector<int> b = c.support;
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    } else {
      merged.insert(merged.end(), c.support.begin(), c.support.end());
    }
  }
  parabolic_type out{
      std::nullopt, {}, set_partition::discrete(gp.n), codim_fixed(g)};
  if (!merged.empty()) {
    out.nonreal = group_params{gp.m, gp.p, static_cast<int>(merged.size())};
    std::sort(merged.begin(), merged.end());
    blocks.push_back(std::move(merged));
  }
  std::sort(parts.rbegin(), parts.rend());
  out.symmetric_parts = std::move(parts);
  out.pi = set_partition(gp.n, std::move(blocks));
  return out;
}

namespace {

// phase along a cycle: phi(start) = 0, phi(u(i)) = phi(i) + a_i
std::vector<int> cycle_phases(const element& g) {
  const int m = g.params().m;
  std::vector<int> phi(g.params().n, 0);
  for (const auto& c : cycles_of(g).cycles) {
    int acc = 0;
    for (int i : c.support) {
      phi[i] = acc;
      acc = (acc + g.colors()[i]) % m;
    }
  }
  return phi;
}

}  // namespace

bool parabolic_closure_contains(const element& g, const element& w) {
  if (g.params() != w.params())
    throw domain_error("elements live in different groups");
  const int m = g.params().m;
  auto phi = cycle_phases(g);
  for (const auto& c : cycles_of(g).cycles) {
    if (c.color != 0) continue;
    std::vector<char> in_cycle(g.params().n, 0);
    for (int i : c.support) in_cycle[i] = 1;
    for (int i : c.support) {
      int j = w.perm()[i];
      if (!in_cycle[j]) return false;
      if (w.colors()[i] != ((phi[j] - phi[i]) % m + m) % m) return false;
    }
  }
  return true;
}

pqc_verdict is_parabolic_qc(const element& g) {
  const auto& gp = g.params();
  if (!gp.well_generated())
    throw domain_error("classification needs p = 1 or p = m");
  pqc_verdict v;
  if (gp.rank() == 0) {
    v.is_pqc = v.is_qc = true;
    return v;
  }
  auto cc = cycles_of(g);
  std::vector<int> nz;
  for (const auto& c : cc.cycles)
    if (c.color != 0) nz.push_back(c.color);
  if (gp.m == 1) {
    v.is_pqc = true;
    v.is_qc = cc.count() == 1;
  } else if (gp.p == 1) {
    v.is_pqc = nz.empty() || (nz.size() == 1 && std::gcd(nz[0], gp.m) == 1);
    v.is_qc = cc.count() == 1 && std::gcd(cc.cycles[0].color, gp.m) == 1;
  } else {
    v.is_pqc = nz.empty() || (nz.size() == 2 && std::gcd(nz[0], gp.m) == 1 &&
                              std::gcd(nz[1], gp.m) == 1);
    v.is_qc = cc.count() == 2 && std::gcd(cc.cycles[0].color, gp.m) == 1 &&
              std::gcd(cc.cycles[1].color, gp.m) == 1;
  }
  return v;
}

std::vector<element> greedy_reduced_factorization(const element& g) {
  const auto& gp = g.params();
  auto refls = all_reflections(gp);
  std::vector<element> out;
  element rest = g;
  int len = refl_length(rest);
  while (len > 0) {
    bool advanced = false;
    for (const auto& r : refls) {
      element t = reflection_element(r, gp);
      element next = multiply(inverse(t), rest);
      if (refl_length(next) == len - 1) {
        out.push_back(t);
        rest = next;
        --len;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw error("no descent found; length oracle inconsistent");
  }
  return out;
}

bool is_parabolic_qc_definitional(const element& g, long long cap) {
  auto ptype = parabolic_closure_type(g);
  // a good generating set has exactly rank-many elements, so the reduced
  // factorizations must already have rank length
  if (refl_length(g) != ptype.rank) return false;
  auto factors = greedy_reduced_factorization(g);
  for (const auto& t : factors)
    if (!parabolic_closure_contains(g, t)) return false;
  if (factors.empty()) return ptype.order() == 1;
  subgroup h = subgroup_closure(factors, cap);
  return big_int(h.order()) == ptype.order();
}

namespace {

enum class rgs_case { symmetric, nonreal, rooted, unicyclic };

rgs_case classify_rgs_case(const group_params& gp, const parabolic_type& pt) {
  if (pt.nonreal) return rgs_case::nonreal;
  if (gp.m == 1) return rgs_case::symmetric;
  if (gp.p == 1) return rgs_case::rooted;
  return rgs_case::unicyclic;
}

// diagonal conjugation offsets that put g in standard form: within each
// cycle the color moves onto the smallest element
std::vector<int> standardizing_offsets(const element& g) {
  const int m = g.params().m;
  std::vector<int> d(g.params().n, 0);
  for (const auto& c : cycles_of(g).cycles) {
    int suffix = 0;
    for (size_t t = c.support.size(); t-- > 1;) {
      suffix = (suffix + g.colors()[c.support[t]]) % m;
      d[c.support[t]] = suffix;
    }
  }
  return d;
}

bool rgs_graph_test(const std::vector<reflection>& s, const group_params& gp,
                    const set_partition& pi, rgs_case rcase,
                    const std::vector<int>& d) {
  refl_graph g;
  g.n = gp.n;
  g.m = gp.m;
  for (const auto& r : s) {
    if (r.kind == reflection::kind_t::transposition_like)
      g.edges.push_back(
          {r.i, r.j, ((r.color + d[r.j] - d[r.i]) % gp.m + gp.m) % gp.m});
    else
      g.loops.push_back({r.i, r.color});
  }
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.loops.begin(), g.loops.end());
  relative_class rel = classify_relative(g, pi);
  switch (rcase) {
    case rgs_case::symmetric:
    case rgs_case::nonreal:
      return rel.cls == graph_class::tree;
    case rgs_case::rooted:
      return rel.cls == graph_class::rooted_tree &&
             std::gcd(rel.color, gp.m) == 1;
    default:
      return rel.cls == graph_class::unicycle &&
             std::gcd(rel.color, gp.m) == 1;
  }
}

// The brute route closes thousands of candidate subsets, so closures run on a
// per-group right-multiplication table indexed by reflection. Every generator
// it ever sees is a reflection, and the inverse of a reflection is again one,
// so the table columns cover the whole search.
struct refl_table {
  std::vector<element> elems;          // sorted, index = position
  std::vector<std::vector<int>> rmul;  // rmul[r][x] = index of elems[x] * t_r
  std::vector<int> inv_refl;           // index of t_r^{-1}
  mutable std::mutex memo_mu;
  mutable std::map<std::vector<int>, long long> order_memo;
};

const refl_table& table_for(const group_params& gp, long long cap) {
  static std::mutex mu;
  static std::map<group_params, std::unique_ptr<refl_table>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[gp];
  if (slot) return *slot;
  auto tb = std::make_unique<refl_table>();
  tb->elems = enumerate_group(gp, cap);
  auto index_of = [&](const element& x) {
    auto it = std::lower_bound(tb->elems.begin(), tb->elems.end(), x);
    return static_cast<int>(it - tb->elems.begin());
  };
  auto refls = all_reflections(gp);
  tb->rmul.reserve(refls.size());
  tb->inv_refl.reserve(refls.size());
  for (const auto& r : refls) {
    element t = reflection_element(r, gp);
    std::vector<int> col(tb->elems.size());
    for (size_t x = 0; x < tb->elems.size(); ++x)
      col[x] = index_of(multiply(tb->elems[x], t));
    tb->rmul.push_back(std::move(col));
    // the inverse of a reflection is again a reflection
    auto ri = as_reflection(inverse(t));
    auto it = std::lower_bound(refls.begin(), refls.end(), *ri);
    tb->inv_refl.push_back(static_cast<int>(it - refls.begin()));
  }
  return *(slot = std::move(tb));
}

long long closure_order_on(const refl_table& tb, std::vector<int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  {
    std::lock_guard<std::mutex> lock(tb.memo_mu);
    auto it = tb.order_memo.find(gens);
    if (it != tb.order_memo.end()) return it->second;
  }
  const std::vector<int> key = gens;
  size_t base = gens.size();
  for (size_t i = 0; i < base; ++i) gens.push_back(tb.inv_refl[gens[i]]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<char> seen(tb.elems.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  long long count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int r : gens) {
      int y = tb.rmul[r][x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  std::lock_guard<std::mutex> lock(tb.memo_mu);
  tb.order_memo.emplace(key, count);
  return count;
}

bool closure_is_whole_group(const refl_table& tb, std::vector<int> gens) {
  return closure_order_on(tb, std::move(gens)) ==
         static_cast<long long>(tb.elems.size());
}

}  // namespace

long long reflection_closure_order(const group_params& gp,
                                   const std::vector<reflection>& rs,
                                   long long cap) {
  const auto& tb = table_for(gp, cap);
  auto refls = all_reflections(gp);
  std::vector<int> idx;
  idx.reserve(rs.size());
  for (const auto& r : rs) {
    auto it = std::lower_bound(refls.begin(), refls.end(), r);
    if (it == refls.end() || !(*it == r))
      throw error("generator is not a reflection of the group");
    idx.push_back(static_cast<int>(it - refls.begin()));
  }
  return closure_order_on(tb, std::move(idx));
}

std::vector<std::vector<reflection>> enumerate_rgs(const element& g,
                                                   long long cap,
                                                   rgs_route route) {
  const auto& gp = g.params();
  if (!is_parabolic_qc(g).is_pqc) return {};
  if (gp.rank() == 0) return {{}};  // the empty set generates the trivial group
  const int s = gp.rank() - refl_length(g);
  if (s < 0) return {};
  auto refls = all_reflections(gp);
  const int nr = static_cast<int>(refls.size());

  parabolic_type pt = parabolic_closure_type(g);
  rgs_case rcase = classify_rgs_case(gp, pt);
  std::vector<int> d = standardizing_offsets(g);

  const refl_table* table = nullptr;
  std::vector<int> fixed_idx;
  if (route == rgs_route::brute) {
    if (gp.order() > cap) throw cap_error("group too large for the brute route");
    table = &table_for(gp, cap);
    for (const auto& t : greedy_reduced_factorization(g)) {
      auto r = as_reflection(t);
      auto it = std::lower_bound(refls.begin(), refls.end(), *r);
      fixed_idx.push_back(static_cast<int>(it - refls.begin()));
    }
  }

  std::vector<std::vector<reflection>> out;
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  long long examined = 0;
  if (s == 0) {
    // only the empty set is a candidate
    if (route == rgs_route::graph) {
      if (rgs_graph_test({}, gp, pt.pi, rcase, d)) out.push_back({});
    } else {
      if (closure_is_whole_group(*table, fixed_idx)) out.push_back({});
    }
    return out;
  }
  if (s > nr) return {};
  while (true) {
    if (++examined > cap) throw cap_error("candidate subsets exceed cap");
    std::vector<reflection> cand;
    cand.reserve(s);
    for (int i : idx) cand.push_back(refls[i]);
    if (route == rgs_route::graph) {
      if (rgs_graph_test(cand, gp, pt.pi, rcase, d)) out.push_back(cand);
    } else {
      std::vector<int> gens = fixed_idx;
      gens.insert(gens.end(), idx.begin(), idx.end());
      if (closure_is_whole_group(*table, gens)) out.push_back(cand);
    }
    int i = s - 1;
    while (i >= 0 && idx[i] == nr - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

big_int euler_phi(int m) {
  big_int result = m;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      result -= result / q;
      while (m % q == 0) m /= q;
    }
  if (m > 1) result -= result / m;
  return result;
}

cpp_rational rational_pow(const cpp_rational& base, int e) {
  cpp_rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
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

}  // namespace

big_int count_rgs_formula(const element& g) {
  const auto& gp = g.params();
  if (!is_parabolic_qc(g).is_pqc)
    throw domain_error("count_rgs_formula needs a parabolic quasi-Coxeter element");
  if (gp.rank() == 0) return 1;
  parabolic_type pt = parabolic_closure_type(g);
  const int k = static_cast<int>(pt.symmetric_parts.size());
  const int n = gp.n;
  big_int prod_lambda = 1;
  for (int l : pt.symmetric_parts) prod_lambda *= l;
  switch (classify_rgs_case(gp, pt)) {
    case rgs_case::symmetric:
      return to_integer(rational_pow(n, k - 2) * prod_lambda, "rgs count");
    case rgs_case::nonreal: {
      cpp_rational r = rational_pow(gp.m, k) * rational_pow(n, k - 1) *
                       pt.nonreal->n * prod_lambda;
      return to_integer(r, "rgs count");
    }
    case rgs_case::rooted: {
      cpp_rational r = cpp_rational(euler_phi(gp.m)) *
                       rational_pow(gp.m, k - 1) * rational_pow(n, k - 1) *
                       prod_lambda;
      return to_integer(r, "rgs count");
    }
    default: {
      // elementary symmetric functions of the parts
      std::vector<big_int> e(k + 1, 0);
      e[0] = 1;
      for (int l : pt.symmetric_parts)
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * l;
      cpp_rational bracket = rational_pow(n, k) - rational_pow(n, k - 1);
      big_int fact = 1;  // (j-2)!
      for (int j = 2; j <= k; ++j) {
        if (j > 2) fact *= j - 2;
        bracket -= cpp_rational(fact) * rational_pow(n, k - j) * e[j];
      }
      cpp_rational r = cpp_rational(euler_phi(gp.m)) *
                       rational_pow(gp.m, k - 1) / 2 * bracket * prod_lambda;
      return to_integer(r, "rgs count");
    }
  }
}

pqc_verdict characterization_check(const element& g, long long cap) {
  const auto& gp = g.params();
  pqc_verdict v = is_parabolic_qc(g);
  v.definitional = is_parabolic_qc_definitional(g, cap);
  v.rgs_nonempty = !enumerate_rgs(g, cap, rgs_route::graph).empty();
  bool above = false;
  for (const auto& w : enumerate_group(gp, cap))
    if (is_parabolic_qc(w).is_qc && absolute_leq(g, w)) {
      above = true;
      break;
    }
  v.qc_above = above;
  v.length_identity =
      full_refl_length(g) == 2 * gp.rank() - refl_length(g);
  if (*v.definitional != *v.rgs_nonempty || *v.definitional != *v.qc_above ||
      *v.definitional != *v.length_identity || *v.definitional != v.is_pqc)
    throw error("characterization routes disagree on " + format_element(g));
  return v;
}

big_int weighted_cayley(const std::vector<big_int>& xs) {
  if (xs.empty()) throw domain_error("weighted_cayley needs at least one weight");
  if (xs.size() == 1) return 1;
  big_int prod = 1, sum = 0;
  for (const auto& x : xs) {
    prod *= x;
    sum += x;
  }
  big_int power = 1;
  for (size_t i = 0; i + 2 < xs.size(); ++i) power *= sum;
  return prod * power;
}

}  // namespace qcox
