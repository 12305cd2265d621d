#include "qcox/lengths.hpp"

#include <numeric>

namespace qcox {

int v_m(const element& x) {
  const int m = x.params().m;
  auto cc = cycles_of(x);
  const int k = cc.count();
  if (k > 16) throw cap_error("too many cycles for the block partition step");
  std::vector<int> csum(1 << k, 0);
  for (int mask = 1; mask < (1 << k); ++mask) {
    int low = mask & -mask;
    int idx = __builtin_ctz(mask);
    csum[mask] = (csum[mask ^ low] + cc.cycles[idx].color) % m;
  }
  // best[S] = most disjoint zero-sum blocks inside S; a maximal family in a
  // zero-weight element always covers everything
  std::vector<int> best(1 << k, 0);
  for (int mask = 1; mask < (1 << k); ++mask) {
    int low = mask & -mask;
    best[mask] = best[mask ^ low];
    for (int sub = mask; sub; sub = (sub - 1) & mask)
      if ((sub & low) && csum[sub] == 0)
        best[mask] = std::max(best[mask], 1 + best[mask ^ sub]);
  }
  return best[(1 << k) - 1];
}

int codim_fixed(const element& x) {
  return x.params().n - cycles_of(x).count_zero_color();
}

int refl_length(const element& x) {
  const auto& gp = x.params();
  if (gp.p == 1 || gp.m == 1) return codim_fixed(x);
  if (gp.p == gp.m)
    return gp.n + cycles_of(x).count() - 2 * v_m(x);
  throw domain_error("reflection length not implemented for 1 < p < m");
}

int full_refl_length(const element& x) {
  const auto& gp = x.params();
  if (gp.rank() == 0) return 0;  // no reflections, only the empty product
  auto cc = cycles_of(x);
  const int k = cc.count();
  long long d = gp.p;
  for (const auto& c : cc.cycles) d = std::gcd(d, (long long)c.color);
  if (gp.m == gp.p) return gp.n + k - (d == 1 ? 2 : 0);
  bool wt_exact = std::gcd((long long)weight(x), (long long)gp.m) == gp.p;
  if (d == 1) return gp.n + k - (wt_exact ? 1 : 0);
  return gp.n + k + (wt_exact ? 1 : 2);
}

bool absolute_leq(const element& u, const element& v) {
  if (u.params() != v.params())
    throw domain_error("elements live in different groups");
  return refl_length(u) + refl_length(multiply(inverse(u), v)) ==
         refl_length(v);
}

length_report report_lengths(const element& x) {
  length_report r;
  auto cc = cycles_of(x);
  r.refl_len = refl_length(x);
  r.full_len = full_refl_length(x);
  r.codim = codim_fixed(x);
  r.cycle_count = cc.count();
  r.zero_color_cycles = cc.count_zero_color();
  r.vm = v_m(x);
  return r;
}

}  // namespace qcox
