#pragma once

#include "qcox/wreath.hpp"

namespace qcox {

// largest number of blocks in a partition of the cycles of x such that every
// block has color sum = 0 mod m; subset DP, refuses more than 16 cycles
int v_m(const element& x);

// codimension of the fixed space = n minus the number of zero-color cycles
int codim_fixed(const element& x);

// length of x over the reflections of its own group G(m,p,n);
// closed forms exist for p = 1 and p = m only, other p throws domain_error
int refl_length(const element& x);

// minimum length of a reflection factorization of x whose factors generate
// the whole group; case analysis on gcd(colors, p) and gcd(wt, m)
int full_refl_length(const element& x);

// u <=_R v in the absolute order: lengths add along u, u^{-1} v
bool absolute_leq(const element& u, const element& v);

struct length_report {
  int refl_len = 0;
  int full_len = 0;
  int codim = 0;
  int cycle_count = 0;
  int zero_color_cycles = 0;
  int vm = 0;
};

length_report report_lengths(const element& x);

}  // namespace qcox
