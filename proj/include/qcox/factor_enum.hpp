#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qcox/wreath.hpp"

namespace qcox {

using big_int = boost::multiprecision::cpp_int;

// all reduced reflection factorizations of g, lexicographic in the canonical
// reflection order
std::vector<std::vector<reflection>> enumerate_reduced(const element& g,
                                                       int depth_cap = 16);

// |Red(g)| by memoized counting over the absolute-order ideal below g
big_int count_reduced(const element& g);

struct generalized_cycle {
  enum class tag_t { symmetric_cycle, single_colored_cycle, colored_pair };
  tag_t tag = tag_t::symmetric_cycle;
  std::vector<int> support;  // sorted
  element restricted;        // g on the support, identity elsewhere
  int refl_len = 0;
};

struct generalized_cycle_decomposition {
  std::vector<generalized_cycle> components;
};

// cycles of g minus fixed points; in G(m,m,n) the two nonzero-color cycles
// merge into one colored pair
generalized_cycle_decomposition generalized_cycles(const element& g);

// closed form for |Red(g)|, g quasi-Coxeter
big_int fred_formula_qc(const element& g);

// closed form for |Red(g)|, g parabolic quasi-Coxeter: multinomial over the
// generalized-cycle lengths times the per-component values
big_int fred_formula_pqc(const element& g);

// all minimum-length reflection factorizations of g whose factors generate
// the whole group
std::vector<std::vector<reflection>> enumerate_full_min(
    const element& g, long long closure_cap = 1000000, int depth_cap = 16);

// genus-zero Hurwitz number of the cycle type lambda
big_int hurwitz_number(const std::vector<int>& lambda);

// corner-rooted Cayley cacti of polygon type mvec (mvec[i-1] i-gons)
big_int dps_cacti_count(const std::vector<long long>& mvec);

// the two closed forms counting relative trees agree for this type
bool dps_identity_check(const std::vector<long long>& mvec);

struct exponent_vector {
  long long order = 1;
  std::vector<long long> exponents;  // sorted, in [0, order-1]
};

exponent_vector exponents(const element& g);

struct regular_fred_report {
  big_int fred;   // closed form for the class D_n(n/2,n/2)
  big_int base;   // |g|^n n! / prod (e_j + 1)
  big_int delta;  // fred / base
};

// the regular-element count comparison for D_n(n/2,n/2) in G(2,2,n), n even
regular_fred_report regular_fred_check_Dn(int n);

}  // namespace qcox
