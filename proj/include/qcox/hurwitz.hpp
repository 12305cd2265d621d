#pragma once

#include "qcox/wreath.hpp"

namespace qcox {

// an ordered tuple of reflections with a well-defined left-to-right product
struct factor_tuple {
  group_params gp;
  std::vector<element> factors;

  factor_tuple(group_params params, std::vector<element> refls);
  element product() const;

  friend bool operator==(const factor_tuple&, const factor_tuple&) = default;
  friend auto operator<=>(const factor_tuple&, const factor_tuple&) = default;
};

// braid generator sigma_i (1-based, acts on slots i and i+1):
// (..., a, b, ...) -> (..., b, b^{-1} a b, ...); inverse applies sigma_i^{-1}
factor_tuple braid_act(int i, const factor_tuple& t, bool inverse = false);

// closure under all sigma_i^{+-1}, sorted canonically
std::vector<factor_tuple> hurwitz_orbit(const factor_tuple& t,
                                        long long cap = 1000000);

// the orbit of one reduced factorization covers all of Red(g)
bool is_hurwitz_transitive_on_reduced(const element& g,
                                      long long cap = 1000000);

}  // namespace qcox
