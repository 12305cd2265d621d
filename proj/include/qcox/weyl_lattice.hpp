#pragma once

#include <string>
#include <vector>

#include "qcox/pqc_rgs.hpp"
#include "qcox/wreath.hpp"

namespace qcox {

enum class weyl_family { A, B, D };

// Weyl types realized inside the infinite family:
//   A_n = G(1,1,n+1), B_n = G(2,1,n), D_n = G(2,2,n).
// D needs rank >= 2 (D_2 and D_3 are the A_1 x A_1 and A_3 realizations).
struct weyl_type {
  weyl_family family = weyl_family::A;
  int rank = 0;

  group_params realization() const;
  int ambient_dim() const { return family == weyl_family::A ? rank + 1 : rank; }

  friend bool operator==(const weyl_type&, const weyl_type&) = default;
};

weyl_type parse_weyl_type(const std::string& s);  // "A3", "B2", "D4"
std::string format_weyl_type(const weyl_type& type);

// a Coxeter element of the realization: the long cycle for A, the colored
// long cycle for B, a colored (n-1)-cycle times a colored fixed point for D
element coxeter_element(const weyl_type& type);

// integer root and coroot in the ambient lattice Z^N with <root, coroot> = 2;
// sign convention: first nonzero coordinate positive
struct root_pair {
  std::vector<big_int> root;
  std::vector<big_int> coroot;
};

root_pair root_of(const reflection& t, const weyl_type& type);

// pairing matrix <rho_{t_i}, corho_{t_j}> with its exact determinant; a set
// of rank-many reflections generates the whole group exactly when |det|
// equals the connection index
struct cartan_report {
  std::vector<std::vector<big_int>> pairing_matrix;
  big_int determinant;
};

cartan_report cartan_pairing(const std::vector<reflection>& ts,
                             const weyl_type& type);

inline big_int pairing_det(const std::vector<reflection>& ts,
                           const weyl_type& type) {
  return cartan_pairing(ts, type).determinant;
}

big_int connection_index(const weyl_type& type);

// connection index of the parabolic closure of g, multiplied out over its
// irreducible factors
big_int closure_connection_index(const element& g);

// |product of the nonzero eigenvalues of g - I|, read off the exact integer
// characteristic polynomial in the ambient representation
big_int pdet_abs(const element& g, const weyl_type& type);

// h^rank rank!/#W, the count of reduced factorizations of a Coxeter element
big_int abc_degree(const weyl_type& type);

// the three faces of the parabolic quasi-Coxeter property in Weyl groups:
// (i) the cycle-color classification, (ii) the roots and coroots of one
// reduced factorization give Z-bases of the root and coroot lattices of the
// parabolic closure, (iii) pdet_abs(g) equals the closure's connection index
struct weyl_crosscheck {
  bool pqc = false;
  bool lattice_bases = false;
  bool pdet_matches = false;
  big_int det_u;
  big_int det_u_check;
  big_int pdet;
  big_int closure_index;

  bool consistent() const {
    return pqc == lattice_bases && pqc == pdet_matches;
  }
};

weyl_crosscheck weyl_pqc_crosscheck(const element& g, const weyl_type& type);

}  // namespace qcox
