#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "qcox/graphset.hpp"
#include "qcox/wreath.hpp"

namespace qcox {

using big_int = boost::multiprecision::cpp_int;

struct subgroup {
  std::vector<element> members;  // sorted
  long long order() const { return static_cast<long long>(members.size()); }
  bool contains(const element& x) const;
};

// breadth-first closure under left multiplication by gens and their inverses
subgroup subgroup_closure(const std::vector<element>& gens, long long cap);

// Order of the subgroup generated by reflections, served from a cached
// per-group multiplication table. Repeated queries with the same generator
// set are memoized, which is what makes the exhaustive sweeps affordable.
long long reflection_closure_order(const group_params& gp,
                                   const std::vector<reflection>& rs,
                                   long long cap = 1000000);

// the parabolic closure W_g: pointwise stabilizer of the fixed space of g,
// conjugate to G(m,p,lambda0) x prod S_{lambda_i}
struct parabolic_type {
  std::optional<group_params> nonreal;  // G(m,p,lambda0) part, if any
  std::vector<int> symmetric_parts;     // zero-color cycle lengths, descending
  set_partition pi;                     // generalized-cycle support partition
  int rank = 0;

  big_int order() const;
};

parabolic_type parabolic_closure_type(const element& g);

// membership in W_g, tested against the fixed-space conditions directly
bool parabolic_closure_contains(const element& g, const element& w);

struct pqc_verdict {
  bool is_pqc = false;
  bool is_qc = false;
  // the four characterization routes, filled by characterization_check
  std::optional<bool> definitional;
  std::optional<bool> rgs_nonempty;
  std::optional<bool> qc_above;
  std::optional<bool> length_identity;
};

// cycle-color case analysis; fills is_pqc and is_qc
pqc_verdict is_parabolic_qc(const element& g);

// takes one reduced factorization, asks whether its factors form a good
// generating set for the parabolic closure
bool is_parabolic_qc_definitional(const element& g, long long cap = 1000000);

// the factors of one reduced factorization of g, chosen greedily in
// canonical reflection order (leftmost branch of the enumeration tree)
std::vector<element> greedy_reduced_factorization(const element& g);

enum class rgs_route { graph, brute };

// all (rank - refl_length(g))-subsets S of reflections such that S together
// with a reduced factorization of g generates the whole group
std::vector<std::vector<reflection>> enumerate_rgs(
    const element& g, long long cap = 1000000,
    rgs_route route = rgs_route::graph);

big_int count_rgs_formula(const element& g);

// evaluates all four characterizations and checks they agree
pqc_verdict characterization_check(const element& g, long long cap = 1000000);

// x_0 ... x_k (x_0 + ... + x_k)^{k-1}: trees on {0..k} weighted by degrees
big_int weighted_cayley(const std::vector<big_int>& xs);

}  // namespace qcox
