#pragma once

#include <string>
#include <vector>

#include "qcox/wreath.hpp"

namespace qcox {

// Knobs for the verification battery. Every criterion always runs; the scale
// only bounds how far each sweep reaches.
struct verify_scale {
  long long max_order = 2000;  // group catalog bound for the element sweeps
  int hurwitz_max_n = 5;       // partitions of n up to this size
  int cayley_max_len = 5;      // weight vectors up to this length
  int dps_max_n = 8;           // polygon types up to this total
  int dps_brute_max_n = 5;     // direct cactus counts up to this total
  int full_length_groups = 7;  // prefix of the fixed exhaustive-search list
  int jobs = 1;
};

// suite is "quick", "core" or "all"; max_order <= 0 keeps the suite default
verify_scale scale_for_suite(const std::string& suite, long long max_order = 0,
                             int jobs = 1);

struct verify_result {
  std::string name;
  bool passed = false;
  std::string detail;   // the compared numbers, or the first mismatch
  double seconds = 0.0;
};

// the acceptance battery: every closed-form count against its independent
// recount, one result per criterion, in a fixed order
std::vector<verify_result> run_verify(const verify_scale& scale);

// the groups the element sweeps walk: G(m,1,n) and G(m,m,n) for m <= 6,
// n <= 6, order <= max_order
std::vector<group_params> verify_catalog(long long max_order);

}  // namespace qcox
