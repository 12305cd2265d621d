#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>

#include "qcox/factor_enum.hpp"
#include "qcox/lengths.hpp"
#include "qcox/pqc_rgs.hpp"

using namespace qcox;

namespace {

element el(const std::string& s) { return parse_element(s); }

reflection t(int i, int j, int c) {
  return {reflection::kind_t::transposition_like, i - 1, j - 1, c};
}
reflection d(int i, int c) {
  return {reflection::kind_t::diagonal, i - 1, i - 1, c};
}

int phi(int m) {
  int count = 0;
  for (int c = 1; c <= m; ++c)
    if (std::gcd(c, m) == 1) ++count;
  return count;
}

size_t closure_size(const std::vector<element>& gens, const group_params& gp) {
  std::set<element> members{element::identity(gp)};
  std::vector<element> work(members.begin(), members.end());
  while (!work.empty()) {
    element g = work.back();
    work.pop_back();
    for (const auto& s : gens) {
      element h = multiply(g, s);
      if (members.insert(h).second) work.push_back(h);
    }
  }
  return members.size();
}

std::map<element, int> bfs_lengths(const group_params& gp) {
  std::vector<element> refls;
  for (const auto& r : all_reflections(gp))
    refls.push_back(reflection_element(r, gp));
  std::map<element, int> dist{{element::identity(gp), 0}};
  std::vector<element> frontier{element::identity(gp)};
  while (!frontier.empty()) {
    std::vector<element> next;
    for (const auto& x : frontier)
      for (const auto& r : refls) {
        element y = multiply(x, r);
        if (dist.emplace(y, dist.at(x) + 1).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<element> descend(const element& g, const std::map<element, int>& len) {
  const auto& gp = g.params();
  std::vector<element> refls;
  for (const auto& r : all_reflections(gp))
    refls.push_back(reflection_element(r, gp));
  std::vector<element> out;
  element rest = g;
  int l = len.at(rest);
  while (l > 0) {
    bool advanced = false;
    for (const auto& r : refls) {
      element next = multiply(inverse(r), rest);
      if (len.at(next) == l - 1) {
        out.push_back(r);
        rest = next;
        --l;
        advanced = true;
        break;
      }
    }
    REQUIRE(advanced);
  }
  return out;
}

// independent reimplementation: complete one reduced factorization to a
// generating set of the whole group, trying every subset of the right size
std::vector<std::vector<reflection>> oracle_rgs(const element& g,
                                                const std::map<element, int>& len) {
  const auto& gp = g.params();
  auto refls = all_reflections(gp);
  const int nr = static_cast<int>(refls.size());
  const int s = gp.rank() - len.at(g);
  if (s < 0) return {};
  const auto order = static_cast<size_t>(gp.order());
  std::vector<element> fixed = descend(g, len);
  std::vector<std::vector<reflection>> out;
  if (s == 0) {
    if (closure_size(fixed, gp) == order) out.push_back({});
    return out;
  }
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    std::vector<element> gens = fixed;
    std::vector<reflection> cand;
    for (int i : idx) {
      cand.push_back(refls[i]);
      gens.push_back(reflection_element(refls[i], gp));
    }
    if (closure_size(gens, gp) == order) out.push_back(cand);
    int i = s - 1;
    while (i >= 0 && idx[i] == nr - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Eigen::MatrixXcd matrix_of(const element& g) {
  const auto& gp = g.params();
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(gp.n, gp.n);
  for (int i = 0; i < gp.n; ++i) {
    double arg = 2.0 * M_PI * g.colors()[i] / gp.m;
    mat(g.perm()[i], i) = std::polar(1.0, arg);
  }
  return mat;
}

// numeric oracle for membership in the parabolic closure: w must fix the
// fixed space of g pointwise
bool fixes_fixed_space(const Eigen::MatrixXcd& kernel, const element& w) {
  if (kernel.cols() == 0) return true;
  Eigen::MatrixXcd diff =
      matrix_of(w) * kernel - kernel;
  return diff.cwiseAbs().maxCoeff() < 1e-8;
}

Eigen::MatrixXcd fixed_space(const element& g) {
  const int n = g.params().n;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(matrix_of(g) -
                                        Eigen::MatrixXcd::Identity(n, n));
  lu.setThreshold(1e-9);
  // kernel() pads a trivial kernel with one zero column
  if (lu.dimensionOfKernel() == 0) return Eigen::MatrixXcd::Zero(n, 0);
  return lu.kernel();
}

const std::vector<group_params> small_groups = {
    {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {2, 1, 1}, {2, 1, 2},
    {2, 1, 3}, {3, 1, 1}, {3, 1, 2}, {4, 1, 1}, {4, 1, 2}, {6, 1, 1},
    {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {3, 3, 1}, {3, 3, 2},
    {3, 3, 3}, {4, 4, 1}, {4, 4, 2}, {4, 4, 3}, {6, 6, 2},
};

// together with small_groups this exhausts G(m,1,n) and G(m,m,n) for
// m <= 4, n <= 4 up to order 5000
const std::vector<group_params> large_groups = {
    {2, 1, 4}, {3, 1, 3}, {3, 1, 4}, {4, 1, 3}, {3, 3, 4}, {4, 4, 4},
};

std::vector<group_params> sweep_groups() {
  auto all = small_groups;
  all.insert(all.end(), large_groups.begin(), large_groups.end());
  return all;
}

}  // namespace

TEST_CASE("subgroup closure") {
  group_params s3{1, 1, 3};
  auto t12 = reflection_element(t(1, 2, 0), s3);
  auto t23 = reflection_element(t(2, 3, 0), s3);
  CHECK(subgroup_closure({t12}, 100).order() == 2);
  auto all = subgroup_closure({t12, t23}, 100);
  CHECK(all.order() == 6);
  CHECK(all.contains(el("G(1,1,3):[2 3 1;0,0,0]")));
  CHECK(std::is_sorted(all.members.begin(), all.members.end()));
  CHECK_THROWS_AS(subgroup_closure({}, 100), domain_error);
  group_params gp{2, 1, 3};
  std::vector<element> gens;
  for (const auto& r : all_reflections(gp))
    gens.push_back(reflection_element(r, gp));
  CHECK_THROWS_AS(subgroup_closure(gens, 10), cap_error);
}

TEST_CASE("parabolic closure type and membership") {
  SUBCASE("transposition in S4") {
    auto g = el("G(1,1,4):[2 1 3 4;0,0,0,0]");
    auto pt = parabolic_closure_type(g);
    CHECK(!pt.nonreal.has_value());
    CHECK(pt.symmetric_parts == std::vector<int>{2, 1, 1});
    CHECK(pt.rank == 1);
    CHECK(pt.order() == 2);
  }
  SUBCASE("two diagonal colors in G(2,2,3)") {
    auto g = el("G(2,2,3):[1 2 3;1,1,0]");
    auto pt = parabolic_closure_type(g);
    REQUIRE(pt.nonreal.has_value());
    CHECK(*pt.nonreal == group_params{2, 2, 2});
    CHECK(pt.symmetric_parts == std::vector<int>{1});
    CHECK(pt.rank == 2);
    CHECK(pt.order() == 4);
    CHECK(pt.pi.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
  }
  SUBCASE("full colored cycle is its own closure type") {
    auto g = el("G(3,1,3):[2 3 1;1,0,0]");
    auto pt = parabolic_closure_type(g);
    REQUIRE(pt.nonreal.has_value());
    CHECK(*pt.nonreal == group_params{3, 1, 3});
    CHECK(pt.symmetric_parts.empty());
    CHECK(pt.order() == 162);
  }
  SUBCASE("membership matches the numeric fixed-space oracle") {
    for (const auto& gp : std::vector<group_params>{{1, 1, 3},
                                                    {1, 1, 4},
                                                    {2, 1, 2},
                                                    {3, 1, 2},
                                                    {4, 1, 1},
                                                    {2, 2, 3},
                                                    {3, 3, 3}}) {
      auto elems = enumerate_group(gp, 10000);
      for (const auto& g : elems) {
        auto kernel = fixed_space(g);
        auto pt = parabolic_closure_type(g);
        REQUIRE(kernel.cols() == gp.n - pt.rank);
        big_int members = 0;
        for (const auto& w : elems) {
          bool claimed = parabolic_closure_contains(g, w);
          CAPTURE(format_element(g));
          CAPTURE(format_element(w));
          CHECK(claimed == fixes_fixed_space(kernel, w));
          if (claimed) ++members;
        }
        CHECK(members == pt.order());
      }
    }
  }
  CHECK_THROWS_AS(parabolic_closure_type(el("G(4,2,2):[1 2;1,1]")),
                  domain_error);
  CHECK_THROWS_AS(
      parabolic_closure_contains(el("G(2,1,2):[1 2;0,0]"),
                                 el("G(2,1,3):[1 2 3;0,0,0]")),
      domain_error);
}

TEST_CASE("quasi-Coxeter classification agrees across all four routes") {
  for (const auto& gp : sweep_groups()) {
    CAPTURE(gp.m);
    CAPTURE(gp.p);
    CAPTURE(gp.n);
    big_int qc_count = 0;
    for (const auto& g : enumerate_group(gp, 10000)) {
      CAPTURE(format_element(g));
      pqc_verdict v;
      CHECK_NOTHROW(v = characterization_check(g));
      CHECK(*v.definitional == v.is_pqc);
      if (v.is_qc) ++qc_count;
      if (v.is_qc) CHECK(v.is_pqc);
    }
    // quasi-Coxeter elements are the full cycles with primitive color data
    if (gp.m == 1)
      CHECK(qc_count == [&] {
        big_int f = 1;
        for (int i = 2; i < gp.n; ++i) f *= i;
        return f;
      }());
    if (gp.p == 1 && gp.m > 1) {
      big_int expect = phi(gp.m);
      for (int i = 2; i < gp.n; ++i) expect *= i;
      for (int i = 1; i < gp.n; ++i) expect *= gp.m;
      CHECK(qc_count == expect);
    }
  }
}

TEST_CASE("greedy reduced factorization") {
  for (const auto& gp : std::vector<group_params>{
           {1, 1, 4}, {2, 1, 2}, {3, 1, 2}, {2, 2, 3}, {3, 3, 2}}) {
    for (const auto& g : enumerate_group(gp, 10000)) {
      auto factors = greedy_reduced_factorization(g);
      CHECK(static_cast<int>(factors.size()) == refl_length(g));
      element prod = element::identity(gp);
      for (const auto& f : factors) {
        as_reflection(f);
        prod = multiply(prod, f);
      }
      CHECK(prod == g);
    }
  }
}

TEST_CASE("relative generating sets: graph route, brute route, oracle") {
  for (const auto& gp : small_groups) {
    CAPTURE(gp.m);
    CAPTURE(gp.p);
    CAPTURE(gp.n);
    auto lengths = bfs_lengths(gp);
    for (const auto& g : enumerate_group(gp, 10000)) {
      CAPTURE(format_element(g));
      auto graph_sets = enumerate_rgs(g, 1000000, rgs_route::graph);
      auto brute_sets = enumerate_rgs(g, 1000000, rgs_route::brute);
      CHECK(graph_sets == brute_sets);
      CHECK(graph_sets == oracle_rgs(g, lengths));
      if (is_parabolic_qc(g).is_pqc) {
        CHECK(count_rgs_formula(g) == big_int(graph_sets.size()));
      } else {
        CHECK(graph_sets.empty());
        CHECK_THROWS_AS(count_rgs_formula(g), domain_error);
      }
    }
  }
  // the larger groups skip the set-based oracle but still tie the two routes
  // and the closed count together
  for (const auto& gp : large_groups) {
    CAPTURE(gp.m);
    CAPTURE(gp.p);
    CAPTURE(gp.n);
    for (const auto& g : enumerate_group(gp, 10000)) {
      CAPTURE(format_element(g));
      auto graph_sets = enumerate_rgs(g, 1000000, rgs_route::graph);
      auto brute_sets = enumerate_rgs(g, 1000000, rgs_route::brute);
      CHECK(graph_sets == brute_sets);
      if (is_parabolic_qc(g).is_pqc)
        CHECK(count_rgs_formula(g) == big_int(graph_sets.size()));
      else
        CHECK(graph_sets.empty());
    }
  }
}

TEST_CASE("relative generating set counts, frozen") {
  CHECK(count_rgs_formula(el("G(1,1,3):[2 1 3;0,0,0]")) == 2);
  CHECK(count_rgs_formula(el("G(2,1,2):[1 2;0,0]")) == 4);
  CHECK(count_rgs_formula(el("G(2,1,2):[2 1;1,1]")) == 2);
  CHECK(count_rgs_formula(el("G(2,2,3):[2 1 3;0,0,0]")) == 8);
  CHECK(count_rgs_formula(el("G(2,2,3):[1 2 3;1,1,0]")) == 4);
  CHECK(count_rgs_formula(el("G(2,2,2):[1 2;0,0]")) == 1);
  CHECK(count_rgs_formula(el("G(2,2,3):[2 3 1;0,0,0]")) == 3);
  CHECK(count_rgs_formula(el("G(2,2,4):[1 2 3 4;0,0,0,0]")) == 312);
  CHECK(count_rgs_formula(el("G(2,2,5):[1 2 3 4 5;0,0,0,0,0]")) == 7552);
  // the zero 3-cycle needs one colored transposition, any of the three
  auto sets = enumerate_rgs(el("G(2,2,3):[2 3 1;0,0,0]"));
  REQUIRE(sets.size() == 3);
  CHECK(sets[0] == std::vector<reflection>{t(1, 2, 1)});
  CHECK(sets[1] == std::vector<reflection>{t(1, 3, 1)});
  CHECK(sets[2] == std::vector<reflection>{t(2, 3, 1)});
  // an identity in a rank-zero group is completed by the empty set alone
  CHECK(enumerate_rgs(el("G(3,3,1):[1;0]")) ==
        std::vector<std::vector<reflection>>{{}});
  CHECK(count_rgs_formula(el("G(3,3,1):[1;0]")) == 1);
}

TEST_CASE("diagonal colors are equidistributed over the sets for G(4,1,2)") {
  auto sets = enumerate_rgs(el("G(4,1,2):[1 2;0,0]"));
  REQUIRE(sets.size() == 16);
  CHECK(std::find(sets.begin(), sets.end(),
                  std::vector<reflection>{t(1, 2, 0), d(1, 1)}) != sets.end());
  std::map<int, int> by_color;
  for (const auto& s : sets) {
    int loops = 0;
    for (const auto& r : s)
      if (r.kind == reflection::kind_t::diagonal) {
        ++loops;
        ++by_color[r.color];
      }
    CHECK(loops == 1);
  }
  CHECK(by_color == std::map<int, int>{{1, 8}, {3, 8}});
}

TEST_CASE("any reduced factorization completes the same way") {
  auto cases = std::vector<element>{
      el("G(1,1,4):[2 3 1 4;0,0,0,0]"), el("G(1,1,4):[2 1 4 3;0,0,0,0]"),
      el("G(2,2,3):[2 3 1;0,0,0]"), el("G(2,1,3):[2 1 3;0,0,1]")};
  for (const auto& g : cases) {
    CAPTURE(format_element(g));
    const auto& gp = g.params();
    auto refls = all_reflections(gp);
    const int nr = static_cast<int>(refls.size());
    const int s = gp.rank() - refl_length(g);
    const auto order = static_cast<size_t>(gp.order());
    auto reduced = enumerate_reduced(g);
    CHECK(reduced.size() > 1);
    auto reference = enumerate_rgs(g);
    for (const auto& rf : reduced) {
      std::vector<element> fixed;
      for (const auto& r : rf) fixed.push_back(reflection_element(r, gp));
      std::vector<std::vector<reflection>> found;
      std::vector<int> idx(s);
      for (int i = 0; i < s; ++i) idx[i] = i;
      while (true) {
        std::vector<element> gens = fixed;
        std::vector<reflection> cand;
        for (int i : idx) {
          cand.push_back(refls[i]);
          gens.push_back(reflection_element(refls[i], gp));
        }
        if (closure_size(gens, gp) == order) found.push_back(cand);
        int i = s - 1;
        while (i >= 0 && idx[i] == nr - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
      CHECK(found == reference);
    }
  }
}

TEST_CASE("characterization flags on non-quasi-Coxeter elements") {
  for (const auto& name :
       {"G(4,1,1):[1;2]", "G(2,1,2):[1 2;1,1]", "G(2,1,3):[1 2 3;1,1,0]"}) {
    auto v = characterization_check(el(name));
    CAPTURE(name);
    CHECK(!v.is_pqc);
    CHECK(!*v.definitional);
    CHECK(!*v.rgs_nonempty);
    CHECK(!*v.qc_above);
    CHECK(!*v.length_identity);
  }
  auto v = characterization_check(el("G(3,1,3):[2 3 1;1,0,0]"));
  CHECK(v.is_qc);
  CHECK(*v.definitional);
  CHECK(*v.rgs_nonempty);
  CHECK(*v.qc_above);
  CHECK(*v.length_identity);
  CHECK_THROWS_AS(characterization_check(el("G(4,2,2):[1 2;1,1]")),
                  domain_error);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate_rgs(el("G(2,1,4):[1 2 3 4;0,0,0,0]"), 100),
                  cap_error);
  CHECK_THROWS_AS(enumerate_rgs(el("G(2,2,5):[1 2 3 4 5;0,0,0,0,0]"), 100,
                                rgs_route::brute),
                  cap_error);
}

TEST_CASE("weighted Cayley count matches tree enumeration") {
  // Pruefer-sequence oracle
  auto oracle = [](const std::vector<big_int>& xs) {
    const int k = static_cast<int>(xs.size());
    if (k == 1) return big_int(1);
    std::vector<int> seq(k - 2, 0);
    big_int total = 0;
    while (true) {
      std::vector<int> deg(k, 1);
      for (int v : seq) ++deg[v];
      big_int term = 1;
      for (int i = 0; i < k; ++i)
        for (int e = 0; e < deg[i]; ++e) term *= xs[i];
      total += term;
      int pos = k - 3;
      while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
      if (pos < 0) break;
      ++seq[pos];
    }
    return total;
  };
  CHECK(weighted_cayley({big_int(5)}) == 1);
  CHECK(weighted_cayley({big_int(2), big_int(3)}) == 6);
  CHECK(weighted_cayley({big_int(1), big_int(1), big_int(1)}) == 3);
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> v(k, 1);
    while (true) {
      std::vector<big_int> xs(v.begin(), v.end());
      CAPTURE(v);
      CHECK(weighted_cayley(xs) == oracle(xs));
      int pos = k - 1;
      while (pos >= 0 && v[pos] == 4) v[pos--] = 1;
      if (pos < 0) break;
      ++v[pos];
    }
  }
  CHECK_THROWS_AS(weighted_cayley({}), domain_error);
}
