#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qcox/factor_enum.hpp"
#include "qcox/lengths.hpp"
#include "qcox/pqc_rgs.hpp"
#include "qcox/weyl_lattice.hpp"

using namespace qcox;
using rational = boost::multiprecision::cpp_rational;

namespace {

element el(const std::string& s) { return parse_element(s); }

reflection t(int i, int j, int c) {
  return {reflection::kind_t::transposition_like, i - 1, j - 1, c};
}

reflection d(int i) { return {reflection::kind_t::diagonal, i - 1, i - 1, 1}; }

std::vector<big_int> ivec_of(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

// plain rational Gaussian elimination, kept separate from the library's
// integer routines on purpose
int rank_of(const std::vector<std::vector<big_int>>& rows) {
  std::vector<std::vector<rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] == 0) continue;
      rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

big_int abs_det(const std::vector<std::vector<big_int>>& mat) {
  const int n = static_cast<int>(mat.size());
  if (n == 0) return 1;
  std::vector<std::vector<rational>> m;
  for (const auto& r : mat) m.emplace_back(r.begin(), r.end());
  rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) std::swap(m[c], m[piv]);
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  if (det < 0) det = -det;
  REQUIRE(denominator(det) == 1);
  return numerator(det);
}

struct dsu {
  std::vector<int> parent;
  explicit dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

big_int dot(const std::vector<big_int>& a, const std::vector<big_int>& b) {
  big_int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// identify the product of irreducible types among A_r, B_r, D_r from the
// non-orthogonality components of a reflection set, and multiply out the
// connection indices; the realizations admit no other root configurations
big_int recognized_index(const std::vector<reflection>& rs,
                         const weyl_type& type) {
  const int k = static_cast<int>(rs.size());
  std::vector<root_pair> pairs;
  for (const auto& r : rs) pairs.push_back(root_of(r, type));
  dsu comp(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (dot(pairs[a].root, pairs[b].coroot) != 0) comp.unite(a, b);
  big_int idx = 1;
  for (int rep = 0; rep < k; ++rep) {
    if (comp.find(rep) != rep) continue;
    std::vector<std::vector<big_int>> roots;
    for (int a = 0; a < k; ++a)
      if (comp.find(a) == rep) roots.push_back(pairs[a].root);
    const int r = rank_of(roots);
    const int cnt = static_cast<int>(roots.size());
    if (cnt == r * (r + 1) / 2)
      idx *= r + 1;
    else if (cnt == r * r)
      idx *= 2;
    else if (r >= 4 && cnt == r * (r - 1))
      idx *= 4;
    else
      FAIL("unrecognized irreducible component");
  }
  return idx;
}

std::vector<std::vector<big_int>> int_matrix(const element& g) {
  const int n = g.params().n;
  std::vector<std::vector<big_int>> m(n, std::vector<big_int>(n, 0));
  for (int i = 0; i < n; ++i) m[g.perm()[i]][i] = g.colors()[i] == 0 ? 1 : -1;
  return m;
}

std::vector<reflection> reflections_inside(const subgroup& h,
                                           const group_params& gp) {
  std::vector<reflection> out;
  for (const auto& r : all_reflections(gp))
    if (h.contains(reflection_element(r, gp))) out.push_back(r);
  return out;
}

std::vector<std::vector<int>> combos(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

element coxeter_of(const weyl_type& type) {
  switch (type.family) {
    case weyl_family::A: {
      const int n = type.rank + 1;
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      return element(type.realization(), std::move(perm),
                     std::vector<int>(n, 0));
    }
    case weyl_family::B: {
      const int n = type.rank;
      std::vector<int> perm(n), colors(n, 0);
      for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      colors[0] = 1;
      return element(type.realization(), std::move(perm), std::move(colors));
    }
    case weyl_family::D: {
      // an (n-1)-cycle and a sign flip, each of weight one
      const int n = type.rank;
      std::vector<int> perm(n), colors(n, 0);
      for (int i = 0; i + 1 < n; ++i) perm[i] = (i + 1) % (n - 1);
      perm[n - 1] = n - 1;
      colors[0] = 1;
      colors[n - 1] = 1;
      return element(type.realization(), std::move(perm), std::move(colors));
    }
  }
  throw domain_error("unknown Weyl family");
}

const std::vector<weyl_type> sweep_types = {
    {weyl_family::A, 2}, {weyl_family::A, 3}, {weyl_family::A, 4},
    {weyl_family::B, 2}, {weyl_family::B, 3}, {weyl_family::D, 3},
    {weyl_family::D, 4},
};

}  // namespace

TEST_CASE("types and roots, frozen") {
  CHECK(parse_weyl_type("A3") == weyl_type{weyl_family::A, 3});
  CHECK(parse_weyl_type("B12").rank == 12);
  CHECK(format_weyl_type({weyl_family::D, 4}) == "D4");
  CHECK(parse_weyl_type("A3").realization() == group_params{1, 1, 4});
  CHECK(parse_weyl_type("B3").realization() == group_params{2, 1, 3});
  CHECK(parse_weyl_type("D4").realization() == group_params{2, 2, 4});
  CHECK_THROWS_AS(parse_weyl_type("E6"), domain_error);
  CHECK_THROWS_AS(parse_weyl_type("D1"), domain_error);
  CHECK_THROWS_AS(parse_weyl_type("A0"), domain_error);
  CHECK_THROWS_AS(parse_weyl_type("B"), domain_error);

  auto rp = root_of(t(1, 2, 0), {weyl_family::A, 3});
  CHECK(rp.root == ivec_of({1, -1, 0, 0}));
  CHECK(rp.coroot == rp.root);

  rp = root_of(d(1), {weyl_family::B, 3});
  CHECK(rp.root == ivec_of({1, 0, 0}));
  CHECK(rp.coroot == ivec_of({2, 0, 0}));

  rp = root_of(t(1, 2, 1), {weyl_family::D, 4});
  CHECK(rp.root == ivec_of({1, 1, 0, 0}));
  CHECK(rp.coroot == rp.root);

  CHECK_THROWS_AS(root_of(d(1), {weyl_family::A, 2}), domain_error);
  CHECK_THROWS_AS(root_of(d(1), {weyl_family::D, 3}), domain_error);
  CHECK_THROWS_AS(root_of(t(1, 2, 1), {weyl_family::A, 2}), domain_error);
  CHECK_THROWS_AS(root_of(t(1, 4, 0), {weyl_family::B, 3}), domain_error);
}

TEST_CASE("the reflection formula reproduces the matrices") {
  for (const auto& type : std::vector<weyl_type>{{weyl_family::A, 1},
                                                 {weyl_family::A, 2},
                                                 {weyl_family::A, 3},
                                                 {weyl_family::A, 4},
                                                 {weyl_family::B, 1},
                                                 {weyl_family::B, 2},
                                                 {weyl_family::B, 3},
                                                 {weyl_family::B, 4},
                                                 {weyl_family::D, 2},
                                                 {weyl_family::D, 3},
                                                 {weyl_family::D, 4}}) {
    const auto gp = type.realization();
    const int n = gp.n;
    for (const auto& r : all_reflections(gp)) {
      auto rp = root_of(r, type);
      CHECK(dot(rp.root, rp.coroot) == 2);
      auto mat = int_matrix(reflection_element(r, gp));
      for (int c = 0; c < n; ++c) {
        // t(e_c) = e_c - <e_c, coroot> root
        std::vector<big_int> want(n, 0);
        want[c] = 1;
        for (int k = 0; k < n; ++k) want[k] -= rp.coroot[c] * rp.root[k];
        for (int k = 0; k < n; ++k) CHECK(mat[k][c] == want[k]);
      }
    }
  }
}

TEST_CASE("Cartan pairing determinants, frozen") {
  auto a2 = cartan_pairing({t(1, 2, 0), t(2, 3, 0)}, {weyl_family::A, 2});
  CHECK(a2.determinant == 3);
  CHECK(a2.pairing_matrix[0][1] == -1);

  auto b2 = cartan_pairing({t(1, 2, 0), d(2)}, {weyl_family::B, 2});
  CHECK(b2.determinant == 2);
  CHECK(b2.pairing_matrix ==
        std::vector<std::vector<big_int>>{{2, -2}, {-1, 2}});

  auto d4 = cartan_pairing({t(1, 2, 0), t(2, 3, 0), t(3, 4, 0), t(3, 4, 1)},
                           {weyl_family::D, 4});
  CHECK(d4.determinant == 4);

  CHECK(pairing_det({t(1, 2, 0), t(1, 2, 0), t(3, 4, 0), t(3, 4, 1)},
                    {weyl_family::D, 4}) == 0);
  CHECK_THROWS_AS(cartan_pairing({t(1, 2, 0)}, {weyl_family::A, 2}),
                  domain_error);
}

TEST_CASE("connection indices") {
  CHECK(connection_index({weyl_family::A, 1}) == 2);
  CHECK(connection_index({weyl_family::A, 3}) == 4);
  CHECK(connection_index({weyl_family::B, 1}) == 2);
  CHECK(connection_index({weyl_family::B, 5}) == 2);
  CHECK(connection_index({weyl_family::D, 2}) == 4);
  CHECK(connection_index({weyl_family::D, 4}) == 4);

  CHECK(closure_connection_index(el("G(1,1,4):[1 2 3 4;0,0,0,0]")) == 1);
  CHECK(closure_connection_index(el("G(1,1,5):[2 1 4 5 3;0,0,0,0,0]")) == 6);
  CHECK(closure_connection_index(el("G(2,1,2):[1 2;1,1]")) == 2);
  CHECK(closure_connection_index(el("G(2,2,2):[1 2;1,1]")) == 4);
  CHECK(closure_connection_index(el("G(2,1,3):[2 1 3;0,0,1]")) == 2 * 2);
  CHECK_THROWS_AS(closure_connection_index(el("G(3,1,2):[1 2;1,2]")),
                  domain_error);
}

TEST_CASE("determinant I(W) picks out the generating sets") {
  auto run = [](const weyl_type& type, int samples) {
    const auto gp = type.realization();
    const auto refls = all_reflections(gp);
    const big_int target = connection_index(type);
    const int n = static_cast<int>(refls.size());
    std::vector<std::vector<int>> picks;
    if (samples == 0) {
      picks = combos(n, type.rank);
    } else {
      std::mt19937 rng(4200 + 10 * type.rank);
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      for (int s = 0; s < samples; ++s) {
        std::shuffle(idx.begin(), idx.end(), rng);
        picks.emplace_back(idx.begin(), idx.begin() + type.rank);
      }
    }
    for (const auto& pick : picks) {
      std::vector<reflection> ts;
      std::vector<element> gen;
      for (int q : pick) {
        ts.push_back(refls[q]);
        gen.push_back(reflection_element(refls[q], gp));
      }
      const bool full = subgroup_closure(gen, 10000).order() == gp.order();
      const big_int det = pairing_det(ts, type);
      CHECK(full == (abs(det) == target));
    }
  };
  run({weyl_family::A, 3}, 0);
  run({weyl_family::B, 2}, 0);
  run({weyl_family::B, 3}, 0);
  run({weyl_family::D, 2}, 0);
  run({weyl_family::D, 3}, 0);
  run({weyl_family::B, 4}, 300);
  run({weyl_family::D, 4}, 300);
}

TEST_CASE("pseudo-determinants, frozen") {
  const weyl_type a2{weyl_family::A, 2};
  CHECK(pdet_abs(el("G(1,1,3):[1 2 3;0,0,0]"), a2) == 1);
  CHECK(pdet_abs(el("G(1,1,3):[2 3 1;0,0,0]"), a2) == 3);
  CHECK(pdet_abs(el("G(2,1,2):[2 1;1,0]"), {weyl_family::B, 2}) == 2);
  CHECK(pdet_abs(el("G(2,1,2):[1 2;1,1]"), {weyl_family::B, 2}) == 4);
  CHECK_THROWS_AS(pdet_abs(el("G(1,1,3):[2 3 1;0,0,0]"), {weyl_family::A, 3}),
                  domain_error);

  // for a permutation, the nonzero eigenvalues of g - I multiply out to the
  // product of the cycle lengths
  for (int n = 4; n <= 5; ++n) {
    const weyl_type type{weyl_family::A, n - 1};
    for (const auto& g : enumerate_group(type.realization(), 10000)) {
      big_int want = 1;
      for (const auto& c : cycles_of(g).cycles) want *= c.length;
      CHECK(pdet_abs(g, type) == want);
    }
  }
}

TEST_CASE("pseudo-determinant equals the index of the factor closure") {
  for (const auto& type : sweep_types) {
    const auto gp = type.realization();
    for (const auto& g : enumerate_group(gp, 10000)) {
      CAPTURE(format_weyl_type(type));
      CAPTURE(format_element(g));
      const auto factors = greedy_reduced_factorization(g);
      const big_int pd = pdet_abs(g, type);

      std::vector<root_pair> pairs;
      for (const auto& f : factors) pairs.push_back(root_of(*as_reflection(f), type));
      std::vector<std::vector<big_int>> pairing(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
          pairing[i].push_back(dot(pairs[i].root, pairs[j].coroot));
      CHECK(pd == abs_det(pairing));

      if (factors.empty()) {
        CHECK(pd == 1);
        continue;
      }
      const auto closure = subgroup_closure(factors, 10000);
      CHECK(pd == recognized_index(reflections_inside(closure, gp), type));
    }
  }
}

TEST_CASE("the crosscheck ties the three characterizations") {
  for (const auto& type : sweep_types) {
    const auto gp = type.realization();
    for (const auto& g : enumerate_group(gp, 10000)) {
      CAPTURE(format_weyl_type(type));
      CAPTURE(format_element(g));
      const auto rep = weyl_pqc_crosscheck(g, type);
      CHECK(rep.consistent());
      CHECK(rep.pqc == is_parabolic_qc(g).is_pqc);
      if (type.family == weyl_family::A) CHECK(rep.pqc);
    }
  }

  const auto id_rep = weyl_pqc_crosscheck(el("G(1,1,4):[1 2 3 4;0,0,0,0]"),
                                          {weyl_family::A, 3});
  CHECK(id_rep.pqc);
  CHECK(id_rep.lattice_bases);
  CHECK(id_rep.det_u == 1);
  CHECK(id_rep.pdet == 1);

  const auto bad = weyl_pqc_crosscheck(el("G(2,1,2):[1 2;1,1]"),
                                       {weyl_family::B, 2});
  CHECK_FALSE(bad.pqc);
  CHECK_FALSE(bad.lattice_bases);
  CHECK(abs(bad.det_u) == 2);
  CHECK(abs(bad.det_u_check) == 1);
  CHECK(bad.pdet == 4);
  CHECK(bad.closure_index == 2);
  CHECK_FALSE(bad.pdet_matches);
  CHECK(bad.consistent());

  const auto b3 = weyl_pqc_crosscheck(coxeter_of({weyl_family::B, 3}),
                                      {weyl_family::B, 3});
  CHECK(b3.pqc);
  CHECK(b3.lattice_bases);
  CHECK(b3.pdet == 2);

  const auto neg = weyl_pqc_crosscheck(el("G(2,2,4):[1 2 3 4;1,1,1,1]"),
                                       {weyl_family::D, 4});
  CHECK_FALSE(neg.pqc);
  CHECK(neg.pdet == 16);
  CHECK(neg.closure_index == 4);
  CHECK(neg.consistent());

  CHECK_THROWS_AS(
      weyl_pqc_crosscheck(el("G(1,1,3):[2 3 1;0,0,0]"), {weyl_family::A, 3}),
      domain_error);
}

TEST_CASE("Coxeter factorization degrees") {
  CHECK(abc_degree({weyl_family::A, 1}) == 1);
  CHECK(abc_degree({weyl_family::A, 2}) == 3);
  CHECK(abc_degree({weyl_family::A, 3}) == 16);
  CHECK(abc_degree({weyl_family::A, 4}) == 125);
  CHECK(abc_degree({weyl_family::B, 1}) == 1);
  CHECK(abc_degree({weyl_family::B, 2}) == 4);
  CHECK(abc_degree({weyl_family::B, 3}) == 27);
  CHECK(abc_degree({weyl_family::D, 2}) == 2);
  CHECK(abc_degree({weyl_family::D, 3}) == 16);
  CHECK(abc_degree({weyl_family::D, 4}) == 162);

  // closed forms (n+1)^{n-1}, n^n, 2(n-1)^n at a larger rank
  CHECK(abc_degree({weyl_family::A, 6}) == 16807);
  CHECK(abc_degree({weyl_family::B, 6}) == 46656);
  CHECK(abc_degree({weyl_family::D, 6}) == 31250);

  for (const auto& type : std::vector<weyl_type>{{weyl_family::A, 1},
                                                 {weyl_family::A, 2},
                                                 {weyl_family::A, 3},
                                                 {weyl_family::A, 4},
                                                 {weyl_family::B, 1},
                                                 {weyl_family::B, 2},
                                                 {weyl_family::B, 3},
                                                 {weyl_family::D, 2},
                                                 {weyl_family::D, 3},
                                                 {weyl_family::D, 4}}) {
    CAPTURE(format_weyl_type(type));
    const element cox = coxeter_of(type);
    CHECK(is_parabolic_qc(cox).is_qc);
    CHECK(abc_degree(type) == fred_formula_qc(cox));
    CHECK(abc_degree(type) == count_reduced(cox));
  }
}

TEST_CASE("proper full-rank subgroups have larger connection index") {
  const weyl_type b3{weyl_family::B, 3};
  const auto gp = b3.realization();
  const auto refls = all_reflections(gp);
  int proper_fullrank = 0;
  for (const auto& pick : combos(static_cast<int>(refls.size()), 3)) {
    std::vector<element> gen;
    std::vector<std::vector<big_int>> roots;
    for (int q : pick) {
      gen.push_back(reflection_element(refls[q], gp));
      roots.push_back(root_of(refls[q], b3).root);
    }
    const auto closure = subgroup_closure(gen, 10000);
    if (closure.order() == gp.order() || rank_of(roots) < 3) continue;
    ++proper_fullrank;
    CHECK(recognized_index(reflections_inside(closure, gp), b3) > 2);
  }
  CHECK(proper_fullrank > 0);

  const weyl_type d4{weyl_family::D, 4};
  const auto gp4 = d4.realization();
  std::vector<element> gen;
  for (const auto& r : {t(1, 2, 0), t(1, 2, 1), t(3, 4, 0), t(3, 4, 1)})
    gen.push_back(reflection_element(r, gp4));
  const auto closure = subgroup_closure(gen, 10000);
  CHECK(closure.order() == 16);
  CHECK(recognized_index(reflections_inside(closure, gp4), d4) == 16);
}
