#include "qcox/weyl_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qcox {

namespace {

using ivec = std::vector<big_int>;
using imat = std::vector<ivec>;

big_int dot(const ivec& a, const ivec& b) {
  big_int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// ambient integer matrix; column i carries e_i -> +-e_{u(i)}
imat matrix_of(const element& g) {
  const int n = g.params().n;
  imat mat(n, ivec(n, 0));
  for (int i = 0; i < n; ++i)
    mat[g.perm()[i]][i] = g.colors()[i] == 0 ? 1 : -1;
  return mat;
}

// fraction-free Gaussian elimination; every division is exact
big_int det_bareiss(imat a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  big_int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// det(xI - A) by the Berkowitz scheme, division free; coefficients are
// returned highest degree first, so out[0] = 1 and out[n] is the constant
ivec char_poly(const imat& a) {
  const int n = static_cast<int>(a.size());
  ivec poly{1};
  for (int s = n - 1; s >= 0; --s) {
    const int r = n - s;
    ivec items(r + 1);
    items[0] = 1;
    items[1] = -a[s][s];
    ivec vec;
    for (int i = s + 1; i < n; ++i) vec.push_back(a[i][s]);
    for (int idx = 2; idx <= r; ++idx) {
      big_int top = 0;
      for (int j = s + 1; j < n; ++j) top += a[s][j] * vec[j - s - 1];
      items[idx] = -top;
      ivec nxt(n - s - 1, 0);
      for (int i = s + 1; i < n; ++i)
        for (int j = s + 1; j < n; ++j)
          nxt[i - s - 1] += a[i][j] * vec[j - s - 1];
      vec = std::move(nxt);
    }
    ivec next(r + 1, 0);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < static_cast<int>(poly.size()); ++j)
        if (i >= j) next[i] += items[i - j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

// row echelon basis, over Z, of the lattice spanned by the given rows
imat lattice_basis(imat rows) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows[0].size());
  int top = 0;
  for (int c = 0; c < cols && top < static_cast<int>(rows.size()); ++c) {
    while (true) {
      int piv = -1;
      for (int r = top; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][c] != 0 &&
            (piv < 0 || abs(rows[r][c]) < abs(rows[piv][c])))
          piv = r;
      if (piv < 0) break;
      std::swap(rows[top], rows[piv]);
      bool clean = true;
      for (int r = top + 1; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][c] == 0) continue;
        big_int q = rows[r][c] / rows[top][c];
        for (int k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] != 0) {
      if (rows[top][c] < 0)
        for (int k = 0; k < cols; ++k) rows[top][k] = -rows[top][k];
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

// coordinates of v in an echelon basis; exact by construction for lattice
// members, anything else is a logic error upstream
ivec coords_in(const imat& basis, ivec v) {
  ivec coords;
  for (const auto& b : basis) {
    int pc = 0;
    while (b[pc] == 0) ++pc;
    if (v[pc] % b[pc] != 0) throw error("vector outside the lattice");
    big_int q = v[pc] / b[pc];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * b[k];
    coords.push_back(q);
  }
  for (const auto& x : v)
    if (x != 0) throw error("vector outside the lattice");
  return coords;
}

ivec basis_vector(int n, int i, big_int scale = 1) {
  ivec v(n, 0);
  v[i] = std::move(scale);
  return v;
}

}  // namespace

group_params weyl_type::realization() const {
  switch (family) {
    case weyl_family::A:
      if (rank < 1) throw domain_error("type A needs rank >= 1");
      return {1, 1, rank + 1};
    case weyl_family::B:
      if (rank < 1) throw domain_error("type B needs rank >= 1");
      return {2, 1, rank};
    case weyl_family::D:
      if (rank < 2) throw domain_error("type D needs rank >= 2");
      return {2, 2, rank};
  }
  throw domain_error("unknown Weyl family");
}

weyl_type parse_weyl_type(const std::string& s) {
  if (s.size() < 2) throw domain_error("cannot parse Weyl type: " + s);
  weyl_family fam;
  switch (s[0]) {
    case 'A': fam = weyl_family::A; break;
    case 'B': fam = weyl_family::B; break;
    case 'D': fam = weyl_family::D; break;
    default: throw domain_error("cannot parse Weyl type: " + s);
  }
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])) || rank > 10000)
      throw domain_error("cannot parse Weyl type: " + s);
    rank = 10 * rank + (s[k] - '0');
  }
  weyl_type out{fam, rank};
  out.realization();
  return out;
}

std::string format_weyl_type(const weyl_type& type) {
  const char fam = type.family == weyl_family::A   ? 'A'
                   : type.family == weyl_family::B ? 'B'
                                                   : 'D';
  return fam + std::to_string(type.rank);
}

element coxeter_element(const weyl_type& type) {
  const group_params gp = type.realization();
  const int n = gp.n;
  std::vector<int> perm(n), colors(n, 0);
  switch (type.family) {
    case weyl_family::A:
      for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      break;
    case weyl_family::B:
      for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      colors[0] = 1;
      break;
    case weyl_family::D:
      for (int i = 0; i < n - 1; ++i) perm[i] = (i + 1) % (n - 1);
      perm[n - 1] = n - 1;
      colors[0] = 1;
      colors[n - 1] = 1;
      break;
  }
  return element(gp, std::move(perm), std::move(colors));
}

root_pair root_of(const reflection& t, const weyl_type& type) {
  const int n = type.ambient_dim();
  if (t.kind == reflection::kind_t::diagonal) {
    if (type.family != weyl_family::B || t.color != 1 || t.i < 0 || t.i >= n)
      throw domain_error("reflection does not belong to the realization");
    return {basis_vector(n, t.i), basis_vector(n, t.i, 2)};
  }
  if (t.i < 0 || t.i >= t.j || t.j >= n)
    throw domain_error("reflection does not belong to the realization");
  if (t.color != 0 && (type.family == weyl_family::A || t.color != 1))
    throw domain_error("reflection does not belong to the realization");
  ivec root = basis_vector(n, t.i);
  root[t.j] = t.color == 0 ? -1 : 1;
  return {root, root};
}

cartan_report cartan_pairing(const std::vector<reflection>& ts,
                             const weyl_type& type) {
  if (static_cast<int>(ts.size()) != type.rank)
    throw domain_error("pairing determinants need exactly rank reflections");
  std::vector<root_pair> pairs;
  for (const auto& t : ts) pairs.push_back(root_of(t, type));
  const int k = type.rank;
  imat mat(k, ivec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mat[i][j] = dot(pairs[i].root, pairs[j].coroot);
  big_int det = det_bareiss(mat);
  return {std::move(mat), std::move(det)};
}

big_int connection_index(const weyl_type& type) {
  type.realization();
  switch (type.family) {
    case weyl_family::A: return type.rank + 1;
    case weyl_family::B: return 2;
    case weyl_family::D: return 4;
  }
  throw domain_error("unknown Weyl family");
}

big_int closure_connection_index(const element& g) {
  const auto& gp = g.params();
  if (gp.m > 2 || !gp.well_generated())
    throw domain_error("connection indices live in the Weyl realizations");
  auto pt = parabolic_closure_type(g);
  big_int idx = 1;
  for (int part : pt.symmetric_parts) idx *= part;
  if (pt.nonreal) {
    if (pt.nonreal->p == 1)
      idx *= 2;
    else if (pt.nonreal->n >= 2)
      idx *= 4;
  }
  return idx;
}

big_int pdet_abs(const element& g, const weyl_type& type) {
  if (g.params() != type.realization())
    throw domain_error("element is not in the realizing group");
  auto a = matrix_of(g);
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= 1;
  const auto poly = char_poly(a);
  for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d)
    if (poly[d] != 0) return abs(poly[d]);
  return 1;
}

big_int abc_degree(const weyl_type& type) {
  const auto gp = type.realization();
  const int n = type.rank;
  const big_int h = type.family == weyl_family::A   ? n + 1
                    : type.family == weyl_family::B ? 2 * n
                                                    : 2 * n - 2;
  big_int num = 1;
  for (int i = 0; i < n; ++i) num *= h;
  for (int i = 2; i <= n; ++i) num *= i;
  big_int order = 1;
  for (int i = 2; i <= gp.n; ++i) order *= i;
  for (int i = 0; i < gp.n; ++i) order *= gp.m;
  order /= gp.p;
  if (num % order != 0)
    throw error("Coxeter factorization count is not integral");
  return num / order;
}

weyl_crosscheck weyl_pqc_crosscheck(const element& g, const weyl_type& type) {
  const auto gp = type.realization();
  if (g.params() != gp)
    throw domain_error("element is not in the realizing group");
  weyl_crosscheck out;
  out.pqc = is_parabolic_qc(g).is_pqc;

  imat roots;
  imat coroots;
  for (const auto& t : all_reflections(gp)) {
    if (!parabolic_closure_contains(g, reflection_element(t, gp))) continue;
    auto rp = root_of(t, type);
    roots.push_back(std::move(rp.root));
    coroots.push_back(std::move(rp.coroot));
  }
  const imat q_basis = lattice_basis(std::move(roots));
  const imat q_check_basis = lattice_basis(std::move(coroots));

  imat u;
  imat u_check;
  for (const auto& f : greedy_reduced_factorization(g)) {
    auto rp = root_of(*as_reflection(f), type);
    u.push_back(coords_in(q_basis, std::move(rp.root)));
    u_check.push_back(coords_in(q_check_basis, std::move(rp.coroot)));
  }
  if (u.size() != q_basis.size() || u_check.size() != q_check_basis.size()) {
    out.lattice_bases = false;
  } else {
    out.det_u = det_bareiss(u);
    out.det_u_check = det_bareiss(u_check);
    out.lattice_bases = abs(out.det_u) == 1 && abs(out.det_u_check) == 1;
  }
  out.pdet = pdet_abs(g, type);
  out.closure_index = closure_connection_index(g);
  out.pdet_matches = out.pdet == out.closure_index;
  return out;
}

}  // namespace qcox
