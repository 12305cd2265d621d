#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcox {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// invalid input or unsupported parameter range -> CLI exit 1
struct domain_error : error {
  using error::error;
};
struct parse_error : domain_error {
  using domain_error::domain_error;
};
// a configured cap was hit; the computation is fine, just too big -> CLI exit 2
struct cap_error : error {
  using error::error;
};

// The triple (m,p,n) naming G(m,p,n): n x n monomial matrices whose nonzero
// entries are m-th roots of unity with entry-product an (m/p)-th root.
struct group_params {
  int m = 1;
  int p = 1;
  int n = 1;

  void validate() const;
  bool well_generated() const { return p == 1 || p == m; }
  // dimension of the span of the roots: n-1 for the symmetric group,
  // 0 for the two trivial families, n otherwise
  int rank() const;
  int num_reflections() const;
  long long order() const;  // m^n n!/p, throws cap_error on 64-bit overflow

  friend bool operator==(const group_params&, const group_params&) = default;
  friend auto operator<=>(const group_params&, const group_params&) = default;
};

// Element [u; a]: perm()[i] is u(i) (0-based), colors()[i] is a_i in 0..m-1.
// The matrix sends e_i to zeta^{a_i} e_{u(i)}.
// Immutable value type; total order is (perm one-line, then colors, lex).
class element {
 public:
  element(group_params gp, std::vector<int> perm, std::vector<int> colors);
  static element identity(const group_params& gp);

  const group_params& params() const { return gp_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& colors() const { return colors_; }
  bool is_identity() const;

  friend bool operator==(const element&, const element&) = default;
  friend auto operator<=>(const element&, const element&) = default;

 private:
  group_params gp_;
  std::vector<int> perm_;
  std::vector<int> colors_;
};

// [u;a][v;b] = [uv; v(a)+b] where uv applies v first.
element multiply(const element& x, const element& y);
element inverse(const element& x);
// h x h^{-1}
element conjugate(const element& h, const element& x);
// wt(x) = sum of colors mod m
int weight(const element& x);

struct colored_cycle {
  std::vector<int> support;  // cycle order, starting at the smallest index
  int length = 0;
  int color = 0;  // sum of colors over the support, mod m
};

struct colored_cycles {
  std::vector<colored_cycle> cycles;  // sorted by smallest support element
  int count() const { return static_cast<int>(cycles.size()); }
  int count_zero_color() const;
  int count_nonzero_color() const;
};

colored_cycles cycles_of(const element& x);

// Reflections come in two families: transposition-like [(i j); k] and, when
// p < m, diagonal [id; c e_i] with c a nonzero multiple of p.
struct reflection {
  enum class kind_t { transposition_like = 0, diagonal = 1 };
  kind_t kind = kind_t::transposition_like;
  int i = 0;
  int j = 0;  // == i for diagonal
  int color = 0;

  friend bool operator==(const reflection&, const reflection&) = default;
  friend auto operator<=>(const reflection&, const reflection&) = default;
};

element reflection_element(const reflection& r, const group_params& gp);
// canonical order: transposition-like by (i,j,color), then diagonal by (i,color)
std::vector<reflection> all_reflections(const group_params& gp);
std::optional<reflection> as_reflection(const element& x);

// text form: G(m,p,n):[u1 u2 ... un;a1,a2,...,an], 1-based one-line perm
std::string format_element(const element& x);
element parse_element(const std::string& text);
std::string format_reflection(const reflection& r);

nlohmann::json element_to_json(const element& x);
element element_from_json(const nlohmann::json& j);

// all elements in deterministic order (perm lex, colors lex), guarded by cap
std::vector<element> enumerate_group(const group_params& gp, long long cap);

}  // namespace qcox
