#include "qcox/wreath.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qcox {

void group_params::validate() const {
  if (m < 1 || p < 1 || n < 1)
    throw domain_error("group parameters must be positive");
  if (m % p != 0) throw domain_error("p must divide m");
}

int group_params::rank() const {
  if (m == 1) return n - 1;
  if (p == m && n == 1) return 0;
  return n;
}

int group_params::num_reflections() const {
  return m * n * (n - 1) / 2 + n * (m / p - 1);
}

long long group_params::order() const {
  __int128 o = 1;
  const __int128 limit = static_cast<__int128>(INT64_MAX);
  for (int i = 0; i < n; ++i) {
    o *= m;
    if (o > limit) throw cap_error("group order exceeds 64-bit range");
  }
  for (int i = 2; i <= n; ++i) {
    o *= i;
    if (o > limit) throw cap_error("group order exceeds 64-bit range");
  }
  return static_cast<long long>(o / p);
}

element::element(group_params gp, std::vector<int> perm, std::vector<int> colors)
    : gp_(gp), perm_(std::move(perm)), colors_(std::move(colors)) {
  gp_.validate();
  const int n = gp_.n;
  if (static_cast<int>(perm_.size()) != n ||
      static_cast<int>(colors_.size()) != n)
    throw domain_error("element arrays must have length n");
  std::vector<char> seen(n, 0);
  for (int v : perm_) {
    if (v < 0 || v >= n || seen[v])
      throw domain_error("perm is not a permutation of 0..n-1");
    seen[v] = 1;
  }
  long long wt = 0;
  for (int& c : colors_) {
    c %= gp_.m;
    if (c < 0) c += gp_.m;
    wt += c;
  }
  if (wt % gp_.p != 0)
    throw domain_error("color sum violates the G(m,p,n) membership condition");
}

element element::identity(const group_params& gp) {
  std::vector<int> perm(gp.n);
  std::iota(perm.begin(), perm.end(), 0);
  return element(gp, std::move(perm), std::vector<int>(gp.n, 0));
}

bool element::is_identity() const {
  for (int i = 0; i < gp_.n; ++i)
    if (perm_[i] != i || colors_[i] != 0) return false;
  return true;
}

element multiply(const element& x, const element& y) {
  if (x.params() != y.params())
    throw domain_error("elements live in different groups");
  const int n = x.params().n;
  const int m = x.params().m;
  std::vector<int> perm(n), colors(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = x.perm()[y.perm()[i]];
    colors[i] = (x.colors()[y.perm()[i]] + y.colors()[i]) % m;
  }
  return element(x.params(), std::move(perm), std::move(colors));
}

element inverse(const element& x) {
  const int n = x.params().n;
  const int m = x.params().m;
  std::vector<int> perm(n), colors(n);
  for (int i = 0; i < n; ++i) perm[x.perm()[i]] = i;
  for (int i = 0; i < n; ++i)
    colors[i] = (m - x.colors()[perm[i]]) % m;
  return element(x.params(), std::move(perm), std::move(colors));
}

element conjugate(const element& h, const element& x) {
  return multiply(multiply(h, x), inverse(h));
}

int weight(const element& x) {
  long long s = 0;
  for (int c : x.colors()) s += c;
  return static_cast<int>(s % x.params().m);
}

colored_cycles cycles_of(const element& x) {
  const int n = x.params().n;
  const int m = x.params().m;
  colored_cycles out;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    colored_cycle c;
    int i = start;
    long long sum = 0;
    do {
      seen[i] = 1;
      c.support.push_back(i);
      sum += x.colors()[i];
      i = x.perm()[i];
    } while (i != start);
    c.length = static_cast<int>(c.support.size());
    c.color = static_cast<int>(sum % m);
    out.cycles.push_back(std::move(c));
  }
  return out;
}

int colored_cycles::count_zero_color() const {
  int k = 0;
  for (const auto& c : cycles)
    if (c.color == 0) ++k;
  return k;
}

int colored_cycles::count_nonzero_color() const {
  return count() - count_zero_color();
}

element reflection_element(const reflection& r, const group_params& gp) {
  gp.validate();
  std::vector<int> perm(gp.n), colors(gp.n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  if (r.kind == reflection::kind_t::transposition_like) {
    if (r.i < 0 || r.j <= r.i || r.j >= gp.n)
      throw domain_error("bad transposition support");
    int k = ((r.color % gp.m) + gp.m) % gp.m;
    std::swap(perm[r.i], perm[r.j]);
    colors[r.i] = k;
    colors[r.j] = (gp.m - k) % gp.m;
  } else {
    if (r.i < 0 || r.i >= gp.n || r.i != r.j)
      throw domain_error("bad diagonal support");
    int k = ((r.color % gp.m) + gp.m) % gp.m;
    if (k == 0 || k % gp.p != 0)
      throw domain_error("diagonal color must be a nonzero multiple of p");
    colors[r.i] = k;
  }
  return element(gp, std::move(perm), std::move(colors));
}

std::vector<reflection> all_reflections(const group_params& gp) {
  gp.validate();
  std::vector<reflection> out;
  out.reserve(gp.num_reflections());
  for (int i = 0; i < gp.n; ++i)
    for (int j = i + 1; j < gp.n; ++j)
      for (int k = 0; k < gp.m; ++k)
        out.push_back({reflection::kind_t::transposition_like, i, j, k});
  for (int i = 0; i < gp.n; ++i)
    for (int k = gp.p; k < gp.m; k += gp.p)
      out.push_back({reflection::kind_t::diagonal, i, i, k});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<reflection> as_reflection(const element& x) {
  const int n = x.params().n;
  const int m = x.params().m;
  std::vector<int> moved;
  for (int i = 0; i < n; ++i)
    if (x.perm()[i] != i) moved.push_back(i);
  if (moved.size() == 2) {
    int i = moved[0], j = moved[1];
    if (x.perm()[i] != j || x.perm()[j] != i) return std::nullopt;
    for (int t = 0; t < n; ++t)
      if (t != i && t != j && x.colors()[t] != 0) return std::nullopt;
    if ((x.colors()[i] + x.colors()[j]) % m != 0) return std::nullopt;
    return reflection{reflection::kind_t::transposition_like, i, j,
                      x.colors()[i]};
  }
  if (moved.empty()) {
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
      if (x.colors()[i] != 0) nz.push_back(i);
    if (nz.size() != 1) return std::nullopt;
    int i = nz[0];
    if (x.colors()[i] % x.params().p != 0) return std::nullopt;
    return reflection{reflection::kind_t::diagonal, i, i, x.colors()[i]};
  }
  return std::nullopt;
}

std::string format_element(const element& x) {
  std::ostringstream os;
  const auto& gp = x.params();
  os << "G(" << gp.m << "," << gp.p << "," << gp.n << "):[";
  for (int i = 0; i < gp.n; ++i) {
    if (i) os << ' ';
    os << x.perm()[i] + 1;
  }
  os << ';';
  for (int i = 0; i < gp.n; ++i) {
    if (i) os << ',';
    os << x.colors()[i];
  }
  os << ']';
  return os.str();
}

std::string format_reflection(const reflection& r) {
  std::ostringstream os;
  if (r.kind == reflection::kind_t::transposition_like)
    os << "t(" << r.i + 1 << "," << r.j + 1 << ";" << r.color << ")";
  else
    os << "d(" << r.i + 1 << ";" << r.color << ")";
  return os.str();
}

namespace {

struct cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw parse_error("expected '" + std::string(1, c) + "' at position " +
                        std::to_string(pos) + " in element literal");
    ++pos;
  }
  int read_int() {
    skip_ws();
    int value = 0;
    auto begin = s.data() + pos;
    auto end = s.data() + s.size();
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    auto res = std::from_chars(begin, s.data() + pos, value);
    if (res.ec != std::errc() || res.ptr == begin || res.ptr > end)
      throw parse_error("expected an integer at position " +
                        std::to_string(begin - s.data()));
    return value;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

}  // namespace

element parse_element(const std::string& text) {
  cursor c{text};
  c.expect('G');
  c.expect('(');
  group_params gp;
  gp.m = c.read_int();
  c.expect(',');
  gp.p = c.read_int();
  c.expect(',');
  gp.n = c.read_int();
  c.expect(')');
  c.expect(':');
  c.expect('[');
  try {
    gp.validate();
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
  std::vector<int> perm(gp.n), colors(gp.n);
  for (int i = 0; i < gp.n; ++i) {
    int v = c.read_int();
    if (v < 1 || v > gp.n)
      throw parse_error("permutation entries are 1-based indices");
    perm[i] = v - 1;
  }
  c.expect(';');
  for (int i = 0; i < gp.n; ++i) {
    if (i) c.expect(',');
    colors[i] = c.read_int();
  }
  c.expect(']');
  if (!c.done()) throw parse_error("trailing characters after element literal");
  try {
    return element(gp, std::move(perm), std::move(colors));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

nlohmann::json element_to_json(const element& x) {
  nlohmann::json j;
  j["m"] = x.params().m;
  j["p"] = x.params().p;
  j["n"] = x.params().n;
  auto& perm = j["perm"] = nlohmann::json::array();
  for (int v : x.perm()) perm.push_back(v + 1);
  j["colors"] = x.colors();
  return j;
}

element element_from_json(const nlohmann::json& j) {
  try {
    group_params gp{j.at("m").get<int>(), j.at("p").get<int>(),
                    j.at("n").get<int>()};
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    for (int& v : perm) --v;
    std::vector<int> colors = j.at("colors").get<std::vector<int>>();
    return element(gp, std::move(perm), std::move(colors));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad element json: ") + e.what());
  }
}

std::vector<element> enumerate_group(const group_params& gp, long long cap) {
  gp.validate();
  long long target = gp.order();
  if (target > cap)
    throw cap_error("group order " + std::to_string(target) +
                    " exceeds cap " + std::to_string(cap));
  std::vector<element> out;
  out.reserve(static_cast<size_t>(target));
  std::vector<int> perm(gp.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> colors(gp.n, 0);
    while (true) {
      long long wt = 0;
      for (int c : colors) wt += c;
      if (wt % gp.p == 0) out.emplace_back(gp, perm, colors);
      int i = gp.n - 1;
      while (i >= 0 && colors[i] == gp.m - 1) colors[i--] = 0;
      if (i < 0) break;
      ++colors[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcox
