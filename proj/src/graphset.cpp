#include "qcox/graphset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcox {

refl_graph graph_of(const std::vector<reflection>& set,
                    const group_params& gp) {
  gp.validate();
  refl_graph g;
  g.n = gp.n;
  g.m = gp.m;
  for (const auto& r : set) {
    if (r.kind == reflection::kind_t::transposition_like)
      g.edges.push_back({r.i, r.j, r.color});
    else
      g.loops.push_back({r.i, r.color});
  }
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.loops.begin(), g.loops.end());
  return g;
}

std::string to_string(graph_class c) {
  switch (c) {
    case graph_class::tree: return "tree";
    case graph_class::rooted_tree: return "rooted_tree";
    case graph_class::unicycle: return "unicycle";
    default: return "other";
  }
}

namespace {

struct dsu {
  std::vector<int> parent;
  explicit dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool connected(const refl_graph& g) {
  if (g.n == 0) return false;
  dsu d(g.n);
  int components = g.n;
  for (const auto& e : g.edges)
    if (d.unite(e.i, e.j)) --components;
  return components == 1;
}

}  // namespace

graph_class classify(const refl_graph& g) {
  int e = static_cast<int>(g.edges.size());
  int l = static_cast<int>(g.loops.size());
  if (!connected(g)) return graph_class::other;
  if (e == g.n - 1 && l == 0) return graph_class::tree;
  if (e == g.n - 1 && l == 1) return graph_class::rooted_tree;
  if (e == g.n && l == 0) return graph_class::unicycle;
  return graph_class::other;
}

int delta(const refl_graph& g) {
  if (classify(g) != graph_class::unicycle)
    throw domain_error("delta is defined for unicycle graphs only");
  const int ne = static_cast<int>(g.edges.size());
  std::vector<int> degree(g.n, 0);
  for (const auto& e : g.edges) {
    ++degree[e.i];
    ++degree[e.j];
  }
  std::vector<char> dropped(ne, 0);
  std::vector<std::vector<int>> incident(g.n);
  for (int e = 0; e < ne; ++e) {
    incident[g.edges[e].i].push_back(e);
    incident[g.edges[e].j].push_back(e);
  }
  std::vector<int> leaves;
  for (int v = 0; v < g.n; ++v)
    if (degree[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    int v = leaves.back();
    leaves.pop_back();
    for (int e : incident[v])
      if (!dropped[e] && degree[v] == 1) {
        dropped[e] = 1;
        int w = g.edges[e].i == v ? g.edges[e].j : g.edges[e].i;
        --degree[v];
        if (--degree[w] == 1) leaves.push_back(w);
      }
  }
  int start = -1;
  for (int v = 0; v < g.n && start < 0; ++v)
    if (degree[v] == 2) start = v;
  std::vector<char> used = dropped;
  int at = start;
  long long sum = 0;
  do {
    int pick = -1, pick_to = -1;
    for (int e : incident[at])
      if (!used[e]) {
        int to = g.edges[e].i == at ? g.edges[e].j : g.edges[e].i;
        if (pick < 0 || to < pick_to || (to == pick_to && e < pick)) {
          pick = e;
          pick_to = to;
        }
      }
    used[pick] = 1;
    sum += g.edges[pick].i == at ? g.edges[pick].color : -g.edges[pick].color;
    at = pick_to;
  } while (at != start);
  return static_cast<int>(((sum % g.m) + g.m) % g.m);
}

set_partition::set_partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), index_(n, -1) {
  for (auto& b : blocks_) {
    if (b.empty()) throw domain_error("partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int bi = 0; bi < static_cast<int>(blocks_.size()); ++bi)
    for (int v : blocks_[bi]) {
      if (v < 0 || v >= n_ || index_[v] != -1)
        throw domain_error("blocks must partition 0..n-1");
      index_[v] = bi;
    }
  for (int v = 0; v < n_; ++v)
    if (index_[v] == -1) throw domain_error("blocks must partition 0..n-1");
}

set_partition set_partition::discrete(int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = {i};
  return set_partition(n, std::move(blocks));
}

refl_graph contract(const refl_graph& g, const set_partition& pi) {
  if (pi.n() != g.n) throw domain_error("partition size mismatch");
  refl_graph out;
  out.n = pi.count();
  out.m = g.m;
  for (const auto& e : g.edges) {
    int bi = pi.block_of(e.i), bj = pi.block_of(e.j);
    if (bi == bj)
      out.loops.push_back({bi, e.color});
    else if (bi < bj)
      out.edges.push_back({bi, bj, e.color});
    else
      out.edges.push_back({bj, bi, (g.m - e.color) % g.m});
  }
  for (const auto& l : g.loops) out.loops.push_back({pi.block_of(l.i), l.color});
  std::sort(out.edges.begin(), out.edges.end());
  std::sort(out.loops.begin(), out.loops.end());
  return out;
}

relative_class classify_relative(const refl_graph& g, const set_partition& pi) {
  refl_graph q = contract(g, pi);
  graph_class cls = classify(q);
  size_t original = g.loops.size();
  switch (cls) {
    case graph_class::tree:
      return {graph_class::tree, 0};
    case graph_class::rooted_tree:
      // the single loop is either a genuine diagonal or a collapsed cycle
      if (original == 1) return {graph_class::rooted_tree, q.loops[0].color};
      return {graph_class::unicycle, q.loops[0].color};
    case graph_class::unicycle:
      return {graph_class::unicycle, delta(q)};
    default:
      return {graph_class::other, 0};
  }
}

bool is_good_generating_set(const std::vector<reflection>& set,
                            const group_params& gp) {
  gp.validate();
  if (!gp.well_generated())
    throw domain_error("good generating sets need p = 1 or p = m");
  if (gp.rank() == 0) return set.empty();
  if (static_cast<int>(set.size()) != gp.rank()) return false;
  refl_graph g = graph_of(set, gp);
  graph_class cls = classify(g);
  if (gp.m == 1) return cls == graph_class::tree;
  if (gp.p == 1)
    return cls == graph_class::rooted_tree &&
           std::gcd(g.loops[0].color, gp.m) == 1;
  return cls == graph_class::unicycle && std::gcd(delta(g), gp.m) == 1;
}

std::string to_dot(const refl_graph& g) {
  std::ostringstream os;
  os << "graph refl {\n";
  for (int v = 0; v < g.n; ++v) os << "  v" << v + 1 << ";\n";
  for (const auto& e : g.edges)
    os << "  v" << e.i + 1 << " -- v" << e.j + 1 << " [label=\"" << e.color
       << "\"];\n";
  for (const auto& l : g.loops)
    os << "  v" << l.i + 1 << " -- v" << l.i + 1 << " [label=\"" << l.color
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qcox
