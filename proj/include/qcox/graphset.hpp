#pragma once

#include "qcox/wreath.hpp"

namespace qcox {

// multigraph on 0..n-1 carrying reflection data: transposition-like
// reflections are edges, diagonal reflections are loops
struct refl_graph {
  struct edge {
    int i = 0, j = 0;  // i < j
    int color = 0;
    friend bool operator==(const edge&, const edge&) = default;
    friend auto operator<=>(const edge&, const edge&) = default;
  };
  struct loop {
    int i = 0;
    int color = 0;
    friend bool operator==(const loop&, const loop&) = default;
    friend auto operator<=>(const loop&, const loop&) = default;
  };

  int n = 0;
  int m = 1;
  std::vector<edge> edges;  // sorted
  std::vector<loop> loops;  // sorted
};

refl_graph graph_of(const std::vector<reflection>& set, const group_params& gp);

enum class graph_class { tree, rooted_tree, unicycle, other };

std::string to_string(graph_class c);

// tree: connected, n-1 edges, no loops; rooted_tree: tree plus one loop;
// unicycle: connected, n edges, no loops
graph_class classify(const refl_graph& g);

// color sum around the unique cycle of a unicycle, canonical orientation:
// start at the smallest cycle vertex, leave along the edge that minimizes
// (neighbor, edge position); an edge (i,j,c) contributes +c from i to j
// and -c from j to i
int delta(const refl_graph& g);

// partition of 0..n-1; blocks sorted internally and by smallest member
class set_partition {
 public:
  set_partition(int n, std::vector<std::vector<int>> blocks);
  static set_partition discrete(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int i) const { return index_.at(i); }

  friend bool operator==(const set_partition&, const set_partition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> index_;
};

// quotient graph on the blocks; an edge inside a block becomes a loop, a
// cross edge keeps its color oriented from the smaller block index
refl_graph contract(const refl_graph& g, const set_partition& pi);

struct relative_class {
  graph_class cls = graph_class::other;
  // rooted_tree: the loop color; unicycle: delta of the contracted cycle,
  // or the edge color when the cycle collapses to a loop of the quotient
  int color = 0;
};

relative_class classify_relative(const refl_graph& g, const set_partition& pi);

// whether the reflections generate the whole group; requires p = 1 or p = m
bool is_good_generating_set(const std::vector<reflection>& set,
                            const group_params& gp);

std::string to_dot(const refl_graph& g);

}  // namespace qcox
