#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "triplesys/vertex_set.hpp"

namespace triplesys {

/// An unordered 3-set of vertices, stored sorted ascending.
using Triple = std::array<int, 3>;

/// Sorts the three vertices. Throws std::invalid_argument if two coincide.
Triple make_triple(int a, int b, int c);

/// An n-vertex 3-uniform hypergraph on {0, ..., n-1}.
///
/// Edges are kept twice: as a sorted list for deterministic iteration and as a
/// table of pair neighborhoods N(u, v) for word-level co-degree queries.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(int n);
  /// Throws std::invalid_argument on an out-of-range vertex, a degenerate
  /// triple or a duplicate edge.
  TripleSystem(int n, std::span<const Triple> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Triple>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_edge(int a, int b, int c) const;
  bool has_edge(const Triple& t) const { return has_edge(t[0], t[1], t[2]); }

  /// N(u, v): the third vertices completing {u, v} to an edge. N(u, u) is empty.
  VertexSet neighborhood(int u, int v) const { return nbr_[index(u, v)]; }
  int codegree(int u, int v) const { return neighborhood(u, v).size(); }

  /// Both return whether the edge set changed.
  bool add_edge(const Triple& t);
  bool remove_edge(const Triple& t);

  /// Image under the vertex relabeling v -> perm[v].
  TripleSystem relabeled(std::span<const int> perm) const;

  friend bool operator==(const TripleSystem& a, const TripleSystem& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void check_triple(const Triple& t) const;
  void toggle_neighborhoods(const Triple& t);

  int n_ = 0;
  std::vector<Triple> edges_;
  std::vector<VertexSet> nbr_;
};

/// All C(n, 3) triples on {0, ..., n-1} in lexicographic order.
std::vector<Triple> all_triples(int n);

/// The complete 3-graph on n vertices.
TripleSystem complete_triple_system(int n);

/// A vertex partition V_1, ..., V_k of {0, ..., n-1}.
struct PartitionSpec {
  std::vector<VertexSet> parts;

  int vertex_count() const;
  /// Index of the part containing v, or -1.
  int part_of(int v) const;
  /// Part sizes differ by at most one.
  bool balanced() const;
  /// Parts are pairwise disjoint and cover {0, ..., n-1}.
  bool is_partition_of(int n) const;
};

struct KPartiteConstruction {
  TripleSystem host;
  PartitionSpec partition;
};

/// The complete balanced k-partite 3-graph on n vertices. Larger parts come
/// first and vertices are assigned in increasing order, so the output is
/// fully determined by (n, k). Rejects k < 3, n < k and n > 64.
KPartiteConstruction construct_complete_k_partite(int n, int k);

}  // namespace triplesys
