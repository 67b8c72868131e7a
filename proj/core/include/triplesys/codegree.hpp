#pragma once

#include <optional>
#include <vector>

#include "triplesys/triple_system.hpp"

namespace triplesys {

struct VertexPair {
  int u;
  int v;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// All pair neighborhoods of a host together with the derived co-degree
/// statistics. Neighborhoods are recomputed from the edge list, independently
/// of the host's own index. The host must outlive the table.
class CodegreeTable {
 public:
  explicit CodegreeTable(const TripleSystem& host);

  const TripleSystem& host() const { return *host_; }
  VertexSet neighborhood(int u, int v) const;
  int codegree(int u, int v) const { return neighborhood(u, v).size(); }

  /// Pairs u < v with non-empty neighborhood, in lexicographic order.
  const std::vector<VertexPair>& support_pairs() const { return support_; }

  /// delta_2^+: minimum co-degree over support pairs; nullopt for an edgeless host.
  std::optional<int> min_positive_codegree() const { return min_positive_; }
  std::optional<int> max_positive_codegree() const { return max_positive_; }
  /// delta_2: minimum co-degree over all pairs, zeros included (0 when n < 2).
  int min_codegree() const { return min_all_; }

 private:
  const TripleSystem* host_;
  int n_;
  std::vector<VertexSet> nbr_;
  std::vector<VertexPair> support_;
  std::optional<int> min_positive_;
  std::optional<int> max_positive_;
  int min_all_ = 0;
};

CodegreeTable build_codegree_table(const TripleSystem& host);

/// delta_2^+(H), computed straight from the host's neighborhood index.
std::optional<int> min_positive_codegree(const TripleSystem& host);

}  // namespace triplesys
