#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "triplesys/pattern_id.hpp"
#include "triplesys/triple_system.hpp"

namespace triplesys {

/// Relabeling-invariant key of a host with at most 7 vertices: the least
/// edge-set bit string over all n! vertex permutations (bit t set when the
/// t-th triple in lexicographic order is an edge). Equal keys iff isomorphic.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws std::invalid_argument for n > 7.
CanonicalForm canonical_key(const TripleSystem& host);

struct SearchOptions {
  /// Worker threads for the edge phase. Results do not depend on this.
  int jobs = 1;
  /// Receives human-readable progress lines.
  std::function<void(const std::string&)> progress;
};

struct DecisionResult {
  /// A P-free host with delta_2^+ >= k, or nullopt when none exists.
  std::optional<TripleSystem> host;
  std::uint64_t nodes = 0;
  /// Pair skeletons (live-pair graphs up to isomorphism) handed to the edge phase.
  std::uint64_t skeletons = 0;
};

/// Decides whether some P-free host on n vertices (4 <= n <= 7) has
/// delta_2^+ >= k >= 1. Branches first on pair states (dead: co-degree 0,
/// live: co-degree >= k), rejects isomorphic live-pair skeletons, then
/// branches on triples inside each skeleton with unit propagation.
DecisionResult decide_positive_codegree(int n, PatternId p, int k, const SearchOptions& options = {});

struct SearchOutcome {
  int n = 0;
  PatternId pattern = PatternId::C5;
  /// co+ex(n, P)
  int value = 0;
  TripleSystem extremal;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exact co+ex(n, P) for 4 <= n <= 7. Throws std::invalid_argument outside
/// that range.
SearchOutcome exact_copos_ex(int n, PatternId p, const SearchOptions& options = {});

/// The complete balanced 3- or 4-partite host with the larger delta_2^+ among
/// those that are P-free.
TripleSystem seed_construction(int n, PatternId p);

/// Hill-climbing from seed_construction(n, p) with single-edge toggles that
/// keep the host P-free, maximizing delta_2^+ and then minimizing the number
/// of support pairs attaining it. Deterministic in `seed`; 8 <= n <= 24.
/// Throws InternalContradiction if the result beats theorem_value(n, p).
TripleSystem local_search_lower_bound(int n, PatternId p, std::uint64_t budget, std::uint64_t seed);

}  // namespace triplesys
