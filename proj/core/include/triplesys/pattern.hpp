#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "triplesys/pattern_id.hpp"
#include "triplesys/triple_system.hpp"

namespace triplesys {

/// A small labeled configuration on vertices {0, ..., vertex_count-1}.
/// Letters a, b, c, d, e of the usual edge-list notation map to 0..4.
struct Pattern {
  PatternId id;
  std::string_view name;
  int vertex_count;
  std::vector<Triple> edges;
};

const Pattern& pattern(PatternId id);

/// An injective map from pattern vertices into a host. `map[x]` is the host
/// vertex assigned to pattern vertex x.
struct Embedding {
  PatternId pattern;
  std::vector<int> map;

  /// The host triples hit by the pattern edges, in pattern edge order.
  std::vector<Triple> image_edges() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Lexicographically least embedding (by the tuple map[0], map[1], ...), or
/// nullopt when the host is P-free. Containment is non-induced: extra host
/// edges among the image vertices are allowed.
std::optional<Embedding> find_embedding(const TripleSystem& host, const Pattern& p);
std::optional<Embedding> find_embedding(const TripleSystem& host, PatternId id);

/// Some embedding whose image edges include `edge`, or nullopt. Used to check
/// F-freeness incrementally after adding a single edge.
std::optional<Embedding> find_embedding_through(const TripleSystem& host, const Pattern& p,
                                                const Triple& edge);

bool is_free(const TripleSystem& host, PatternId id);

/// The map is injective, in range, sized to the pattern, and every pattern
/// edge lands on a host edge.
bool validate_embedding(const TripleSystem& host, const Embedding& e);

}  // namespace triplesys
