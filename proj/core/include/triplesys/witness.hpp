#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "triplesys/pattern.hpp"
#include "triplesys/triple_system.hpp"

namespace triplesys {

/// Four host vertices spanning all four triples.
using K4Base = std::array<int, 4>;

bool is_k4(const TripleSystem& host, const K4Base& base);

/// Replays the C5- upper-bound argument. Requires n >= 6 and
/// delta_2^+ >= floor(n/3) + 1; returns a validated C5- embedding.
/// Throws PreconditionViolated or InternalContradiction.
Embedding find_c5minus_witness(const TripleSystem& host);

/// Replays the C5 upper-bound argument. Requires n >= 6 and
/// delta_2^+ >= floor(n/2) + 1; returns a validated C5 embedding.
Embedding find_c5_witness(const TripleSystem& host);

/// The A/B decomposition around a base K4 in the delta_2^+ = n/2 case,
/// together with the equivalence classes on the non-empty B set and the
/// pairing between them. Together these force 4 | n.
struct StructureCertificate {
  int n = 0;
  K4Base base{};
  /// a_sets[i] = N(v_j,v_k) & N(v_k,v_l) & N(v_l,v_j)
  std::array<VertexSet, 4> a_sets{};
  /// b_sets[i] = N(v_i,v_j) & N(v_i,v_k) & N(v_i,v_l)
  std::array<VertexSet, 4> b_sets{};
  int q = 0;
  int r0 = 0;
  /// Classes of a ~ b <=> N(a,b) empty on the non-empty B set, ordered by least element.
  std::vector<VertexSet> classes;
  /// pairing[c] is the index of f(classes[c]).
  std::vector<int> pairing;
};

/// First violated certificate invariant, or nullopt when the certificate is
/// internally consistent and matches the A/B sets recomputed from the host.
std::optional<std::string> certificate_violation(const TripleSystem& host,
                                                 const StructureCertificate& cert);

struct HalfDegreeAnalysis {
  std::variant<Embedding, StructureCertificate> result;
  /// Fact numbers (1..10) whose checks ran to completion on the way.
  std::vector<int> facts_exercised;
};

/// The delta_2^+ = n/2 boundary case: either a validated C5 embedding or a
/// structure certificate proving n = 0 (mod 4). Requires n even and
/// delta_2^+ = n/2. A K4-free host is handled by the K4-free branch of the C5
/// argument and yields an embedding.
HalfDegreeAnalysis analyze_half_degree(const TripleSystem& host);

struct FactReport {
  int fact = 0;
  /// Whether the fact's own hypotheses (delta_2^+ = n/2, some B_i non-empty) hold.
  bool applicable = true;
  /// The fact's statement, checked literally as quantified.
  bool holds = true;
  /// A violating tuple when !holds; its layout is described in `detail`.
  std::vector<int> counterexample;
  /// A C5 exhibited by the violation, when the violation directly yields one.
  std::optional<Embedding> c5;
  std::string detail;
};

/// Checks one of the ten structural facts about a K4 base in the half-degree
/// case. Throws PreconditionViolated when `base` is not a K4 or `fact_id` is
/// outside 1..10.
FactReport check_fact(const TripleSystem& host, const K4Base& base, int fact_id);

}  // namespace triplesys
