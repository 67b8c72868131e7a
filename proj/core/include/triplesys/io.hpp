#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "triplesys/search.hpp"
#include "triplesys/triple_system.hpp"
#include "triplesys/witness.hpp"

namespace triplesys {

// Hypergraph text format:
//
//   n <count>
//   a b c        one edge per line, distinct vertices in [0, n), ascending,
//                separated by single spaces
//
// Blank lines and lines starting with '#' are ignored. Duplicate edges are
// rejected. Output uses LF line endings and lists edges in lexicographic order.

/// Throws ParseError carrying the 1-based line number.
TripleSystem read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const TripleSystem& host);
std::string to_hypergraph_text(const TripleSystem& host);

/// File variants. I/O failures throw std::runtime_error naming the path.
TripleSystem load_hypergraph(const std::filesystem::path& path);
void save_hypergraph(const std::filesystem::path& path, const TripleSystem& host);

using Certificate = std::variant<Embedding, StructureCertificate>;

nlohmann::ordered_json to_json(const Embedding& e);
nlohmann::ordered_json to_json(const StructureCertificate& cert);
nlohmann::ordered_json to_json(const Certificate& cert);
/// Without the wall-clock time, so identical searches serialize identically.
nlohmann::ordered_json to_json(const SearchOutcome& outcome);
nlohmann::ordered_json hypergraph_to_json(const TripleSystem& host);

/// Throws ParseError on a malformed document.
Certificate certificate_from_json(const nlohmann::ordered_json& doc);

/// Re-validates a loaded certificate against its host: validate_embedding for
/// embeddings, certificate_violation for structure certificates.
bool certificate_is_valid(const TripleSystem& host, const Certificate& cert);

}  // namespace triplesys
