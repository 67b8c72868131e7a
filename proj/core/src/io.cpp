#include "triplesys/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "triplesys/errors.hpp"

namespace triplesys {
namespace {

// Parses a non-negative decimal integer that spans the whole token.
std::optional<int> parse_int(std::string_view token) {
  if (token.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(' ', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

nlohmann::ordered_json set_to_json(VertexSet s) { return s.to_vector(); }

VertexSet set_from_json(const nlohmann::ordered_json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw ParseError("vertex out of range in certificate", 0);
    s.insert(x);
  }
  return s;
}

}  // namespace

TripleSystem read_hypergraph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<int> n;
  std::vector<Triple> edges;
  std::vector<int> edge_lines;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') throw ParseError("CR line ending", line_no);
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_single_spaces(line);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError("expected header 'n <count>'", line_no);
      const auto count = parse_int(tokens[1]);
      if (!count || *count > kMaxVertices) throw ParseError("vertex count must be in [0, 64]", line_no);
      n = *count;
      continue;
    }
    if (tokens.size() != 3) throw ParseError("expected three vertices separated by single spaces", line_no);
    Triple t{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto v = parse_int(tokens[i]);
      if (!v || *v >= *n) throw ParseError("vertex must be an integer in [0, " + std::to_string(*n) + ")", line_no);
      t[i] = *v;
    }
    if (!(t[0] < t[1] && t[1] < t[2])) throw ParseError("edge vertices must be distinct and ascending", line_no);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == t) {
        throw ParseError("duplicate edge (first seen on line " + std::to_string(edge_lines[i]) + ")", line_no);
      }
    }
    edges.push_back(t);
    edge_lines.push_back(line_no);
  }
  if (!n) throw ParseError("missing header 'n <count>'", line_no);
  return TripleSystem(*n, edges);
}

void write_hypergraph(std::ostream& out, const TripleSystem& host) {
  out << "n " << host.order() << '\n';
  for (const Triple& t : host.edges()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::string to_hypergraph_text(const TripleSystem& host) {
  std::ostringstream out;
  write_hypergraph(out, host);
  return out.str();
}

TripleSystem load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_hypergraph(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

void save_hypergraph(const std::filesystem::path& path, const TripleSystem& host) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_hypergraph(out, host);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

nlohmann::ordered_json to_json(const Embedding& e) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Triple& t : e.image_edges()) edges.push_back(t);
  return {{"kind", "embedding"}, {"pattern", pattern_name(e.pattern)}, {"map", e.map}, {"edges", edges}};
}

nlohmann::ordered_json to_json(const StructureCertificate& cert) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  nlohmann::ordered_json b = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    a.push_back(set_to_json(cert.a_sets[static_cast<std::size_t>(i)]));
    b.push_back(set_to_json(cert.b_sets[static_cast<std::size_t>(i)]));
  }
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (VertexSet c : cert.classes) classes.push_back(set_to_json(c));
  return {{"kind", "structure"}, {"n", cert.n},           {"base", cert.base},
          {"A", a},              {"B", b},                {"q", cert.q},
          {"r0", cert.r0},       {"classes", classes},    {"pairing", cert.pairing},
          {"conclusion", "n divisible by 4"}};
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  return std::visit([](const auto& c) { return to_json(c); }, cert);
}

nlohmann::ordered_json hypergraph_to_json(const TripleSystem& host) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Triple& t : host.edges()) edges.push_back(t);
  return {{"n", host.order()}, {"edges", edges}};
}

nlohmann::ordered_json to_json(const SearchOutcome& outcome) {
  return {{"n", outcome.n},
          {"pattern", pattern_name(outcome.pattern)},
          {"value", outcome.value},
          {"nodes_explored", outcome.nodes_explored},
          {"extremal", hypergraph_to_json(outcome.extremal)}};
}

Certificate certificate_from_json(const nlohmann::ordered_json& doc) {
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "embedding") {
      const auto id = parse_pattern_id(doc.at("pattern").get<std::string>());
      if (!id) throw ParseError("unknown pattern in certificate", 0);
      return Embedding{*id, doc.at("map").get<std::vector<int>>()};
    }
    if (kind == "structure") {
      StructureCertificate cert;
      cert.n = doc.at("n").get<int>();
      cert.base = doc.at("base").get<K4Base>();
      const auto& a = doc.at("A");
      const auto& b = doc.at("B");
      if (a.size() != 4 || b.size() != 4) throw ParseError("A and B must hold four sets each", 0);
      for (std::size_t i = 0; i < 4; ++i) {
        cert.a_sets[i] = set_from_json(a.at(i));
        cert.b_sets[i] = set_from_json(b.at(i));
      }
      cert.q = doc.at("q").get<int>();
      cert.r0 = doc.at("r0").get<int>();
      for (const auto& c : doc.at("classes")) cert.classes.push_back(set_from_json(c));
      cert.pairing = doc.at("pairing").get<std::vector<int>>();
      return cert;
    }
    throw ParseError("unknown certificate kind '" + kind + "'", 0);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

bool certificate_is_valid(const TripleSystem& host, const Certificate& cert) {
  if (const auto* e = std::get_if<Embedding>(&cert)) return validate_embedding(host, *e);
  return !certificate_violation(host, std::get<StructureCertificate>(cert)).has_value();
}

}  // namespace triplesys
