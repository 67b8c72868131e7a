#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "triplesys/errors.hpp"
#include "triplesys/io.hpp"

using namespace triplesys;

namespace {

TripleSystem parse(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("hypergraph text round trip") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 62);
    const auto h = oracle::random_host(n, n > 30 ? 0.01 : 0.2, rng);
    CHECK(parse(to_hypergraph_text(h)) == h);
  }
  CHECK(parse(to_hypergraph_text(TripleSystem(0))) == TripleSystem(0));
}

TEST_CASE("format details") {
  const auto h = parse("# comment\n\nn 5\n0 1 2\n# another\n1 3 4\n\n");
  CHECK(h.order() == 5);
  CHECK(h.edge_count() == 2);
  CHECK(to_hypergraph_text(h) == "n 5\n0 1 2\n1 3 4\n");
}

TEST_CASE("parse errors name the line") {
  CHECK(error_line("n 5\n0 1 2\n0 1 2\n") == 3);
  CHECK(error_line("n 5\n0 2 1\n") == 2);
  CHECK(error_line("n 5\n0 1 5\n") == 2);
  CHECK(error_line("n 5\n0 1\n") == 2);
  CHECK(error_line("n 5\n0  1 2\n") == 2);
  CHECK(error_line("n 5\n0\t1 2\n") == 2);
  CHECK(error_line("n 5\n-1 1 2\n") == 2);
  CHECK(error_line("n 5\n0 1 2\r\n") == 2);
  CHECK(error_line("0 1 2\n") == 1);
  CHECK(error_line("n 65\n") == 1);
  CHECK(error_line("") == 0);
  CHECK(error_line("# nothing\n") == 1);
}

TEST_CASE("certificates survive json") {
  const auto k6 = complete_triple_system(6);
  const Embedding e{PatternId::C5, {1, 0, 4, 2, 3}};
  const auto doc = to_json(e);
  CHECK(doc["kind"] == "embedding");
  CHECK(doc["edges"].size() == 5);
  const auto back = certificate_from_json(nlohmann::ordered_json::parse(doc.dump()));
  CHECK(std::get<Embedding>(back) == e);
  CHECK(certificate_is_valid(k6, back));

  const auto c = construct_complete_k_partite(12, 4);
  const auto cert = std::get<StructureCertificate>(analyze_half_degree(c.host).result);
  const auto sdoc = to_json(cert);
  CHECK(sdoc["conclusion"] == "n divisible by 4");
  const auto sback = certificate_from_json(nlohmann::ordered_json::parse(sdoc.dump()));
  CHECK(certificate_is_valid(c.host, sback));
  CHECK(to_json(sback).dump() == sdoc.dump());
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(certificate_from_json(nlohmann::ordered_json::parse(R"({"kind":"proof"})")), ParseError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::ordered_json::parse(R"({"kind":"embedding","pattern":"c7","map":[]})")),
                  ParseError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::ordered_json::parse(R"({"kind":"structure","n":4})")), ParseError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::ordered_json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("search outcome json leaves out timing") {
  const auto outcome = exact_copos_ex(5, PatternId::C5);
  const auto doc = to_json(outcome);
  CHECK(doc["value"] == outcome.value);
  CHECK_FALSE(doc.contains("elapsed"));
  CHECK(doc["extremal"]["n"] == 5);
}
