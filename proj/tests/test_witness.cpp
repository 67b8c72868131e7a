#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "triplesys/codegree.hpp"
#include "triplesys/errors.hpp"
#include "triplesys/pattern.hpp"
#include "triplesys/witness.hpp"

using namespace triplesys;

namespace {

const K4Base kFirstK4{0, 1, 2, 3};

// One vertex per part of the balanced 4-partite construction.
K4Base transversal(const KPartiteConstruction& c) {
  return {c.partition.parts[0].first(), c.partition.parts[1].first(), c.partition.parts[2].first(),
          c.partition.parts[3].first()};
}

void check_structure(const TripleSystem& host, const PartitionSpec* parts) {
  const int n = host.order();
  const auto analysis = analyze_half_degree(host);
  REQUIRE(std::holds_alternative<StructureCertificate>(analysis.result));
  const auto& cert = std::get<StructureCertificate>(analysis.result);
  CHECK_FALSE(certificate_violation(host, cert).has_value());
  CHECK(cert.q * 4 == n);
  CHECK(cert.r0 == 0);
  CHECK(cert.classes.empty());
  for (int i = 0; i < 4; ++i) {
    CHECK(cert.b_sets[static_cast<std::size_t>(i)].size() == 0);
    CHECK(cert.a_sets[static_cast<std::size_t>(i)].contains(cert.base[static_cast<std::size_t>(i)]));
    if (parts) {
      const int v = cert.base[static_cast<std::size_t>(i)];
      const auto it = std::find_if(parts->parts.begin(), parts->parts.end(),
                                   [&](VertexSet p) { return p.contains(v); });
      CHECK(cert.a_sets[static_cast<std::size_t>(i)] == *it);
    }
  }
  for (int fact = 1; fact <= 10; ++fact) {
    const auto report = check_fact(host, cert.base, fact);
    CAPTURE(fact);
    CHECK(report.holds);
    CHECK_FALSE(report.c5.has_value());
  }
}

}  // namespace

TEST_CASE("C5- extractor examples") {
  const auto k6 = complete_triple_system(6);
  const auto e = find_c5minus_witness(k6);
  CHECK(e.pattern == PatternId::C5Minus);
  CHECK(validate_embedding(k6, e));
  CHECK_THROWS_AS(find_c5minus_witness(construct_complete_k_partite(9, 3).host), PreconditionViolated);
  CHECK_THROWS_AS(find_c5minus_witness(complete_triple_system(5)), PreconditionViolated);
  CHECK_THROWS_AS(find_c5minus_witness(TripleSystem(8)), PreconditionViolated);
}

TEST_CASE("C5 extractor examples") {
  for (int n : {6, 7}) {
    const auto k = complete_triple_system(n);
    const auto e = find_c5_witness(k);
    CHECK(e.pattern == PatternId::C5);
    CHECK(validate_embedding(k, e));
  }
  CHECK_THROWS_AS(find_c5_witness(construct_complete_k_partite(8, 4).host), PreconditionViolated);
}

TEST_CASE("every host on six vertices above a threshold yields its witness") {
  // Bit t of a mask selects the t-th triple of K_6^(3).
  const auto triples = all_triples(6);
  std::array<std::uint32_t, 15> pair_mask{};
  int q = 0;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v, ++q) {
      for (std::size_t t = 0; t < triples.size(); ++t) {
        const auto& x = triples[t];
        const bool hu = x[0] == u || x[1] == u || x[2] == u;
        const bool hv = x[0] == v || x[1] == v || x[2] == v;
        if (hu && hv) pair_mask[static_cast<std::size_t>(q)] |= 1U << t;
      }
    }
  }

  int c5minus_runs = 0, c5_runs = 0, half_runs = 0;
  for (std::uint32_t mask = 1; mask < (1U << 20); ++mask) {
    int delta = 99;
    for (std::uint32_t pm : pair_mask) {
      const int d = std::popcount(mask & pm);
      if (d > 0) delta = std::min(delta, d);
    }
    if (delta < 3) continue;
    std::vector<Triple> edges;
    for (std::size_t t = 0; t < triples.size(); ++t) {
      if (mask >> t & 1U) edges.push_back(triples[t]);
    }
    const TripleSystem host(6, edges);

    const auto a = find_c5minus_witness(host);
    REQUIRE(validate_embedding(host, a));
    ++c5minus_runs;
    if (delta >= 4) {
      const auto b = find_c5_witness(host);
      REQUIRE(validate_embedding(host, b));
      ++c5_runs;
    } else {
      // 4 does not divide 6, so the analysis must end in a C5
      const auto r = analyze_half_degree(host);
      REQUIRE(std::holds_alternative<Embedding>(r.result));
      const auto& e = std::get<Embedding>(r.result);
      REQUIRE(e.pattern == PatternId::C5);
      REQUIRE(validate_embedding(host, e));
      ++half_runs;
    }
  }
  MESSAGE("c5minus " << c5minus_runs << ", c5 " << c5_runs << ", half-degree " << half_runs);
  CHECK(half_runs > 0);
  CHECK(c5_runs > 0);
}

TEST_CASE("random deletion sweep for n = 7..10") {
  std::mt19937_64 rng(31337);
  for (int n = 7; n <= 10; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto h = oracle::random_deletion_host(n, n / 3 + 1, rng);
      REQUIRE(validate_embedding(h, find_c5minus_witness(h)));
      const auto d = min_positive_codegree(h);
      if (*d >= n / 2 + 1) REQUIRE(validate_embedding(h, find_c5_witness(h)));
    }
    for (int trial = 0; trial < 60; ++trial) {
      const auto h = oracle::random_deletion_host(n, n / 2 + 1, rng);
      REQUIRE(validate_embedding(h, find_c5_witness(h)));
    }
  }
}

TEST_CASE("half-degree hosts on eight and ten vertices") {
  std::mt19937_64 rng(8);
  int analyzed = 0;
  for (int n : {8, 10}) {
    for (int trial = 0; trial < 400 && analyzed < 150 * (n - 6) / 2; ++trial) {
      const auto h = oracle::random_deletion_host(n, n / 2, rng);
      if (min_positive_codegree(h) != n / 2) continue;
      ++analyzed;
      const auto r = analyze_half_degree(h);
      if (const auto* e = std::get_if<Embedding>(&r.result)) {
        CHECK(e->pattern == PatternId::C5);
        CHECK(validate_embedding(h, *e));
      } else {
        CHECK(n % 4 == 0);
        CHECK_FALSE(certificate_violation(h, std::get<StructureCertificate>(r.result)).has_value());
      }
    }
  }
  MESSAGE("analyzed " << analyzed);
  CHECK(analyzed > 0);
}

TEST_CASE("structure certificates on the extremal hosts") {
  check_structure(complete_triple_system(4), nullptr);
  for (int n : {8, 12, 16}) {
    CAPTURE(n);
    const auto c = construct_complete_k_partite(n, 4);
    check_structure(c.host, &c.partition);

    // same under a relabeling
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    const auto perm = oracle::random_permutation(n, rng);
    PartitionSpec moved;
    for (VertexSet p : c.partition.parts) {
      VertexSet img;
      for (int v : p) img.insert(perm[static_cast<std::size_t>(v)]);
      moved.parts.push_back(img);
    }
    check_structure(c.host.relabeled(perm), &moved);
  }
}

TEST_CASE("check_fact examples") {
  const auto c = construct_complete_k_partite(8, 4);
  const K4Base base = transversal(c);
  for (int fact : {1, 2}) CHECK(check_fact(c.host, base, fact).holds);
  const auto k4 = complete_triple_system(4);
  const auto r = check_fact(k4, kFirstK4, 4);
  CHECK(r.applicable);
  CHECK(r.holds);
  for (int fact = 6; fact <= 10; ++fact) CHECK_FALSE(check_fact(c.host, base, fact).applicable);

  CHECK_THROWS_AS(check_fact(c.host, {0, 1, 2, 3}, 1), PreconditionViolated);
  CHECK_THROWS_AS(check_fact(c.host, base, 0), PreconditionViolated);
  CHECK_THROWS_AS(check_fact(c.host, base, 11), PreconditionViolated);
}

TEST_CASE("check_fact failures on hosts with a C5 carry a valid C5") {
  std::mt19937_64 rng(77);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = oracle::random_deletion_host(8, 4, rng);
    if (min_positive_codegree(h) != 4) continue;
    const auto k4 = find_embedding(h, PatternId::K4);
    if (!k4) continue;
    const K4Base base{k4->map[0], k4->map[1], k4->map[2], k4->map[3]};
    for (int fact = 1; fact <= 10; ++fact) {
      const auto rep = check_fact(h, base, fact);
      if (rep.holds) continue;
      ++failures;
      CHECK_FALSE(rep.counterexample.empty());
      if (rep.c5) CHECK(validate_embedding(h, *rep.c5));
    }
  }
  MESSAGE("fact failures seen: " << failures);
}

TEST_CASE("analysis preconditions") {
  CHECK_THROWS_AS(analyze_half_degree(construct_complete_k_partite(10, 4).host), PreconditionViolated);
  CHECK_THROWS_AS(analyze_half_degree(construct_complete_k_partite(6, 3).host), PreconditionViolated);
  CHECK_THROWS_AS(analyze_half_degree(construct_complete_k_partite(9, 3).host), PreconditionViolated);
}

TEST_CASE("tampered certificates are rejected") {
  const auto c = construct_complete_k_partite(8, 4);
  const auto r = analyze_half_degree(c.host);
  auto cert = std::get<StructureCertificate>(r.result);
  auto bad = cert;
  bad.q = 3;
  CHECK(certificate_violation(c.host, bad).has_value());
  bad = cert;
  bad.a_sets[0].erase(bad.a_sets[0].first());
  CHECK(certificate_violation(c.host, bad).has_value());
  bad = cert;
  bad.base = {0, 1, 2, 3};
  CHECK(certificate_violation(c.host, bad).has_value());
  bad = cert;
  bad.r0 = 2;
  CHECK(certificate_violation(c.host, bad).has_value());
}

TEST_CASE("perturbed 4-partite hosts at the half-degree boundary") {
  // toggling a few triples of the extremal host keeps delta2+ = n/2 now and then
  std::mt19937_64 rng(404);
  int kept = 0, certificates = 0;
  for (int n : {8, 12}) {
    const auto base = construct_complete_k_partite(n, 4).host;
    const auto triples = all_triples(n);
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    for (int trial = 0; trial < 4000; ++trial) {
      TripleSystem h = base;
      const int flips = 1 + static_cast<int>(rng() % 6);
      for (int f = 0; f < flips; ++f) {
        const Triple& t = triples[pick(rng)];
        if (!h.add_edge(t)) h.remove_edge(t);
      }
      if (min_positive_codegree(h) != n / 2) continue;
      ++kept;
      const auto r = analyze_half_degree(h);
      if (const auto* e = std::get_if<Embedding>(&r.result)) {
        REQUIRE(validate_embedding(h, *e));
        CHECK(e->pattern == PatternId::C5);
      } else {
        ++certificates;
        CHECK_FALSE(certificate_violation(h, std::get<StructureCertificate>(r.result)).has_value());
        CHECK(is_free(h, PatternId::C5));
      }
    }
  }
  MESSAGE("kept " << kept << ", certificates " << certificates);
}
