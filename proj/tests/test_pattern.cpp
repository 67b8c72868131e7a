#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "triplesys/pattern.hpp"

using namespace triplesys;

namespace {

TripleSystem pattern_as_host(PatternId id) {
  const Pattern& p = pattern(id);
  return TripleSystem(p.vertex_count, p.edges);
}

}  // namespace

TEST_CASE("catalog") {
  CHECK(pattern(PatternId::K4Minus).edges.size() == 3);
  CHECK(pattern(PatternId::K4).edges.size() == 4);
  CHECK(pattern(PatternId::C5Minus).edges.size() == 4);
  CHECK(pattern(PatternId::C5).edges.size() == 5);
  CHECK(pattern(PatternId::F32).edges == std::vector<Triple>{{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}});
  for (PatternId id : kAllPatterns) {
    CHECK(parse_pattern_id(pattern_name(id)) == id);
    CHECK_FALSE(is_free(pattern_as_host(id), id));
  }
  CHECK(parse_pattern_id("C5Minus") == PatternId::C5Minus);
  CHECK_FALSE(parse_pattern_id("c6").has_value());
}

TEST_CASE("containment examples") {
  const auto k5 = complete_triple_system(5);
  const auto e = find_embedding(k5, PatternId::C5);
  REQUIRE(e.has_value());
  CHECK(e->map == std::vector<int>{0, 1, 2, 3, 4});

  CHECK(is_free(construct_complete_k_partite(8, 4).host, PatternId::C5));
  CHECK(is_free(construct_complete_k_partite(6, 3).host, PatternId::K4Minus));
  CHECK(is_free(construct_complete_k_partite(9, 3).host, PatternId::C5Minus));
  CHECK_FALSE(is_free(construct_complete_k_partite(12, 4).host, PatternId::K4));
}

TEST_CASE("validate_embedding rejects broken maps") {
  const auto k5 = complete_triple_system(5);
  CHECK(validate_embedding(k5, {PatternId::C5, {0, 1, 2, 3, 4}}));
  CHECK_FALSE(validate_embedding(k5, {PatternId::C5, {0, 1, 2, 3, 3}}));
  CHECK_FALSE(validate_embedding(k5, {PatternId::C5, {0, 1, 2, 3}}));
  CHECK_FALSE(validate_embedding(k5, {PatternId::C5, {0, 1, 2, 3, 5}}));
  const auto tri = construct_complete_k_partite(6, 3).host;
  std::vector<int> map{0, 1, 2, 3, 4};
  do {
    CHECK_FALSE(validate_embedding(tri, {PatternId::C5Minus, map}));
  } while (std::next_permutation(map.begin(), map.end()));
}

TEST_CASE("least embedding equals the naive lexicographic search") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 5;
    const auto h = oracle::random_host(n, 0.2 + 0.002 * trial, rng);
    for (PatternId id : kAllPatterns) {
      const auto fast = find_embedding(h, id);
      const auto slow = oracle::naive_embedding(h, pattern(id));
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(fast->map == *slow);
        CHECK(validate_embedding(h, *fast));
      }
    }
  }
}

TEST_CASE("embedding through an edge") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = oracle::random_host(7, 0.35, rng);
    for (PatternId id : kAllPatterns) {
      for (const Triple& t : h.edges()) {
        const auto e = find_embedding_through(h, pattern(id), t);
        CHECK(e.has_value() == oracle::naive_embedding(h, pattern(id), t).has_value());
        if (e) {
          CHECK(validate_embedding(h, *e));
          const auto img = e->image_edges();
          CHECK(std::find(img.begin(), img.end(), t) != img.end());
        }
      }
    }
  }
}

TEST_CASE("freeness is invariant under relabeling and monotone") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = oracle::random_host(7, 0.3, rng);
    const auto g = h.relabeled(oracle::random_permutation(7, rng));
    TripleSystem sub = h;
    for (const Triple& t : h.edges()) {
      if (rng() % 3 == 0) sub.remove_edge(t);
    }
    for (PatternId id : kAllPatterns) {
      CHECK(is_free(h, id) == is_free(g, id));
      if (is_free(h, id)) CHECK(is_free(sub, id));
    }
  }
}
