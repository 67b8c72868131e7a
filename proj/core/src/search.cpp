#include "triplesys/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "triplesys/codegree.hpp"
#include "triplesys/errors.hpp"
#include "triplesys/extremal_values.hpp"
#include "triplesys/pattern.hpp"

namespace triplesys {
namespace {

constexpr int kMaxExactVertices = 7;
constexpr int kMaxPairs = 21;    // C(7, 2)
constexpr int kMaxTriples = 35;  // C(7, 3)

enum : std::int8_t { kUnknown = 0, kLive = 1, kDead = 2 };
enum : std::int8_t { kIn = 1, kOut = 2 };

// Read-only description of one decision problem, shared by all workers.
struct Problem {
  int n = 0;
  int k = 0;
  std::vector<Triple> triples;
  std::vector<std::array<int, 2>> pairs;
  std::vector<std::array<int, 3>> triple_pairs;
  std::vector<std::vector<int>> pair_triples;
  // Every copy of the pattern in K_n, as a list of triple indices.
  std::vector<std::vector<int>> copies;
  std::vector<std::vector<int>> triple_copies;

  Problem(int n_, PatternId p, int k_) : n(n_), k(k_), triples(all_triples(n_)) {
    std::array<std::array<int, kMaxExactVertices>, kMaxExactVertices> pair_id{};
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        pair_id[u][v] = pair_id[v][u] = static_cast<int>(pairs.size());
        pairs.push_back({u, v});
      }
    }
    pair_triples.resize(pairs.size());
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const Triple& x = triples[t];
      triple_pairs.push_back({pair_id[x[0]][x[1]], pair_id[x[0]][x[2]], pair_id[x[1]][x[2]]});
      for (int q : triple_pairs.back()) pair_triples[static_cast<std::size_t>(q)].push_back(static_cast<int>(t));
    }

    // Enumerate injective maps and keep distinct image edge sets.
    const Pattern& pat = pattern(p);
    triple_copies.resize(triples.size());
    if (pat.vertex_count > n) return;
    std::set<std::vector<int>> seen;
    std::vector<int> map(static_cast<std::size_t>(pat.vertex_count));
    std::vector<int> ranks(static_cast<std::size_t>(n * n * n), -1);
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const Triple& x = triples[t];
      std::array<int, 3> perm = x;
      do {
        ranks[static_cast<std::size_t>((perm[0] * n + perm[1]) * n + perm[2])] = static_cast<int>(t);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    const auto recurse = [&](auto&& self, int depth, VertexSet used) -> void {
      if (depth == pat.vertex_count) {
        std::vector<int> copy;
        for (const Triple& e : pat.edges) {
          copy.push_back(ranks[static_cast<std::size_t>((map[e[0]] * n + map[e[1]]) * n + map[e[2]])]);
        }
        std::sort(copy.begin(), copy.end());
        seen.insert(std::move(copy));
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used.contains(v)) continue;
        map[static_cast<std::size_t>(depth)] = v;
        self(self, depth + 1, used | VertexSet::single(v));
      }
    };
    recurse(recurse, 0, VertexSet{});
    for (const auto& copy : seen) {
      const int id = static_cast<int>(copies.size());
      copies.push_back(copy);
      for (int t : copy) triple_copies[static_cast<std::size_t>(t)].push_back(id);
    }
  }
};

struct State {
  std::array<std::int8_t, kMaxPairs> pair{};
  std::array<std::int8_t, kMaxTriples> tri{};
};

// Unit propagation over pair and triple states. Returns false on conflict.
class Propagator {
 public:
  explicit Propagator(const Problem& p) : p_(p) {}

  bool set_pair(State& s, int q, std::int8_t value) {
    queue_.clear();
    if (!assign_pair(s, q, value)) return false;
    return drain(s);
  }

  bool set_triple(State& s, int t, std::int8_t value) {
    queue_.clear();
    if (!assign_triple(s, t, value)) return false;
    return drain(s);
  }

  // Checks every pair once; used for the root state.
  bool settle_all(State& s) {
    queue_.clear();
    for (int q = 0; q < static_cast<int>(p_.pairs.size()); ++q) queue_.push_back(encode_pair(q));
    return drain(s);
  }

 private:
  static int encode_pair(int q) { return -1 - q; }

  bool assign_pair(State& s, int q, std::int8_t value) {
    auto& cur = s.pair[static_cast<std::size_t>(q)];
    if (cur == value) return true;
    if (cur != kUnknown) return false;
    cur = value;
    queue_.push_back(encode_pair(q));
    return true;
  }

  bool assign_triple(State& s, int t, std::int8_t value) {
    auto& cur = s.tri[static_cast<std::size_t>(t)];
    if (cur == value) return true;
    if (cur != kUnknown) return false;
    cur = value;
    queue_.push_back(t);
    return true;
  }

  bool check_pair(State& s, int q) {
    int in = 0, unknown = 0;
    for (int t : p_.pair_triples[static_cast<std::size_t>(q)]) {
      const auto st = s.tri[static_cast<std::size_t>(t)];
      in += st == kIn;
      unknown += st == kUnknown;
    }
    const auto state = s.pair[static_cast<std::size_t>(q)];
    if (state == kDead) {
      if (in > 0) return false;
      for (int t : p_.pair_triples[static_cast<std::size_t>(q)]) {
        if (s.tri[static_cast<std::size_t>(t)] == kUnknown && !assign_triple(s, t, kOut)) return false;
      }
      return true;
    }
    if (in + unknown < p_.k) {
      if (state == kLive || in > 0) return false;
      return assign_pair(s, q, kDead);
    }
    if (state == kLive && in + unknown == p_.k && unknown > 0) {
      for (int t : p_.pair_triples[static_cast<std::size_t>(q)]) {
        if (s.tri[static_cast<std::size_t>(t)] == kUnknown && !assign_triple(s, t, kIn)) return false;
      }
    }
    return true;
  }

  bool drain(State& s) {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int item = queue_[head];
      if (item < 0) {
        if (!check_pair(s, -1 - item)) return false;
        continue;
      }
      const auto t = static_cast<std::size_t>(item);
      if (s.tri[t] == kIn) {
        for (int q : p_.triple_pairs[t]) {
          if (!assign_pair(s, q, kLive)) return false;
        }
        for (int c : p_.triple_copies[t]) {
          int unknown_edge = -1;
          int unknown = 0;
          bool blocked = false;
          for (int e : p_.copies[static_cast<std::size_t>(c)]) {
            const auto st = s.tri[static_cast<std::size_t>(e)];
            if (st == kOut) {
              blocked = true;
              break;
            }
            if (st == kUnknown) {
              ++unknown;
              unknown_edge = e;
            }
          }
          if (blocked) continue;
          if (unknown == 0) return false;
          if (unknown == 1 && !assign_triple(s, unknown_edge, kOut)) return false;
        }
      }
      for (int q : p_.triple_pairs[t]) {
        if (!check_pair(s, q)) return false;
      }
    }
    return true;
  }

  const Problem& p_;
  std::vector<int> queue_;
};

// Least adjacency bit string of the live-pair graph over relabelings that list
// vertices by non-increasing degree. Isomorphisms preserve degrees, so this is
// an exact invariant.
std::uint64_t skeleton_key(const Problem& p, const State& s) {
  const int n = p.n;
  std::array<std::uint32_t, kMaxExactVertices> adj{};
  for (std::size_t q = 0; q < p.pairs.size(); ++q) {
    if (s.pair[q] != kLive) continue;
    const auto [u, v] = p.pairs[q];
    adj[static_cast<std::size_t>(u)] |= 1U << v;
    adj[static_cast<std::size_t>(v)] |= 1U << u;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto degree = [&](int v) { return std::popcount(adj[static_cast<std::size_t>(v)]); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) > degree(b); });

  // Permute within runs of equal degree.
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree(order[static_cast<std::size_t>(j)]) == degree(order[static_cast<std::size_t>(i)])) ++j;
    runs.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> label(static_cast<std::size_t>(n));
  const auto evaluate = [&] {
    for (int pos = 0; pos < n; ++pos) label[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    std::uint64_t bits = 0;
    for (std::size_t q = 0; q < p.pairs.size(); ++q) {
      if (s.pair[q] != kLive) continue;
      int a = label[static_cast<std::size_t>(p.pairs[q][0])];
      int b = label[static_cast<std::size_t>(p.pairs[q][1])];
      if (a > b) std::swap(a, b);
      // Position of pair (a, b) in lexicographic order.
      const int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
      bits |= std::uint64_t{1} << idx;
    }
    best = std::min(best, bits);
  };
  const auto permute = [&](auto&& self, std::size_t run) -> void {
    if (run == runs.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + runs[run].first;
    auto last = order.begin() + runs[run].second;
    std::sort(first, last);
    do {
      self(self, run + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  return best;
}

class DecisionSearch {
 public:
  DecisionSearch(const Problem& p, const SearchOptions& options) : p_(p), options_(options) {}

  DecisionResult run() {
    DecisionResult result;
    State root;
    Propagator prop(p_);
    if (!prop.settle_all(root)) return result;
    enumerate_skeletons(prop, root);
    result.nodes = phase1_nodes_;
    result.skeletons = skeletons_.size();
    if (options_.progress) {
      options_.progress("k=" + std::to_string(p_.k) + ": " + std::to_string(skeletons_.size()) +
                        " skeletons after " + std::to_string(phase1_nodes_) + " pair-phase nodes");
    }
    solve_skeletons(result);
    return result;
  }

 private:
  struct Slot {
    std::uint64_t nodes = 0;
    std::optional<State> solution;
  };

  void enumerate_skeletons(Propagator& prop, const State& s) {
    ++phase1_nodes_;
    int branch = -1;
    for (std::size_t q = 0; q < p_.pairs.size(); ++q) {
      if (s.pair[q] == kUnknown) {
        branch = static_cast<int>(q);
        break;
      }
    }
    if (branch < 0) {
      accept_skeleton(s);
      return;
    }
    for (std::int8_t value : {kLive, kDead}) {
      State child = s;
      if (prop.set_pair(child, branch, value)) enumerate_skeletons(prop, child);
    }
  }

  void accept_skeleton(const State& s) {
    std::array<int, kMaxExactVertices> degree{};
    bool any = false;
    for (std::size_t q = 0; q < p_.pairs.size(); ++q) {
      if (s.pair[q] != kLive) continue;
      any = true;
      ++degree[static_cast<std::size_t>(p_.pairs[q][0])];
      ++degree[static_cast<std::size_t>(p_.pairs[q][1])];
    }
    if (!any) return;
    // Every isomorphism class has a labeling with non-increasing degrees.
    for (int v = 1; v < p_.n; ++v) {
      if (degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(v - 1)]) return;
    }
    if (seen_.insert(skeleton_key(p_, s)).second) skeletons_.push_back(s);
  }

  // Workers claim skeletons in index order. A worker abandons skeleton i once a
  // solution at a smaller index is published, so the reported solution is the
  // one at the least index and node counts only include skeletons up to it.
  void solve_skeletons(DecisionResult& result) {
    const std::size_t count = skeletons_.size();
    std::vector<Slot> slots(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};

    const auto worker = [&] {
      Propagator prop(p_);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i >= best.load()) return;
        std::uint64_t nodes = 0;
        std::optional<State> found = solve(prop, skeletons_[i], nodes, i, best);
        slots[i].nodes = nodes;
        if (found) {
          slots[i].solution = std::move(found);
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };

    const int jobs = std::max(1, options_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }

    const std::size_t winner = best.load();
    for (std::size_t i = 0; i < count && i <= winner; ++i) result.nodes += slots[i].nodes;
    if (winner < count) result.host = to_host(*slots[winner].solution);
  }

  std::optional<State> solve(Propagator& prop, const State& start, std::uint64_t& nodes, std::size_t index,
                             const std::atomic<std::size_t>& best) const {
    std::optional<State> out;
    const auto recurse = [&](auto&& self, const State& s) -> bool {
      ++nodes;
      if ((nodes & 0x3ff) == 0 && best.load() < index) return true;
      int branch_pair = -1;
      int best_slack = 1 << 20;
      for (std::size_t q = 0; q < p_.pairs.size(); ++q) {
        if (s.pair[q] != kLive) continue;
        int in = 0, unknown = 0;
        for (int t : p_.pair_triples[q]) {
          in += s.tri[static_cast<std::size_t>(t)] == kIn;
          unknown += s.tri[static_cast<std::size_t>(t)] == kUnknown;
        }
        if (in >= p_.k) continue;
        const int slack = in + unknown - p_.k;
        if (slack < best_slack) {
          best_slack = slack;
          branch_pair = static_cast<int>(q);
        }
      }
      if (branch_pair < 0) {
        out = s;
        return true;
      }
      int branch_triple = -1;
      for (int t : p_.pair_triples[static_cast<std::size_t>(branch_pair)]) {
        if (s.tri[static_cast<std::size_t>(t)] == kUnknown) {
          branch_triple = t;
          break;
        }
      }
      for (std::int8_t value : {kIn, kOut}) {
        State child = s;
        if (prop.set_triple(child, branch_triple, value) && self(self, child)) return true;
      }
      return false;
    };
    recurse(recurse, start);
    return out;
  }

  TripleSystem to_host(const State& s) const {
    std::vector<Triple> edges;
    for (std::size_t t = 0; t < p_.triples.size(); ++t)
      if (s.tri[t] == kIn) edges.push_back(p_.triples[t]);
    return TripleSystem(p_.n, edges);
  }

  const Problem& p_;
  const SearchOptions& options_;
  std::uint64_t phase1_nodes_ = 0;
  std::set<std::uint64_t> seen_;
  std::vector<State> skeletons_;
};

struct Score {
  int delta = -1;         // -1 for an edgeless host
  int at_minimum = 0;     // support pairs attaining delta, fewer is better
  friend bool operator>=(const Score& a, const Score& b) {
    if (a.delta != b.delta) return a.delta > b.delta;
    return a.at_minimum <= b.at_minimum;
  }
  friend bool operator>(const Score& a, const Score& b) {
    if (a.delta != b.delta) return a.delta > b.delta;
    return a.at_minimum < b.at_minimum;
  }
};

Score score(const TripleSystem& h) {
  Score s;
  const int n = h.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = h.codegree(u, v);
      if (d == 0) continue;
      if (s.delta < 0 || d < s.delta) {
        s.delta = d;
        s.at_minimum = 1;
      } else if (d == s.delta) {
        ++s.at_minimum;
      }
    }
  }
  return s;
}

}  // namespace

CanonicalForm canonical_key(const TripleSystem& host) {
  const int n = host.order();
  if (n > kMaxExactVertices) throw std::invalid_argument("exact canonical form needs n <= 7");
  std::vector<int> rank(static_cast<std::size_t>(n * n * n), -1);
  int next = 0;
  for (const Triple& t : all_triples(n)) {
    rank[static_cast<std::size_t>((t[0] * n + t[1]) * n + t[2])] = next++;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t bits = 0;
    for (const Triple& e : host.edges()) {
      const Triple t = make_triple(perm[e[0]], perm[e[1]], perm[e[2]]);
      bits |= std::uint64_t{1} << rank[static_cast<std::size_t>((t[0] * n + t[1]) * n + t[2])];
    }
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, host.empty() ? 0 : best};
}

DecisionResult decide_positive_codegree(int n, PatternId p, int k, const SearchOptions& options) {
  if (n < 4 || n > kMaxExactVertices) throw std::invalid_argument("exact search needs 4 <= n <= 7");
  if (k < 1) throw std::invalid_argument("co-degree threshold must be positive");
  const Problem problem(n, p, k);
  return DecisionSearch(problem, options).run();
}

TripleSystem seed_construction(int n, PatternId p) {
  std::optional<TripleSystem> best;
  std::optional<int> best_delta;
  for (int parts : {3, 4}) {
    if (n < parts) continue;
    auto c = construct_complete_k_partite(n, parts);
    if (!is_free(c.host, p)) continue;
    const auto d = min_positive_codegree(c.host);
    if (!best || (d && (!best_delta || *d > *best_delta))) {
      best = std::move(c.host);
      best_delta = d;
    }
  }
  if (!best) throw std::invalid_argument("no complete partite seed avoids the pattern");
  return *best;
}

SearchOutcome exact_copos_ex(int n, PatternId p, const SearchOptions& options) {
  if (n < 4 || n > kMaxExactVertices) throw std::invalid_argument("exact search needs 4 <= n <= 7");
  const auto start = std::chrono::steady_clock::now();

  SearchOutcome out;
  out.n = n;
  out.pattern = p;

  int k = 1;
  for (int parts : {3, 4}) {
    if (n < parts) continue;
    const auto c = construct_complete_k_partite(n, parts);
    if (is_free(c.host, p)) k = std::max(k, min_positive_codegree(c.host).value_or(1));
  }

  const auto decide = [&](int threshold) {
    DecisionResult r = decide_positive_codegree(n, p, threshold, options);
    out.nodes_explored += r.nodes;
    if (options.progress) {
      options.progress("n=" + std::to_string(n) + " " + std::string(pattern_name(p)) + " k=" +
                       std::to_string(threshold) + ": " + (r.host ? "feasible" : "infeasible"));
    }
    return r;
  };

  DecisionResult found = decide(k);
  while (!found.host && k > 1) found = decide(--k);
  if (!found.host) {
    throw InternalContradiction("no pattern-free host with a single edge", "n=" + std::to_string(n));
  }
  for (;;) {
    DecisionResult next = decide(k + 1);
    if (!next.host) break;
    found = std::move(next);
    ++k;
  }
  out.value = k;
  out.extremal = std::move(*found.host);
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

TripleSystem local_search_lower_bound(int n, PatternId p, std::uint64_t budget, std::uint64_t seed) {
  if (n < 8 || n > 24) throw std::invalid_argument("local search needs 8 <= n <= 24");
  const Pattern& pat = pattern(p);
  TripleSystem current = seed_construction(n, p);
  Score current_score = score(current);
  TripleSystem best = current;
  Score best_score = current_score;

  const std::vector<Triple> triples = all_triples(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  // The seeds are strict local optima under single toggles, so a pure climb
  // never moves. Worse moves pass with a Metropolis test on the flattened
  // score; one unit of delta outweighs any count of pairs at the minimum.
  const double pairs = n * (n - 1) / 2.0;
  const auto energy = [&](const Score& sc) { return sc.delta * (pairs + 1.0) - sc.at_minimum; };
  const double t_start = 0.6 * (pairs + 1.0);

  for (std::uint64_t step = 0; step < budget; ++step) {
    const Triple& t = triples[pick(rng)];
    TripleSystem candidate = current;
    if (candidate.has_edge(t)) {
      candidate.remove_edge(t);
    } else {
      candidate.add_edge(t);
      if (find_embedding_through(candidate, pat, t)) continue;
    }
    const Score s = score(candidate);
    const double temperature = t_start * (1.0 - static_cast<double>(step) / static_cast<double>(budget));
    const double gain = energy(s) - energy(current_score);
    const double u = coin(rng);
    if (gain < 0 && (temperature <= 0 || u >= std::exp(gain / temperature))) continue;
    current = std::move(candidate);
    current_score = s;
    if (current_score > best_score) {
      best = current;
      best_score = current_score;
    }
  }

  if (!is_free(best, p)) {
    throw InternalContradiction("local search returned a host containing the pattern",
                                "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
  }
  if (has_theorem_value(p) && best_score.delta > theorem_value(n, p)) {
    throw InternalContradiction("pattern-free host beats the closed-form co+ex value",
                                "n=" + std::to_string(n) + " pattern=" + std::string(pattern_name(p)) +
                                    " delta2+=" + std::to_string(best_score.delta) +
                                    " seed=" + std::to_string(seed));
  }
  return best;
}

}  // namespace triplesys
