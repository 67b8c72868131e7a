#include "triplesys/triple_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace triplesys {

Triple make_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) {
    throw std::invalid_argument("triple has repeated vertex");
  }
  return t;
}

TripleSystem::TripleSystem(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
  }
  nbr_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), VertexSet{});
}

TripleSystem::TripleSystem(int n, std::span<const Triple> edges) : TripleSystem(n) {
  edges_.reserve(edges.size());
  for (const Triple& raw : edges) {
    const Triple t = make_triple(raw[0], raw[1], raw[2]);
    check_triple(t);
    edges_.push_back(t);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string((*dup)[0]) + "," +
                                std::to_string((*dup)[1]) + "," + std::to_string((*dup)[2]) + "}");
  }
  for (const Triple& t : edges_) toggle_neighborhoods(t);
}

void TripleSystem::check_triple(const Triple& t) const {
  if (t[0] < 0 || t[2] >= n_) {
    throw std::invalid_argument("edge vertex out of range [0, " + std::to_string(n_) + ")");
  }
}

void TripleSystem::toggle_neighborhoods(const Triple& t) {
  const auto flip = [this](int u, int v, int w) {
    const std::uint64_t bit = std::uint64_t{1} << w;
    nbr_[index(u, v)] = VertexSet(nbr_[index(u, v)].bits() ^ bit);
    nbr_[index(v, u)] = VertexSet(nbr_[index(v, u)].bits() ^ bit);
  };
  flip(t[0], t[1], t[2]);
  flip(t[0], t[2], t[1]);
  flip(t[1], t[2], t[0]);
}

bool TripleSystem::has_edge(int a, int b, int c) const {
  if (a == b || a == c || b == c) return false;
  return neighborhood(a, b).contains(c);
}

bool TripleSystem::add_edge(const Triple& raw) {
  const Triple t = make_triple(raw[0], raw[1], raw[2]);
  check_triple(t);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (pos != edges_.end() && *pos == t) return false;
  edges_.insert(pos, t);
  toggle_neighborhoods(t);
  return true;
}

bool TripleSystem::remove_edge(const Triple& raw) {
  const Triple t = make_triple(raw[0], raw[1], raw[2]);
  check_triple(t);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (pos == edges_.end() || *pos != t) return false;
  edges_.erase(pos);
  toggle_neighborhoods(t);
  return true;
}

TripleSystem TripleSystem::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("relabeling must have one entry per vertex");
  }
  std::vector<Triple> mapped;
  mapped.reserve(edges_.size());
  for (const Triple& t : edges_) mapped.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
  return TripleSystem(n_, mapped);
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
  return out;
}

TripleSystem complete_triple_system(int n) {
  const auto triples = all_triples(n);
  return TripleSystem(n, triples);
}

int PartitionSpec::vertex_count() const {
  int total = 0;
  for (VertexSet p : parts) total += p.size();
  return total;
}

int PartitionSpec::part_of(int v) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].contains(v)) return static_cast<int>(i);
  return -1;
}

bool PartitionSpec::balanced() const {
  if (parts.empty()) return true;
  auto [lo, hi] = std::minmax_element(parts.begin(), parts.end(),
                                      [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  return hi->size() - lo->size() <= 1;
}

bool PartitionSpec::is_partition_of(int n) const {
  VertexSet seen;
  for (VertexSet p : parts) {
    if (!(p & seen).empty()) return false;
    seen |= p;
  }
  return seen == VertexSet::range(n);
}

KPartiteConstruction construct_complete_k_partite(int n, int k) {
  if (k < 3) throw std::invalid_argument("part count must be at least 3");
  if (n < k) throw std::invalid_argument("vertex count must be at least the part count");
  if (n > kMaxVertices) throw std::invalid_argument("vertex count must be at most 64");

  PartitionSpec partition;
  const int base = n / k;
  const int larger = n % k;
  int next = 0;
  for (int i = 0; i < k; ++i) {
    const int size = base + (i < larger ? 1 : 0);
    VertexSet part;
    for (int j = 0; j < size; ++j) part.insert(next++);
    partition.parts.push_back(part);
  }

  std::vector<int> part_index(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) part_index[static_cast<std::size_t>(v)] = partition.part_of(v);

  std::vector<Triple> edges;
  for (const Triple& t : all_triples(n)) {
    const int pa = part_index[t[0]], pb = part_index[t[1]], pc = part_index[t[2]];
    if (pa != pb && pa != pc && pb != pc) edges.push_back(t);
  }
  return {TripleSystem(n, edges), std::move(partition)};
}

}  // namespace triplesys
