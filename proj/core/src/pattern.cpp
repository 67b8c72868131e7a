#include "triplesys/pattern.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

namespace triplesys {
namespace {

const std::array<Pattern, 5>& catalog() {
  // a=0 b=1 c=2 d=3 e=4
  static const std::array<Pattern, 5> patterns = {{
      {PatternId::K4Minus, "k4minus", 4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}}},
      {PatternId::K4, "k4", 4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}}},
      {PatternId::C5Minus, "c5minus", 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}}},
      {PatternId::C5, "c5", 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}}},
      {PatternId::F32, "f32", 5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}}},
  }};
  return patterns;
}

// Backtracking over pattern vertices in index order. For each vertex, the
// candidates are the intersection of N(map x, map y) over pattern edges
// {x, y, t} whose other two vertices are already placed.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const TripleSystem& host, const Pattern& p) : host_(host), p_(p) {
    map_.assign(static_cast<std::size_t>(p.vertex_count), -1);
  }

  // Pre-places some pattern vertices; returns false on a conflict.
  bool pin(int pattern_vertex, int host_vertex) {
    if (used_.contains(host_vertex)) return false;
    map_[static_cast<std::size_t>(pattern_vertex)] = host_vertex;
    used_.insert(host_vertex);
    return true;
  }

  bool run() { return extend(0); }

  Embedding result() const { return {p_.id, map_}; }

 private:
  bool extend(int t) {
    if (t == p_.vertex_count) return all_edges_present();
    if (map_[static_cast<std::size_t>(t)] >= 0) return extend(t + 1);

    VertexSet candidates = host_.vertices() - used_;
    for (const Triple& e : p_.edges) {
      if (std::find(e.begin(), e.end(), t) == e.end()) continue;
      int others[2];
      int k = 0;
      for (int x : e)
        if (x != t) others[k++] = x;
      const int u = map_[static_cast<std::size_t>(others[0])];
      const int v = map_[static_cast<std::size_t>(others[1])];
      if (u >= 0 && v >= 0) candidates &= host_.neighborhood(u, v);
    }
    for (int c : candidates) {
      map_[static_cast<std::size_t>(t)] = c;
      used_.insert(c);
      if (extend(t + 1)) return true;
      used_.erase(c);
    }
    map_[static_cast<std::size_t>(t)] = -1;
    return false;
  }

  bool all_edges_present() const {
    for (const Triple& e : p_.edges) {
      if (!host_.has_edge(map_[e[0]], map_[e[1]], map_[e[2]])) return false;
    }
    return true;
  }

  const TripleSystem& host_;
  const Pattern& p_;
  std::vector<int> map_;
  VertexSet used_;
};

}  // namespace

std::string_view pattern_name(PatternId id) { return pattern(id).name; }

std::optional<PatternId> parse_pattern_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (const Pattern& p : catalog())
    if (p.name == lower) return p.id;
  return std::nullopt;
}

const Pattern& pattern(PatternId id) {
  for (const Pattern& p : catalog())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown pattern id");
}

std::vector<Triple> Embedding::image_edges() const {
  std::vector<Triple> out;
  for (const Triple& e : triplesys::pattern(pattern).edges) {
    out.push_back(make_triple(map.at(e[0]), map.at(e[1]), map.at(e[2])));
  }
  return out;
}

std::optional<Embedding> find_embedding(const TripleSystem& host, const Pattern& p) {
  if (p.vertex_count > host.order()) return std::nullopt;
  EmbeddingSearch search(host, p);
  if (!search.run()) return std::nullopt;
  return search.result();
}

std::optional<Embedding> find_embedding(const TripleSystem& host, PatternId id) {
  return find_embedding(host, pattern(id));
}

std::optional<Embedding> find_embedding_through(const TripleSystem& host, const Pattern& p,
                                                const Triple& edge) {
  if (p.vertex_count > host.order() || !host.has_edge(edge)) return std::nullopt;
  for (const Triple& pe : p.edges) {
    Triple image = edge;
    do {
      EmbeddingSearch search(host, p);
      if (search.pin(pe[0], image[0]) && search.pin(pe[1], image[1]) &&
          search.pin(pe[2], image[2]) && search.run()) {
        return search.result();
      }
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return std::nullopt;
}

bool is_free(const TripleSystem& host, PatternId id) { return !find_embedding(host, id).has_value(); }

bool validate_embedding(const TripleSystem& host, const Embedding& e) {
  const Pattern& p = pattern(e.pattern);
  if (static_cast<int>(e.map.size()) != p.vertex_count) return false;
  VertexSet seen;
  for (int v : e.map) {
    if (v < 0 || v >= host.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (const Triple& pe : p.edges) {
    if (!host.has_edge(e.map[pe[0]], e.map[pe[1]], e.map[pe[2]])) return false;
  }
  return true;
}

}  // namespace triplesys
