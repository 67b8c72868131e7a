#include "triplesys/witness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "triplesys/codegree.hpp"
#include "triplesys/errors.hpp"

namespace triplesys {
namespace {

// Complementary index pairs of a K4 base: {N(v0,v1), N(v2,v3)}, {N(v0,v2), N(v1,v3)},
// {N(v0,v3), N(v1,v2)}.
constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kComplementaryPairs = {{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

constexpr std::array<std::array<int, 2>, 6> kBasePairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::string format_set(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

// The three base indices other than i, ascending.
std::array<int, 3> others(int i) {
  std::array<int, 3> out{};
  int k = 0;
  for (int x = 0; x < 4; ++x)
    if (x != i) out[static_cast<std::size_t>(k++)] = x;
  return out;
}

std::string describe_base(const TripleSystem& host, const K4Base& base) {
  std::ostringstream out;
  out << "n=" << host.order() << " edges=" << host.edge_count();
  if (auto d = min_positive_codegree(host)) out << " delta2+=" << *d;
  out << " base=(" << base[0] << "," << base[1] << "," << base[2] << "," << base[3] << ")";
  for (auto [i, j] : kBasePairs) {
    const VertexSet nb = host.neighborhood(base[i], base[j]);
    out << "\n  N(" << base[i] << "," << base[j] << ")=" << format_set(nb) << " size " << nb.size();
  }
  return out.str();
}

Embedding checked(const TripleSystem& host, PatternId id, std::vector<int> map, const char* step) {
  Embedding e{id, std::move(map)};
  if (!validate_embedding(host, e)) {
    std::ostringstream diag;
    diag << "invalid " << pattern_name(id) << " map (";
    for (std::size_t i = 0; i < e.map.size(); ++i) diag << (i ? "," : "") << e.map[i];
    diag << ") at step: " << step;
    throw InternalContradiction(std::string("proof step produced an invalid configuration: ") + step,
                                diag.str());
  }
  return e;
}

// v lies in both sets of a complementary pair {N(x,y), N(z,w)} and in one cross set
// N(p,s) with p in {x,y}, s in {z,w}. Relabelling i = other(p), j = p, k = s,
// l = other(s) gives the C5 v_i v_j v, v_j v v_k, v v_k v_l, v_k v_l v_i, v_l v_i v_j.
std::optional<Embedding> c5_from_pair_and_cross(const TripleSystem& host, const K4Base& base,
                                                int v) {
  const auto in = [&](int a, int b) { return host.neighborhood(base[a], base[b]).contains(v); };
  for (const auto& group : kComplementaryPairs) {
    const auto [x, y] = group[0];
    const auto [z, w] = group[1];
    if (!in(x, y) || !in(z, w)) continue;
    const std::array<std::array<int, 2>, 4> crosses = {{{x, z}, {x, w}, {y, z}, {y, w}}};
    for (auto [p, s] : crosses) {
      if (!in(p, s)) continue;
      const int i = p == x ? y : x;
      const int l = s == z ? w : z;
      return checked(host, PatternId::C5, {base[i], base[p], v, base[s], base[l]},
                     "vertex in both sets of a complementary pair and a cross set");
    }
  }
  return std::nullopt;
}

// K4- found by the pattern engine, relabelled so that v1 lies in all three
// edges v1v2v3, v1v2v4, v1v3v4. In the pattern {abc, bcd, cda} that vertex is c.
K4Base k4minus_base(const TripleSystem& host) {
  auto e = find_embedding(host, PatternId::K4Minus);
  if (!e) {
    throw InternalContradiction("no K4- although delta2+ exceeds floor(n/3)",
                                "n=" + std::to_string(host.order()) +
                                    " edges=" + std::to_string(host.edge_count()));
  }
  return {e->map[2], e->map[0], e->map[1], e->map[3]};
}

int membership(const TripleSystem& host, const K4Base& base, int v) {
  int count = 0;
  for (auto [i, j] : kBasePairs) count += host.neighborhood(base[i], base[j]).contains(v) ? 1 : 0;
  return count;
}

// K4-free branch: some v5 outside the K4- lies in at least four of the six
// neighborhoods; branch on how many of N(v1,v2), N(v1,v3), N(v1,v4) hold it.
Embedding c5_in_k4_free_host(const TripleSystem& host) {
  const K4Base v = k4minus_base(host);
  const VertexSet outside = host.vertices() - set_of({v[0], v[1], v[2], v[3]});
  for (int v5 : outside) {
    if (membership(host, v, v5) < 4) continue;
    std::vector<int> through_v1;
    for (int j = 1; j < 4; ++j)
      if (host.neighborhood(v[0], v[static_cast<std::size_t>(j)]).contains(v5)) through_v1.push_back(j);
    const int m = static_cast<int>(through_v1.size());
    if (m == 3) {
      throw InternalContradiction("K4-free host but v5 completes all of N(v1,v2), N(v1,v3), N(v1,v4)",
                                  describe_base(host, v) + "\n  v5=" + std::to_string(v5));
    }
    if (m == 2) {
      const int a = through_v1[0], b = through_v1[1];
      const int c = 6 - a - b;
      return checked(host, PatternId::C5, {v[c], v5, v[b], v[0], v[a]}, "K4-free case, m = 2");
    }
    if (m == 1) {
      const int a = through_v1[0];
      const auto rest = others(a);  // {0, b, c}
      const int b = rest[1], c = rest[2];
      return checked(host, PatternId::C5, {v[0], v[a], v5, v[c], v[b]}, "K4-free case, m = 1");
    }
  }
  throw InternalContradiction("K4-free case: no vertex lies in four of the six neighborhoods",
                              describe_base(host, v));
}

// Strictly above n/2 around a K4: some outside vertex lies in four of the six
// neighborhoods, hence in both sets of a complementary pair and a cross set.
Embedding c5_around_k4(const TripleSystem& host, const K4Base& v) {
  const VertexSet outside = host.vertices() - set_of({v[0], v[1], v[2], v[3]});
  for (int v5 : outside) {
    if (membership(host, v, v5) < 4) continue;
    if (auto e = c5_from_pair_and_cross(host, v, v5)) return *e;
  }
  throw InternalContradiction("K4 case: no vertex lies in four of the six neighborhoods",
                              describe_base(host, v));
}

// Everything the analysis knows about one K4 base.
struct Frame {
  K4Base v{};
  std::array<std::array<VertexSet, 4>, 4> nbr{};
  std::array<VertexSet, 4> a{};
  std::array<VertexSet, 4> b{};
  int q = 0;
  int nonempty = -1;
};

void fill_ab(Frame& f) {
  for (int i = 0; i < 4; ++i) {
    const auto [j, k, l] = others(i);
    f.a[i] = f.nbr[j][k] & f.nbr[k][l] & f.nbr[l][j];
    f.b[i] = f.nbr[i][j] & f.nbr[i][k] & f.nbr[i][l];
  }
}

Frame raw_frame(const TripleSystem& host, const K4Base& base) {
  Frame f;
  f.v = base;
  for (auto [i, j] : kBasePairs) {
    f.nbr[i][j] = f.nbr[j][i] = host.neighborhood(base[i], base[j]);
  }
  fill_ab(f);
  return f;
}

// Replays the delta_2^+ = n/2 argument around K4 bases. Every fact is verified
// literally; when one fails, the configurations its proof relies on are
// inspected and the C5 they contain is returned. A failure that yields no C5
// is reported as an InternalContradiction.
class HalfDegreeAnalyzer {
 public:
  using Outcome = std::variant<Frame, Embedding>;

  explicit HalfDegreeAnalyzer(const TripleSystem& host)
      : host_(host), n_(host.order()), half_(host.order() / 2) {}

  HalfDegreeAnalysis run(const K4Base& base);

 private:
  Outcome settle(const K4Base& base);
  const Outcome& examine(const K4Base& base);
  Outcome examine_uncached(const K4Base& base);

  [[noreturn]] void contradiction(const std::string& what, const Frame& f,
                                  const std::string& extra = {}) const {
    std::ostringstream diag;
    diag << describe_base(host_, f.v);
    for (int i = 0; i < 4; ++i) {
      diag << "\n  A" << i << "=" << format_set(f.a[i]) << " B" << i << "=" << format_set(f.b[i]);
    }
    if (!extra.empty()) diag << "\n  " << extra;
    throw InternalContradiction(what, diag.str());
  }

  void exercised(int fact) {
    if (std::find(facts_.begin(), facts_.end(), fact) == facts_.end()) facts_.push_back(fact);
  }

  const TripleSystem& host_;
  int n_;
  int half_;
  std::map<K4Base, Outcome> cache_;
  std::vector<int> facts_;
};

// Facts 1 and 2 on one base. Each base pair has co-degree >= n/2, so the six
// neighborhoods hold at least 3n incidences; unless some vertex exhibits a C5
// each vertex lies in at most three of them, which forces equality throughout.
HalfDegreeAnalyzer::Outcome HalfDegreeAnalyzer::settle(const K4Base& base) {
  Frame f = raw_frame(host_, base);
  for (int u : host_.vertices()) {
    if (auto e = c5_from_pair_and_cross(host_, base, u)) return *e;
  }
  for (auto [i, j] : kBasePairs) {
    if (f.nbr[i][j].size() != half_) {
      contradiction("co-degree of a K4 pair differs from n/2 without a C5", f,
                    "pair (" + std::to_string(base[i]) + "," + std::to_string(base[j]) + ")");
    }
  }
  for (int u : host_.vertices()) {
    if (membership(host_, base, u) != 3) {
      contradiction("vertex not in exactly three K4 neighborhoods without a C5", f,
                    "vertex " + std::to_string(u));
    }
  }
  return f;
}

const HalfDegreeAnalyzer::Outcome& HalfDegreeAnalyzer::examine(const K4Base& base) {
  auto it = cache_.find(base);
  if (it != cache_.end()) return it->second;
  Outcome o = examine_uncached(base);
  return cache_.emplace(base, std::move(o)).first->second;
}

// Facts 1-7 on one base.
HalfDegreeAnalyzer::Outcome HalfDegreeAnalyzer::examine_uncached(const K4Base& base) {
  Outcome settled = settle(base);
  if (std::holds_alternative<Embedding>(settled)) return settled;
  Frame f = std::get<Frame>(settled);
  exercised(1);
  exercised(2);

  // Fact 3: a in A_i, b in A_j gives N(a,b) = N(v_i,v_j). The argument applies
  // Fact 2 to the K4s (a, v_j, v_k, v_l) and (a, b, v_k, v_l).
  for (auto [i, j] : kBasePairs) {
    for (int a : f.a[i]) {
      for (int b : f.a[j]) {
        if (host_.neighborhood(a, b) == f.nbr[i][j]) continue;
        K4Base first = base;
        first[static_cast<std::size_t>(i)] = a;
        K4Base second = first;
        second[static_cast<std::size_t>(j)] = b;
        for (const K4Base& k4 : {first, second}) {
          if (!is_k4(host_, k4)) break;
          Outcome o = settle(k4);
          if (std::holds_alternative<Embedding>(o)) return o;
        }
        contradiction("N(a,b) differs from N(v_i,v_j) for a in A_i, b in A_j", f,
                      "a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  exercised(3);

  // Fact 4
  f.q = f.a[0].size() - f.b[0].size();
  for (int i = 1; i < 4; ++i) {
    if (f.a[i].size() - f.b[i].size() != f.q) contradiction("|A_i| - |B_i| not constant", f);
  }
  exercised(4);

  // Fact 5
  for (int i = 0; i < 4; ++i) {
    for (int a : f.b[i]) {
      for (int j : others(i)) {
        const VertexSet reach = host_.neighborhood(a, f.v[j]);
        for (int k : others(i)) {
          if (k == j) continue;
          const VertexSet hit_b = reach & f.b[k];
          if (!hit_b.empty()) {
            return checked(host_, PatternId::C5, {a, f.v[i], f.v[k], hit_b.first(), f.v[j]},
                           "N(a,v_j) meets B_k for a in B_i");
          }
          if (!(reach & f.a[k]).empty()) {
            contradiction("N(a,v_j) meets A_k for a in B_i", f, "a=" + std::to_string(a));
          }
        }
      }
    }
  }
  int nonempty_count = 0;
  for (int i = 0; i < 4; ++i) {
    if (f.b[i].empty()) continue;
    ++nonempty_count;
    f.nonempty = i;
    for (int j : others(i)) {
      if (2 * (f.a[i].size() + f.a[j].size() + f.b[i].size() + f.b[j].size()) < n_ + 2) {
        contradiction("|A_i|+|A_j|+|B_i|+|B_j| < 1 + n/2 with B_i non-empty", f);
      }
    }
  }
  exercised(5);
  if (nonempty_count > 1) contradiction("two B sets are non-empty", f);
  if (f.nonempty < 0) return f;

  // Fact 6
  const int i = f.nonempty;
  const int r = f.b[i].size();
  if (n_ != 4 * f.q + 2 * r) contradiction("n != 4q + 2r", f);
  for (int j : others(i)) {
    if (!(4 * f.a[i].size() > n_ && n_ > 4 * f.a[j].size())) {
      contradiction("|A_i| > n/4 > |A_j| fails", f);
    }
    for (int a : f.a[j]) {
      for (int b : f.a[j]) {
        if (a < b && !host_.neighborhood(a, b).empty()) {
          contradiction("two vertices of A_j have a common edge", f,
                        "a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
      }
    }
  }
  exercised(6);

  // Fact 7
  for (int j : others(i)) {
    for (int a : host_.vertices()) {
      if (host_.neighborhood(a, f.v[j]).empty() != f.a[j].contains(a)) {
        contradiction("N(a,v_j) empty does not characterize A_j", f, "a=" + std::to_string(a));
      }
    }
  }
  exercised(7);
  return f;
}

HalfDegreeAnalysis HalfDegreeAnalyzer::run(const K4Base& base) {
  const Outcome& primary_outcome = examine(base);
  if (const auto* e = std::get_if<Embedding>(&primary_outcome)) return {*e, facts_};
  const Frame f = std::get<Frame>(primary_outcome);

  StructureCertificate cert;
  cert.n = n_;
  cert.base = base;
  cert.a_sets = f.a;
  cert.b_sets = f.b;
  cert.q = f.q;

  if (f.nonempty < 0) {
    if (n_ != 4 * f.q) contradiction("all B empty but n != 4q", f);
    return {cert, facts_};
  }

  const int i = f.nonempty;
  const int j0 = others(i)[0];
  const int vi = f.v[i];
  const int vj = f.v[j0];
  const VertexSet bset = f.b[i];

  // Fact 8: every a in B_i has a partner b in B_i with a, v_i, v_j, b a K4.
  std::map<int, int> partner;
  for (int a : bset) {
    for (int j : others(i)) {
      const VertexSet cand =
          (bset & host_.neighborhood(a, vi) & host_.neighborhood(a, f.v[j])) - VertexSet::single(a);
      if (!cand.empty()) {
        if (j == j0) partner[a] = cand.first();
        continue;
      }
      const VertexSet hit = host_.neighborhood(a, vi) & f.a[i];
      if (!hit.empty()) {
        int k = 0;
        while (k == i || k == j) ++k;
        return {checked(host_, PatternId::C5, {vi, a, hit.first(), f.v[k], f.v[j]},
                        "N(a,v_i) meets A_i for a in B_i"),
                facts_};
      }
      contradiction("no K4 partner in B_i", f, "a=" + std::to_string(a));
    }
  }
  exercised(8);

  // Fact 9: each K4 (v_i, v_j, v5, v6) inside B_i has a non-empty B at v_i.
  // Its frame is derived from scratch.
  for (int v5 : bset) {
    for (int v6 : bset) {
      if (v5 == v6 || !is_k4(host_, {vi, vj, v5, v6})) continue;
      const Outcome& o = examine({vi, vj, v5, v6});
      if (const auto* e = std::get_if<Embedding>(&o)) return {*e, facts_};
      const Frame& s = std::get<Frame>(o);
      if (s.nonempty != 0) {
        contradiction("secondary K4 has empty B at v_i", f,
                      "secondary base (" + std::to_string(vi) + "," + std::to_string(vj) + "," +
                          std::to_string(v5) + "," + std::to_string(v6) + ")");
      }
    }
  }
  exercised(9);

  // Fact 10: a ~ b iff N(a,b) is empty is transitive on B_i.
  for (int v5 : bset) {
    for (int v7 : bset) {
      for (int v8 : bset) {
        if (v7 == v8) continue;
        if (host_.neighborhood(v5, v7).empty() && host_.neighborhood(v5, v8).empty() &&
            !host_.neighborhood(v7, v8).empty()) {
          contradiction("~ is not transitive", f,
                        "v5=" + std::to_string(v5) + " v7=" + std::to_string(v7) +
                            " v8=" + std::to_string(v8));
        }
      }
    }
  }
  exercised(10);

  VertexSet remaining = bset;
  while (!remaining.empty()) {
    const int x = remaining.first();
    VertexSet cls;
    for (int y : bset)
      if (host_.neighborhood(x, y).empty()) cls.insert(y);
    if (!cls.is_subset_of(remaining)) contradiction("~ classes overlap", f);
    cert.classes.push_back(cls);
    remaining -= cls;
  }

  const auto class_of = [&](int v) {
    for (std::size_t c = 0; c < cert.classes.size(); ++c)
      if (cert.classes[c].contains(v)) return static_cast<int>(c);
    return -1;
  };

  // The pairing f: the class of v5 maps to the class of its K4 partner v6.
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    const int v5 = cert.classes[c].first();
    const int v6 = partner.at(v5);
    const int fc = class_of(v6);
    const Frame& s = std::get<Frame>(examine({vi, vj, v5, v6}));
    if (s.a[2] != cert.classes[c] || s.a[3] != cert.classes[static_cast<std::size_t>(fc)]) {
      contradiction("class differs from the A set of its secondary K4", f,
                    "v5=" + std::to_string(v5) + " v6=" + std::to_string(v6));
    }
    for (int v7 : cert.classes[c]) {
      for (int v8 : bset) {
        const bool k4 = is_k4(host_, {vi, vj, v7, v8});
        if (k4 != cert.classes[static_cast<std::size_t>(fc)].contains(v8)) {
          contradiction("pairing depends on the chosen representative", f,
                        "v7=" + std::to_string(v7) + " v8=" + std::to_string(v8));
        }
      }
    }
    cert.pairing.push_back(fc);
  }
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    const auto fc = static_cast<std::size_t>(cert.pairing[c]);
    if (fc == c || static_cast<std::size_t>(cert.pairing[fc]) != c ||
        cert.classes[fc].size() != cert.classes[c].size()) {
      contradiction("pairing is not a fixed-point-free size-preserving involution", f);
    }
  }

  cert.r0 = bset.size();
  if (cert.r0 % 2 != 0 || n_ != 4 * cert.q + 2 * cert.r0) contradiction("parity argument fails", f);
  return {cert, facts_};
}

void require_k4(const TripleSystem& host, const K4Base& base) {
  for (int v : base) {
    if (v < 0 || v >= host.order()) throw PreconditionViolated("base vertex out of range");
  }
  if (!is_k4(host, base)) throw PreconditionViolated("base vertices do not form a K4");
}

FactReport fail(FactReport r, std::vector<int> counterexample, std::string detail) {
  r.holds = false;
  r.counterexample = std::move(counterexample);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

bool is_k4(const TripleSystem& host, const K4Base& v) {
  return host.has_edge(v[0], v[1], v[2]) && host.has_edge(v[0], v[1], v[3]) &&
         host.has_edge(v[0], v[2], v[3]) && host.has_edge(v[1], v[2], v[3]);
}

Embedding find_c5minus_witness(const TripleSystem& host) {
  const int n = host.order();
  if (n < 6) throw PreconditionViolated("C5- witness needs n >= 6");
  const auto delta = min_positive_codegree(host);
  if (!delta || *delta < n / 3 + 1) {
    throw PreconditionViolated("C5- witness needs delta2+ >= floor(n/3) + 1 = " +
                               std::to_string(n / 3 + 1));
  }

  const K4Base v = k4minus_base(host);
  const VertexSet outside = host.vertices() - set_of({v[0], v[1], v[2], v[3]});
  const auto nbr = [&](int a, int b) { return host.neighborhood(v[a], v[b]); };

  if (!host.has_edge(v[1], v[2], v[3])) {
    const VertexSet n21 = nbr(1, 0), n23 = nbr(1, 2), n24 = nbr(1, 3);
    for (int v5 : outside) {
      const bool in21 = n21.contains(v5), in23 = n23.contains(v5), in24 = n24.contains(v5);
      if (in21 && in23) return checked(host, PatternId::C5Minus, {v[2], v[3], v[0], v[1], v5}, "case 1, N21 & N23");
      if (in21 && in24) return checked(host, PatternId::C5Minus, {v[3], v[2], v[0], v[1], v5}, "case 1, N21 & N24");
      if (in23 && in24) return checked(host, PatternId::C5Minus, {v[3], v[0], v[2], v[1], v5}, "case 1, N23 & N24");
    }
    throw InternalContradiction("case 1: no vertex in two of N(v2,v1), N(v2,v3), N(v2,v4)",
                                describe_base(host, v));
  }

  // v1..v4 span a K4. M_{i,j} = N(v_i,v_j) minus the two other base vertices.
  std::array<VertexSet, 6> m{};
  for (std::size_t p = 0; p < kBasePairs.size(); ++p) {
    const auto [i, j] = kBasePairs[p];
    const auto [k, l] = kBasePairs[5 - p];
    m[p] = nbr(i, j) - set_of({v[k], v[l]});
  }
  for (int v5 : outside) {
    std::vector<std::size_t> hits;
    for (std::size_t p = 0; p < m.size(); ++p)
      if (m[p].contains(v5)) hits.push_back(p);
    if (hits.size() < 2) continue;

    for (std::size_t x = 0; x < hits.size(); ++x) {
      for (std::size_t y = x + 1; y < hits.size(); ++y) {
        const auto [a0, a1] = kBasePairs[hits[x]];
        const auto [b0, b1] = kBasePairs[hits[y]];
        int common = -1;
        if (a0 == b0 || a0 == b1) common = a0;
        if (a1 == b0 || a1 == b1) common = a1;
        if (common < 0) continue;
        const int j = a0 == common ? a1 : a0;
        const int jj = b0 == common ? b1 : b0;
        const int l = 6 - common - j - jj;
        return checked(host, PatternId::C5Minus, {v[jj], v[l], v[j], v[common], v5},
                       "case 2, overlapping pairs");
      }
    }
    const auto [i, j] = kBasePairs[hits[0]];
    const auto [k, l] = kBasePairs[hits[1]];
    return checked(host, PatternId::C5Minus, {v5, v[i], v[j], v[k], v[l]}, "case 2, disjoint pairs");
  }
  throw InternalContradiction("case 2: no vertex in two of the six sets M_{i,j}", describe_base(host, v));
}

Embedding find_c5_witness(const TripleSystem& host) {
  const int n = host.order();
  if (n < 6) throw PreconditionViolated("C5 witness needs n >= 6");
  const auto delta = min_positive_codegree(host);
  if (!delta || *delta < n / 2 + 1) {
    throw PreconditionViolated("C5 witness needs delta2+ >= floor(n/2) + 1 = " +
                               std::to_string(n / 2 + 1));
  }
  if (auto k4 = find_embedding(host, PatternId::K4)) {
    return c5_around_k4(host, {k4->map[0], k4->map[1], k4->map[2], k4->map[3]});
  }
  return c5_in_k4_free_host(host);
}

HalfDegreeAnalysis analyze_half_degree(const TripleSystem& host) {
  const int n = host.order();
  const auto delta = min_positive_codegree(host);
  if (n % 2 != 0 || !delta || *delta != n / 2) {
    throw PreconditionViolated("half-degree analysis needs n even and delta2+ = n/2");
  }
  auto k4 = find_embedding(host, PatternId::K4);
  if (!k4) return {c5_in_k4_free_host(host), {}};
  HalfDegreeAnalyzer analyzer(host);
  return analyzer.run({k4->map[0], k4->map[1], k4->map[2], k4->map[3]});
}

std::optional<std::string> certificate_violation(const TripleSystem& host,
                                                 const StructureCertificate& cert) {
  const int n = host.order();
  if (cert.n != n) return "certificate n does not match host";
  for (int v : cert.base)
    if (v < 0 || v >= n) return "base vertex out of range";
  if (!is_k4(host, cert.base)) return "base is not a K4";

  const Frame f = raw_frame(host, cert.base);
  if (f.a != cert.a_sets) return "A sets do not match the host";
  if (f.b != cert.b_sets) return "B sets do not match the host";

  VertexSet seen;
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    for (VertexSet s : {f.a[i], f.b[i]}) {
      if (!(seen & s).empty()) return "A/B sets overlap";
      seen |= s;
      total += s.size();
    }
    if (!f.a[i].contains(cert.base[static_cast<std::size_t>(i)])) return "v_i not in A_i";
  }
  if (seen != host.vertices() || total != n) return "A/B sets do not cover the vertex set";
  for (int i = 0; i < 4; ++i) {
    if (f.a[i].size() - f.b[i].size() != cert.q) return "|A_i| - |B_i| differs from q";
  }

  int nonempty = -1;
  for (int i = 0; i < 4; ++i) {
    if (f.b[i].empty()) continue;
    if (nonempty >= 0) return "more than one B set is non-empty";
    nonempty = i;
  }
  if (nonempty < 0) {
    if (cert.r0 != 0 || !cert.classes.empty() || !cert.pairing.empty()) {
      return "classes or r0 present although every B set is empty";
    }
    if (n != 4 * cert.q) return "n != 4q";
    return std::nullopt;
  }

  const VertexSet bset = f.b[nonempty];
  if (cert.r0 != bset.size()) return "r0 differs from |B|";
  if (n != 4 * cert.q + 2 * cert.r0) return "n != 4q + 2 r0";
  VertexSet covered;
  for (VertexSet cls : cert.classes) {
    if (cls.empty() || !(covered & cls).empty()) return "classes are empty or overlap";
    covered |= cls;
  }
  if (covered != bset) return "classes do not partition B";
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    for (std::size_t d = 0; d < cert.classes.size(); ++d) {
      for (int a : cert.classes[c]) {
        for (int b : cert.classes[d]) {
          if (a == b) continue;
          if (host.neighborhood(a, b).empty() != (c == d)) return "classes are not the ~ classes";
        }
      }
    }
  }
  if (cert.pairing.size() != cert.classes.size()) return "pairing size differs from class count";
  for (std::size_t c = 0; c < cert.pairing.size(); ++c) {
    const int fc = cert.pairing[c];
    if (fc < 0 || fc >= static_cast<int>(cert.classes.size())) return "pairing index out of range";
    if (static_cast<std::size_t>(fc) == c) return "pairing has a fixed point";
    if (cert.pairing[static_cast<std::size_t>(fc)] != static_cast<int>(c)) return "pairing is not an involution";
    if (cert.classes[static_cast<std::size_t>(fc)].size() != cert.classes[c].size()) {
      return "paired classes differ in size";
    }
  }
  if (cert.r0 % 2 != 0) return "r0 is odd";
  if (n % 4 != 0) return "n not divisible by 4";
  return std::nullopt;
}

FactReport check_fact(const TripleSystem& host, const K4Base& base, int fact_id) {
  if (fact_id < 1 || fact_id > 10) throw PreconditionViolated("fact id must be in 1..10");
  require_k4(host, base);

  const int n = host.order();
  const auto delta = min_positive_codegree(host);
  const bool half = n % 2 == 0 && delta && *delta == n / 2;
  const Frame f = raw_frame(host, base);
  const auto& v = base;

  FactReport r;
  r.fact = fact_id;
  r.applicable = half;

  std::vector<int> nonempty;
  for (int i = 0; i < 4; ++i)
    if (!f.b[i].empty()) nonempty.push_back(i);
  if (fact_id >= 6) {
    r.applicable = half && !nonempty.empty();
    if (nonempty.empty()) {
      r.detail = "vacuous: every B_i is empty";
      return r;
    }
  }

  switch (fact_id) {
    case 1: {
      for (auto [i, j] : kBasePairs) {
        if (2 * f.nbr[i][j].size() != n) {
          return fail(r, {v[i], v[j], f.nbr[i][j].size()}, "(v_i, v_j, |N(v_i,v_j)|) with |N| != n/2");
        }
      }
      for (int u : host.vertices()) {
        const int count = membership(host, base, u);
        if (count != 3) {
          r.c5 = c5_from_pair_and_cross(host, base, u);
          return fail(r, {u, count}, "(vertex, number of the six neighborhoods containing it)");
        }
      }
      return r;
    }
    case 2: {
      for (const auto& group : kComplementaryPairs) {
        const auto [i, j] = group[0];
        const auto [k, l] = group[1];
        const VertexSet diff = (f.nbr[i][j] & f.nbr[k][l]) | (host.vertices() - (f.nbr[i][j] | f.nbr[k][l]));
        if (!diff.empty()) {
          const int u = diff.first();
          r.c5 = c5_from_pair_and_cross(host, base, u);
          return fail(r, {v[i], v[j], v[k], v[l], u},
                      "(v_i, v_j, v_k, v_l, u) with u in both or neither of N(v_i,v_j), N(v_k,v_l)");
        }
      }
      return r;
    }
    case 3: {
      for (auto [i, j] : kBasePairs) {
        for (int a : f.a[i]) {
          for (int b : f.a[j]) {
            if (host.neighborhood(a, b) != f.nbr[i][j]) {
              return fail(r, {a, b, v[i], v[j]}, "(a in A_i, b in A_j, v_i, v_j) with N(a,b) != N(v_i,v_j)");
            }
          }
        }
      }
      return r;
    }
    case 4: {
      std::vector<int> diffs;
      for (int i = 0; i < 4; ++i) diffs.push_back(f.a[i].size() - f.b[i].size());
      if (std::adjacent_find(diffs.begin(), diffs.end(), std::not_equal_to<>()) != diffs.end()) {
        return fail(r, diffs, "|A_i| - |B_i| for i = 0..3");
      }
      r.detail = "q = " + std::to_string(diffs[0]);
      return r;
    }
    case 5: {
      for (int i = 0; i < 4; ++i) {
        for (int a : f.b[i]) {
          for (int j : others(i)) {
            const VertexSet reach = host.neighborhood(a, v[j]);
            for (int k : others(i)) {
              if (k == j) continue;
              const VertexSet hit = reach & (f.a[k] | f.b[k]);
              if (hit.empty()) continue;
              const int b = hit.first();
              if (f.b[k].contains(b)) {
                Embedding e{PatternId::C5, {a, v[i], v[k], b, v[j]}};
                if (validate_embedding(host, e)) r.c5 = e;
              }
              return fail(r, {a, v[j], b}, "(a in B_i, v_j, b) with b in N(a,v_j) and in A_k or B_k");
            }
          }
          for (int j : others(i)) {
            if (2 * (f.a[i].size() + f.a[j].size() + f.b[i].size() + f.b[j].size()) < n + 2) {
              return fail(r, {v[i], v[j]}, "(v_i, v_j) with |A_i|+|A_j|+|B_i|+|B_j| < 1 + n/2");
            }
          }
        }
      }
      return r;
    }
    case 6: {
      for (int i : nonempty) {
        const int rr = f.b[i].size();
        const int j0 = others(i)[0];
        const int q = f.a[j0].size() - f.b[j0].size();
        if (n != 4 * q + 2 * rr) return fail(r, {n, q, rr}, "(n, q, r) with n != 4q + 2r");
        for (int j : others(i)) {
          if (!(4 * f.a[i].size() > n && n > 4 * f.a[j].size())) {
            return fail(r, {v[i], v[j]}, "(v_i, v_j) with |A_i| > n/4 > |A_j| violated");
          }
          for (int a : f.a[j]) {
            for (int b : f.a[j]) {
              if (a < b && !host.neighborhood(a, b).empty()) {
                return fail(r, {a, b}, "(a, b) in A_j with N(a,b) non-empty");
              }
            }
          }
        }
      }
      return r;
    }
    case 7: {
      for (int i : nonempty) {
        for (int j : others(i)) {
          for (int a : host.vertices()) {
            if (host.neighborhood(a, v[j]).empty() != f.a[j].contains(a)) {
              return fail(r, {a, v[j]}, "(a, v_j) where N(a,v_j) empty disagrees with a in A_j");
            }
          }
        }
      }
      return r;
    }
    case 8: {
      for (int i : nonempty) {
        for (int a : f.b[i]) {
          for (int j : others(i)) {
            const VertexSet cand =
                (f.b[i] & host.neighborhood(a, v[i]) & host.neighborhood(a, v[j])) - VertexSet::single(a);
            if (!cand.empty()) continue;
            const VertexSet hit = host.neighborhood(a, v[i]) & f.a[i];
            if (!hit.empty()) {
              int k = 0;
              while (k == i || k == j) ++k;
              Embedding e{PatternId::C5, {v[i], a, hit.first(), v[k], v[j]}};
              if (validate_embedding(host, e)) r.c5 = e;
            }
            return fail(r, {a, v[i], v[j]}, "(a in B_i, v_i, v_j) without a K4 partner in B_i");
          }
        }
      }
      return r;
    }
    case 9: {
      for (int i : nonempty) {
        for (int j : others(i)) {
          for (int v5 : f.b[i]) {
            for (int v6 : f.b[i]) {
              const K4Base sec{v[i], v[j], v5, v6};
              if (v5 == v6 || !is_k4(host, sec)) continue;
              if (raw_frame(host, sec).b[0].empty()) {
                return fail(r, {v[i], v[j], v5, v6}, "K4 (v_i, v_j, v5, v6) whose B at v_i is empty");
              }
            }
          }
        }
      }
      return r;
    }
    case 10: {
      for (int i : nonempty) {
        for (int a : f.b[i]) {
          for (int b : f.b[i]) {
            for (int c : f.b[i]) {
              if (b == c) continue;
              if (host.neighborhood(a, b).empty() && host.neighborhood(a, c).empty() &&
                  !host.neighborhood(b, c).empty()) {
                return fail(r, {a, b, c}, "(v5, v7, v8) with v5~v7, v5~v8 but not v7~v8");
              }
            }
          }
        }
      }
      return r;
    }
    default:
      break;
  }
  return r;
}

}  // namespace triplesys
