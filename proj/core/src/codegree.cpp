#include "triplesys/codegree.hpp"

#include <algorithm>
#include <stdexcept>

namespace triplesys {

CodegreeTable::CodegreeTable(const TripleSystem& host) : host_(&host), n_(host.order()) {
  const auto nn = static_cast<std::size_t>(n_);
  nbr_.assign(nn * nn, VertexSet{});
  for (const Triple& t : host.edges()) {
    const auto add = [&](int u, int v, int w) {
      nbr_[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)].insert(w);
      nbr_[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(u)].insert(w);
    };
    add(t[0], t[1], t[2]);
    add(t[0], t[2], t[1]);
    add(t[1], t[2], t[0]);
  }

  min_all_ = n_ < 2 ? 0 : n_;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      const int d = codegree(u, v);
      min_all_ = std::min(min_all_, d);
      if (d == 0) continue;
      support_.push_back({u, v});
      min_positive_ = min_positive_ ? std::min(*min_positive_, d) : d;
      max_positive_ = max_positive_ ? std::max(*max_positive_, d) : d;
    }
  }
}

VertexSet CodegreeTable::neighborhood(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) return {};
  return nbr_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
}

CodegreeTable build_codegree_table(const TripleSystem& host) { return CodegreeTable(host); }

std::optional<int> min_positive_codegree(const TripleSystem& host) {
  std::optional<int> best;
  const int n = host.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = host.codegree(u, v);
      if (d > 0 && (!best || d < *best)) best = d;
    }
  }
  return best;
}

}  // namespace triplesys
