#include "cube_orbits/cube_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cube_orbits::oracle {

CubeGraph CubeGraph::build(std::size_t n, Cube kind) {
  if (n > kMaxDimension)
    throw std::invalid_argument("CubeGraph::build: n = " + std::to_string(n) + " exceeds the enumeration bound " +
                                std::to_string(kMaxDimension));
  CubeGraph g;
  g.kind_ = kind;
  g.n_ = n;
  g.vertices_ = enumerate(n, string_kind(kind));

  // Setting a 0 to 1 increases the packed word, so the partner always has the larger index.
  std::vector<VertexId> up;
  for (VertexId i = 0; i < g.vertices_.size(); ++i) {
    const CubeString& u = g.vertices_[i];
    up.clear();
    for (std::size_t p = 0; p < n; ++p) {
      if (u.at(p)) continue;
      const CubeString v = u.with_bit(p, true);
      if (!is_valid(v, string_kind(kind))) continue;
      up.push_back(*g.find_vertex(v));
    }
    std::sort(up.begin(), up.end());
    for (VertexId j : up) g.edges_.push_back({i, j});
  }

  std::vector<std::size_t> deg(g.vertices_.size() + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  g.offsets_.assign(g.vertices_.size() + 1, 0);
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.a]++] = e.b;
    g.adjacency_[fill[e.b]++] = e.a;
  }
  for (std::size_t v = 0; v < g.vertices_.size(); ++v)
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

bool CubeGraph::adjacent(VertexId u, VertexId v) const noexcept {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> CubeGraph::find_vertex(const CubeString& s) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it == vertices_.end() || *it != s) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> CubeGraph::find_edge(VertexId u, VertexId v) const noexcept {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

}  // namespace cube_orbits::oracle
