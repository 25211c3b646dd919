#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cube_orbits/cube_string.hpp"

namespace cube_orbits::oracle {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId a = 0;  ///< a < b
  VertexId b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Gamma_n or Lambda_n as an explicit graph: the subgraph of Q_n induced by
/// the valid strings, vertices in ascending lexicographic order, edges in
/// ascending (a, b) order.
class CubeGraph {
 public:
  static constexpr std::size_t kMaxDimension = 30;

  /// Throws std::invalid_argument for n > kMaxDimension.
  static CubeGraph build(std::size_t n, Cube kind);

  Cube kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return n_; }

  std::span<const CubeString> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const noexcept;

  std::optional<VertexId> find_vertex(const CubeString& s) const noexcept;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const noexcept;

 private:
  Cube kind_ = Cube::Gamma;
  std::size_t n_ = 0;
  std::vector<CubeString> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;  // sorted per vertex
};

}  // namespace cube_orbits::oracle
