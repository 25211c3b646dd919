#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cube_orbits/cube_graph.hpp"
#include "cube_orbits/exact_int.hpp"
#include "cube_orbits/orbit_kernels.hpp"

// Brute-force ground truth: explicit graphs, orbits under the acting group,
// and exhaustive automorphism search for small graphs.
namespace cube_orbits::oracle {

enum class Ground { Vertices, Edges };

struct Orbit {
  std::uint32_t representative = 0;  ///< least member index
  std::vector<std::uint32_t> members;  ///< ascending

  std::size_t size() const noexcept { return members.size(); }
};

struct OrbitPartition {
  Ground ground = Ground::Vertices;
  std::vector<Orbit> orbits;  ///< ascending by representative
};

/// Every element of the group acting on V(g), as vertex permutations.
///
/// Gamma_n with n >= 2: {id, reversal}. Lambda_n with n >= 3: the 2n
/// dihedral maps. Smaller graphs: the exhaustively computed Aut(g).
std::vector<Permutation> acting_group(const CubeGraph& g, Execution exec = Execution::Parallel);

/// Groups elements by their orbit labels (least element of each orbit).
OrbitPartition partition_from_labels(const std::vector<std::uint32_t>& labels, Ground ground);

OrbitPartition vertex_orbits(const CubeGraph& g, Execution exec = Execution::Parallel);
OrbitPartition edge_orbits(const CubeGraph& g, Execution exec = Execution::Parallel);

SizeHistogram histogram(const OrbitPartition& p);

/// Indices of the vertices (or edges) fixed by a dihedral string map. Images
/// are computed stringwise, so the map need not preserve the vertex set.
std::vector<std::uint32_t> fixed_points(const DihedralElement& elem, const CubeGraph& g, Ground ground);

/// Printable form of a ground element: "0101" for a vertex, "{00,01}" for an edge.
std::string element_label(const CubeGraph& g, Ground ground, std::uint32_t index);

/// All adjacency-preserving vertex bijections, found by backtracking.
/// Throws std::invalid_argument when |V| exceeds kMaxAutomorphismVertices.
inline constexpr std::size_t kMaxAutomorphismVertices = 60;
std::vector<Permutation> automorphism_group(const CubeGraph& g);

/// The dihedral string map realising `perm` on V(g), if one exists.
std::optional<DihedralElement> as_dihedral(const Permutation& perm, const CubeGraph& g);

bool preserves_weight(const Permutation& perm, const CubeGraph& g);

}  // namespace cube_orbits::oracle
