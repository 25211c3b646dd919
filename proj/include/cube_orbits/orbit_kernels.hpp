#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cube_orbits/cube_graph.hpp"
#include "cube_orbits/cube_string.hpp"

// Data-parallel kernels behind the orbit oracle. Every kernel has a serial
// reference path; both paths produce identical results for any thread count.
namespace cube_orbits::oracle {

enum class Execution { Serial, Parallel };

/// Bijection on element indices: perm[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t size);

/// Vertex permutation induced by a dihedral string map. Throws
/// std::invalid_argument if the map leaves the vertex set.
Permutation vertex_permutation(const CubeGraph& g, const DihedralElement& elem, Execution exec);

/// Edge permutation induced by a vertex automorphism: {u, v} -> {p(u), p(v)}.
/// Throws std::invalid_argument if some image is not an edge.
Permutation edge_permutation(const CubeGraph& g, const Permutation& vertex_perm, Execution exec);

/// Orbit label of every element: the least element index in its orbit.
///
/// Serial: union-find over x ~ p(x) for every p in `maps`; `maps` may be any
/// generating set. Parallel: label(x) = min over p of p(x), which requires
/// `maps` to be the whole group.
std::vector<std::uint32_t> orbit_labels(std::span<const Permutation> maps, std::size_t ground_size,
                                        Execution exec);

struct StringClassCounts {
  std::uint64_t primitive = 0;
  std::uint64_t primitive_symmetric = 0;
  std::uint64_t asymmetric = 0;

  friend bool operator==(const StringClassCounts&, const StringClassCounts&) = default;
};

/// Classifies each string by its definition: primitive via the period,
/// asymmetric via the size of the materialised dihedral orbit.
StringClassCounts classify_strings(std::span<const CubeString> strings, Execution exec);

/// Sum over j in [0, n) of the number of strings fixed by alpha^j o beta.
std::uint64_t reflection_fixed_point_total(std::span<const CubeString> strings, Execution exec);

}  // namespace cube_orbits::oracle
