#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cube_orbits/cube_graph.hpp"
#include "cube_orbits/cube_string.hpp"
#include "cube_orbits/exact_int.hpp"

namespace cube_orbits::bijections {

enum class Piece {
  Vertical,        ///< one vertical domino, 1 column
  HorizontalPair,  ///< two stacked horizontal dominoes, 2 columns
};

/// Domino tiling of a 2 x width rectangle, read left to right.
struct Tiling {
  std::vector<Piece> pieces;

  std::size_t width() const noexcept;

  /// "V"/"H" per piece, e.g. "HV" for width 3.
  std::string to_string() const;
  static Tiling parse(std::string_view text);

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Codes u0 left to right: 0 -> vertical domino, 10 -> horizontal pair.
/// Requires a Fibonacci string; the tiling has width |u| + 1.
Tiling string_to_tiling(const CubeString& u);

/// Inverse of string_to_tiling.
CubeString tiling_to_string(const Tiling& t);

/// Left-right mirror image.
Tiling reflect(const Tiling& t);

/// All tilings of the 2 x width rectangle, by direct recursion over pieces.
std::vector<Tiling> all_tilings(std::size_t width);

/// Tilings of the 2 x m rectangle up to the rectangle's symmetries (the
/// square's eight symmetries when m = 2). Computed geometrically on cell
/// coordinates. Requires m >= 2.
ExactInt distinct_tilings(std::size_t m);

/// Ordered compositions of m into parts 1 and 2, up to reversal. Requires m >= 1.
ExactInt distinct_partitions(std::size_t m);

/// s(e): the n-3 characters read cyclically from two places after the
/// differing position. Requires n >= 5 and a genuine Lucas-cube edge.
CubeString lambda_edge_to_gamma_vertex(const CubeString& u, const CubeString& v);

struct EdgeOrbitBijectionReport {
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  std::size_t lambda_edge_orbits = 0;
  std::size_t gamma_vertex_orbits = 0;

  bool ok() const noexcept { return well_defined && injective && surjective; }
};

/// Checks that s induces a bijection from edge orbits of Lambda_n onto
/// vertex orbits of Gamma_{n-3}, both computed by the oracle. 5 <= n <= 18.
EdgeOrbitBijectionReport verify_edge_orbit_bijection(std::size_t n);

}  // namespace cube_orbits::bijections
