#pragma once

#include <cstdint>
#include <set>

#include "cube_orbits/cube_string.hpp"
#include "cube_orbits/exact_int.hpp"
#include "cube_orbits/number_theory.hpp"

// Closed-form orbit counts for Fibonacci cubes (Gamma_n) and Lucas cubes
// (Lambda_n). Every division is exact and checked.
namespace cube_orbits::formulas {

struct GraphCounts {
  ExactInt vertices;
  ExactInt edges;
};

GraphCounts graph_counts(std::uint64_t n, Cube cube);

enum class PalindromeVariant { All, Starts0, Starts1 };

/// Number of Fibonacci palindromes of length n >= 1 (optionally by first bit).
ExactInt fib_palindrome_fix(std::uint64_t n, PalindromeVariant variant);

struct OrbitCounts {
  ExactInt total;
  SizeHistogram histogram;
};

/// Vertex orbits of Gamma_n under {id, reversal}; n >= 2.
OrbitCounts gamma_vertex_orbits(std::uint64_t n);

/// Edge orbits of Gamma_n; n >= 0.
OrbitCounts gamma_edge_orbits(std::uint64_t n);

/// Binary necklaces of length n >= 1 with no two cyclically adjacent 1s.
ExactInt necklace_count(std::uint64_t n);

/// Number of vertex orbits of Lambda_n (bracelets without adjacent 1s); n >= 1.
ExactInt lambda_vertex_orbit_total(std::uint64_t n);

struct LucasStringClasses {
  ExactInt primitive;
  ExactInt primitive_symmetric;
  ExactInt asymmetric;
};

/// Counts of primitive, primitive symmetric and asymmetric Lucas strings of length n >= 1.
LucasStringClasses lucas_string_classes(std::uint64_t n);

/// {k >= 1 : k | n} U {k >= 18 : k | 2n}, ascending.
std::set<std::uint64_t> lambda_vertex_orbit_size_set(std::uint64_t n);

/// Number of vertex orbits of size k in Lambda_n; zero when k does not divide 2n.
ExactInt lambda_vertex_orbit_count(std::uint64_t n, std::uint64_t k);

/// Full vertex-orbit histogram of Lambda_n over the divisors of 2n (zero entries omitted).
SizeHistogram lambda_vertex_orbit_histogram(std::uint64_t n);

/// Edge orbits of Lambda_n; the histogram always carries keys n and 2n.
OrbitCounts lambda_edge_orbits(std::uint64_t n);

}  // namespace cube_orbits::formulas
