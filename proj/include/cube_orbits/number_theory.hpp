#pragma once

#include <cstdint>
#include <vector>

#include "cube_orbits/exact_int.hpp"

namespace cube_orbits {

/// F_n for n >= -1 (F_{-1} = 1, F_0 = 0, F_1 = 1).
ExactInt fib(long long n);

/// L_n for n >= 0 (L_0 = 2, L_1 = 1).
ExactInt lucas(long long n);

/// Moebius function; n >= 1.
int mobius(std::uint64_t n);

/// Euler's totient; n >= 1.
std::uint64_t euler_phi(std::uint64_t n);

/// Positive divisors of n in ascending order; n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// C(n, k), zero for k > n.
ExactInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace cube_orbits
