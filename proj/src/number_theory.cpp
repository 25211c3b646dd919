#include "cube_orbits/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace cube_orbits {

ExactInt fib(long long n) {
  if (n < -1) throw std::invalid_argument("fib: index must be >= -1, got " + std::to_string(n));
  if (n == -1) return 1;
  ExactInt a = 0;
  ExactInt b = 1;
  for (long long i = 0; i < n; ++i) {
    ExactInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

ExactInt lucas(long long n) {
  if (n < 0) throw std::invalid_argument("lucas: index must be >= 0, got " + std::to_string(n));
  ExactInt a = 2;
  ExactInt b = 1;
  for (long long i = 0; i < n; ++i) {
    ExactInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i)
  }
  return result;
}

}  // namespace cube_orbits
