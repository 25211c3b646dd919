#include "cube_orbits/formulas.hpp"

#include <stdexcept>
#include <string>

namespace cube_orbits::formulas {

namespace {

using ll = long long;

void require(bool ok, const char* fn, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(fn) + ": " + what);
}

// F_{floor(d/2) + 2}: the number of palindromic Lucas-compatible splittings
// contributed by a length-d block.
ExactInt half_fib(std::uint64_t d) { return fib(static_cast<ll>(d / 2) + 2); }

ExactInt primitive_symmetric_count(std::uint64_t n) {
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(n)) sum += mobius(n / d) * half_fib(d);
  return n * sum;
}

ExactInt primitive_count(std::uint64_t n) {
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(n)) sum += mobius(n / d) * lucas(static_cast<ll>(d));
  return sum;
}

// F_{floor((n + 1 + (-1)^n) / 2)}
ExactInt lambda_edge_fixed_index_fib(std::uint64_t n) {
  const std::uint64_t idx = n % 2 == 0 ? (n + 2) / 2 : n / 2;
  return fib(static_cast<ll>(idx));
}

}  // namespace

GraphCounts graph_counts(std::uint64_t n, Cube cube) {
  const ll m = static_cast<ll>(n);
  if (cube == Cube::Gamma) {
    ExactInt edges = exact_div(m * fib(m + 1) + 2 * (m + 1) * fib(m), 5);
    return {fib(m + 2), std::move(edges)};
  }
  return {n == 0 ? ExactInt{1} : lucas(m), m * fib(m - 1)};
}

ExactInt fib_palindrome_fix(std::uint64_t n, PalindromeVariant variant) {
  require(n >= 1, "fib_palindrome_fix", "n must be >= 1");
  const ll k = static_cast<ll>(n / 2);
  const ll base = n % 2 == 0 ? k + 1 : k + 3;
  switch (variant) {
    case PalindromeVariant::All: return fib(base);
    case PalindromeVariant::Starts0: return fib(base - 1);
    case PalindromeVariant::Starts1: return fib(base - 2);
  }
  throw std::invalid_argument("fib_palindrome_fix: unknown variant");
}

OrbitCounts gamma_vertex_orbits(std::uint64_t n) {
  require(n >= 2, "gamma_vertex_orbits", "closed form holds for n >= 2 only");
  const ExactInt vertices = fib(static_cast<ll>(n) + 2);
  // F_{floor((n - (-1)^n)/2) + 2}
  const std::uint64_t idx = (n % 2 == 0 ? (n - 1) / 2 : (n + 1) / 2) + 2;
  const ExactInt fixed = fib(static_cast<ll>(idx));
  const ExactInt pairs = exact_div(vertices - fixed, 2);
  OrbitCounts out{fixed + pairs, {}};
  out.histogram.add(1, fixed);
  out.histogram.add(2, pairs);
  return out;
}

OrbitCounts gamma_edge_orbits(std::uint64_t n) {
  const ExactInt edges = graph_counts(n, Cube::Gamma).edges;
  const ExactInt fixed = n % 2 == 1 ? fib(static_cast<ll>((n + 1) / 2)) : ExactInt{0};
  const ExactInt pairs = exact_div(edges - fixed, 2);
  OrbitCounts out{fixed + pairs, {}};
  out.histogram.add(1, fixed);
  out.histogram.add(2, pairs);
  return out;
}

ExactInt necklace_count(std::uint64_t n) {
  require(n >= 1, "necklace_count", "n must be >= 1");
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(n)) sum += euler_phi(n / d) * lucas(static_cast<ll>(d));
  return exact_div(sum, n);
}

ExactInt lambda_vertex_orbit_total(std::uint64_t n) {
  require(n >= 1, "lambda_vertex_orbit_total", "n must be >= 1");
  const std::uint64_t half = n / 2;
  ExactInt reflections = 0;
  for (std::uint64_t a = 0; a <= half; ++a) reflections += binomial(half - (a + 1) / 2, a / 2);
  return exact_div(necklace_count(n) + reflections, 2);
}

LucasStringClasses lucas_string_classes(std::uint64_t n) {
  require(n >= 1, "lucas_string_classes", "n must be >= 1");
  ExactInt p = primitive_count(n);
  ExactInt s = primitive_symmetric_count(n);
  ExactInt a = 0;
  for (std::uint64_t d : divisors(n)) a += mobius(n / d) * (lucas(static_cast<ll>(d)) - n * half_fib(d));
  if (p != s + a) throw std::logic_error("lucas_string_classes: p_n != s_n + a_n");
  return {std::move(p), std::move(s), std::move(a)};
}

std::set<std::uint64_t> lambda_vertex_orbit_size_set(std::uint64_t n) {
  require(n >= 1, "lambda_vertex_orbit_size_set", "n must be >= 1");
  std::set<std::uint64_t> out;
  for (std::uint64_t k : divisors(n)) out.insert(k);
  for (std::uint64_t k : divisors(2 * n))
    if (k >= 18) out.insert(k);
  return out;
}

ExactInt lambda_vertex_orbit_count(std::uint64_t n, std::uint64_t k) {
  require(n >= 1 && k >= 1, "lambda_vertex_orbit_count", "n and k must be >= 1");
  if ((2 * n) % k != 0) return 0;
  const ExactInt asym_half = k % 2 == 0 ? lucas_string_classes(k / 2).asymmetric : ExactInt{0};
  if (n % k == 0) {
    const ExactInt sym = primitive_symmetric_count(k);
    return exact_div(k % 2 == 1 ? sym : sym + asym_half, k);
  }
  return exact_div(asym_half, k);
}

SizeHistogram lambda_vertex_orbit_histogram(std::uint64_t n) {
  SizeHistogram h;
  for (std::uint64_t k : divisors(2 * n)) {
    ExactInt c = lambda_vertex_orbit_count(n, k);
    if (c != 0) h.add(k, c);
  }
  return h;
}

OrbitCounts lambda_edge_orbits(std::uint64_t n) {
  require(n >= 1, "lambda_edge_orbits", "n must be >= 1");
  const ExactInt fnm1 = fib(static_cast<ll>(n) - 1);
  const ExactInt fixed = lambda_edge_fixed_index_fib(n);
  OrbitCounts out{exact_div(fnm1 + fixed, 2), {}};
  out.histogram.add(n, fixed);
  out.histogram.add(2 * n, exact_div(fnm1 - fixed, 2));
  return out;
}

}  // namespace cube_orbits::formulas
