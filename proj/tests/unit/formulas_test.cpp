#include "cube_orbits/formulas.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "cube_orbits/exact_int.hpp"
#include "cube_orbits/number_theory.hpp"

namespace cube_orbits::formulas {
namespace {

TEST(NumberTheory, FibonacciAndLucas) {
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(fib(-1), 1);
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(lucas(9), 76);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_THROW(fib(-2), std::invalid_argument);
  EXPECT_THROW(lucas(-1), std::invalid_argument);
  // F_93 is the first Fibonacci number past 2^63.
  EXPECT_EQ(to_decimal(fib(93)), "12200160415121876738");
  EXPECT_EQ(to_decimal(fib(200)), "280571172992510140037611932413038677189525");
}

TEST(NumberTheory, Arithmetic) {
  EXPECT_EQ(mobius(9), 0);
  EXPECT_EQ(mobius(3), -1);
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(divisors(18), (std::vector<std::uint64_t>{1, 2, 3, 6, 9, 18}));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_THROW(mobius(0), std::invalid_argument);
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
}

TEST(ExactInt, DivisionIsChecked) {
  EXPECT_EQ(exact_div(ExactInt(120), ExactInt(8)), 15);
  EXPECT_THROW(exact_div(ExactInt(7), ExactInt(2)), std::logic_error);
}

TEST(SizeHistogram, TotalsAndEquality) {
  SizeHistogram h{{1, 1}, {3, 1}, {9, 6}, {18, 1}};
  EXPECT_EQ(h.orbit_total(), 9);
  EXPECT_EQ(h.element_total(), 76);
  EXPECT_EQ(h.count(2), 0);
  SizeHistogram with_zero = h;
  with_zero.add(6, 0);
  EXPECT_EQ(h, with_zero);
  EXPECT_EQ(h.support(), (std::set<std::uint64_t>{1, 3, 9, 18}));
}

TEST(Formulas, GraphCounts) {
  auto c = graph_counts(5, Cube::Gamma);
  EXPECT_EQ(c.vertices, 13);
  EXPECT_EQ(c.edges, 20);
  c = graph_counts(9, Cube::Lambda);
  EXPECT_EQ(c.vertices, 76);
  EXPECT_EQ(c.edges, 189);
  c = graph_counts(0, Cube::Lambda);
  EXPECT_EQ(c.vertices, 1);
  EXPECT_EQ(c.edges, 0);
}

TEST(Formulas, FibonacciPalindromes) {
  EXPECT_EQ(fib_palindrome_fix(4, PalindromeVariant::All), 2);
  EXPECT_EQ(fib_palindrome_fix(5, PalindromeVariant::All), 5);
  EXPECT_EQ(fib_palindrome_fix(5, PalindromeVariant::Starts1), 2);
  EXPECT_EQ(fib_palindrome_fix(5, PalindromeVariant::Starts0), 3);
}

TEST(Formulas, GammaVertexOrbits) {
  auto o = gamma_vertex_orbits(5);
  EXPECT_EQ(o.total, 9);
  EXPECT_EQ(o.histogram, (SizeHistogram{{1, 5}, {2, 4}}));
  o = gamma_vertex_orbits(15);
  EXPECT_EQ(o.total, 826);
  EXPECT_EQ(o.histogram, (SizeHistogram{{1, 55}, {2, 771}}));
  o = gamma_vertex_orbits(2);
  EXPECT_EQ(o.total, 2);
  EXPECT_EQ(o.histogram, (SizeHistogram{{1, 1}, {2, 1}}));
  EXPECT_THROW(gamma_vertex_orbits(1), std::invalid_argument);
}

TEST(Formulas, GammaEdgeOrbits) {
  auto o = gamma_edge_orbits(5);
  EXPECT_EQ(o.total, 11);
  EXPECT_EQ(o.histogram, (SizeHistogram{{1, 2}, {2, 9}}));
  o = gamma_edge_orbits(14);
  EXPECT_EQ(o.total, 1985);
  EXPECT_EQ(o.histogram.count(1), 0);
  EXPECT_EQ(o.histogram.count(2), 1985);
  EXPECT_EQ(gamma_edge_orbits(0).total, 0);
}

TEST(Formulas, LambdaVertexOrbitTotal) {
  EXPECT_EQ(lambda_vertex_orbit_total(5), 3);
  EXPECT_EQ(lambda_vertex_orbit_total(12), 26);
  EXPECT_EQ(lambda_vertex_orbit_total(18), 209);
  EXPECT_THROW(lambda_vertex_orbit_total(0), std::invalid_argument);
}

TEST(Formulas, Necklaces) {
  EXPECT_EQ(necklace_count(2), 2);
  EXPECT_EQ(necklace_count(5), 3);
  EXPECT_EQ(necklace_count(1), 1);
  EXPECT_THROW(necklace_count(0), std::invalid_argument);
}

TEST(Formulas, LucasStringClasses) {
  auto c = lucas_string_classes(9);
  EXPECT_EQ(c.primitive, 72);
  EXPECT_EQ(c.primitive_symmetric, 54);
  EXPECT_EQ(c.asymmetric, 18);
  c = lucas_string_classes(12);
  EXPECT_EQ(c.primitive, 300);
  EXPECT_EQ(c.primitive_symmetric, 180);
  EXPECT_EQ(c.asymmetric, 120);
  c = lucas_string_classes(8);
  EXPECT_EQ(c.primitive, 40);
  EXPECT_EQ(c.primitive_symmetric, 40);
  EXPECT_EQ(c.asymmetric, 0);
  EXPECT_THROW(lucas_string_classes(0), std::invalid_argument);
}

TEST(Formulas, LambdaVertexOrbitSizes) {
  EXPECT_EQ(lambda_vertex_orbit_size_set(9), (std::set<std::uint64_t>{1, 3, 9, 18}));
  EXPECT_EQ(lambda_vertex_orbit_size_set(6), (std::set<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(lambda_vertex_orbit_size_set(12), (std::set<std::uint64_t>{1, 2, 3, 4, 6, 12, 24}));

  EXPECT_EQ(lambda_vertex_orbit_count(9, 9), 6);
  EXPECT_EQ(lambda_vertex_orbit_count(9, 18), 1);
  EXPECT_EQ(lambda_vertex_orbit_count(9, 6), 0);
  EXPECT_EQ(lambda_vertex_orbit_count(9, 4), 0);

  EXPECT_EQ(lambda_vertex_orbit_histogram(9), (SizeHistogram{{1, 1}, {3, 1}, {9, 6}, {18, 1}}));
  EXPECT_EQ(lambda_vertex_orbit_histogram(12),
            (SizeHistogram{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 2}, {12, 15}, {24, 5}}));
  EXPECT_EQ(lambda_vertex_orbit_histogram(6), (SizeHistogram{{1, 1}, {2, 1}, {3, 1}, {6, 2}}));
}

TEST(Formulas, LambdaEdgeOrbits) {
  auto o = lambda_edge_orbits(9);
  EXPECT_EQ(o.total, 12);
  EXPECT_EQ(o.histogram, (SizeHistogram{{9, 3}, {18, 9}}));
  o = lambda_edge_orbits(4);
  EXPECT_EQ(o.total, 2);
  EXPECT_EQ(o.histogram.count(4), 2);
  EXPECT_EQ(o.histogram.count(8), 0);
  o = lambda_edge_orbits(16);
  EXPECT_EQ(o.total, 322);
  EXPECT_EQ(o.histogram, (SizeHistogram{{16, 34}, {32, 288}}));
  EXPECT_EQ(lambda_edge_orbits(1).total, 0);
  EXPECT_EQ(lambda_edge_orbits(3).histogram, (SizeHistogram{{3, 1}}));
}

TEST(FormulaIdentities, HistogramsAddUp) {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    const auto gv = gamma_vertex_orbits(n);
    EXPECT_EQ(gv.histogram.element_total(), fib(static_cast<long long>(n) + 2));
    EXPECT_EQ(gv.histogram.orbit_total(), gv.total);
    const auto lv = lambda_vertex_orbit_histogram(n);
    EXPECT_EQ(lv.element_total(), lucas(static_cast<long long>(n)));
    EXPECT_EQ(lv.orbit_total(), lambda_vertex_orbit_total(n));
    const auto le = lambda_edge_orbits(n);
    EXPECT_EQ(le.histogram.element_total(), graph_counts(n, Cube::Lambda).edges);
    if (n >= 5) EXPECT_EQ(le.total, gamma_vertex_orbits(n - 3).total);
  }
}

TEST(FormulaIdentities, PrimitiveCountsSumToLucas) {
  for (std::uint64_t n = 1; n <= 150; ++n) {
    ExactInt sum = 0;
    for (auto d : divisors(n)) sum += lucas_string_classes(d).primitive;
    EXPECT_EQ(sum, lucas(static_cast<long long>(n))) << n;
  }
}

}  // namespace
}  // namespace cube_orbits::formulas
