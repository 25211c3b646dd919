#include "cube_orbits/bijections.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "cube_orbits/formulas.hpp"
#include "cube_orbits/number_theory.hpp"

namespace cube_orbits::bijections {
namespace {

CubeString S(const char* text) { return CubeString::parse(text); }

TEST(Tilings, StringCoding) {
  EXPECT_EQ(string_to_tiling(S("10")).to_string(), "HV");
  EXPECT_EQ(string_to_tiling(CubeString()).to_string(), "V");
  EXPECT_EQ(string_to_tiling(S("010")).to_string(), "VHV");
  EXPECT_EQ(string_to_tiling(S("010")).width(), 4u);
  EXPECT_EQ(tiling_to_string(Tiling::parse("VHV")), S("010"));
  EXPECT_EQ(tiling_to_string(Tiling::parse("V")), CubeString());
  EXPECT_THROW(string_to_tiling(S("0110")), std::invalid_argument);
  EXPECT_EQ(tiling_to_string(Tiling::parse("VH")), S("01"));
  EXPECT_THROW(Tiling::parse("VX"), std::invalid_argument);
}

TEST(Tilings, RoundTrips) {
  for (std::size_t n = 0; n <= 14; ++n)
    for (const auto& u : enumerate(n, CubeKind::Fibonacci)) {
      EXPECT_EQ(tiling_to_string(string_to_tiling(u)), u);
      EXPECT_EQ(u.empty() || reverse(u) == u, reflect(string_to_tiling(u)) == string_to_tiling(u));
    }
  for (std::size_t m = 1; m <= 15; ++m) {
    const auto tilings = all_tilings(m);
    EXPECT_EQ(ExactInt(tilings.size()), fib(static_cast<long long>(m) + 1));
    for (const auto& t : tilings) EXPECT_EQ(string_to_tiling(tiling_to_string(t)), t);
  }
}

TEST(Tilings, DistinctTilings) {
  EXPECT_EQ(distinct_tilings(2), 1);
  EXPECT_EQ(distinct_tilings(4), 4);
  EXPECT_EQ(distinct_tilings(8), 21);
  EXPECT_THROW(distinct_tilings(1), std::invalid_argument);
  for (std::size_t m = 3; m <= 16; ++m) EXPECT_EQ(distinct_tilings(m), formulas::gamma_vertex_orbits(m - 1).total);
}

TEST(Partitions, DistinctPartitions) {
  EXPECT_EQ(distinct_partitions(4), 4);
  EXPECT_EQ(distinct_partitions(1), 1);
  EXPECT_EQ(distinct_partitions(6), 9);
  const int expected[] = {1, 2, 2, 4, 5, 9, 12, 21};
  for (std::size_t m = 1; m <= 8; ++m) EXPECT_EQ(distinct_partitions(m), expected[m - 1]);
  EXPECT_THROW(distinct_partitions(0), std::invalid_argument);
}

TEST(EdgeMap, Examples) {
  EXPECT_EQ(lambda_edge_to_gamma_vertex(S("01000"), S("00000")), S("00"));
  EXPECT_EQ(lambda_edge_to_gamma_vertex(S("010001"), S("000001")), S("001"));
  EXPECT_EQ(lambda_edge_to_gamma_vertex(S("10000"), S("10100")), S("01"));
  EXPECT_THROW(lambda_edge_to_gamma_vertex(S("0100"), S("0000")), std::invalid_argument);
  EXPECT_THROW(lambda_edge_to_gamma_vertex(S("01000"), S("00010")), std::invalid_argument);
}

TEST(EdgeMap, OrbitBijection) {
  auto r = verify_edge_orbit_bijection(9);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lambda_edge_orbits, 12u);
  EXPECT_EQ(r.gamma_vertex_orbits, 12u);

  r = verify_edge_orbit_bijection(5);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lambda_edge_orbits, 2u);

  r = verify_edge_orbit_bijection(16);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lambda_edge_orbits, 322u);
  EXPECT_EQ(r.gamma_vertex_orbits, 322u);

  EXPECT_THROW(verify_edge_orbit_bijection(4), std::invalid_argument);
  EXPECT_THROW(verify_edge_orbit_bijection(19), std::invalid_argument);
}

}  // namespace
}  // namespace cube_orbits::bijections
