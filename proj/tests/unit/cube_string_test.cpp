#include "cube_orbits/cube_string.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cube_orbits {
namespace {

CubeString S(const char* text) { return CubeString::parse(text); }

std::vector<std::string> as_text(const std::vector<CubeString>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

// Every binary string of every length in [1, max_len].
std::vector<CubeString> all_binary(std::size_t max_len) {
  std::vector<CubeString> out;
  for (std::size_t n = 1; n <= max_len; ++n)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) out.push_back(CubeString::from_word(w, n));
  return out;
}

TEST(CubeString, ParseAndPrint) {
  EXPECT_EQ(S("0101").to_string(), "0101");
  EXPECT_EQ(S("0101").size(), 4u);
  EXPECT_TRUE(S("1000").at(0));
  EXPECT_FALSE(S("1000").at(3));
  EXPECT_EQ(CubeString().to_string(), "");
  EXPECT_EQ(CubeString().to_display(), "ε");
  EXPECT_TRUE(S("ε").empty());
  EXPECT_THROW(S("01a"), std::invalid_argument);
}

TEST(CubeString, Validity) {
  EXPECT_TRUE(is_fibonacci(S("0101")));
  EXPECT_FALSE(is_fibonacci(S("0110")));
  EXPECT_TRUE(is_fibonacci(CubeString()));

  EXPECT_FALSE(is_lucas(S("1001")));
  EXPECT_TRUE(is_lucas(S("1010")));
  EXPECT_FALSE(is_lucas(S("1")));
  EXPECT_TRUE(is_lucas(S("0")));
  EXPECT_TRUE(is_lucas(CubeString()));
}

TEST(CubeString, Enumerate) {
  EXPECT_EQ(as_text(enumerate(3, CubeKind::Fibonacci)),
            (std::vector<std::string>{"000", "001", "010", "100", "101"}));
  EXPECT_EQ(as_text(enumerate(3, CubeKind::Lucas)), (std::vector<std::string>{"000", "001", "010", "100"}));
  const auto e0 = enumerate(0, CubeKind::Fibonacci);
  ASSERT_EQ(e0.size(), 1u);
  EXPECT_TRUE(e0[0].empty());
  EXPECT_EQ(enumerate(0, CubeKind::Lucas).size(), 1u);
  EXPECT_EQ(enumerate(1, CubeKind::Lucas).size(), 1u);

  for (std::size_t n = 0; n <= 16; ++n) {
    for (CubeKind kind : {CubeKind::Fibonacci, CubeKind::Lucas}) {
      const auto v = enumerate(n, kind);
      EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
      EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
      std::size_t brute = 0;
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
        brute += is_valid(CubeString::from_word(w, n), kind);
      EXPECT_EQ(v.size(), brute) << "n = " << n;
    }
  }
}

TEST(CubeString, ApplyExamples) {
  EXPECT_EQ(apply(DihedralElement::rotation(1), S("0101")), S("1010"));
  EXPECT_EQ(apply(DihedralElement::reflection(), S("001")), S("100"));
  EXPECT_EQ(apply(DihedralElement::reflection(2), S("10100")), S("01001"));
  EXPECT_THROW(apply(DihedralElement::identity(), CubeString()), std::invalid_argument);
}

TEST(CubeString, Weight) {
  EXPECT_EQ(weight(S("10100")), 2u);
  EXPECT_EQ(weight(CubeString::zeros(7)), 0u);
  EXPECT_EQ(weight(S("10101")), 3u);
}

TEST(CubeString, Decompose) {
  auto d = decompose(S("0101"));
  EXPECT_EQ(d.period, 2u);
  EXPECT_EQ(d.exponent, 2u);
  EXPECT_EQ(d.root, S("01"));

  d = decompose(S("0011"));
  EXPECT_EQ(d.period, 4u);
  EXPECT_EQ(d.exponent, 1u);
  EXPECT_EQ(d.root, S("0011"));

  d = decompose(S("0000"));
  EXPECT_EQ(d.period, 1u);
  EXPECT_EQ(d.exponent, 4u);
  EXPECT_EQ(d.root, S("0"));
}

TEST(CubeString, SymmetryAndOrbitSize) {
  EXPECT_TRUE(is_symmetric(S("001100")));
  EXPECT_TRUE(is_primitive(S("001100")));
  EXPECT_FALSE(is_symmetric(S("010011")));
  EXPECT_TRUE(is_symmetric(S("000000")));
  EXPECT_FALSE(is_primitive(S("000000")));

  EXPECT_EQ(orbit_size(CubeString::zeros(6)), 1u);
  EXPECT_EQ(orbit_size(S("010011")), 12u);
  EXPECT_EQ(orbit_size(S("101010")), 2u);
}

TEST(CubeString, DihedralOrbitAndCanonicalRep) {
  EXPECT_EQ(as_text(dihedral_orbit(S("000"))), (std::vector<std::string>{"000"}));
  EXPECT_EQ(as_text(dihedral_orbit(S("100"))), (std::vector<std::string>{"001", "010", "100"}));
  EXPECT_EQ(as_text(dihedral_orbit(S("0011"))), (std::vector<std::string>{"0011", "0110", "1001", "1100"}));

  EXPECT_EQ(canonical_rep(S("100")), S("001"));
  EXPECT_EQ(canonical_rep(S("010011")), S("001011"));
  EXPECT_EQ(canonical_rep(CubeString::zeros(5)), CubeString::zeros(5));
}

TEST(CubeString, Witnesses) {
  EXPECT_EQ(asymmetric_witness(9), S("101001000"));
  EXPECT_EQ(asymmetric_witness(10), S("1010010000"));
  try {
    asymmetric_witness(8);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "no asymmetric Lucas string exists for n < 9");
  }

  EXPECT_EQ(vertex_orbit_witness(6, 3), S("100100"));
  EXPECT_EQ(vertex_orbit_witness(9, 18), S("101001000"));
  EXPECT_THROW(vertex_orbit_witness(9, 2), std::invalid_argument);

  for (std::size_t n = 3; n <= 24; ++n) {
    for (std::size_t k = 1; k <= 2 * n; ++k) {
      const bool possible = n % k == 0 || (2 * n % k == 0 && k >= 18);
      if (!possible) {
        EXPECT_THROW(vertex_orbit_witness(n, k), std::invalid_argument) << n << ' ' << k;
        continue;
      }
      const auto w = vertex_orbit_witness(n, k);
      EXPECT_TRUE(is_lucas(w));
      EXPECT_EQ(w.size(), n);
      EXPECT_EQ(dihedral_orbit(w).size(), k) << n << ' ' << k;
    }
  }
}

TEST(CubeStringProperties, GroupRelations) {
  for (const auto& u : all_binary(8)) {
    const std::size_t n = u.size();
    EXPECT_EQ(rotate(u, n), u);
    EXPECT_EQ(reverse(reverse(u)), u);
    // alpha beta = beta alpha^{-1}
    EXPECT_EQ(rotate(reverse(u), 1), reverse(rotate(u, n - 1)));
  }
}

TEST(CubeStringProperties, ComposeMatchesApply) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto group = dihedral_group(n);
    EXPECT_EQ(group.size(), 2 * n);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const auto u = CubeString::from_word(w, n);
      for (const auto& a : group) {
        EXPECT_EQ(apply(compose(inverse(a, n), a, n), u), u);
        for (const auto& b : group) EXPECT_EQ(apply(compose(a, b, n), u), apply(a, apply(b, u)));
      }
    }
  }
}

TEST(CubeStringProperties, ActionCommutesWithPowers) {
  for (const auto& u : all_binary(5)) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto uk = u.power(k);
      for (const auto& g : dihedral_group(u.size())) EXPECT_EQ(apply(g, uk), apply(g, u).power(k));
    }
  }
}

TEST(CubeStringProperties, ActionPreservesValidity) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& u : enumerate(n, CubeKind::Lucas))
      for (const auto& g : dihedral_group(n)) EXPECT_TRUE(is_lucas(apply(g, u)));
    for (const auto& u : enumerate(n, CubeKind::Fibonacci)) EXPECT_TRUE(is_fibonacci(reverse(u)));
  }
}

TEST(CubeStringProperties, DecompositionInvariants) {
  for (const auto& u : all_binary(10)) {
    const auto d = decompose(u);
    EXPECT_EQ(d.period * d.exponent, u.size());
    EXPECT_EQ(u.size() % d.period, 0u);
    EXPECT_EQ(d.root.power(d.exponent), u);
    EXPECT_TRUE(is_primitive(d.root));
    EXPECT_EQ(orbit_size(u), dihedral_orbit(u).size()) << u.to_string();
    EXPECT_EQ(canonical_rep(u), dihedral_orbit(u).front());
  }
}

TEST(CubeStringProperties, AsymmetricImpliesPrimitive) {
  for (const auto& u : all_binary(10))
    if (!is_symmetric(u)) EXPECT_TRUE(is_primitive(u)) << u.to_string();
}

TEST(CubeStringProperties, NoAsymmetricLucasStringsBelowNine) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& u : enumerate(n, CubeKind::Lucas)) EXPECT_TRUE(is_symmetric(u)) << u.to_string();
  std::size_t asym = 0;
  for (const auto& u : enumerate(9, CubeKind::Lucas)) asym += !is_symmetric(u);
  EXPECT_EQ(asym, 18u);
}

TEST(CubeStringProperties, SymmetricPowersOfAsymmetricRoots) {
  const auto u = asymmetric_witness(9).power(2);
  EXPECT_FALSE(is_primitive(u));
  EXPECT_EQ(decompose(u).root_symmetry, Symmetry::Asymmetric);
  EXPECT_TRUE(is_symmetric(u));
  EXPECT_EQ(orbit_size(u), 18u);
}

}  // namespace
}  // namespace cube_orbits
