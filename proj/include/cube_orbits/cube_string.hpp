#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cube_orbits {

enum class CubeKind { Fibonacci, Lucas };

/// Graph family: Gamma_n (Fibonacci cube) or Lambda_n (Lucas cube).
enum class Cube { Gamma, Lambda };

constexpr CubeKind string_kind(Cube c) noexcept {
  return c == Cube::Gamma ? CubeKind::Fibonacci : CubeKind::Lucas;
}

/// Binary string of length at most 64, packed into one machine word.
///
/// Position 0 is the leftmost character and is stored in the most
/// significant used bit, so for strings of equal length the integer order
/// of the packed word coincides with lexicographic order (0 < 1).
class CubeString {
 public:
  static constexpr std::size_t kMaxLength = 64;

  constexpr CubeString() = default;

  /// `word` holds the string with its leftmost character in bit `length-1`.
  static CubeString from_word(std::uint64_t word, std::size_t length);

  /// Parses ASCII "0"/"1"; "ε" is accepted for the empty string.
  static CubeString parse(std::string_view text);

  static CubeString zeros(std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::uint64_t word() const noexcept { return bits_; }

  /// Character at 0-based position `i`.
  bool at(std::size_t i) const noexcept { return (bits_ >> (length_ - 1 - i)) & 1u; }

  CubeString with_bit(std::size_t i, bool value) const;

  /// Concatenation `*this` followed by `other`.
  CubeString concat(const CubeString& other) const;

  /// `*this` repeated `times` times.
  CubeString power(std::size_t times) const;

  /// Characters [first, first + count).
  CubeString substr(std::size_t first, std::size_t count) const;

  /// Machine form: "" for the empty string.
  std::string to_string() const;

  /// Human form: "ε" for the empty string.
  std::string to_display() const;

  friend bool operator==(const CubeString&, const CubeString&) = default;

  /// Shorter strings order first; equal lengths compare lexicographically.
  friend std::strong_ordering operator<=>(const CubeString& a, const CubeString& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr CubeString(std::uint64_t bits, std::size_t length) : bits_(bits), length_(length) {}

  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

bool is_fibonacci(const CubeString& u) noexcept;
bool is_lucas(const CubeString& u) noexcept;
bool is_valid(const CubeString& u, CubeKind kind) noexcept;

/// Number of 1s.
std::size_t weight(const CubeString& u) noexcept;

/// All valid strings of length n in ascending lexicographic order.
std::vector<CubeString> enumerate(std::size_t n, CubeKind kind);

/// alpha^shift, or alpha^shift o beta (reverse, then rotate) when `reflected` is set.
struct DihedralElement {
  std::size_t shift = 0;
  bool reflected = false;

  static DihedralElement identity() { return {}; }
  static DihedralElement rotation(std::size_t j) { return {j, false}; }
  static DihedralElement reflection(std::size_t j = 0) { return {j, true}; }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// Group product `a o b` in D_n (apply b first).
DihedralElement compose(const DihedralElement& a, const DihedralElement& b, std::size_t n);
DihedralElement inverse(const DihedralElement& g, std::size_t n);

/// The 2n elements alpha^j, alpha^j beta for j in [0, n).
std::vector<DihedralElement> dihedral_group(std::size_t n);

/// Cyclic shift moving the last character to the front, `times` times.
CubeString rotate(const CubeString& u, std::size_t times);
CubeString reverse(const CubeString& u);

/// Throws std::invalid_argument for the empty string.
CubeString apply(const DihedralElement& g, const CubeString& u);

enum class Symmetry { Symmetric, Asymmetric };

struct PeriodDecomposition {
  std::size_t period = 0;
  std::size_t exponent = 0;
  CubeString root;
  Symmetry root_symmetry = Symmetry::Symmetric;
};

/// Least k > 0 with alpha^k(u) = u; scans divisors of |u| only.
std::size_t period(const CubeString& u);

PeriodDecomposition decompose(const CubeString& u);

/// |orbit| < 2|u|. A proper power is always symmetric; a primitive string is
/// symmetric iff its reversal is one of its rotations.
bool is_symmetric(const CubeString& u);
bool is_primitive(const CubeString& u);

/// Dihedral orbit size, from the period and the symmetry of the root.
std::size_t orbit_size(const CubeString& u);

/// Materialised orbit, sorted ascending, without duplicates.
std::vector<CubeString> dihedral_orbit(const CubeString& u);

/// Lexicographically least element of the dihedral orbit.
CubeString canonical_rep(const CubeString& u);

/// 1010010^{n-6}: a primitive, asymmetric Lucas string. Requires n >= 9.
CubeString asymmetric_witness(std::size_t n);

/// Lucas string of length n whose dihedral orbit has exactly k elements.
/// Throws std::invalid_argument unless k | n, or k | 2n with k >= 18.
CubeString vertex_orbit_witness(std::size_t n, std::size_t k);

}  // namespace cube_orbits
