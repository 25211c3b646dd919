#include "cube_orbits/cube_string.hpp"

#include <algorithm>
#include <stdexcept>

namespace cube_orbits {

namespace {

constexpr std::uint64_t mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t reverse_word(std::uint64_t w) noexcept {
  w = ((w >> 1) & 0x5555555555555555ULL) | ((w & 0x5555555555555555ULL) << 1);
  w = ((w >> 2) & 0x3333333333333333ULL) | ((w & 0x3333333333333333ULL) << 2);
  w = ((w >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((w & 0x0F0F0F0F0F0F0F0FULL) << 4);
  w = ((w >> 8) & 0x00FF00FF00FF00FFULL) | ((w & 0x00FF00FF00FF00FFULL) << 8);
  w = ((w >> 16) & 0x0000FFFF0000FFFFULL) | ((w & 0x0000FFFF0000FFFFULL) << 16);
  return (w >> 32) | (w << 32);
}

void require_nonempty(const CubeString& u, const char* what) {
  if (u.empty()) throw std::invalid_argument(std::string(what) + ": empty string has no dihedral action");
}

void fibonacci_strings(std::size_t n, std::size_t pos, std::uint64_t prefix, bool last_one,
                       std::vector<CubeString>& out) {
  if (pos == n) {
    out.push_back(CubeString::from_word(prefix, n));
    return;
  }
  fibonacci_strings(n, pos + 1, prefix << 1, false, out);
  if (!last_one) fibonacci_strings(n, pos + 1, (prefix << 1) | 1u, true, out);
}

}  // namespace

CubeString CubeString::from_word(std::uint64_t word, std::size_t length) {
  if (length > kMaxLength) throw std::length_error("CubeString: length exceeds 64");
  if ((word & ~mask(length)) != 0) throw std::invalid_argument("CubeString: word has bits beyond length");
  return CubeString(word, length);
}

CubeString CubeString::parse(std::string_view text) {
  if (text == "ε") return {};
  if (text.size() > kMaxLength) throw std::length_error("CubeString: length exceeds 64");
  std::uint64_t w = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("CubeString: expected only '0' and '1' in \"" + std::string(text) + "\"");
    w = (w << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return CubeString(w, text.size());
}

CubeString CubeString::zeros(std::size_t length) { return from_word(0, length); }

CubeString CubeString::with_bit(std::size_t i, bool value) const {
  if (i >= length_) throw std::out_of_range("CubeString::with_bit");
  const std::uint64_t bit = std::uint64_t{1} << (length_ - 1 - i);
  return CubeString(value ? (bits_ | bit) : (bits_ & ~bit), length_);
}

CubeString CubeString::concat(const CubeString& other) const {
  if (length_ + other.length_ > kMaxLength) throw std::length_error("CubeString: length exceeds 64");
  const std::uint64_t high = other.length_ >= 64 ? 0 : bits_ << other.length_;
  return CubeString(high | other.bits_, length_ + other.length_);
}

CubeString CubeString::power(std::size_t times) const {
  CubeString out;
  for (std::size_t i = 0; i < times; ++i) out = out.concat(*this);
  return out;
}

CubeString CubeString::substr(std::size_t first, std::size_t count) const {
  if (first + count > length_) throw std::out_of_range("CubeString::substr");
  if (count == 0) return {};
  return CubeString((bits_ >> (length_ - first - count)) & mask(count), count);
}

std::string CubeString::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (at(i)) s[i] = '1';
  return s;
}

std::string CubeString::to_display() const { return empty() ? std::string("ε") : to_string(); }

bool is_fibonacci(const CubeString& u) noexcept { return (u.word() & (u.word() >> 1)) == 0; }

bool is_lucas(const CubeString& u) noexcept {
  if (!is_fibonacci(u)) return false;
  return u.empty() || !(u.at(0) && u.at(u.size() - 1));
}

bool is_valid(const CubeString& u, CubeKind kind) noexcept {
  return kind == CubeKind::Fibonacci ? is_fibonacci(u) : is_lucas(u);
}

std::size_t weight(const CubeString& u) noexcept { return static_cast<std::size_t>(__builtin_popcountll(u.word())); }

std::vector<CubeString> enumerate(std::size_t n, CubeKind kind) {
  if (n > CubeString::kMaxLength) throw std::length_error("enumerate: length exceeds 64");
  std::vector<CubeString> out;
  fibonacci_strings(n, 0, 0, false, out);
  if (kind == CubeKind::Lucas) std::erase_if(out, [](const CubeString& u) { return !is_lucas(u); });
  return out;
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("compose: D_0 is not defined");
  // beta alpha^t = alpha^{-t} beta
  const std::size_t t = b.shift % n;
  const std::size_t shift = a.reflected ? (a.shift % n + n - t) % n : (a.shift % n + t) % n;
  return {shift, a.reflected != b.reflected};
}

DihedralElement inverse(const DihedralElement& g, std::size_t n) {
  if (n == 0) throw std::invalid_argument("inverse: D_0 is not defined");
  if (g.reflected) return {g.shift % n, true};
  return {(n - g.shift % n) % n, false};
}

std::vector<DihedralElement> dihedral_group(std::size_t n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(DihedralElement::rotation(j));
  for (std::size_t j = 0; j < n; ++j) out.push_back(DihedralElement::reflection(j));
  return out;
}

CubeString rotate(const CubeString& u, std::size_t times) {
  const std::size_t n = u.size();
  if (n == 0) return u;
  const std::size_t j = times % n;
  if (j == 0) return u;
  const std::uint64_t w = u.word();
  return CubeString::from_word(((w >> j) | (w << (n - j))) & mask(n), n);
}

CubeString reverse(const CubeString& u) {
  if (u.empty()) return u;
  return CubeString::from_word(reverse_word(u.word()) >> (64 - u.size()), u.size());
}

CubeString apply(const DihedralElement& g, const CubeString& u) {
  require_nonempty(u, "apply");
  return rotate(g.reflected ? reverse(u) : u, g.shift);
}

std::size_t period(const CubeString& u) {
  require_nonempty(u, "period");
  const std::size_t n = u.size();
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0 && rotate(u, d) == u) return d;
  return n;
}

namespace {

bool reversal_is_rotation(const CubeString& u) {
  const CubeString r = reverse(u);
  for (std::size_t j = 0; j < u.size(); ++j)
    if (rotate(u, j) == r) return true;
  return false;
}

}  // namespace

PeriodDecomposition decompose(const CubeString& u) {
  PeriodDecomposition d;
  d.period = period(u);
  d.exponent = u.size() / d.period;
  d.root = u.substr(0, d.period);
  d.root_symmetry = reversal_is_rotation(d.root) ? Symmetry::Symmetric : Symmetry::Asymmetric;
  return d;
}

bool is_symmetric(const CubeString& u) {
  const PeriodDecomposition d = decompose(u);
  return d.exponent > 1 || d.root_symmetry == Symmetry::Symmetric;
}

bool is_primitive(const CubeString& u) { return period(u) == u.size(); }

std::size_t orbit_size(const CubeString& u) {
  const PeriodDecomposition d = decompose(u);
  return d.root_symmetry == Symmetry::Symmetric ? d.period : 2 * d.period;
}

std::vector<CubeString> dihedral_orbit(const CubeString& u) {
  require_nonempty(u, "dihedral_orbit");
  std::vector<CubeString> out;
  out.reserve(2 * u.size());
  for (const auto& g : dihedral_group(u.size())) out.push_back(apply(g, u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CubeString canonical_rep(const CubeString& u) {
  require_nonempty(u, "canonical_rep");
  CubeString best = u;
  for (const auto& g : dihedral_group(u.size())) best = std::min(best, apply(g, u));
  return best;
}

CubeString asymmetric_witness(std::size_t n) {
  if (n < 9) throw std::invalid_argument("no asymmetric Lucas string exists for n < 9");
  return CubeString::parse("101001").concat(CubeString::zeros(n - 6));
}

CubeString vertex_orbit_witness(std::size_t n, std::size_t k) {
  if (n < 3) throw std::invalid_argument("vertex_orbit_witness: requires n >= 3");
  if (n > CubeString::kMaxLength) throw std::length_error("vertex_orbit_witness: length exceeds 64");
  if (k == 0) throw std::invalid_argument("vertex_orbit_witness: orbit size must be positive");
  if (n % k == 0) {
    if (k == 1) return CubeString::zeros(n);
    return CubeString::parse("1").concat(CubeString::zeros(k - 1)).power(n / k);
  }
  if ((2 * n) % k == 0 && k >= 18) return asymmetric_witness(k / 2).power(2 * n / k);
  throw std::invalid_argument("no Lucas string of length " + std::to_string(n) + " has orbit size " +
                              std::to_string(k) + " (sizes are the divisors of n and the divisors k >= 18 of 2n)");
}

}  // namespace cube_orbits
