#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cube_orbits {

/// Arbitrary-precision signed integer used for every count.
using ExactInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const ExactInt& x) { return x.str(); }

/// Quotient of an exact division; throws std::logic_error on a nonzero remainder.
ExactInt exact_div(const ExactInt& numerator, const ExactInt& denominator);

/// Number of orbits of each size. Absent keys count as zero.
class SizeHistogram {
 public:
  using Map = std::map<std::uint64_t, ExactInt>;

  SizeHistogram() = default;
  SizeHistogram(std::initializer_list<Map::value_type> init) : counts_(init) {}

  /// Adds `count` orbits of size `size`; the key is kept even when count is zero.
  void add(std::uint64_t size, const ExactInt& count = 1) { counts_[size] += count; }

  ExactInt count(std::uint64_t size) const;

  /// Sum of count(k): the number of orbits.
  ExactInt orbit_total() const;

  /// Sum of k * count(k): the number of underlying elements.
  ExactInt element_total() const;

  /// Sizes with a nonzero count.
  std::set<std::uint64_t> support() const;

  const Map& entries() const noexcept { return counts_; }

  /// Equality up to explicit zero entries.
  friend bool operator==(const SizeHistogram& a, const SizeHistogram& b);

  std::string to_string() const;

 private:
  Map counts_;
};

}  // namespace cube_orbits
