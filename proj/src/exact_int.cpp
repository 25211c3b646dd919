#include "cube_orbits/exact_int.hpp"

#include <sstream>
#include <stdexcept>

namespace cube_orbits {

ExactInt exact_div(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  ExactInt q;
  ExactInt r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0)
    throw std::logic_error("exact_div: " + numerator.str() + " is not divisible by " + denominator.str());
  return q;
}

ExactInt SizeHistogram::count(std::uint64_t size) const {
  auto it = counts_.find(size);
  return it == counts_.end() ? ExactInt{0} : it->second;
}

ExactInt SizeHistogram::orbit_total() const {
  ExactInt total = 0;
  for (const auto& [size, c] : counts_) total += c;
  return total;
}

ExactInt SizeHistogram::element_total() const {
  ExactInt total = 0;
  for (const auto& [size, c] : counts_) total += c * size;
  return total;
}

std::set<std::uint64_t> SizeHistogram::support() const {
  std::set<std::uint64_t> out;
  for (const auto& [size, c] : counts_)
    if (c != 0) out.insert(size);
  return out;
}

bool operator==(const SizeHistogram& a, const SizeHistogram& b) {
  auto nonzero = [](const SizeHistogram& h) {
    SizeHistogram::Map m;
    for (const auto& [size, c] : h.counts_)
      if (c != 0) m.emplace(size, c);
    return m;
  };
  return nonzero(a) == nonzero(b);
}

std::string SizeHistogram::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [size, c] : counts_) {
    if (!first) os << ", ";
    first = false;
    os << size << ": " << c;
  }
  os << '}';
  return os.str();
}

}  // namespace cube_orbits
