#include "cube_orbits/bijections.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "cube_orbits/oracle.hpp"

namespace cube_orbits::bijections {

std::size_t Tiling::width() const noexcept {
  std::size_t w = 0;
  for (Piece p : pieces) w += p == Piece::Vertical ? 1 : 2;
  return w;
}

std::string Tiling::to_string() const {
  std::string s;
  for (Piece p : pieces) s += p == Piece::Vertical ? 'V' : 'H';
  return s;
}

Tiling Tiling::parse(std::string_view text) {
  Tiling t;
  for (char c : text) {
    if (c == 'V')
      t.pieces.push_back(Piece::Vertical);
    else if (c == 'H')
      t.pieces.push_back(Piece::HorizontalPair);
    else
      throw std::invalid_argument("Tiling::parse: expected only 'V' and 'H'");
  }
  return t;
}

Tiling string_to_tiling(const CubeString& u) {
  if (!is_fibonacci(u)) throw std::invalid_argument("string_to_tiling: " + u.to_display() + " is not a Fibonacci string");
  const CubeString v = u.concat(CubeString::zeros(1));
  Tiling t;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.at(i)) {
      t.pieces.push_back(Piece::Vertical);
    } else {
      t.pieces.push_back(Piece::HorizontalPair);
      ++i;  // the 0 following every 1
    }
  }
  return t;
}

CubeString tiling_to_string(const Tiling& t) {
  if (t.pieces.empty()) throw std::invalid_argument("tiling_to_string: empty tiling");
  CubeString v;
  for (Piece p : t.pieces) v = v.concat(CubeString::parse(p == Piece::Vertical ? "0" : "10"));
  if (v.at(v.size() - 1)) throw std::invalid_argument("tiling_to_string: code does not end in 0");
  return v.substr(0, v.size() - 1);
}

Tiling reflect(const Tiling& t) { return {{t.pieces.rbegin(), t.pieces.rend()}}; }

std::vector<Tiling> all_tilings(std::size_t width) {
  std::vector<Tiling> out;
  Tiling current;
  std::function<void(std::size_t)> grow = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    current.pieces.push_back(Piece::Vertical);
    grow(remaining - 1);
    current.pieces.pop_back();
    if (remaining >= 2) {
      current.pieces.push_back(Piece::HorizontalPair);
      grow(remaining - 2);
      current.pieces.pop_back();
    }
  };
  grow(width);
  return out;
}

namespace {

using Cell = std::pair<int, int>;  // (row, column)
using Domino = std::pair<Cell, Cell>;
using Layout = std::vector<Domino>;
using CellMap = std::function<Cell(Cell)>;

Layout layout_of(const Tiling& t) {
  Layout dominoes;
  int col = 0;
  for (Piece p : t.pieces) {
    if (p == Piece::Vertical) {
      dominoes.push_back({{0, col}, {1, col}});
      col += 1;
    } else {
      dominoes.push_back({{0, col}, {0, col + 1}});
      dominoes.push_back({{1, col}, {1, col + 1}});
      col += 2;
    }
  }
  return dominoes;
}

Layout transformed(const Layout& layout, const CellMap& map) {
  Layout out;
  for (const auto& [a, b] : layout) {
    Cell x = map(a);
    Cell y = map(b);
    if (y < x) std::swap(x, y);
    out.push_back({x, y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Symmetries of the 2 x m rectangle acting on cell coordinates.
std::vector<CellMap> rectangle_symmetries(int m) {
  std::vector<CellMap> maps = {
      [](Cell c) { return c; },
      [m](Cell c) { return Cell{c.first, m - 1 - c.second}; },
      [](Cell c) { return Cell{1 - c.first, c.second}; },
      [m](Cell c) { return Cell{1 - c.first, m - 1 - c.second}; },
  };
  if (m == 2) {
    maps.push_back([](Cell c) { return Cell{c.second, 1 - c.first}; });
    maps.push_back([](Cell c) { return Cell{1 - c.second, c.first}; });
    maps.push_back([](Cell c) { return Cell{c.second, c.first}; });
    maps.push_back([](Cell c) { return Cell{1 - c.second, 1 - c.first}; });
  }
  return maps;
}

void compositions(std::size_t remaining, std::vector<int>& current, std::set<std::vector<int>>& classes) {
  if (remaining == 0) {
    std::vector<int> reversed(current.rbegin(), current.rend());
    classes.insert(std::min(current, reversed));
    return;
  }
  for (int part : {1, 2}) {
    if (static_cast<std::size_t>(part) > remaining) continue;
    current.push_back(part);
    compositions(remaining - static_cast<std::size_t>(part), current, classes);
    current.pop_back();
  }
}

}  // namespace

ExactInt distinct_tilings(std::size_t m) {
  if (m < 2) throw std::invalid_argument("distinct_tilings: width must be >= 2");
  const auto symmetries = rectangle_symmetries(static_cast<int>(m));
  std::set<Layout> classes;
  for (const Tiling& t : all_tilings(m)) {
    const Layout base = layout_of(t);
    Layout best = transformed(base, symmetries.front());
    for (const auto& s : symmetries) best = std::min(best, transformed(base, s));
    classes.insert(std::move(best));
  }
  return classes.size();
}

ExactInt distinct_partitions(std::size_t m) {
  if (m < 1) throw std::invalid_argument("distinct_partitions: m must be >= 1");
  std::set<std::vector<int>> classes;
  std::vector<int> current;
  compositions(m, current, classes);
  return classes.size();
}

CubeString lambda_edge_to_gamma_vertex(const CubeString& u, const CubeString& v) {
  const std::size_t n = u.size();
  if (n < 5) throw std::invalid_argument("lambda_edge_to_gamma_vertex: requires n >= 5");
  if (v.size() != n || !is_lucas(u) || !is_lucas(v) || __builtin_popcountll(u.word() ^ v.word()) != 1)
    throw std::invalid_argument("lambda_edge_to_gamma_vertex: {" + u.to_display() + "," + v.to_display() +
                                "} is not an edge of the Lucas cube");
  std::size_t i = 0;
  while (u.at(i) == v.at(i)) ++i;
  const CubeString& top = u.at(i) ? u : v;
  CubeString out;
  for (std::size_t t = 0; t + 3 < n; ++t) out = out.concat(top.substr((i + 2 + t) % n, 1));
  return out;
}

EdgeOrbitBijectionReport verify_edge_orbit_bijection(std::size_t n) {
  if (n < 5 || n > 18) throw std::invalid_argument("verify_edge_orbit_bijection: n must lie in [5, 18]");
  const auto lambda = oracle::CubeGraph::build(n, Cube::Lambda);
  const auto gamma = oracle::CubeGraph::build(n - 3, Cube::Gamma);
  const auto edge_partition = oracle::edge_orbits(lambda);
  const auto vertex_partition = oracle::vertex_orbits(gamma);

  auto gamma_key = [](const CubeString& w) { return std::min(w, reverse(w)); };

  EdgeOrbitBijectionReport report;
  report.lambda_edge_orbits = edge_partition.orbits.size();
  report.gamma_vertex_orbits = vertex_partition.orbits.size();
  report.well_defined = true;

  const auto verts = lambda.vertices();
  std::set<CubeString> images;
  std::size_t image_count = 0;
  for (const auto& orbit : edge_partition.orbits) {
    std::set<CubeString> keys;
    for (std::uint32_t e : orbit.members) {
      const auto& edge = lambda.edges()[e];
      keys.insert(gamma_key(lambda_edge_to_gamma_vertex(verts[edge.a], verts[edge.b])));
    }
    if (keys.size() != 1) report.well_defined = false;
    images.insert(keys.begin(), keys.end());
    ++image_count;
  }
  report.injective = report.well_defined && images.size() == image_count;

  std::set<CubeString> gamma_classes;
  for (const auto& w : gamma.vertices()) gamma_classes.insert(gamma_key(w));
  report.surjective = images == gamma_classes && gamma_classes.size() == report.gamma_vertex_orbits;
  return report;
}

}  // namespace cube_orbits::bijections
