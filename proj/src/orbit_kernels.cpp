#include "cube_orbits/orbit_kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <numeric>
#include <stdexcept>

#ifdef CUBE_ORBITS_HAVE_OPENMP
#define CUBE_ORBITS_OMP(directive) _Pragma(#directive)
#else
#define CUBE_ORBITS_OMP(directive)
#endif

namespace cube_orbits::oracle {

namespace {

using Index = std::ptrdiff_t;

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Roots are always the smaller index, so the root of a component is its minimum.
void unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return;
  if (a < b)
    parent[b] = a;
  else
    parent[a] = b;
}

struct StringClass {
  bool primitive = false;
  bool asymmetric = false;
};

StringClass classify(const CubeString& u) {
  StringClass c;
  c.primitive = period(u) == u.size();
  c.asymmetric = dihedral_orbit(u).size() == 2 * u.size();
  return c;
}

std::uint64_t reflection_fixed_count(const CubeString& u) {
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (apply(DihedralElement::reflection(j), u) == u) ++count;
  return count;
}

void require_uniform_length(std::span<const CubeString> strings) {
  for (const auto& s : strings)
    if (s.size() != strings.front().size() || s.empty())
      throw std::invalid_argument("oracle kernels: strings must be nonempty and of one length");
}

}  // namespace

Permutation identity_permutation(std::size_t size) {
  Permutation p(size);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation vertex_permutation(const CubeGraph& g, const DihedralElement& elem, Execution exec) {
  const auto verts = g.vertices();
  Permutation p(verts.size());
  std::atomic<bool> escaped{false};
  auto body = [&](Index i) {
    const auto image = g.find_vertex(apply(elem, verts[static_cast<std::size_t>(i)]));
    if (!image) {
      escaped.store(true, std::memory_order_relaxed);
      return;
    }
    p[static_cast<std::size_t>(i)] = *image;
  };
  const Index count = static_cast<Index>(verts.size());
  if (exec == Execution::Parallel) {
    CUBE_ORBITS_OMP(omp parallel for schedule(static))
    for (Index i = 0; i < count; ++i) body(i);
  } else {
    for (Index i = 0; i < count; ++i) body(i);
  }
  if (escaped) throw std::invalid_argument("vertex_permutation: dihedral map leaves the vertex set");
  return p;
}

Permutation edge_permutation(const CubeGraph& g, const Permutation& vertex_perm, Execution exec) {
  const auto edges = g.edges();
  if (vertex_perm.size() != g.vertices().size())
    throw std::invalid_argument("edge_permutation: vertex permutation has the wrong size");
  Permutation p(edges.size());
  std::atomic<bool> broken{false};
  auto body = [&](Index i) {
    const Edge& e = edges[static_cast<std::size_t>(i)];
    const auto image = g.find_edge(vertex_perm[e.a], vertex_perm[e.b]);
    if (!image) {
      broken.store(true, std::memory_order_relaxed);
      return;
    }
    p[static_cast<std::size_t>(i)] = *image;
  };
  const Index count = static_cast<Index>(edges.size());
  if (exec == Execution::Parallel) {
    CUBE_ORBITS_OMP(omp parallel for schedule(static))
    for (Index i = 0; i < count; ++i) body(i);
  } else {
    for (Index i = 0; i < count; ++i) body(i);
  }
  if (broken) throw std::invalid_argument("edge_permutation: vertex map is not an automorphism");
  return p;
}

std::vector<std::uint32_t> orbit_labels(std::span<const Permutation> maps, std::size_t ground_size,
                                        Execution exec) {
  for (const auto& m : maps)
    if (m.size() != ground_size) throw std::invalid_argument("orbit_labels: permutation has the wrong size");

  if (exec == Execution::Serial) {
    std::vector<std::uint32_t> parent = identity_permutation(ground_size);
    for (const auto& m : maps)
      for (std::uint32_t x = 0; x < ground_size; ++x) unite(parent, x, m[x]);
    for (std::uint32_t x = 0; x < ground_size; ++x) parent[x] = find_root(parent, x);
    return parent;
  }

  std::vector<std::uint32_t> labels = identity_permutation(ground_size);
  const Index count = static_cast<Index>(ground_size);
  CUBE_ORBITS_OMP(omp parallel for schedule(static))
  for (Index i = 0; i < count; ++i) {
    std::uint32_t least = static_cast<std::uint32_t>(i);
    for (const auto& m : maps) least = std::min(least, m[static_cast<std::size_t>(i)]);
    labels[static_cast<std::size_t>(i)] = least;
  }
  return labels;
}

StringClassCounts classify_strings(std::span<const CubeString> strings, Execution exec) {
  if (strings.empty()) return {};
  require_uniform_length(strings);
  const Index count = static_cast<Index>(strings.size());
  std::uint64_t primitive = 0;
  std::uint64_t prim_sym = 0;
  std::uint64_t asym = 0;
  auto body = [&](Index i, std::uint64_t& p, std::uint64_t& s, std::uint64_t& a) {
    const StringClass c = classify(strings[static_cast<std::size_t>(i)]);
    p += c.primitive;
    s += c.primitive && !c.asymmetric;
    a += c.asymmetric;
  };
  if (exec == Execution::Parallel) {
    CUBE_ORBITS_OMP(omp parallel for schedule(dynamic, 256) reduction(+ : primitive, prim_sym, asym))
    for (Index i = 0; i < count; ++i) body(i, primitive, prim_sym, asym);
  } else {
    for (Index i = 0; i < count; ++i) body(i, primitive, prim_sym, asym);
  }
  return {primitive, prim_sym, asym};
}

std::uint64_t reflection_fixed_point_total(std::span<const CubeString> strings, Execution exec) {
  if (strings.empty()) return 0;
  require_uniform_length(strings);
  const Index count = static_cast<Index>(strings.size());
  std::uint64_t total = 0;
  if (exec == Execution::Parallel) {
    CUBE_ORBITS_OMP(omp parallel for schedule(static) reduction(+ : total))
    for (Index i = 0; i < count; ++i) total += reflection_fixed_count(strings[static_cast<std::size_t>(i)]);
  } else {
    for (Index i = 0; i < count; ++i) total += reflection_fixed_count(strings[static_cast<std::size_t>(i)]);
  }
  return total;
}

}  // namespace cube_orbits::oracle
