#include "cube_orbits/oracle.hpp"

#include <map>
#include <stdexcept>

namespace cube_orbits::oracle {

std::vector<Permutation> acting_group(const CubeGraph& g, Execution exec) {
  const std::size_t n = g.dimension();
  if (g.kind() == Cube::Gamma && n >= 2)
    return {identity_permutation(g.vertices().size()), vertex_permutation(g, DihedralElement::reflection(), exec)};
  if (g.kind() == Cube::Lambda && n >= 3) {
    std::vector<Permutation> out;
    for (const auto& elem : dihedral_group(n)) out.push_back(vertex_permutation(g, elem, exec));
    return out;
  }
  return automorphism_group(g);
}

OrbitPartition partition_from_labels(const std::vector<std::uint32_t>& labels, Ground ground) {
  OrbitPartition p{ground, {}};
  std::map<std::uint32_t, std::size_t> slot;
  for (std::uint32_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = slot.try_emplace(labels[x], p.orbits.size());
    if (inserted) p.orbits.push_back({labels[x], {}});
    p.orbits[it->second].members.push_back(x);
  }
  return p;
}

OrbitPartition vertex_orbits(const CubeGraph& g, Execution exec) {
  const auto group = acting_group(g, exec);
  return partition_from_labels(orbit_labels(group, g.vertices().size(), exec), Ground::Vertices);
}

OrbitPartition edge_orbits(const CubeGraph& g, Execution exec) {
  std::vector<Permutation> induced;
  for (const auto& p : acting_group(g, exec)) induced.push_back(edge_permutation(g, p, exec));
  return partition_from_labels(orbit_labels(induced, g.edges().size(), exec), Ground::Edges);
}

SizeHistogram histogram(const OrbitPartition& p) {
  SizeHistogram h;
  for (const auto& o : p.orbits) h.add(o.size());
  return h;
}

std::vector<std::uint32_t> fixed_points(const DihedralElement& elem, const CubeGraph& g, Ground ground) {
  if (g.dimension() == 0) throw std::invalid_argument("fixed_points: no dihedral action on length-0 strings");
  const auto verts = g.vertices();
  std::vector<std::uint32_t> out;
  if (ground == Ground::Vertices) {
    for (std::uint32_t i = 0; i < verts.size(); ++i)
      if (apply(elem, verts[i]) == verts[i]) out.push_back(i);
    return out;
  }
  const auto edges = g.edges();
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const CubeString& u = verts[edges[i].a];
    const CubeString& v = verts[edges[i].b];
    const CubeString gu = apply(elem, u);
    const CubeString gv = apply(elem, v);
    if ((gu == u && gv == v) || (gu == v && gv == u)) out.push_back(i);
  }
  return out;
}

std::string element_label(const CubeGraph& g, Ground ground, std::uint32_t index) {
  const auto verts = g.vertices();
  if (ground == Ground::Vertices) return verts[index].to_display();
  const Edge& e = g.edges()[index];
  return "{" + verts[e.a].to_display() + "," + verts[e.b].to_display() + "}";
}

std::optional<DihedralElement> as_dihedral(const Permutation& perm, const CubeGraph& g) {
  const std::size_t n = g.dimension();
  if (n == 0 || perm.size() != g.vertices().size()) return std::nullopt;
  const auto verts = g.vertices();
  for (const auto& elem : dihedral_group(n)) {
    bool match = true;
    for (std::size_t i = 0; i < verts.size() && match; ++i) match = apply(elem, verts[i]) == verts[perm[i]];
    if (match) return elem;
  }
  return std::nullopt;
}

bool preserves_weight(const Permutation& perm, const CubeGraph& g) {
  const auto verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (weight(verts[i]) != weight(verts[perm[i]])) return false;
  return true;
}

}  // namespace cube_orbits::oracle
