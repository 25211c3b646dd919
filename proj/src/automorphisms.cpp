#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "cube_orbits/oracle.hpp"

namespace cube_orbits::oracle {

namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

// Degree plus the sorted degrees of the neighbours; automorphisms preserve it.
std::vector<std::vector<std::size_t>> vertex_signatures(const CubeGraph& g) {
  const std::size_t count = g.vertices().size();
  std::vector<std::vector<std::size_t>> sig(count);
  for (VertexId v = 0; v < count; ++v) {
    sig[v].push_back(g.degree(v));
    for (VertexId w : g.neighbors(v)) sig[v].push_back(g.degree(w));
    std::sort(sig[v].begin() + 1, sig[v].end());
  }
  return sig;
}

// Breadth-first order from each component root, with the parent of every
// non-root vertex (kUnset for roots).
void search_order(const CubeGraph& g, std::vector<VertexId>& order, std::vector<std::uint32_t>& parent) {
  const std::size_t count = g.vertices().size();
  std::vector<bool> seen(count, false);
  parent.assign(count, kUnset);
  for (VertexId root = 0; root < count; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        q.push(w);
      }
    }
  }
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const CubeGraph& g) : g_(g), sig_(vertex_signatures(g)) {
    search_order(g, order_, parent_);
    image_.assign(order_.size(), kUnset);
    used_.assign(order_.size(), false);
  }

  std::vector<Permutation> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool consistent(VertexId v, VertexId candidate, std::size_t depth) const {
    if (used_[candidate] || sig_[v] != sig_[candidate]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const VertexId x = order_[i];
      if (g_.adjacent(v, x) != g_.adjacent(candidate, image_[x])) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.emplace_back(image_.begin(), image_.end());
      return;
    }
    const VertexId v = order_[depth];
    auto attempt = [&](VertexId c) {
      if (!consistent(v, c, depth)) return;
      image_[v] = c;
      used_[c] = true;
      extend(depth + 1);
      used_[c] = false;
      image_[v] = kUnset;
    };
    if (parent_[v] != kUnset) {
      // The image must be a neighbour of the parent's image.
      for (VertexId c : g_.neighbors(image_[parent_[v]])) attempt(c);
    } else {
      for (VertexId c = 0; c < order_.size(); ++c) attempt(c);
    }
  }

  const CubeGraph& g_;
  std::vector<std::vector<std::size_t>> sig_;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> automorphism_group(const CubeGraph& g) {
  if (g.vertices().size() > kMaxAutomorphismVertices)
    throw std::invalid_argument("automorphism_group: " + std::to_string(g.vertices().size()) +
                                " vertices exceeds the exhaustive-search bound of " +
                                std::to_string(kMaxAutomorphismVertices));
  return AutomorphismSearch(g).run();
}

}  // namespace cube_orbits::oracle
