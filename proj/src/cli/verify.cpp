#include "cube_orbits/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cube_orbits/bijections.hpp"
#include "cube_orbits/formulas.hpp"
#include "cube_orbits/oracle.hpp"

namespace cube_orbits::cli {

namespace {

using namespace cube_orbits::formulas;
using oracle::CubeGraph;
using oracle::Execution;
using Failure = std::optional<std::string>;
using ll = long long;

std::string str(const SizeHistogram& h) { return h.to_string(); }

template <class T>
std::string set_str(const std::set<T>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& x : s) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

class ReportBuilder {
 public:
  explicit ReportBuilder(SuiteReport& report) : report_(report) {}

  // Runs body(n) for n = lo..hi, recording the first failure. Empty ranges are skipped.
  void range(std::string name, ll lo, ll hi, const std::function<Failure(ll)>& body) {
    if (lo > hi) return;
    CheckResult r{std::move(name), "n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", true, {}};
    for (ll n = lo; n <= hi; ++n) {
      Failure f;
      try {
        f = body(n);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      if (f) {
        r.passed = false;
        r.counterexample = "n = " + std::to_string(n) + ": " + *f;
        break;
      }
    }
    report_.checks.push_back(std::move(r));
  }

  void single(std::string name, const std::function<Failure()>& body) {
    CheckResult r{std::move(name), "-", true, {}};
    Failure f;
    try {
      f = body();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    if (f) {
      r.passed = false;
      r.counterexample = *f;
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  SuiteReport& report_;
};

std::vector<CubeString> all_binary_strings(std::size_t n) {
  std::vector<CubeString> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) out.push_back(CubeString::from_word(w, n));
  return out;
}

// ---------------------------------------------------------------------------

void formulas_suite(ll max_n, ReportBuilder& b) {
  // F_{-1} .. F_{max+2} and L_0 .. L_{max+1}, by the recurrences.
  std::vector<ExactInt> F{1, 0, 1};
  while (static_cast<ll>(F.size()) < max_n + 5) F.push_back(F[F.size() - 1] + F[F.size() - 2]);
  std::vector<ExactInt> L{2, 1};
  while (static_cast<ll>(L.size()) < max_n + 3) L.push_back(L[L.size() - 1] + L[L.size() - 2]);
  auto Fi = [&](ll i) -> const ExactInt& { return F[static_cast<std::size_t>(i + 1)]; };
  auto Li = [&](ll i) -> const ExactInt& { return L[static_cast<std::size_t>(i)]; };

  b.range("recurrence tables agree with fib()/lucas()", 0, max_n, [&](ll n) -> Failure {
    if (fib(n) != Fi(n) || lucas(n) != Li(n)) return "mismatch";
    return std::nullopt;
  });
  b.range("F_{n+1} = sum_k C(n-k, k)", 0, max_n, [&](ll n) -> Failure {
    ExactInt s = 0;
    for (ll k = 0; k <= n / 2; ++k) s += binomial(static_cast<std::uint64_t>(n - k), static_cast<std::uint64_t>(k));
    if (s != Fi(n + 1)) return "sum = " + s.str();
    return std::nullopt;
  });
  b.range("L_n = sum_k n/(n-k) C(n-k, k)", 1, max_n, [&](ll n) -> Failure {
    ExactInt s = 0;
    for (ll k = 0; k <= n / 2; ++k)
      s += exact_div(n * binomial(static_cast<std::uint64_t>(n - k), static_cast<std::uint64_t>(k)), n - k);
    if (s != Li(n)) return "sum = " + s.str();
    return std::nullopt;
  });
  b.range("sum_i F_i L_{n-i} = (n+1) F_n", 0, max_n, [&](ll n) -> Failure {
    ExactInt s = 0;
    for (ll i = 0; i <= n; ++i) s += Fi(i) * Li(n - i);
    if (s != (n + 1) * Fi(n)) return "sum = " + s.str();
    return std::nullopt;
  });
  b.range("L_n = F_{n-1} + F_{n+1}", 1, max_n, [&](ll n) -> Failure {
    if (Li(n) != Fi(n - 1) + Fi(n + 1)) return "mismatch";
    return std::nullopt;
  });
  b.range("sum over d | n of primitive Lucas strings p_d = L_n", 1, max_n, [&](ll n) -> Failure {
    ExactInt s = 0;
    for (auto d : divisors(static_cast<std::uint64_t>(n))) s += lucas_string_classes(d).primitive;
    if (s != Li(n)) return "sum = " + s.str();
    return std::nullopt;
  });
  b.range("p_n = s_n + a_n; a_n = 0 iff n <= 8", 1, max_n, [&](ll n) -> Failure {
    const auto c = lucas_string_classes(static_cast<std::uint64_t>(n));
    if (c.primitive != c.primitive_symmetric + c.asymmetric) return "p != s + a";
    if ((c.asymmetric == 0) != (n <= 8) || c.asymmetric < 0) return "a_n = " + c.asymmetric.str();
    return std::nullopt;
  });
  b.range("Gamma_n vertex histogram sums to |V| and to o_V", 2, max_n, [&](ll n) -> Failure {
    const auto o = gamma_vertex_orbits(static_cast<std::uint64_t>(n));
    if (o.histogram.element_total() != Fi(n + 2) || o.histogram.orbit_total() != o.total) return str(o.histogram);
    return std::nullopt;
  });
  b.range("Gamma_n edge histogram sums to |E| and to o_E", 0, max_n, [&](ll n) -> Failure {
    const auto o = gamma_edge_orbits(static_cast<std::uint64_t>(n));
    const auto e = graph_counts(static_cast<std::uint64_t>(n), Cube::Gamma).edges;
    if (o.histogram.element_total() != e || o.histogram.orbit_total() != o.total) return str(o.histogram);
    return std::nullopt;
  });
  b.range("Lambda_n vertex histogram sums to L_n and to o_V", 1, max_n, [&](ll n) -> Failure {
    const auto h = lambda_vertex_orbit_histogram(static_cast<std::uint64_t>(n));
    if (h.element_total() != Li(n) || h.orbit_total() != lambda_vertex_orbit_total(static_cast<std::uint64_t>(n)))
      return str(h);
    return std::nullopt;
  });
  b.range("Lambda_n vertex orbit sizes = {k | n} U {k >= 18 : k | 2n}", 1, max_n, [&](ll n) -> Failure {
    const auto h = lambda_vertex_orbit_histogram(static_cast<std::uint64_t>(n));
    const auto expected = lambda_vertex_orbit_size_set(static_cast<std::uint64_t>(n));
    if (h.support() != expected) return set_str(h.support()) + " vs " + set_str(expected);
    return std::nullopt;
  });
  b.range("Lambda_n edge histogram sums to n F_{n-1}; size 2n absent iff n <= 4", 1, max_n, [&](ll n) -> Failure {
    const auto o = lambda_edge_orbits(static_cast<std::uint64_t>(n));
    if (o.histogram.element_total() != n * Fi(n - 1) || o.histogram.orbit_total() != o.total) return str(o.histogram);
    if ((o.histogram.count(static_cast<std::uint64_t>(2 * n)) == 0) != (n <= 4)) return str(o.histogram);
    return std::nullopt;
  });
  b.range("o_E(Lambda_n) = o_V(Gamma_{n-3})", 5, max_n, [&](ll n) -> Failure {
    const auto lhs = lambda_edge_orbits(static_cast<std::uint64_t>(n)).total;
    const auto rhs = gamma_vertex_orbits(static_cast<std::uint64_t>(n - 3)).total;
    if (lhs != rhs) return lhs.str() + " vs " + rhs.str();
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------

void string_checks(ll max_len, ReportBuilder& b) {
  b.range("orbit size from period and root symmetry = |dihedral orbit| (all binary strings)", 1, max_len,
          [](ll n) -> Failure {
            for (const auto& u : all_binary_strings(static_cast<std::size_t>(n)))
              if (orbit_size(u) != dihedral_orbit(u).size()) return u.to_string();
            return std::nullopt;
          });
  b.range("period divides n, equals the rotation-class size, root^exponent = u", 1, max_len, [](ll n) -> Failure {
    for (const auto& u : all_binary_strings(static_cast<std::size_t>(n))) {
      const auto d = decompose(u);
      std::set<CubeString> rotations;
      for (std::size_t j = 0; j < u.size(); ++j) rotations.insert(rotate(u, j));
      if (u.size() % d.period != 0 || d.period * d.exponent != u.size() || d.root.power(d.exponent) != u ||
          rotations.size() != d.period || period(u.power(2)) != d.period)
        return u.to_string();
    }
    return std::nullopt;
  });
  b.range("asymmetric strings are primitive", 1, max_len, [](ll n) -> Failure {
    for (const auto& u : all_binary_strings(static_cast<std::size_t>(n)))
      if (dihedral_orbit(u).size() == 2 * u.size() && !is_primitive(u)) return u.to_string();
    return std::nullopt;
  });
  b.range("primitive symmetric iff primitive and fixed by some reflection", 1, max_len, [](ll n) -> Failure {
    for (const auto& u : all_binary_strings(static_cast<std::size_t>(n))) {
      bool fixed = false;
      for (std::size_t j = 0; j < u.size(); ++j) fixed = fixed || apply(DihedralElement::reflection(j), u) == u;
      const bool lhs = is_primitive(u) && is_symmetric(u);
      if (lhs != (is_primitive(u) && fixed)) return u.to_string();
    }
    return std::nullopt;
  });
  b.range("a primitive string is fixed by at most one reflection", 1, max_len, [](ll n) -> Failure {
    for (const auto& u : all_binary_strings(static_cast<std::size_t>(n))) {
      if (!is_primitive(u)) continue;
      int fixed = 0;
      for (std::size_t j = 0; j < u.size(); ++j) fixed += apply(DihedralElement::reflection(j), u) == u;
      if (fixed > 1) return u.to_string();
    }
    return std::nullopt;
  });
  b.range("alpha^j beta fixes u iff u = xy with palindromes x, y and |x| = j", 1, std::min<ll>(max_len, 8),
          [](ll n) -> Failure {
            for (const auto& u : all_binary_strings(static_cast<std::size_t>(n))) {
              for (std::size_t j = 0; j < u.size(); ++j) {
                const CubeString x = u.substr(0, j);
                const CubeString y = u.substr(j, u.size() - j);
                const bool split = reverse(x) == x && reverse(y) == y;
                if ((apply(DihedralElement::reflection(j), u) == u) != split)
                  return u.to_string() + " j = " + std::to_string(j);
              }
            }
            return std::nullopt;
          });
}

void oracle_suite(ll max_n, ReportBuilder& b) {
  b.range("Gamma_n vertex orbits: oracle = closed form", 2, max_n, [](ll n) -> Failure {
    const auto h = oracle::histogram(oracle::vertex_orbits(CubeGraph::build(static_cast<std::size_t>(n), Cube::Gamma)));
    const auto f = gamma_vertex_orbits(static_cast<std::uint64_t>(n));
    if (h != f.histogram || h.orbit_total() != f.total) return "oracle " + str(h) + " formula " + str(f.histogram);
    return std::nullopt;
  });
  b.range("Gamma_n edge orbits: oracle = closed form", 0, max_n, [](ll n) -> Failure {
    const auto h = oracle::histogram(oracle::edge_orbits(CubeGraph::build(static_cast<std::size_t>(n), Cube::Gamma)));
    const auto f = gamma_edge_orbits(static_cast<std::uint64_t>(n));
    if (h != f.histogram || h.orbit_total() != f.total) return "oracle " + str(h) + " formula " + str(f.histogram);
    return std::nullopt;
  });
  b.range("Lambda_n vertex orbits: oracle = closed form (total and every size)", 1, max_n, [](ll n) -> Failure {
    const auto h = oracle::histogram(oracle::vertex_orbits(CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda)));
    const auto f = lambda_vertex_orbit_histogram(static_cast<std::uint64_t>(n));
    if (h != f || h.orbit_total() != lambda_vertex_orbit_total(static_cast<std::uint64_t>(n)))
      return "oracle " + str(h) + " formula " + str(f);
    return std::nullopt;
  });
  b.range("Lambda_n vertex orbit sizes observed = {k | n} U {k >= 18 : k | 2n}", 1, max_n, [](ll n) -> Failure {
    const auto h = oracle::histogram(oracle::vertex_orbits(CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda)));
    const auto expected = lambda_vertex_orbit_size_set(static_cast<std::uint64_t>(n));
    if (h.support() != expected) return set_str(h.support()) + " vs " + set_str(expected);
    return std::nullopt;
  });
  b.range("Lambda_n edge orbits: oracle = closed form", 1, max_n, [](ll n) -> Failure {
    const auto h = oracle::histogram(oracle::edge_orbits(CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda)));
    const auto f = lambda_edge_orbits(static_cast<std::uint64_t>(n));
    if (h != f.histogram || h.orbit_total() != f.total) return "oracle " + str(h) + " formula " + str(f.histogram);
    return std::nullopt;
  });
  b.range("Lambda_n edge orbit sizes within {n, 2n}, both present iff n >= 5", 1, max_n, [](ll n) -> Failure {
    const auto h = oracle::histogram(oracle::edge_orbits(CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda)));
    const std::set<std::uint64_t> both{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(2 * n)};
    const auto s = h.support();
    if (!std::includes(both.begin(), both.end(), s.begin(), s.end()) || ((s == both) != (n >= 5))) return set_str(s);
    return std::nullopt;
  });
  b.range("primitive / primitive symmetric / asymmetric Lucas strings: exhaustive = closed form", 1, max_n,
          [](ll n) -> Failure {
            const auto verts = enumerate(static_cast<std::size_t>(n), CubeKind::Lucas);
            const auto c = oracle::classify_strings(verts, Execution::Parallel);
            const auto f = lucas_string_classes(static_cast<std::uint64_t>(n));
            if (f.primitive != c.primitive || f.primitive_symmetric != c.primitive_symmetric ||
                f.asymmetric != c.asymmetric)
              return "exhaustive (" + std::to_string(c.primitive) + ", " + std::to_string(c.primitive_symmetric) +
                     ", " + std::to_string(c.asymmetric) + ")";
            return std::nullopt;
          });
  b.range("sum_j fix(alpha^j beta) on V(Lambda_d) = d F_{floor(d/2)+2}", 1, max_n, [](ll d) -> Failure {
    const auto verts = enumerate(static_cast<std::size_t>(d), CubeKind::Lucas);
    const std::uint64_t total = oracle::reflection_fixed_point_total(verts, Execution::Parallel);
    if (ExactInt(total) != d * fib(d / 2 + 2)) return "sum = " + std::to_string(total);
    return std::nullopt;
  });
  b.range("Lucas necklaces: rotation classes = (1/n) sum phi(n/d) L_d", 1, max_n, [](ll n) -> Failure {
    const auto g = CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda);
    std::vector<oracle::Permutation> rotations;
    for (ll j = 0; j < n; ++j) rotations.push_back(oracle::vertex_permutation(g, DihedralElement::rotation(j), Execution::Parallel));
    const auto p = oracle::partition_from_labels(oracle::orbit_labels(rotations, g.vertices().size(), Execution::Parallel),
                                                 oracle::Ground::Vertices);
    if (necklace_count(static_cast<std::uint64_t>(n)) != p.orbits.size()) return std::to_string(p.orbits.size());
    return std::nullopt;
  });
  b.range("Fibonacci palindromes (all, starting 0, starting 1) = closed form", 1, max_n, [](ll n) -> Failure {
    const auto g = CubeGraph::build(static_cast<std::size_t>(n), Cube::Gamma);
    std::size_t starts0 = 0;
    std::size_t starts1 = 0;
    for (auto i : oracle::fixed_points(DihedralElement::reflection(), g, oracle::Ground::Vertices))
      (g.vertices()[i].at(0) ? starts1 : starts0) += 1;
    const auto m = static_cast<std::uint64_t>(n);
    if (fib_palindrome_fix(m, PalindromeVariant::All) != starts0 + starts1 ||
        fib_palindrome_fix(m, PalindromeVariant::Starts0) != starts0 ||
        fib_palindrome_fix(m, PalindromeVariant::Starts1) != starts1)
      return std::to_string(starts0) + " + " + std::to_string(starts1);
    return std::nullopt;
  });
  b.range("every edge of Lambda_n has a primitive endpoint", 5, max_n, [](ll n) -> Failure {
    const auto g = CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda);
    for (const auto& e : g.edges())
      if (!is_primitive(g.vertices()[e.a]) && !is_primitive(g.vertices()[e.b]))
        return oracle::element_label(g, oracle::Ground::Edges, *g.find_edge(e.a, e.b));
    return std::nullopt;
  });
  string_checks(std::min<ll>(max_n, 10), b);
}

// ---------------------------------------------------------------------------

void bijection_suite(ll max_n, ReportBuilder& b) {
  using namespace cube_orbits::bijections;
  b.range("tiling_to_string(string_to_tiling(u)) = u", 0, max_n, [](ll n) -> Failure {
    for (const auto& u : enumerate(static_cast<std::size_t>(n), CubeKind::Fibonacci)) {
      const Tiling t = string_to_tiling(u);
      if (t.width() != u.size() + 1 || tiling_to_string(t) != u) return u.to_display();
    }
    return std::nullopt;
  });
  b.range("string_to_tiling(tiling_to_string(t)) = t for every 2 x m tiling", 1, max_n + 1, [](ll m) -> Failure {
    for (const auto& t : all_tilings(static_cast<std::size_t>(m)))
      if (string_to_tiling(tiling_to_string(t)) != t) return t.to_string();
    return std::nullopt;
  });
  b.range("u is a palindrome iff its tiling is mirror-symmetric", 0, max_n, [](ll n) -> Failure {
    for (const auto& u : enumerate(static_cast<std::size_t>(n), CubeKind::Fibonacci)) {
      const Tiling t = string_to_tiling(u);
      if ((reverse(u) == u) != (reflect(t) == t)) return u.to_display();
    }
    return std::nullopt;
  });
  b.single("the 2 x 2 square has one distinct tiling", []() -> Failure {
    if (distinct_tilings(2) != 1) return distinct_tilings(2).str();
    return std::nullopt;
  });
  b.range("distinct tilings of 2 x m = distinct {1,2}-partitions of m = o_V(Gamma_{m-1})", 3, max_n,
          [](ll m) -> Failure {
            const auto t = distinct_tilings(static_cast<std::size_t>(m));
            const auto p = distinct_partitions(static_cast<std::size_t>(m));
            const auto o = gamma_vertex_orbits(static_cast<std::uint64_t>(m - 1)).total;
            if (t != o || p != o) return t.str() + ", " + p.str() + ", " + o.str();
            return std::nullopt;
          });
  b.range("s({010w, 000w}) = w for every w in V(Gamma_{n-3})", 5, max_n, [](ll n) -> Failure {
    for (const auto& w : enumerate(static_cast<std::size_t>(n - 3), CubeKind::Fibonacci)) {
      const CubeString top = CubeString::parse("010").concat(w);
      const CubeString bottom = CubeString::parse("000").concat(w);
      if (!is_lucas(top) || lambda_edge_to_gamma_vertex(top, bottom) != w) return w.to_display();
    }
    return std::nullopt;
  });
  b.range("s(g e) equals s(e) up to reversal for every dihedral g", 5, std::min<ll>(max_n, 12), [](ll n) -> Failure {
    const auto g = CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda);
    const auto verts = g.vertices();
    auto key = [](const CubeString& w) { return std::min(w, reverse(w)); };
    for (const auto& e : g.edges()) {
      const auto base = key(lambda_edge_to_gamma_vertex(verts[e.a], verts[e.b]));
      for (const auto& elem : dihedral_group(static_cast<std::size_t>(n)))
        if (key(lambda_edge_to_gamma_vertex(apply(elem, verts[e.a]), apply(elem, verts[e.b]))) != base)
          return "{" + verts[e.a].to_string() + "," + verts[e.b].to_string() + "}";
    }
    return std::nullopt;
  });
  b.range("s induces a bijection from Lambda_n edge orbits to Gamma_{n-3} vertex orbits", 5, max_n,
          [](ll n) -> Failure {
            const auto r = verify_edge_orbit_bijection(static_cast<std::size_t>(n));
            if (!r.ok() || r.lambda_edge_orbits != r.gamma_vertex_orbits)
              return "well-defined " + std::to_string(r.well_defined) + ", injective " + std::to_string(r.injective) +
                     ", surjective " + std::to_string(r.surjective) + ", orbits " +
                     std::to_string(r.lambda_edge_orbits) + " vs " + std::to_string(r.gamma_vertex_orbits);
            return std::nullopt;
          });
}

// ---------------------------------------------------------------------------

void automorphism_suite(ll max_n, ReportBuilder& b) {
  b.range("|Aut(Gamma_n)| = 2", 1, max_n, [](ll n) -> Failure {
    const auto aut = oracle::automorphism_group(CubeGraph::build(static_cast<std::size_t>(n), Cube::Gamma));
    if (aut.size() != 2) return "order " + std::to_string(aut.size());
    return std::nullopt;
  });
  b.range("Aut(Gamma_n) = {id, reversal}", 2, max_n, [](ll n) -> Failure {
    const auto g = CubeGraph::build(static_cast<std::size_t>(n), Cube::Gamma);
    auto aut = oracle::automorphism_group(g);
    std::vector<oracle::Permutation> expected{oracle::identity_permutation(g.vertices().size()),
                                              oracle::vertex_permutation(g, DihedralElement::reflection(), Execution::Serial)};
    std::sort(expected.begin(), expected.end());
    if (aut != expected) return "different group";
    return std::nullopt;
  });
  b.range("|Aut(Lambda_n)| = 2n, each a dihedral string map", 3, max_n, [](ll n) -> Failure {
    const auto g = CubeGraph::build(static_cast<std::size_t>(n), Cube::Lambda);
    const auto aut = oracle::automorphism_group(g);
    if (aut.size() != static_cast<std::size_t>(2 * n)) return "order " + std::to_string(aut.size());
    for (const auto& p : aut)
      if (!oracle::as_dihedral(p, g)) return "automorphism not induced by a dihedral map";
    return std::nullopt;
  });
  b.range("automorphisms of Gamma_n (n >= 2) and Lambda_n preserve weight", 1, max_n, [](ll n) -> Failure {
    for (Cube c : {Cube::Gamma, Cube::Lambda}) {
      if (c == Cube::Gamma && n < 2) continue;
      const auto g = CubeGraph::build(static_cast<std::size_t>(n), c);
      for (const auto& p : oracle::automorphism_group(g))
        if (!oracle::preserves_weight(p, g)) return c == Cube::Gamma ? "Gamma" : "Lambda";
    }
    return std::nullopt;
  });
  b.single("small cubes: orbit histograms under the full automorphism group", []() -> Failure {
    struct Case {
      Cube cube;
      std::size_t n;
      SizeHistogram vertices;
      SizeHistogram edges;
    };
    const std::vector<Case> cases = {
        {Cube::Gamma, 0, {{1, 1}}, {}},           {Cube::Gamma, 1, {{2, 1}}, {{1, 1}}},
        {Cube::Lambda, 0, {{1, 1}}, {}},          {Cube::Lambda, 1, {{1, 1}}, {}},
        {Cube::Lambda, 2, {{1, 1}, {2, 1}}, {{2, 1}}},
    };
    for (const auto& c : cases) {
      const auto g = CubeGraph::build(c.n, c.cube);
      const auto hv = oracle::histogram(oracle::vertex_orbits(g));
      const auto he = oracle::histogram(oracle::edge_orbits(g));
      if (hv != c.vertices || he != c.edges)
        return std::string(c.cube == Cube::Gamma ? "Gamma_" : "Lambda_") + std::to_string(c.n) + ": " + str(hv) +
               " / " + str(he);
    }
    return std::nullopt;
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Formulas, Suite::OracleVsFormula, Suite::Bijections, Suite::Automorphisms, Suite::All})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Formulas: return "formulas";
    case Suite::OracleVsFormula: return "oracle-vs-formula";
    case Suite::Bijections: return "bijections";
    case Suite::Automorphisms: return "automorphisms";
    case Suite::All: return "all";
  }
  return "";
}

std::size_t suite_bound(Suite s) {
  switch (s) {
    case Suite::Formulas: return 500;
    case Suite::OracleVsFormula: return 24;
    case Suite::Bijections: return 18;
    case Suite::Automorphisms: return 8;
    case Suite::All: return 8;
  }
  return 0;
}

std::size_t suite_default_max(Suite s) {
  switch (s) {
    case Suite::Formulas: return 200;
    case Suite::OracleVsFormula: return 18;
    case Suite::Bijections: return 16;
    case Suite::Automorphisms: return 8;
    case Suite::All: return 8;
  }
  return 0;
}

bool SuiteReport::passed() const noexcept {
  if (refused) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<SuiteReport> run_verify(Suite suite, std::optional<std::size_t> max_n) {
  if (suite == Suite::All) {
    std::vector<SuiteReport> out;
    for (Suite s : {Suite::Formulas, Suite::OracleVsFormula, Suite::Bijections, Suite::Automorphisms}) {
      auto r = run_verify(s, max_n);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  SuiteReport report;
  report.suite = suite;
  const std::size_t m = max_n.value_or(suite_default_max(suite));
  if (m > suite_bound(suite)) {
    report.refused = true;
    report.refusal = "--max " + std::to_string(m) + " exceeds the bound " + std::to_string(suite_bound(suite)) +
                     " of suite " + std::string(suite_name(suite));
    return {report};
  }
  ReportBuilder b(report);
  const auto limit = static_cast<ll>(m);
  switch (suite) {
    case Suite::Formulas: formulas_suite(limit, b); break;
    case Suite::OracleVsFormula: oracle_suite(limit, b); break;
    case Suite::Bijections: bijection_suite(limit, b); break;
    case Suite::Automorphisms: automorphism_suite(limit, b); break;
    case Suite::All: break;
  }
  return {report};
}

}  // namespace cube_orbits::cli
