#include "ctrlab/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ctrlab/error.hpp"
#include "ctrlab/parallel.hpp"

namespace ctrlab {
namespace {

void fill_adjacency(std::vector<std::vector<char>>& adjacency, std::size_t n,
                    const std::vector<std::pair<int, int>>& edges) {
  adjacency.assign(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : edges) {
    adjacency[u][v] = 1;
    adjacency[v][u] = 1;
  }
}

struct CliqueSearch {
  const Graph& g;
  std::vector<std::vector<int>> found;

  void expand(std::vector<int>& clique, std::vector<int> candidates, std::vector<int> excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) {
        auto c = clique;
        std::sort(c.begin(), c.end());
        found.push_back(std::move(c));
      }
      return;
    }
    // Pivot: vertex of candidates ∪ excluded with most neighbours in candidates.
    int pivot = -1;
    int best = -1;
    for (const auto* pool : {&candidates, &excluded}) {
      for (int u : *pool) {
        int count = 0;
        for (int v : candidates) count += g.adjacent(u, v);
        if (count > best) {
          best = count;
          pivot = u;
        }
      }
    }
    std::vector<int> branch;
    for (int v : candidates) {
      if (!g.adjacent(pivot, v)) branch.push_back(v);
    }
    for (int v : branch) {
      std::vector<int> next_candidates, next_excluded;
      for (int u : candidates) {
        if (g.adjacent(v, u)) next_candidates.push_back(u);
      }
      for (int u : excluded) {
        if (g.adjacent(v, u)) next_excluded.push_back(u);
      }
      clique.push_back(v);
      expand(clique, std::move(next_candidates), std::move(next_excluded));
      clique.pop_back();
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.push_back(v);
    }
  }
};

}  // namespace

Graph build_graph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!index.emplace(vertices[i], i).second) {
      throw InvalidInput("duplicate vertex '" + vertices[i] + "'");
    }
  }
  Graph g;
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) throw InvalidInput("edge endpoint '" + a + "' is not a vertex");
    auto ib = index.find(b);
    if (ib == index.end()) throw InvalidInput("edge endpoint '" + b + "' is not a vertex");
    if (ia->second == ib->second) throw InvalidInput("loop at vertex '" + a + "'");
    const auto e = std::minmax(ia->second, ib->second);
    if (!seen.insert(e).second) throw InvalidInput("duplicate edge {" + a + ", " + b + "}");
  }
  g.edges_.assign(seen.begin(), seen.end());
  fill_adjacency(g.adjacency_, vertices.size(), g.edges_);
  g.vertices_ = std::move(vertices);
  return g;
}

Graph comparability_graph(const Poset& p) {
  Graph g;
  const int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (p.less(x, y) || p.less(y, x)) g.edges_.emplace_back(x, y);
    }
  }
  fill_adjacency(g.adjacency_, p.size(), g.edges_);
  g.vertices_ = p.elements();
  g.certified_perfect_ = true;
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle graph needs at least 3 vertices");
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(vertices[i], vertices[(i + 1) % n]);
  return build_graph(std::move(vertices), edges);
}

CliqueStats maximal_cliques(const Graph& g) {
  CliqueSearch search{g, {}};
  std::vector<int> all(g.size());
  for (int i = 0; i < static_cast<int>(g.size()); ++i) all[i] = i;
  std::vector<int> clique;
  if (!all.empty()) search.expand(clique, all, {});
  std::sort(search.found.begin(), search.found.end());
  CliqueStats stats;
  stats.cliques = std::move(search.found);
  if (!stats.cliques.empty()) {
    stats.k = 0;
    stats.k_prime = static_cast<Int>(g.size());
    for (const auto& c : stats.cliques) {
      stats.k = std::max<Int>(stats.k, static_cast<Int>(c.size()));
      stats.k_prime = std::min<Int>(stats.k_prime, static_cast<Int>(c.size()));
    }
  }
  return stats;
}

ShiftedSystem perfect_system(const Graph& g) {
  std::vector<int> targets(g.size());
  for (int i = 0; i < static_cast<int>(g.size()); ++i) targets[i] = i;
  std::vector<SumConstraint> sums;
  for (auto& c : maximal_cliques(g).cliques) sums.push_back({std::move(c), Rational{1, 1}});
  return ShiftedSystem(g.vertices(), std::move(targets), {}, std::move(sums));
}

Verdict necessary_condition(const Graph& g, Int k_max, Engine engine) {
  const CliqueStats stats = maximal_cliques(g);
  const ShiftedSystem system = perfect_system(g);
  Verdict v;
  v.ground = system.ground();
  if (!g.certified_perfect()) v.notes.push_back("graph assumed perfect");
  v.notes.push_back("k = " + std::to_string(stats.k) + ", k' = " + std::to_string(stats.k_prime));
  const Int gap = stats.k - stats.k_prime;
  if (gap == 0) {
    const LatticePoint zero = system.zero(0);
    auto w = decompose(system, zero, engine);
    if (!w) throw Error("equal clique sizes but the zero point does not decompose");
    v.kind = VerdictKind::Gorenstein;
    v.witness = DecompositionCertificate{zero, *w};
    return v;
  }
  if (gap >= 2) {
    const LatticePoint mu = system.zero(1);
    if (decompose(system, mu, engine)) {
      throw Error("k - k' >= 2 but the degree-1 zero point decomposes");
    }
    // η ≡ 1 with degree k + 1 and ζ ≡ −1 with degree −k′ − 1 sum to (k − k′)·μ.
    DecompositionWitness explicit_pair{system.uniform(1, stats.k + 1),
                                       system.uniform(-1, -stats.k_prime - 1), gap};
    if (!check_membership(system, 1, explicit_pair.eta) ||
        !check_membership(system, -1, explicit_pair.zeta)) {
      throw Error("explicit power witness failed validation");
    }
    auto found = radical_power_search(system, mu, k_max, engine);
    if (!found) {
      v.notes.push_back("power bound " + std::to_string(k_max) +
                        " below k - k'; explicit witness used");
      found = explicit_pair;
    }
    v.kind = VerdictKind::NotCtr;
    v.bounds.power_bound = k_max;
    v.witness = NonTraceCertificate{mu, found, {}};
    return v;
  }
  v.kind = VerdictKind::InconclusiveAtBound;
  v.at_bound = true;
  v.bounds.power_bound = k_max;
  v.notes.push_back("k - k' = 1: the necessary condition holds but is not sufficient");
  return v;
}

Verdict deep_scan(const Graph& g, Int degree_bound, Int power_bound, Engine engine) {
  const ShiftedSystem system = perfect_system(g);
  Verdict v;
  v.ground = system.ground();
  if (!g.certified_perfect()) v.notes.push_back("graph assumed perfect");
  const LatticePoint zero = system.zero(0);
  if (auto w = decompose(system, zero, engine)) {
    v.kind = VerdictKind::Gorenstein;
    v.witness = DecompositionCertificate{zero, *w};
    return v;
  }
  v.bounds = Bounds{degree_bound, power_bound};
  ScanCertificate scan = scan_ring_monomials(system, degree_bound, power_bound, engine);
  if (!scan.radical_not_trace.empty()) {
    const LatticePoint& mu = scan.radical_not_trace.front();
    v.kind = VerdictKind::NotCtr;
    v.notes.push_back(std::to_string(scan.radical_not_trace.size()) +
                      " ring monomial(s) of degree <= " + std::to_string(degree_bound) +
                      " lie in the radical of the trace but not in the trace");
    v.witness = NonTraceCertificate{mu, radical_power_search(system, mu, power_bound, engine), {}};
    return v;
  }
  v.kind = VerdictKind::InconclusiveAtBound;
  v.at_bound = true;
  v.witness = std::move(scan);
  return v;
}

}  // namespace ctrlab
