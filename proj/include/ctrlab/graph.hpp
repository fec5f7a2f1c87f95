#pragma once

// Simple graphs, maximal cliques, and the Ehrhart rings of stable set
// polytopes of perfect graphs (clique description).

#include <string>
#include <utility>
#include <vector>

#include "ctrlab/lattice.hpp"
#include "ctrlab/poset.hpp"
#include "ctrlab/verdict.hpp"

namespace ctrlab {

class Graph {
 public:
  Graph() = default;

  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Normalized (u < v), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  bool adjacent(int u, int v) const { return adjacency_[u][v] != 0; }
  /// Set by comparability_graph; raw graphs are only assumed perfect.
  bool certified_perfect() const { return certified_perfect_; }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend Graph build_graph(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);
  friend Graph comparability_graph(const Poset& p);

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<char>> adjacency_;
  bool certified_perfect_ = false;
};

/// Throws InvalidInput on loops, duplicate edges, duplicate or unknown vertices.
Graph build_graph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

/// Edge for every strictly comparable pair of P.
Graph comparability_graph(const Poset& p);

/// Cycle graph v0 - v1 - ... - v{n-1} - v0.
Graph cycle_graph(int n);

struct CliqueStats {
  Int k = 0;        // largest maximal clique
  Int k_prime = 0;  // smallest maximal clique
  std::vector<std::vector<int>> cliques;  // each sorted; list sorted
};

/// Bron–Kerbosch with Tomita pivoting.
CliqueStats maximal_cliques(const Graph& g);

/// Ǔ-system: ν(x) ≥ n on every vertex, ν⁺(K) + n ≤ ν(−∞) per maximal clique.
ShiftedSystem perfect_system(const Graph& g);

/// k = k′: Gorenstein. k − k′ ≥ 2: NotCtr with the all-zero degree-1 witness.
/// k − k′ = 1: InconclusiveAtBound (see deep_scan).
Verdict necessary_condition(const Graph& g, Int k_max, Engine engine = Engine::Pruned);

/// Scans ring monomials of degree ≤ degree_bound for members of the radical
/// (some power up to power_bound decomposes) outside the trace.
Verdict deep_scan(const Graph& g, Int degree_bound, Int power_bound,
                  Engine engine = Engine::Pruned);

}  // namespace ctrlab
