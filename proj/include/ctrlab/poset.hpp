#pragma once

// Finite posets and their Hibi rings (Ehrhart rings of order polytopes).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctrlab/lattice.hpp"
#include "ctrlab/verdict.hpp"

namespace ctrlab {

class Poset {
 public:
  Poset() = default;

  const std::vector<std::string>& elements() const { return elements_; }
  /// (x, y): y covers x. Transitively reduced.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::size_t size() const { return elements_.size(); }

  bool less(int x, int y) const { return x != y && reach_[x][y]; }
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;
  /// Elements of a longest chain of P (0 for the empty poset).
  int longest_chain() const;

  friend bool operator==(const Poset&, const Poset&) = default;
  friend Poset build_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& relations);

 private:
  std::vector<std::string> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<char>> reach_;  // reach_[x][y]: x ≤ y
};

/// Relations (x, y) mean x < y. Stores the transitive reduction.
/// Throws InvalidInput on unknown ids, duplicate ids, or a cycle (named).
Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& relations);

Poset chain_poset(int length, const std::string& prefix = "c");
Poset antichain_poset(int size, const std::string& prefix = "a");

/// Elements and covers of both; ids of Q that clash with P get a "'" suffix.
Poset disjoint_union(const Poset& p, const Poset& q);

/// T-system: ν(x) ≥ n on maximal elements, ν(x) ≥ ν(y) + n for x ⋖ y in P ∪ {−∞}.
ShiftedSystem order_polytope_system(const Poset& p);

Int a_invariant(const Poset& p);
Int b_invariant(const Poset& p);

/// shift must be 1 or −1.
GeneratorDegrees generator_degrees(const Poset& p, Int shift, Int degree_window);

Verdict hibi_ctr_scan(const Poset& p, Int degree_bound, Int k_max, Engine engine = Engine::Pruned);

enum class Tri { False, True, Unknown };
std::string_view to_string(Tri t);

struct SegreFactor {
  Int a = 0;
  Int b = 0;
  Tri level = Tri::Unknown;
  Tri anticanonical_level = Tri::Unknown;
  Int dim_lower_bound = 0;
};

struct SegreReport {
  std::vector<SegreFactor> factors;
  bool hypothesis_ok = false;
  Int predicted_a = 0;
  Int predicted_b = 0;
  std::vector<std::string> failures;  // one line per failed hypothesis
  std::optional<std::vector<int>> reorder_hint;  // a factor order that would satisfy a/b ordering
  std::vector<std::string> assumptions;
};

/// Default window for level / anticanonical-level detection.
inline constexpr Int kDefaultLevelWindow = 3;

SegreReport segre_condition_report(const std::vector<Poset>& factors,
                                   Int level_window = kDefaultLevelWindow);

}  // namespace ctrlab
