#pragma once

// Fixtures and random instance generators shared by the test binaries.

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ctrlab/cycle.hpp"
#include "ctrlab/graph.hpp"
#include "ctrlab/lattice.hpp"
#include "ctrlab/poset.hpp"

namespace ctrlab {

// Readable gtest output for points.
inline void PrintTo(const LatticePoint& p, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < p.values.size(); ++i) *os << (i ? ", " : "") << p.values[i];
  *os << "; " << p.degree << ")";
}

}  // namespace ctrlab

namespace ctrlab::testing {

// P₁: a5 < a4 < a3 < a2 < a1 and a5 < c2 < c1 < a3 < b2 < b1 < a1.
inline Poset p1_poset() {
  return build_poset({"a1", "a2", "a3", "a4", "a5", "b1", "b2", "c1", "c2"},
                     {{"a5", "a4"},
                      {"a4", "a3"},
                      {"a3", "a2"},
                      {"a2", "a1"},
                      {"a5", "c2"},
                      {"c2", "c1"},
                      {"c1", "a3"},
                      {"a3", "b2"},
                      {"b2", "b1"},
                      {"b1", "a1"}});
}

inline Poset perfect7_poset() {
  return build_poset({"x1", "x2", "x3", "y1", "y2", "y3", "y4"},
                     {{"x1", "y1"},
                      {"x1", "y2"},
                      {"y2", "x2"},
                      {"x3", "x2"},
                      {"x3", "y3"},
                      {"y3", "y4"}});
}

inline Graph perfect7_graph() { return comparability_graph(perfect7_poset()); }

inline Graph complete_graph(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < n; ++i) v.push_back("k" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j]);
  }
  return build_graph(v, e);
}

inline Graph chain3_point_graph() {
  return comparability_graph(disjoint_union(chain_poset(3), antichain_poset(1, "z")));
}

/// Random poset on `size` elements: each pair i < j related with probability p.
inline Poset random_poset(std::mt19937_64& rng, int size, double p = 0.35) {
  std::vector<std::string> elements;
  for (int i = 0; i < size; ++i) elements.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (coin(rng)) rel.emplace_back(elements[i], elements[j]);
    }
  }
  return build_poset(elements, rel);
}

enum class SystemFamily { Poset, Perfect, Cycle };

/// A random system of the given family with at most 6 ground elements.
inline ShiftedSystem random_system(std::mt19937_64& rng, SystemFamily family) {
  switch (family) {
    case SystemFamily::Poset: {
      std::uniform_int_distribution<int> size(1, 6);
      return order_polytope_system(random_poset(rng, size(rng)));
    }
    case SystemFamily::Perfect: {
      std::uniform_int_distribution<int> size(1, 6);
      return perfect_system(comparability_graph(random_poset(rng, size(rng))));
    }
    case SystemFamily::Cycle:
      break;
  }
  std::uniform_int_distribution<int> n(3, 6);
  return cycle_system(n(rng));
}

/// Uniformly chosen member of S(shift) at the given degree, if any.
inline std::optional<LatticePoint> random_member(std::mt19937_64& rng, const ShiftedSystem& s,
                                                 Int shift, Int degree) {
  const auto pts = enumerate_points(s, shift, degree);
  if (pts.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  return pts[pick(rng)];
}

}  // namespace ctrlab::testing
