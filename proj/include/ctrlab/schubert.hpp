#pragma once

// Schubert indices in Γ(m×n), the block/gap decomposition of γ, and the
// combinatorics behind the CTR criterion for Schubert cycles G(X;γ).
// All positions and columns are 1-based.

#include <utility>
#include <vector>

#include "ctrlab/lattice.hpp"
#include "ctrlab/verdict.hpp"

namespace ctrlab {

class SchubertIndex {
 public:
  /// Throws InvalidInput unless 1 ≤ m ≤ n and 1 ≤ a_1 < ... < a_m ≤ n.
  SchubertIndex(int m, int n, std::vector<int> entries);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  /// a_j for 1 ≤ j ≤ m, and the sentinel a_{m+1} = n + 1.
  int a(int j) const;

  /// Componentwise order.
  bool leq(const SchubertIndex& other) const;
  /// γ = [n−m+1, ..., n]: G(X;γ) is a polynomial ring in one variable.
  bool degenerate() const;

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> entries_;
};

/// Every element of Γ(m×n), lexicographic.
std::vector<SchubertIndex> all_indices(int m, int n);
/// Elements δ ≥ γ.
std::vector<SchubertIndex> indices_above(const SchubertIndex& gamma);

/// (componentwise max, componentwise min). Throws InvalidInput on shape mismatch.
std::pair<SchubertIndex, SchubertIndex> join_meet(const SchubertIndex& d, const SchubertIndex& e);

struct BlockDecomposition {
  int t = 0;
  std::vector<int> cut;                 // k(0) = 0, k(1), ..., k(t+1)
  std::vector<std::vector<int>> blocks; // β_0..β_{t+1}; β_{t+1} may be empty
  std::vector<std::vector<int>> gaps;   // χ_0..χ_t
  std::vector<Int> kappa;               // κ_0..κ_t
  Int kappa_max = 0;
  Int kappa_min = 0;
};

/// Throws PreconditionError for degenerate γ.
BlockDecomposition block_decomposition(const SchubertIndex& gamma);

struct FaceIndices {
  std::vector<SchubertIndex> zetas;  // ζ_0..ζ_t
  std::vector<SchubertIndex> sigmas; // σ_1..σ_t (sigmas[i − 1] is σ_i)
};

FaceIndices face_indices(const SchubertIndex& gamma);

/// b ∈ Ω_i: b_{k(i+1)} = a_{k(i+1)}, 0 ≤ i ≤ t.
bool in_omega(const SchubertIndex& gamma, const BlockDecomposition& d, int i,
              const SchubertIndex& b);
/// b ∈ Θ_i: b_{k(i)} < a_{k(i)+1}, 1 ≤ i ≤ t.
bool in_theta(const SchubertIndex& gamma, const BlockDecomposition& d, int i,
              const SchubertIndex& b);

struct IndexSets {
  std::vector<int> i1, i2, i_prime, i_double_prime;
};

/// I₁ = {κ_i = κ}, I₂ = {κ_i = κ′}, I′ = {i ∈ I₁ : i−1 ∈ I₂}, I″ = {i ∈ I₂ : i−1 ∈ I₁}.
IndexSets index_sets(const BlockDecomposition& d);

/// Requires κ − κ′ = 1, γ ≤ β and β ∈ Θ_i for i ∈ I′ ∪ I″. Returns (ξ, ξ′).
std::pair<SchubertIndex, SchubertIndex> witness_pair(const SchubertIndex& gamma,
                                                     const SchubertIndex& beta);

Verdict schubert_verdict(const SchubertIndex& gamma);

/// K[X]/I_t(X) for an m×n matrix X, 2 ≤ t ≤ m ≤ n.
Verdict determinantal_ctr(int m, int n, int t);

}  // namespace ctrlab
