#pragma once

// Cycle graphs and the Ehrhart rings of their stable set polytopes
// (t-perfect description: edges, or the triangle, plus the odd cycle).

#include "ctrlab/lattice.hpp"
#include "ctrlab/verdict.hpp"

namespace ctrlab {

struct CycleData {
  int n = 0;
  int ell = 0;  // n = 2ℓ + 1 for odd n, 0 otherwise
};

CycleData cycle_data(int n);

/// Ũ-system of the n-cycle on v0..v{n−1}. Throws InvalidInput for n < 3.
ShiftedSystem cycle_system(int n);

/// μ ∈ p_i: μ(v_i) > 0 or μ⁺(V) < ℓ·μ(−∞). Needs odd n ≥ 7 and μ ∈ Ũ(0).
bool minimal_prime_member(int n, int i, const LatticePoint& mu);
bool minimal_prime_member(const ShiftedSystem& system, int n, int i, const LatticePoint& mu);

/// 1 on v2, v4, ..., v{2ℓ−2}, degree 1. Needs ℓ ≥ 4.
LatticePoint non_ctr_witness(int ell);

inline constexpr Int kDefaultDegreeBound = 2;

/// power_bound defaults to n + 2 when 0.
Verdict cycle_ctr_verdict(int n, Int degree_bound = kDefaultDegreeBound, Int power_bound = 0,
                          Engine engine = Engine::Pruned);

}  // namespace ctrlab
