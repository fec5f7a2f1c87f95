#pragma once

// Exhaustive reference for trace membership. It walks a finite candidate box
// and tests each candidate with check_membership, sharing no code with the
// propagation engine.

#include <cstdint>
#include <optional>
#include <vector>

#include "ctrlab/lattice.hpp"

namespace ctrlab {

/// Per-coordinate bounds valid for every member of S(shift) whose degree is
/// at most max_degree. Lower bounds come from the targets pushed down the
/// cover relation; upper bounds from −∞ pushed up the covers and from each sum
/// constraint with the other members at their lower bounds.
struct CoordinateBounds {
  std::vector<Int> lo;  // kNegInfBound when unbounded below
  std::vector<Int> hi;  // kPosInfBound when unbounded above
};

inline constexpr Int kNegInfBound = INT64_MIN / 4;
inline constexpr Int kPosInfBound = INT64_MAX / 4;

CoordinateBounds coordinate_bounds(const ShiftedSystem& system, Int shift, Int max_degree);

/// Box: h ∈ [min_feasible_degree(S, 1), μ(−∞) − min_feasible_degree(S, −1)],
/// η(x) ∈ [max(lo₁(x), μ(x) − hi₋₁(x)), min(hi₁(x), μ(x) − lo₋₁(x))] using
/// coordinate_bounds at the extreme degrees. Candidates are visited in
/// lexicographic order with the degree last, so the first hit matches the
/// pruned engine's witness. Precondition μ ∈ S(0) is the caller's.
std::optional<DecompositionWitness> decompose_by_box(const ShiftedSystem& system,
                                                     const LatticePoint& mu);

}  // namespace ctrlab
