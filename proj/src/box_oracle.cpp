#include "ctrlab/box_oracle.hpp"

#include <algorithm>
#include <string>

#include "ctrlab/error.hpp"

namespace ctrlab {
namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CoordinateBounds coordinate_bounds(const ShiftedSystem& system, Int shift, Int max_degree) {
  const int n = static_cast<int>(system.size());
  CoordinateBounds b{std::vector<Int>(n, kNegInfBound), std::vector<Int>(n, kPosInfBound)};
  for (int t : system.lower_bound_targets()) b.lo[t] = std::max(b.lo[t], shift);
  // ν(below) ≥ ν(above) + shift: lower bounds flow down, upper bounds flow up.
  for (int pass = 0; pass <= n; ++pass) {
    bool moved = false;
    for (const auto& c : system.cover_constraints()) {
      const Int above_lo = b.lo[c.above];
      if (c.below != kDegreeSlot && above_lo != kNegInfBound && above_lo + shift > b.lo[c.below]) {
        b.lo[c.below] = above_lo + shift;
        moved = true;
      }
      const Int below_hi = c.below == kDegreeSlot ? max_degree : b.hi[c.below];
      if (below_hi != kPosInfBound && below_hi - shift < b.hi[c.above]) {
        b.hi[c.above] = below_hi - shift;
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (const auto& s : system.sum_constraints()) {
    // q·(Σ ν + shift) ≤ p·deg, so Σ ν ≤ ⌊p·deg / q⌋ − shift.
    const Int cap = floor_div(s.coefficient.num * max_degree, s.coefficient.den) - shift;
    for (int x : s.members) {
      Int others = 0;
      bool finite = true;
      for (int y : s.members) {
        if (y == x) continue;
        if (b.lo[y] == kNegInfBound) finite = false;
        others += b.lo[y];
      }
      if (finite) b.hi[x] = std::min(b.hi[x], cap - others);
    }
  }
  // Sum caps can tighten elements further up the covers.
  for (int pass = 0; pass <= n; ++pass) {
    bool moved = false;
    for (const auto& c : system.cover_constraints()) {
      const Int above_lo = b.lo[c.above];
      if (c.below != kDegreeSlot && above_lo != kNegInfBound && above_lo + shift > b.lo[c.below]) {
        b.lo[c.below] = above_lo + shift;
        moved = true;
      }
      const Int below_hi = c.below == kDegreeSlot ? max_degree : b.hi[c.below];
      if (below_hi != kPosInfBound && below_hi - shift < b.hi[c.above]) {
        b.hi[c.above] = below_hi - shift;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return b;
}

std::optional<DecompositionWitness> decompose_by_box(const ShiftedSystem& system,
                                                     const LatticePoint& mu) {
  const std::size_t n = system.size();
  const Int h_min = min_feasible_degree(system, 1);
  const Int h_max = mu.degree - min_feasible_degree(system, -1);
  if (h_min > h_max) return std::nullopt;

  const CoordinateBounds left = coordinate_bounds(system, 1, h_max);
  const CoordinateBounds right = coordinate_bounds(system, -1, mu.degree - h_min);
  std::vector<Int> lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int lo = left.lo[i];
    if (right.hi[i] != kPosInfBound) lo = std::max(lo, mu.values[i] - right.hi[i]);
    Int hi = left.hi[i];
    if (right.lo[i] != kNegInfBound) hi = std::min(hi, mu.values[i] - right.lo[i]);
    if (lo == kNegInfBound || hi == kPosInfBound) {
      throw UnboundedEnumeration("oracle box is unbounded at '" + system.ground()[i] + "'");
    }
    if (lo > hi) return std::nullopt;
    lower[i] = lo;
    upper[i] = hi;
  }

  LatticePoint eta{lower, h_min};
  while (true) {
    for (Int h = h_min; h <= h_max; ++h) {
      eta.degree = h;
      if (!check_membership(system, 1, eta)) continue;
      LatticePoint zeta = mu - eta;
      if (check_membership(system, -1, zeta)) {
        return DecompositionWitness{eta, std::move(zeta), 1};
      }
    }
    // Odometer step, last coordinate fastest.
    std::size_t pos = n;
    while (true) {
      if (pos == 0) return std::nullopt;
      --pos;
      if (eta.values[pos] < upper[pos]) {
        ++eta.values[pos];
        for (std::size_t j = pos + 1; j < n; ++j) eta.values[j] = lower[j];
        break;
      }
    }
  }
}

}  // namespace ctrlab
