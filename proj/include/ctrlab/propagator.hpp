#pragma once

// Integer bound propagation over linear inequalities Σ a_i x_i ≤ b, plus the
// depth-first search that the lattice engine runs on top of it.

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctrlab/lattice.hpp"

namespace ctrlab {

inline constexpr Int kNegInf = std::numeric_limits<Int>::min();
inline constexpr Int kPosInf = std::numeric_limits<Int>::max();

struct Interval {
  Int lo = kNegInf;
  Int hi = kPosInf;

  bool empty() const { return lo > hi; }
  bool fixed() const { return lo == hi; }
  bool bounded() const { return lo != kNegInf && hi != kPosInf; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct LinearTerm {
  int var = 0;
  Int coef = 0;
};

/// Where a constraint came from, so tests and diagnostics can select subsets.
struct ConstraintOrigin {
  enum class Family { Target, Cover, Sum, Degree };
  enum class Side { Left, Right, Fixed };
  Family family = Family::Target;
  Side side = Side::Fixed;
  int index = 0;
};

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Int bound = 0;
  ConstraintOrigin origin;
};

class Propagator {
 public:
  Propagator(int num_vars, std::vector<LinearConstraint> constraints);

  int num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  /// Tightens `domains` to a fixpoint. Returns false on a wipeout.
  bool propagate(std::vector<Interval>& domains) const;

  /// Lexicographically smallest solution (variables in index order), or none.
  /// Every variable must be bounded after root propagation.
  std::optional<std::vector<Int>> first_solution(std::vector<Interval> domains) const;

  /// Every solution, in lexicographic order.
  void for_each_solution(std::vector<Interval> domains,
                         const std::function<void(std::span<const Int>)>& visit) const;

 private:
  bool propagate_one(const LinearConstraint& c, std::vector<Interval>& domains,
                     std::vector<int>& changed) const;
  bool search(std::vector<Interval>& domains, int first_open,
              const std::function<bool(std::span<const Int>)>& visit) const;

  int num_vars_;
  std::vector<LinearConstraint> constraints_;
  std::vector<std::vector<int>> watches_;  // var -> constraint indices
};

/// Variables 0..N-1 are ν on the ground, variable N is the degree.
/// The split problem has the same layout for ν'.
std::vector<LinearConstraint> membership_constraints(const ShiftedSystem& system, Int shift);

/// Constraints on ν' for target = ν' + ρ, ν' ∈ S(left_shift), ρ ∈ S(right_shift).
std::vector<LinearConstraint> split_constraints(const ShiftedSystem& system,
                                                const LatticePoint& target, Int left_shift,
                                                Int right_shift,
                                                std::optional<Int> right_min_degree);

}  // namespace ctrlab
