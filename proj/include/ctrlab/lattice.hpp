#pragma once

// Shifted lattice-point constraint systems.
//
// A ShiftedSystem describes, for every integer shift n, a set S(n) of integer
// vectors on X ∪ {−∞}. The −∞ coordinate is stored separately as `degree`.
// For n = 0 the members are the exponent vectors of the monomials of an
// Ehrhart ring; for n = ±1 they are the monomial bases of the canonical module
// and of its inverse. The trace of the canonical module is spanned by the
// sumset S(1) + S(−1), so trace membership of T^μ is the question whether
// μ = η + ζ with η ∈ S(1), ζ ∈ S(−1).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctrlab {

using Int = std::int64_t;

/// Coordinate index used for the −∞ (degree) coordinate inside constraints.
inline constexpr int kDegreeSlot = -1;

struct Rational {
  Int num = 1;
  Int den = 1;

  /// Reduced, positive-denominator form. Throws on zero denominator.
  static Rational make(Int num, Int den = 1);
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct LatticePoint {
  std::vector<Int> values;  // aligned with ShiftedSystem::ground()
  Int degree = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  /// Lexicographic on (values..., degree).
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(Int k, LatticePoint a);
  LatticePoint operator-() const;
};

/// ν(below) ≥ ν(above) + n. `below` may be kDegreeSlot; `above` never is.
struct CoverConstraint {
  int below = 0;
  int above = 0;
  friend bool operator==(const CoverConstraint&, const CoverConstraint&) = default;
};

/// ν⁺(members) + n ≤ coefficient · ν(−∞).
struct SumConstraint {
  std::vector<int> members;
  Rational coefficient;
  friend bool operator==(const SumConstraint&, const SumConstraint&) = default;
};

class ShiftedSystem {
 public:
  ShiftedSystem() = default;
  /// Validates indices and that the ground-level cover relation is acyclic.
  ShiftedSystem(std::vector<std::string> ground, std::vector<int> lower_bound_targets,
                std::vector<CoverConstraint> covers, std::vector<SumConstraint> sums);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  const std::vector<int>& lower_bound_targets() const { return targets_; }
  const std::vector<CoverConstraint>& cover_constraints() const { return covers_; }
  const std::vector<SumConstraint>& sum_constraints() const { return sums_; }

  std::optional<int> index_of(const std::string& id) const;

  /// Builds a point from named values. Throws DomainMismatch naming the first
  /// missing or extra element.
  LatticePoint point(const std::map<std::string, Int>& values, Int degree) const;
  LatticePoint uniform(Int value, Int degree) const;
  LatticePoint zero(Int degree = 0) const { return uniform(0, degree); }

  /// "(a=1, b=0; deg=2)"
  std::string describe_point(const LatticePoint& p) const;

  friend bool operator==(const ShiftedSystem&, const ShiftedSystem&) = default;

 private:
  std::vector<std::string> ground_;
  std::vector<int> targets_;
  std::vector<CoverConstraint> covers_;
  std::vector<SumConstraint> sums_;
};

struct DecompositionWitness {
  LatticePoint eta;   // member of S(+1)
  LatticePoint zeta;  // member of S(−1)
  Int power = 1;      // eta + zeta = power · μ
  friend bool operator==(const DecompositionWitness&, const DecompositionWitness&) = default;
};

/// First violated constraint of `point` against S(shift), as readable text.
/// Throws DomainMismatch when the point has the wrong dimension.
std::optional<std::string> first_violation(const ShiftedSystem& system, Int shift,
                                           const LatticePoint& point);

bool check_membership(const ShiftedSystem& system, Int shift, const LatticePoint& point);

/// Which engine answers decomposition queries.
enum class Engine { Pruned, Oracle };

/// Trace membership: η ∈ S(1), ζ ∈ S(−1) with η + ζ = μ, η lexicographically
/// smallest. Throws PreconditionError when μ ∉ S(0).
std::optional<DecompositionWitness> decompose(const ShiftedSystem& system, const LatticePoint& mu,
                                              Engine engine = Engine::Pruned);

/// Smallest k in [1, k_max] for which k·μ decomposes. An empty result only
/// means no power up to k_max was found.
std::optional<DecompositionWitness> radical_power_search(const ShiftedSystem& system,
                                                         const LatticePoint& mu, Int k_max,
                                                         Engine engine = Engine::Pruned);

/// All members of S(shift) with the given degree, sorted lexicographically.
/// Throws UnboundedEnumeration if bound derivation leaves a coordinate open.
std::vector<LatticePoint> enumerate_points(const ShiftedSystem& system, Int shift, Int degree);

/// Minimum degree over S(shift), by least-value propagation down the cover
/// relation followed by the degree constraints.
Int min_feasible_degree(const ShiftedSystem& system, Int shift);

/// Split ν = ν' + ρ with ν' ∈ S(left_shift), ρ ∈ S(right_shift) and
/// deg ρ ≥ right_min_degree (when given). Returns ν' (lexicographically
/// smallest). Decomposition is the case (1, −1).
std::optional<LatticePoint> find_split(const ShiftedSystem& system, const LatticePoint& target,
                                       Int left_shift, Int right_shift,
                                       std::optional<Int> right_min_degree = std::nullopt);

struct GeneratorDegrees {
  std::vector<Int> degrees;  // ascending
  Int window_start = 0;
  Int window_end = 0;
  bool complete_at_window = true;  // only degrees inside the window were examined
};

/// Degrees in [d0, d0 + window] (d0 = min feasible degree) holding a member
/// of S(shift) that is not a member of S(shift) plus a nonzero member of S(0).
GeneratorDegrees generator_degrees(const ShiftedSystem& system, Int shift, Int degree_window);

}  // namespace ctrlab
