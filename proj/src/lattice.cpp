#include "ctrlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ctrlab/box_oracle.hpp"
#include "ctrlab/error.hpp"
#include "ctrlab/parallel.hpp"
#include "ctrlab/propagator.hpp"

namespace ctrlab {
namespace {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in lattice arithmetic");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice arithmetic");
  return r;
}

void require_same_shape(const LatticePoint& a, const LatticePoint& b) {
  if (a.values.size() != b.values.size()) {
    throw DomainMismatch("lattice points of different dimension (" +
                             std::to_string(a.values.size()) + " vs " +
                             std::to_string(b.values.size()) + ")",
                         {});
  }
}

void require_domain(const ShiftedSystem& system, const LatticePoint& p) {
  if (p.values.size() == system.size()) return;
  if (p.values.size() < system.size()) {
    const auto& missing = system.ground()[p.values.size()];
    throw DomainMismatch("point has no value for element '" + missing + "'", missing);
  }
  throw DomainMismatch("point has " + std::to_string(p.values.size() - system.size()) +
                           " extra coordinate(s) beyond the ground set",
                       "#" + std::to_string(system.size()));
}

std::string name_of(const ShiftedSystem& system, int index) {
  return index == kDegreeSlot ? std::string("-inf") : system.ground()[index];
}

Int value_at(const LatticePoint& p, int index) {
  return index == kDegreeSlot ? p.degree : p.values[index];
}

}  // namespace

Rational Rational::make(Int num, Int den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  if (auto c = a.values <=> b.values; c != 0) return c;
  return a.degree <=> b.degree;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = checked_add(values[i], other.values[i]);
  degree = checked_add(degree, other.degree);
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) { return *this += -other; }

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = *this;
  for (auto& v : r.values) v = checked_mul(v, -1);
  r.degree = checked_mul(r.degree, -1);
  return r;
}

LatticePoint operator*(Int k, LatticePoint a) {
  for (auto& v : a.values) v = checked_mul(k, v);
  a.degree = checked_mul(k, a.degree);
  return a;
}

ShiftedSystem::ShiftedSystem(std::vector<std::string> ground, std::vector<int> lower_bound_targets,
                             std::vector<CoverConstraint> covers, std::vector<SumConstraint> sums)
    : ground_(std::move(ground)),
      targets_(std::move(lower_bound_targets)),
      covers_(std::move(covers)),
      sums_(std::move(sums)) {
  const int n = static_cast<int>(ground_.size());
  std::set<std::string> seen;
  for (const auto& id : ground_) {
    if (!seen.insert(id).second) throw InvalidInput("duplicate ground element '" + id + "'");
  }
  auto in_ground = [n](int i) { return i >= 0 && i < n; };
  std::set<int> target_set;
  for (int t : targets_) {
    if (!in_ground(t)) throw InvalidInput("lower-bound target index out of range");
    if (!target_set.insert(t).second) throw InvalidInput("duplicate lower-bound target");
  }
  std::vector<std::vector<int>> down(n);  // above -> below, ground only
  std::vector<int> indegree(n, 0);
  for (const auto& c : covers_) {
    if (!in_ground(c.above)) throw InvalidInput("cover constraint: upper element out of range");
    if (c.below != kDegreeSlot && !in_ground(c.below)) {
      throw InvalidInput("cover constraint: lower element out of range");
    }
    if (c.below == c.above) throw InvalidInput("cover constraint relates an element to itself");
    if (c.below != kDegreeSlot) {
      down[c.above].push_back(c.below);
      ++indegree[c.below];
    }
  }
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int b : down[queue[h]]) {
      if (--indegree[b] == 0) queue.push_back(b);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw InvalidInput("cover constraints contain a cycle");
  for (auto& s : sums_) {
    s.coefficient = Rational::make(s.coefficient.num, s.coefficient.den);
    if (s.coefficient.num <= 0) throw InvalidInput("sum constraint coefficient must be positive");
    std::set<int> members;
    for (int m : s.members) {
      if (!in_ground(m)) throw InvalidInput("sum constraint member out of range");
      if (!members.insert(m).second) throw InvalidInput("sum constraint lists a member twice");
    }
  }
}

std::optional<int> ShiftedSystem::index_of(const std::string& id) const {
  auto it = std::find(ground_.begin(), ground_.end(), id);
  if (it == ground_.end()) return std::nullopt;
  return static_cast<int>(it - ground_.begin());
}

LatticePoint ShiftedSystem::point(const std::map<std::string, Int>& values, Int degree) const {
  LatticePoint p;
  p.degree = degree;
  p.values.reserve(ground_.size());
  for (const auto& id : ground_) {
    auto it = values.find(id);
    if (it == values.end()) throw DomainMismatch("no value given for element '" + id + "'", id);
    p.values.push_back(it->second);
  }
  for (const auto& [id, _] : values) {
    if (!index_of(id)) throw DomainMismatch("'" + id + "' is not a ground element", id);
  }
  return p;
}

LatticePoint ShiftedSystem::uniform(Int value, Int degree) const {
  return LatticePoint{std::vector<Int>(ground_.size(), value), degree};
}

std::string ShiftedSystem::describe_point(const LatticePoint& p) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i) os << ", ";
    os << (i < ground_.size() ? ground_[i] : "#" + std::to_string(i)) << '=' << p.values[i];
  }
  os << (p.values.empty() ? "" : "; ") << "deg=" << p.degree << ')';
  return os.str();
}

std::optional<std::string> first_violation(const ShiftedSystem& system, Int shift,
                                           const LatticePoint& point) {
  require_domain(system, point);
  std::ostringstream os;
  for (int t : system.lower_bound_targets()) {
    if (point.values[t] < shift) {
      os << "lower bound on " << system.ground()[t] << ": " << point.values[t] << " < " << shift;
      return os.str();
    }
  }
  for (const auto& c : system.cover_constraints()) {
    const Int lhs = value_at(point, c.below);
    const Int rhs = checked_add(value_at(point, c.above), shift);
    if (lhs < rhs) {
      os << "cover " << name_of(system, c.below) << " < " << name_of(system, c.above) << ": "
         << lhs << " < " << value_at(point, c.above) << " + " << shift;
      return os.str();
    }
  }
  for (const auto& s : system.sum_constraints()) {
    Int sum = shift;
    for (int m : s.members) sum = checked_add(sum, point.values[m]);
    // sum ≤ (p/q)·deg  ⇔  q·sum ≤ p·deg
    if (checked_mul(s.coefficient.den, sum) > checked_mul(s.coefficient.num, point.degree)) {
      os << "sum over {";
      for (std::size_t i = 0; i < s.members.size(); ++i) {
        os << (i ? "," : "") << system.ground()[s.members[i]];
      }
      os << "} + " << shift << " = " << sum << " exceeds " << s.coefficient.num;
      if (s.coefficient.den != 1) os << '/' << s.coefficient.den;
      os << " * " << point.degree;
      return os.str();
    }
  }
  if (system.size() == 0 && point.degree < 0) {
    os << "degree " << point.degree << " < 0 on an empty ground set";
    return os.str();
  }
  return std::nullopt;
}

bool check_membership(const ShiftedSystem& system, Int shift, const LatticePoint& point) {
  return !first_violation(system, shift, point).has_value();
}

std::optional<LatticePoint> find_split(const ShiftedSystem& system, const LatticePoint& target,
                                       Int left_shift, Int right_shift,
                                       std::optional<Int> right_min_degree) {
  require_domain(system, target);
  const int vars = static_cast<int>(system.size()) + 1;
  Propagator prop(vars,
                  split_constraints(system, target, left_shift, right_shift, right_min_degree));
  auto solution = prop.first_solution(std::vector<Interval>(vars));
  if (!solution) return std::nullopt;
  LatticePoint left;
  left.values.assign(solution->begin(), solution->end() - 1);
  left.degree = solution->back();
  return left;
}

std::optional<DecompositionWitness> decompose(const ShiftedSystem& system, const LatticePoint& mu,
                                              Engine engine) {
  if (auto v = first_violation(system, 0, mu)) {
    throw PreconditionError("decompose: point " + system.describe_point(mu) +
                                " is not a ring monomial",
                            *v);
  }
  if (engine == Engine::Oracle) return decompose_by_box(system, mu);
  auto eta = find_split(system, mu, 1, -1);
  if (!eta) return std::nullopt;
  DecompositionWitness w;
  w.zeta = mu - *eta;
  w.eta = std::move(*eta);
  w.power = 1;
  return w;
}

std::optional<DecompositionWitness> radical_power_search(const ShiftedSystem& system,
                                                         const LatticePoint& mu, Int k_max,
                                                         Engine engine) {
  if (k_max < 1) throw PreconditionError("radical_power_search: k_max must be at least 1");
  if (auto v = first_violation(system, 0, mu)) {
    throw PreconditionError("radical_power_search: point " + system.describe_point(mu) +
                                " is not a ring monomial",
                            *v);
  }
  for (Int k = 1; k <= k_max; ++k) {
    if (auto w = decompose(system, k * mu, engine)) {
      w->power = k;
      return w;
    }
  }
  return std::nullopt;
}

std::vector<LatticePoint> enumerate_points(const ShiftedSystem& system, Int shift, Int degree) {
  const int n = static_cast<int>(system.size());
  Propagator prop(n + 1, membership_constraints(system, shift));
  std::vector<Interval> domains(n + 1);
  domains[n] = Interval{degree, degree};
  std::vector<LatticePoint> out;
  try {
    prop.for_each_solution(domains, [&](std::span<const Int> values) {
      out.push_back(LatticePoint{std::vector<Int>(values.begin(), values.end() - 1), degree});
    });
  } catch (const UnboundedEnumeration&) {
    throw UnboundedEnumeration("unbounded enumeration: shift " + std::to_string(shift) +
                               ", degree " + std::to_string(degree) +
                               " leaves a coordinate without finite bounds");
  }
  return out;
}

Int min_feasible_degree(const ShiftedSystem& system, Int shift) {
  const int n = static_cast<int>(system.size());
  std::vector<Int> least(n, kNegInf);
  for (int t : system.lower_bound_targets()) least[t] = std::max(least[t], shift);
  // Cover constraints are acyclic, so n + 1 passes reach the fixpoint.
  for (int pass = 0; pass <= n; ++pass) {
    bool moved = false;
    for (const auto& c : system.cover_constraints()) {
      if (c.below == kDegreeSlot || least[c.above] == kNegInf) continue;
      const Int bound = checked_add(least[c.above], shift);
      if (bound > least[c.below]) {
        least[c.below] = bound;
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (int i = 0; i < n; ++i) {
    if (least[i] == kNegInf) {
      throw UnboundedEnumeration("element '" + system.ground()[i] +
                                 "' has no lower bound at shift " + std::to_string(shift));
    }
  }
  Int degree = n == 0 ? 0 : kNegInf;
  for (const auto& c : system.cover_constraints()) {
    if (c.below == kDegreeSlot) degree = std::max(degree, checked_add(least[c.above], shift));
  }
  for (const auto& s : system.sum_constraints()) {
    Int sum = shift;
    for (int m : s.members) sum = checked_add(sum, least[m]);
    // p·deg ≥ q·sum  ⇔  deg ≥ ⌈q·sum / p⌉
    const Int scaled = checked_mul(s.coefficient.den, sum);
    const Int p = s.coefficient.num;
    Int q = scaled / p;
    if (scaled % p != 0 && scaled > 0) ++q;
    degree = std::max(degree, q);
  }
  if (degree == kNegInf) {
    throw UnboundedEnumeration("degree is unbounded below at shift " + std::to_string(shift));
  }
  return degree;
}

GeneratorDegrees generator_degrees(const ShiftedSystem& system, Int shift, Int degree_window) {
  if (degree_window < 0) throw PreconditionError("generator_degrees: negative window");
  GeneratorDegrees out;
  out.window_start = min_feasible_degree(system, shift);
  out.window_end = out.window_start + degree_window;
  for (Int d = out.window_start; d <= out.window_end; ++d) {
    const auto members = enumerate_points(system, shift, d);
    const bool has_generator = parallel_any_of(members.size(), [&](std::size_t i) {
      return !find_split(system, members[i], shift, 0, Int{1}).has_value();
    });
    if (has_generator) out.degrees.push_back(d);
  }
  return out;
}

}  // namespace ctrlab
