#include "ctrlab/propagator.hpp"

#include <deque>

#include "ctrlab/error.hpp"

namespace ctrlab {
namespace {

using Wide = __int128;

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Smallest value of coef·x over the interval, or nullopt for −∞.
std::optional<Wide> min_term(Int coef, const Interval& d) {
  if (coef > 0) {
    if (d.lo == kNegInf) return std::nullopt;
    return static_cast<Wide>(coef) * d.lo;
  }
  if (d.hi == kPosInf) return std::nullopt;
  return static_cast<Wide>(coef) * d.hi;
}

Int clamp_to_int(Wide v) {
  // Bounds far outside the searchable range saturate to the sentinels'
  // neighbours; they never become the sentinels themselves.
  constexpr Wide lo = static_cast<Wide>(kNegInf) + 1;
  constexpr Wide hi = static_cast<Wide>(kPosInf) - 1;
  if (v < lo) return static_cast<Int>(lo);
  if (v > hi) return static_cast<Int>(hi);
  return static_cast<Int>(v);
}

int slot(int index, int n) { return index == kDegreeSlot ? n : index; }

}  // namespace

Propagator::Propagator(int num_vars, std::vector<LinearConstraint> constraints)
    : num_vars_(num_vars), constraints_(std::move(constraints)), watches_(num_vars) {
  for (int ci = 0; ci < static_cast<int>(constraints_.size()); ++ci) {
    for (const auto& t : constraints_[ci].terms) {
      if (t.var < 0 || t.var >= num_vars_) throw Error("propagator: variable index out of range");
      watches_[t.var].push_back(ci);
    }
  }
}

bool Propagator::propagate_one(const LinearConstraint& c, std::vector<Interval>& domains,
                               std::vector<int>& changed) const {
  Wide finite_sum = 0;
  int open_terms = 0;
  int open_index = -1;
  for (int i = 0; i < static_cast<int>(c.terms.size()); ++i) {
    const auto& t = c.terms[i];
    if (t.coef == 0) continue;
    auto m = min_term(t.coef, domains[t.var]);
    if (m) {
      finite_sum += *m;
    } else {
      ++open_terms;
      open_index = i;
    }
  }
  if (open_terms == 0 && finite_sum > c.bound) return false;
  if (open_terms > 1) return true;

  for (int i = 0; i < static_cast<int>(c.terms.size()); ++i) {
    const auto& t = c.terms[i];
    if (t.coef == 0) continue;
    if (open_terms == 1 && i != open_index) continue;
    Wide rest = finite_sum;
    if (open_terms == 0) rest -= *min_term(t.coef, domains[t.var]);
    const Wide slack = static_cast<Wide>(c.bound) - rest;
    Interval& d = domains[t.var];
    bool moved = false;
    if (t.coef > 0) {
      const Int hi = clamp_to_int(floor_div(slack, t.coef));
      if (hi < d.hi) {
        d.hi = hi;
        moved = true;
      }
    } else {
      const Int lo = clamp_to_int(ceil_div(slack, t.coef));
      if (lo > d.lo) {
        d.lo = lo;
        moved = true;
      }
    }
    if (d.empty()) return false;
    // Only the bound opposite to the one feeding `finite_sum` moves, so the
    // sum stays exact for the remaining terms.
    if (moved) changed.push_back(t.var);
  }
  return true;
}

bool Propagator::propagate(std::vector<Interval>& domains) const {
  for (const auto& d : domains) {
    if (d.empty()) return false;
  }
  std::deque<int> queue;
  std::vector<char> queued(constraints_.size(), 1);
  for (int ci = 0; ci < static_cast<int>(constraints_.size()); ++ci) queue.push_back(ci);
  std::vector<int> changed;
  while (!queue.empty()) {
    const int ci = queue.front();
    queue.pop_front();
    queued[ci] = 0;
    changed.clear();
    const auto& c = constraints_[ci];
    if (c.terms.empty()) {
      if (c.bound < 0) return false;
      continue;
    }
    if (!propagate_one(c, domains, changed)) return false;
    for (int v : changed) {
      for (int other : watches_[v]) {
        if (!queued[other]) {
          queued[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  return true;
}

bool Propagator::search(std::vector<Interval>& domains, int first_open,
                        const std::function<bool(std::span<const Int>)>& visit) const {
  int var = first_open;
  while (var < num_vars_ && domains[var].fixed()) ++var;
  if (var == num_vars_) {
    std::vector<Int> values(num_vars_);
    for (int i = 0; i < num_vars_; ++i) values[i] = domains[i].lo;
    return visit(values);
  }
  if (!domains[var].bounded()) {
    throw UnboundedEnumeration("search variable " + std::to_string(var) +
                               " has no finite bound after propagation");
  }
  const Interval range = domains[var];
  for (Int v = range.lo; v <= range.hi; ++v) {
    std::vector<Interval> child = domains;
    child[var] = Interval{v, v};
    if (!propagate(child)) continue;
    if (search(child, var + 1, visit)) return true;
  }
  return false;
}

std::optional<std::vector<Int>> Propagator::first_solution(std::vector<Interval> domains) const {
  if (static_cast<int>(domains.size()) != num_vars_) throw Error("propagator: domain size mismatch");
  if (!propagate(domains)) return std::nullopt;
  std::optional<std::vector<Int>> found;
  search(domains, 0, [&](std::span<const Int> values) {
    found.emplace(values.begin(), values.end());
    return true;
  });
  return found;
}

void Propagator::for_each_solution(
    std::vector<Interval> domains, const std::function<void(std::span<const Int>)>& visit) const {
  if (static_cast<int>(domains.size()) != num_vars_) throw Error("propagator: domain size mismatch");
  if (!propagate(domains)) return;
  search(domains, 0, [&](std::span<const Int> values) {
    visit(values);
    return false;
  });
}

namespace {

std::vector<LinearConstraint> membership_constraints_side(const ShiftedSystem& system, Int shift,
                                                          ConstraintOrigin::Side side) {
  using Family = ConstraintOrigin::Family;
  const int n = static_cast<int>(system.size());
  std::vector<LinearConstraint> out;
  const auto& targets = system.lower_bound_targets();
  for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
    out.push_back({{{targets[i], -1}}, -shift, {Family::Target, side, i}});
  }
  const auto& covers = system.cover_constraints();
  for (int i = 0; i < static_cast<int>(covers.size()); ++i) {
    // ν(above) − ν(below) ≤ −n
    out.push_back({{{slot(covers[i].above, n), 1}, {slot(covers[i].below, n), -1}},
                   -shift,
                   {Family::Cover, side, i}});
  }
  const auto& sums = system.sum_constraints();
  for (int i = 0; i < static_cast<int>(sums.size()); ++i) {
    // q·ν⁺(S) − p·ν(−∞) ≤ −q·n
    const Int p = sums[i].coefficient.num;
    const Int q = sums[i].coefficient.den;
    LinearConstraint c;
    for (int m : sums[i].members) c.terms.push_back({m, q});
    c.terms.push_back({n, -p});
    c.bound = -q * shift;
    c.origin = {Family::Sum, side, i};
    out.push_back(std::move(c));
  }
  if (n == 0) {
    // Empty ground: S(n) = {ν(−∞) ≥ 0} for every n.
    out.push_back({{{0, -1}}, 0, {Family::Degree, side, 0}});
  }
  return out;
}

}  // namespace

std::vector<LinearConstraint> membership_constraints(const ShiftedSystem& system, Int shift) {
  return membership_constraints_side(system, shift, ConstraintOrigin::Side::Fixed);
}

std::vector<LinearConstraint> split_constraints(const ShiftedSystem& system,
                                                const LatticePoint& target, Int left_shift,
                                                Int right_shift,
                                                std::optional<Int> right_min_degree) {
  const int n = static_cast<int>(system.size());
  auto out = membership_constraints_side(system, left_shift, ConstraintOrigin::Side::Left);
  // ρ = target − ν'. A constraint Σ a_i ρ_i ≤ b becomes Σ (−a_i) ν'_i ≤ b − Σ a_i target_i.
  auto right = membership_constraints_side(system, right_shift, ConstraintOrigin::Side::Right);
  for (auto& c : right) {
    Wide shift_by = 0;
    for (auto& t : c.terms) {
      const Int value = t.var == n ? target.degree : target.values[t.var];
      shift_by += static_cast<Wide>(t.coef) * value;
      t.coef = -t.coef;
    }
    c.bound = clamp_to_int(static_cast<Wide>(c.bound) - shift_by);
    out.push_back(std::move(c));
  }
  if (right_min_degree) {
    out.push_back({{{n, 1}},
                   target.degree - *right_min_degree,
                   {ConstraintOrigin::Family::Degree, ConstraintOrigin::Side::Right, 1}});
  }
  return out;
}

}  // namespace ctrlab
