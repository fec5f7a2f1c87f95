#include "ctrlab/cycle.hpp"

#include <string>

#include "ctrlab/error.hpp"
#include "ctrlab/parallel.hpp"

namespace ctrlab {

CycleData cycle_data(int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3, got " + std::to_string(n));
  return CycleData{n, n % 2 == 1 ? (n - 1) / 2 : 0};
}

ShiftedSystem cycle_system(int n) {
  cycle_data(n);
  std::vector<std::string> ground;
  std::vector<int> targets;
  for (int i = 0; i < n; ++i) {
    ground.push_back("v" + std::to_string(i));
    targets.push_back(i);
  }
  std::vector<SumConstraint> sums;
  if (n == 3) {
    sums.push_back({{0, 1, 2}, Rational{1, 1}});
  } else {
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      sums.push_back({{std::min(i, j), std::max(i, j)}, Rational{1, 1}});
    }
    if (n % 2 == 1) sums.push_back({targets, Rational::make((n - 1) / 2)});
  }
  return ShiftedSystem(std::move(ground), std::move(targets), {}, std::move(sums));
}

bool minimal_prime_member(const ShiftedSystem& system, int n, int i, const LatticePoint& mu) {
  if (n < 7 || n % 2 == 0) {
    throw PreconditionError("minimal primes are defined here for odd n >= 7, got n = " +
                            std::to_string(n));
  }
  if (static_cast<int>(system.size()) != n) throw PreconditionError("system is not an n-cycle");
  if (auto why = first_violation(system, 0, mu)) {
    throw PreconditionError("point is not a ring monomial", *why);
  }
  const int idx = ((i % n) + n) % n;
  if (mu.values[idx] > 0) return true;
  Int total = 0;
  for (Int x : mu.values) total += x;
  const Int ell = (n - 1) / 2;
  return total < ell * mu.degree;
}

bool minimal_prime_member(int n, int i, const LatticePoint& mu) {
  return minimal_prime_member(cycle_system(n), n, i, mu);
}

LatticePoint non_ctr_witness(int ell) {
  if (ell < 4) {
    throw PreconditionError("non_ctr_witness needs ell >= 4, got " + std::to_string(ell));
  }
  LatticePoint mu{std::vector<Int>(2 * ell + 1, 0), 1};
  for (int j = 2; j <= 2 * ell - 2; j += 2) mu.values[j] = 1;
  return mu;
}

namespace {

std::vector<bool> prime_profile(const ShiftedSystem& system, int n, const LatticePoint& mu) {
  std::vector<bool> out(n);
  for (int i = 0; i < n; ++i) out[i] = minimal_prime_member(system, n, i, mu);
  return out;
}

bool all_true(const std::vector<bool>& v) {
  for (bool b : v) {
    if (!b) return false;
  }
  return true;
}

}  // namespace

Verdict cycle_ctr_verdict(int n, Int degree_bound, Int power_bound, Engine engine) {
  const CycleData data = cycle_data(n);
  if (degree_bound < 1) throw PreconditionError("degree bound must be at least 1");
  if (power_bound == 0) power_bound = n + 2;
  if (power_bound < 1) throw PreconditionError("power bound must be at least 1");
  const ShiftedSystem system = cycle_system(n);
  Verdict v;
  v.ground = system.ground();
  const LatticePoint zero = system.zero(0);
  auto unit = decompose(system, zero, engine);

  if (n % 2 == 0 || n <= 5) {
    if (!unit) throw Error("cycle of length " + std::to_string(n) + " failed the Gorenstein check");
    v.kind = VerdictKind::Gorenstein;
    v.witness = DecompositionCertificate{zero, *unit};
    return v;
  }
  if (unit) throw Error("odd cycle of length >= 7 decomposed the zero point");

  if (n == 7) {
    // Every member of the intersection of the p_i up to the bound must be in
    // the trace, and no member outside it may be.
    const auto candidates = members_up_to(system, 0, 0, degree_bound);
    const auto outcomes = parallel_map<std::optional<DecompositionWitness>>(
        candidates.size(), [&](std::size_t i) { return decompose(system, candidates[i], engine); });
    ScanCertificate scan;
    scan.degree_bound = degree_bound;
    scan.power_bound = power_bound;
    scan.candidates = static_cast<Int>(candidates.size());
    scan.gorenstein_refuted = true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const bool radical = all_true(prime_profile(system, n, candidates[i]));
      if (outcomes[i]) ++scan.in_trace;
      if (radical) ++scan.radical_candidates;
      if (radical && !outcomes[i]) scan.radical_not_trace.push_back(candidates[i]);
      if (!radical && outcomes[i]) {
        throw Error("trace member outside the intersection of minimal primes: " +
                    system.describe_point(candidates[i]));
      }
    }
    v.bounds = Bounds{degree_bound, power_bound};
    v.at_bound = true;
    if (!scan.radical_not_trace.empty()) {
      v.kind = VerdictKind::NotCtr;
      v.notes.push_back("a radical member outside the trace was found for n = 7");
    } else {
      v.kind = VerdictKind::CtrNotGorenstein;
      v.notes.push_back("every member of the intersection of the minimal primes up to degree " +
                        std::to_string(degree_bound) + " lies in the trace");
    }
    v.witness = std::move(scan);
    return v;
  }

  const LatticePoint mu = non_ctr_witness(data.ell);
  if (decompose(system, mu, engine)) throw Error("the non-CTR witness decomposed");
  NonTraceCertificate cert{mu, radical_power_search(system, mu, power_bound, engine),
                           prime_profile(system, n, mu)};
  if (!all_true(cert.prime_membership)) throw Error("the non-CTR witness left a minimal prime");
  v.kind = VerdictKind::NotCtr;
  v.bounds.power_bound = power_bound;
  if (!cert.power) {
    v.notes.push_back("no power of the witness up to " + std::to_string(power_bound) +
                      " was found in the trace; radical membership rests on the minimal primes");
  }
  v.witness = std::move(cert);
  return v;
}

}  // namespace ctrlab
