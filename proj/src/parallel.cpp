#include "ctrlab/parallel.hpp"

#include <cstdlib>
#include <string>

#include "ctrlab/error.hpp"
#include "ctrlab/propagator.hpp"

namespace ctrlab {

int configured_threads() {
  int threads = omp_get_max_threads();
  if (const char* env = std::getenv("CTRLAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) threads = std::min(threads, cap);
    } catch (const std::exception&) {
      // Unparseable values are ignored.
    }
  }
  return std::max(threads, 1);
}

std::vector<CandidateOutcome> classify_candidates(const ShiftedSystem& system,
                                                  const std::vector<LatticePoint>& candidates,
                                                  Int k_max, Engine engine, Schedule schedule) {
  return parallel_map<CandidateOutcome>(
      candidates.size(),
      [&](std::size_t i) {
        CandidateOutcome out;
        const LatticePoint& mu = candidates[i];
        out.trace = decompose(system, mu, engine);
        if (out.trace) return out;
        for (Int k = 2; k <= k_max; ++k) {
          if (auto w = decompose(system, k * mu, engine)) {
            w->power = k;
            out.power = std::move(w);
            break;
          }
        }
        return out;
      },
      schedule);
}

std::vector<LatticePoint> enumerate_points_parallel(const ShiftedSystem& system, Int shift,
                                                    Int degree, Schedule schedule) {
  const int n = static_cast<int>(system.size());
  if (n == 0) return enumerate_points(system, shift, degree);
  Propagator prop(n + 1, membership_constraints(system, shift));
  std::vector<Interval> root(n + 1);
  root[n] = Interval{degree, degree};
  if (!prop.propagate(root)) return {};
  if (!root[0].bounded()) {
    throw UnboundedEnumeration("unbounded enumeration: shift " + std::to_string(shift) +
                               ", degree " + std::to_string(degree) +
                               " leaves a coordinate without finite bounds");
  }
  const Interval first = root[0];
  const auto width = static_cast<std::size_t>(first.hi - first.lo + 1);
  auto slices = parallel_map<std::vector<LatticePoint>>(
      width,
      [&](std::size_t i) {
        std::vector<Interval> domains = root;
        domains[0] = Interval{first.lo + static_cast<Int>(i), first.lo + static_cast<Int>(i)};
        std::vector<LatticePoint> out;
        prop.for_each_solution(domains, [&](std::span<const Int> values) {
          out.push_back(LatticePoint{std::vector<Int>(values.begin(), values.end() - 1), degree});
        });
        return out;
      },
      schedule);
  std::vector<LatticePoint> all;
  for (auto& s : slices) {
    all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return all;
}

std::vector<LatticePoint> members_up_to(const ShiftedSystem& system, Int shift, Int min_degree,
                                        Int max_degree, Schedule schedule) {
  std::vector<LatticePoint> all;
  for (Int d = min_degree; d <= max_degree; ++d) {
    auto slice = enumerate_points_parallel(system, shift, d, schedule);
    all.insert(all.end(), std::make_move_iterator(slice.begin()),
               std::make_move_iterator(slice.end()));
  }
  return all;
}

ScanCertificate scan_ring_monomials(const ShiftedSystem& system, Int degree_bound,
                                    Int power_bound, Engine engine, Schedule schedule) {
  ScanCertificate scan;
  scan.degree_bound = degree_bound;
  scan.power_bound = power_bound;
  const auto candidates = members_up_to(system, 0, 0, degree_bound, schedule);
  const auto outcomes = classify_candidates(system, candidates, power_bound, engine, schedule);
  scan.candidates = static_cast<Int>(candidates.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].trace) ++scan.in_trace;
    if (outcomes[i].power) scan.radical_not_trace.push_back(candidates[i]);
    if (!outcomes[i].trace && candidates[i] == system.zero(0)) scan.gorenstein_refuted = true;
  }
  return scan;
}

}  // namespace ctrlab
