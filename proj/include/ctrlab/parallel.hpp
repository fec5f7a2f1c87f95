#pragma once

// Data-parallel kernels over candidate lists. Each kernel has a serial
// reference path selected by Schedule::Serial; both produce identical,
// index-ordered results.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

#include <omp.h>

#include "ctrlab/lattice.hpp"
#include "ctrlab/verdict.hpp"

namespace ctrlab {

enum class Schedule { Serial, Parallel };

/// Worker count: omp_get_max_threads(), capped by CTRLAB_THREADS when set.
int configured_threads();

/// results[i] = fn(i). Exceptions are rethrown after the loop, lowest index first.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, Fn&& fn, Schedule schedule = Schedule::Parallel) {
  std::vector<R> results(count);
  if (schedule == Schedule::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(configured_threads())
  for (long long i = 0; i < n; ++i) {
    try {
      results[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Lowest index i with pred(i), or nullopt. Deterministic under any schedule.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, Pred&& pred,
                                               Schedule schedule = Schedule::Parallel) {
  if (schedule == Schedule::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> best{count};
  std::vector<std::exception_ptr> errors(count);
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(configured_threads())
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(idx)) {
        std::size_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
      }
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  const std::size_t found = best.load();
  for (std::size_t i = 0; i < std::min(found, count); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  if (found == count) return std::nullopt;
  return found;
}

template <class Pred>
bool parallel_any_of(std::size_t count, Pred&& pred, Schedule schedule = Schedule::Parallel) {
  return parallel_find_first(count, std::forward<Pred>(pred), schedule).has_value();
}

/// Trace status of one ring monomial.
struct CandidateOutcome {
  std::optional<DecompositionWitness> trace;  // decomposition of μ itself
  std::optional<DecompositionWitness> power;  // smallest power k ≥ 2 up to k_max, if μ ∉ trace
  friend bool operator==(const CandidateOutcome&, const CandidateOutcome&) = default;
};

/// Decomposes every candidate; those outside the trace get a power search up to k_max.
std::vector<CandidateOutcome> classify_candidates(const ShiftedSystem& system,
                                                  const std::vector<LatticePoint>& candidates,
                                                  Int k_max, Engine engine = Engine::Pruned,
                                                  Schedule schedule = Schedule::Parallel);

/// enumerate_points split on the first coordinate's values; same output order.
std::vector<LatticePoint> enumerate_points_parallel(const ShiftedSystem& system, Int shift,
                                                    Int degree,
                                                    Schedule schedule = Schedule::Parallel);

/// All members of S(shift) with degree in [min_degree, max_degree], ascending
/// by degree then lexicographically.
std::vector<LatticePoint> members_up_to(const ShiftedSystem& system, Int shift, Int min_degree,
                                        Int max_degree, Schedule schedule = Schedule::Parallel);

/// Classifies every ring monomial (member of S(0)) of degree 0..degree_bound.
/// `radical_not_trace` lists, in scan order, those outside the trace with a
/// power in the trace; `gorenstein_refuted` is set when the zero point fails.
ScanCertificate scan_ring_monomials(const ShiftedSystem& system, Int degree_bound,
                                    Int power_bound, Engine engine = Engine::Pruned,
                                    Schedule schedule = Schedule::Parallel);

}  // namespace ctrlab
