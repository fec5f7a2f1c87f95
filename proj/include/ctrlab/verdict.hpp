#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctrlab/lattice.hpp"

namespace ctrlab {

enum class VerdictKind { Gorenstein, CtrNotGorenstein, NotCtr, InconclusiveAtBound };

std::string_view to_string(VerdictKind kind);
std::optional<VerdictKind> verdict_kind_from_string(std::string_view name);

struct Bounds {
  std::optional<Int> degree_bound;
  std::optional<Int> power_bound;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// μ = η + ζ (times `power`). For Gorenstein verdicts μ is the zero point.
struct DecompositionCertificate {
  LatticePoint mu;
  DecompositionWitness witness;
  friend bool operator==(const DecompositionCertificate&, const DecompositionCertificate&) = default;
};

/// μ ∈ S(0) with no decomposition; `power` (when found) puts μ in the radical.
struct NonTraceCertificate {
  LatticePoint mu;
  std::optional<DecompositionWitness> power;
  std::vector<bool> prime_membership;  // odd cycles: μ ∈ p_i for every i
  friend bool operator==(const NonTraceCertificate&, const NonTraceCertificate&) = default;
};

/// Outcome of an exhaustive scan of ring monomials up to a degree bound.
struct ScanCertificate {
  Int degree_bound = 0;
  Int power_bound = 0;
  Int candidates = 0;         // ring monomials scanned
  Int in_trace = 0;           // of which decompose
  Int radical_candidates = 0; // odd cycles: of which lie in every p_i
  bool gorenstein_refuted = false;  // the zero point does not decompose
  std::vector<LatticePoint> radical_not_trace;  // every hit found by the scan
  friend bool operator==(const ScanCertificate&, const ScanCertificate&) = default;
};

struct SchubertCertificate {
  std::vector<Int> kappa;
  Int kappa_max = 0;
  Int kappa_min = 0;
  std::vector<Int> i1, i2, i_prime, i_double_prime;
  std::vector<std::pair<Int, std::vector<Int>>> sigmas;  // (i, σ_i) for i ∈ I′ ∪ I″
  std::optional<Int> trace_generator_degree;              // κ − κ′ when ≥ 2
  std::optional<Int> radical_power;                       // γ^(κ−κ′) lies in the trace
  bool polynomial_ring = false;                           // degenerate γ
  friend bool operator==(const SchubertCertificate&, const SchubertCertificate&) = default;
};

struct DeterminantalCertificate {
  Int m = 0, n = 0, t = 0;
  Int trace_power = 0;  // trace = I_{t−1}^{n−m}
  friend bool operator==(const DeterminantalCertificate&, const DeterminantalCertificate&) = default;
};

using Witness = std::variant<std::monostate, DecompositionCertificate, NonTraceCertificate,
                             ScanCertificate, SchubertCertificate, DeterminantalCertificate>;

struct Verdict {
  VerdictKind kind = VerdictKind::InconclusiveAtBound;
  bool at_bound = false;  // certified only up to `bounds`
  Bounds bounds;
  std::vector<std::string> ground;  // coordinate names for lattice witnesses
  Witness witness;
  std::vector<std::string> notes;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace ctrlab
