#include "ctrlab/schubert.hpp"

#include <algorithm>
#include <string>

#include "ctrlab/error.hpp"

namespace ctrlab {
namespace {

std::string render(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void require_shape(const SchubertIndex& d, const SchubertIndex& e) {
  if (d.m() != e.m() || d.n() != e.n()) {
    throw InvalidInput("shape mismatch: Γ(" + std::to_string(d.m()) + "×" + std::to_string(d.n()) +
                       ") vs Γ(" + std::to_string(e.m()) + "×" + std::to_string(e.n()) + ")");
  }
}

}  // namespace

SchubertIndex::SchubertIndex(int m, int n, std::vector<int> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
  if (m < 1 || n < m) {
    throw InvalidInput("need 1 <= m <= n, got m = " + std::to_string(m) + ", n = " +
                       std::to_string(n));
  }
  if (static_cast<int>(entries_.size()) != m) {
    throw InvalidInput("gamma has " + std::to_string(entries_.size()) + " entries, expected m = " +
                       std::to_string(m));
  }
  for (int j = 0; j < m; ++j) {
    if (entries_[j] < 1 || entries_[j] > n) {
      throw InvalidInput("gamma entry " + std::to_string(j + 1) + " = " +
                         std::to_string(entries_[j]) + " is outside [1, " + std::to_string(n) +
                         "]");
    }
    if (j > 0 && entries_[j] <= entries_[j - 1]) {
      throw InvalidInput("gamma " + render(entries_) + " is not strictly increasing at entry " +
                         std::to_string(j + 1));
    }
  }
}

int SchubertIndex::a(int j) const {
  if (j == m_ + 1) return n_ + 1;
  return entries_.at(j - 1);
}

bool SchubertIndex::leq(const SchubertIndex& other) const {
  require_shape(*this, other);
  for (int j = 0; j < m_; ++j) {
    if (entries_[j] > other.entries_[j]) return false;
  }
  return true;
}

bool SchubertIndex::degenerate() const { return entries_.front() == n_ - m_ + 1; }

std::vector<SchubertIndex> all_indices(int m, int n) {
  std::vector<SchubertIndex> out;
  std::vector<int> c(m);
  for (int j = 0; j < m; ++j) c[j] = j + 1;
  while (true) {
    out.emplace_back(m, n, c);
    int j = m - 1;
    while (j >= 0 && c[j] == n - m + j + 1) --j;
    if (j < 0) break;
    ++c[j];
    for (int r = j + 1; r < m; ++r) c[r] = c[r - 1] + 1;
  }
  return out;
}

std::vector<SchubertIndex> indices_above(const SchubertIndex& gamma) {
  std::vector<SchubertIndex> out;
  for (auto& d : all_indices(gamma.m(), gamma.n())) {
    if (gamma.leq(d)) out.push_back(std::move(d));
  }
  return out;
}

std::pair<SchubertIndex, SchubertIndex> join_meet(const SchubertIndex& d, const SchubertIndex& e) {
  require_shape(d, e);
  std::vector<int> hi(d.m()), lo(d.m());
  for (int j = 0; j < d.m(); ++j) {
    hi[j] = std::max(d.entries()[j], e.entries()[j]);
    lo[j] = std::min(d.entries()[j], e.entries()[j]);
  }
  return {SchubertIndex(d.m(), d.n(), hi), SchubertIndex(d.m(), d.n(), lo)};
}

BlockDecomposition block_decomposition(const SchubertIndex& gamma) {
  if (gamma.degenerate()) {
    throw PreconditionError("gamma " + render(gamma.entries()) +
                                " is [n-m+1, ..., n]: a polynomial ring in one variable",
                            "degenerate");
  }
  const int m = gamma.m();
  const int n = gamma.n();
  BlockDecomposition d;
  d.cut.push_back(0);
  for (int j = 1; j <= m; ++j) {
    if (gamma.a(j + 1) - gamma.a(j) >= 2) d.cut.push_back(j);
  }
  d.t = static_cast<int>(d.cut.size()) - 2;
  for (int i = 0; i <= d.t; ++i) {
    std::vector<int> block;
    for (int j = d.cut[i] + 1; j <= d.cut[i + 1]; ++j) block.push_back(gamma.a(j));
    d.blocks.push_back(std::move(block));
    std::vector<int> gap;
    const int k = d.cut[i + 1];
    for (int c = gamma.a(k) + 1; c < gamma.a(k + 1); ++c) gap.push_back(c);
    d.gaps.push_back(std::move(gap));
  }
  std::vector<int> last;
  for (int j = d.cut[d.t + 1] + 1; j <= m; ++j) last.push_back(gamma.a(j));
  if (!last.empty() && last.back() != n) throw Error("trailing block does not end at n");
  d.blocks.push_back(std::move(last));

  for (int i = 0; i <= d.t; ++i) {
    Int k = 0;
    for (int j = 0; j <= i; ++j) k += static_cast<Int>(d.blocks[j].size());
    for (int j = i; j <= d.t; ++j) k += static_cast<Int>(d.gaps[j].size());
    d.kappa.push_back(k);
  }
  d.kappa_max = *std::max_element(d.kappa.begin(), d.kappa.end());
  d.kappa_min = *std::min_element(d.kappa.begin(), d.kappa.end());
  return d;
}

FaceIndices face_indices(const SchubertIndex& gamma) {
  const BlockDecomposition d = block_decomposition(gamma);
  const int m = gamma.m();
  FaceIndices f;
  for (int i = 0; i <= d.t; ++i) {
    std::vector<int> z = gamma.entries();
    z[d.cut[i + 1] - 1] += 1;
    f.zetas.emplace_back(m, gamma.n(), std::move(z));
  }
  for (int i = 1; i <= d.t; ++i) {
    std::vector<int> s = gamma.entries();
    // Positions k(i)..k(i+1)−1 take a_{k(i)+1}..a_{k(i+1)}; position k(i+1) takes a_{k(i+1)}+1.
    for (int j = d.cut[i]; j < d.cut[i + 1]; ++j) s[j - 1] = gamma.a(j + 1);
    s[d.cut[i + 1] - 1] = gamma.a(d.cut[i + 1]) + 1;
    f.sigmas.emplace_back(m, gamma.n(), std::move(s));
  }
  return f;
}

bool in_omega(const SchubertIndex& gamma, const BlockDecomposition& d, int i,
              const SchubertIndex& b) {
  require_shape(gamma, b);
  if (i < 0 || i > d.t) throw PreconditionError("Omega index out of range: " + std::to_string(i));
  const int k = d.cut[i + 1];
  return b.a(k) == gamma.a(k);
}

bool in_theta(const SchubertIndex& gamma, const BlockDecomposition& d, int i,
              const SchubertIndex& b) {
  require_shape(gamma, b);
  if (i < 1 || i > d.t) throw PreconditionError("Theta index out of range: " + std::to_string(i));
  const int k = d.cut[i];
  return b.a(k) < gamma.a(k + 1);
}

IndexSets index_sets(const BlockDecomposition& d) {
  IndexSets s;
  for (int i = 0; i <= d.t; ++i) {
    if (d.kappa[i] == d.kappa_max) s.i1.push_back(i);
    if (d.kappa[i] == d.kappa_min) s.i2.push_back(i);
  }
  for (int i = 1; i <= d.t; ++i) {
    if (contains(s.i1, i) && contains(s.i2, i - 1)) s.i_prime.push_back(i);
    if (contains(s.i2, i) && contains(s.i1, i - 1)) s.i_double_prime.push_back(i);
  }
  return s;
}

std::pair<SchubertIndex, SchubertIndex> witness_pair(const SchubertIndex& gamma,
                                                     const SchubertIndex& beta) {
  require_shape(gamma, beta);
  const BlockDecomposition d = block_decomposition(gamma);
  if (d.kappa_max - d.kappa_min != 1) {
    throw PreconditionError("witness_pair needs kappa - kappa' = 1, got " +
                                std::to_string(d.kappa_max - d.kappa_min),
                            "kappa");
  }
  if (!gamma.leq(beta)) {
    throw PreconditionError("beta " + render(beta.entries()) + " is not >= gamma " +
                                render(gamma.entries()),
                            "beta >= gamma");
  }
  const IndexSets s = index_sets(d);
  std::vector<int> guarded = s.i_prime;
  guarded.insert(guarded.end(), s.i_double_prime.begin(), s.i_double_prime.end());
  std::sort(guarded.begin(), guarded.end());
  for (int i : guarded) {
    if (!in_theta(gamma, d, i, beta)) {
      throw PreconditionError("beta " + render(beta.entries()) + " is not in Theta_" +
                                  std::to_string(i) + ": b_" + std::to_string(d.cut[i]) +
                                  " >= a_" + std::to_string(d.cut[i] + 1),
                              "Theta_" + std::to_string(i));
    }
  }
  const int m = gamma.m();
  std::vector<int> c = gamma.entries();
  std::vector<int> cp = gamma.entries();
  for (int i = 0; i <= d.t; ++i) {
    const bool first = contains(s.i1, i);
    for (int j = d.cut[i] + 1; j <= d.cut[i + 1]; ++j) {
      // I₁ and I₂ cover 0..t, so each block lands in exactly one of H₁, H₂.
      if (first) {
        cp[j - 1] = beta.a(j);
      } else {
        c[j - 1] = beta.a(j);
      }
    }
  }
  return {SchubertIndex(m, gamma.n(), c), SchubertIndex(m, gamma.n(), cp)};
}

Verdict schubert_verdict(const SchubertIndex& gamma) {
  Verdict v;
  SchubertCertificate cert;
  if (gamma.degenerate()) {
    cert.polynomial_ring = true;
    v.kind = VerdictKind::Gorenstein;
    v.notes.push_back("polynomial ring in one variable");
    v.witness = cert;
    return v;
  }
  const BlockDecomposition d = block_decomposition(gamma);
  cert.kappa = d.kappa;
  cert.kappa_max = d.kappa_max;
  cert.kappa_min = d.kappa_min;
  const Int gap = d.kappa_max - d.kappa_min;
  if (gap == 0) {
    v.kind = VerdictKind::Gorenstein;
  } else if (gap == 1) {
    v.kind = VerdictKind::CtrNotGorenstein;
    const IndexSets s = index_sets(d);
    cert.i1.assign(s.i1.begin(), s.i1.end());
    cert.i2.assign(s.i2.begin(), s.i2.end());
    cert.i_prime.assign(s.i_prime.begin(), s.i_prime.end());
    cert.i_double_prime.assign(s.i_double_prime.begin(), s.i_double_prime.end());
    const FaceIndices f = face_indices(gamma);
    for (int i = 1; i <= d.t; ++i) {
      if (contains(s.i_prime, i) || contains(s.i_double_prime, i)) {
        const auto& e = f.sigmas[i - 1].entries();
        cert.sigmas.emplace_back(i, std::vector<Int>(e.begin(), e.end()));
      }
    }
    v.notes.push_back("trace is the intersection of the primes J(x; sigma_i), i in I' and I''");
  } else {
    v.kind = VerdictKind::NotCtr;
    cert.trace_generator_degree = gap;
    cert.radical_power = gap;
    v.notes.push_back("trace generated in degree " + std::to_string(gap) + ", so gamma is not in it");
  }
  v.witness = std::move(cert);
  return v;
}

Verdict determinantal_ctr(int m, int n, int t) {
  if (!(2 <= t && t <= m && m <= n)) {
    throw InvalidInput("need 2 <= t <= m <= n, got m = " + std::to_string(m) + ", n = " +
                       std::to_string(n) + ", t = " + std::to_string(t));
  }
  Verdict v;
  const Int d = n - m;
  v.kind = d == 0 ? VerdictKind::Gorenstein
                  : (d == 1 ? VerdictKind::CtrNotGorenstein : VerdictKind::NotCtr);
  v.witness = DeterminantalCertificate{m, n, t, d};
  v.notes.push_back("trace = I_{t-1}^" + std::to_string(d) + ", with I_{t-1} prime");
  return v;
}

}  // namespace ctrlab
