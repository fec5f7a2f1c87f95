#include <gtest/gtest.h>

#include <random>

#include "ctrlab/error.hpp"
#include "ctrlab/schubert.hpp"

using namespace ctrlab;

namespace {

SchubertIndex idx(int m, int n, std::vector<int> a) { return SchubertIndex(m, n, std::move(a)); }

// κ recomputed from the entries alone: a left-to-right pass collects block
// sizes, a right-to-left pass collects gap sizes.
std::vector<Int> kappa_two_pass(const SchubertIndex& g) {
  const int m = g.m();
  std::vector<int> block_sizes{0};
  std::vector<int> gap_after;  // gap following each closed block
  for (int j = 1; j <= m; ++j) {
    ++block_sizes.back();
    const int next = j < m ? g.entries()[j] : g.n() + 1;
    if (next - g.entries()[j - 1] >= 2) {
      gap_after.push_back(next - g.entries()[j - 1] - 1);
      block_sizes.push_back(0);
    }
  }
  const int t = static_cast<int>(gap_after.size()) - 1;
  std::vector<Int> left(t + 1), right(t + 1);
  Int acc = 0;
  for (int i = 0; i <= t; ++i) left[i] = acc += block_sizes[i];
  acc = 0;
  for (int i = t; i >= 0; --i) right[i] = acc += gap_after[i];
  std::vector<Int> kappa(t + 1);
  for (int i = 0; i <= t; ++i) kappa[i] = left[i] + right[i];
  return kappa;
}

template <class T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST(SchubertIndex, Validation) {
  EXPECT_THROW(idx(2, 5, {4, 2}), InvalidInput);
  EXPECT_THROW(idx(2, 5, {3, 3}), InvalidInput);
  EXPECT_THROW(idx(2, 5, {0, 3}), InvalidInput);
  EXPECT_THROW(idx(2, 5, {3, 6}), InvalidInput);
  EXPECT_THROW(idx(3, 2, {1, 2, 3}), InvalidInput);
  EXPECT_THROW(idx(2, 5, {1}), InvalidInput);
  const auto g = idx(3, 7, {2, 3, 6});
  EXPECT_EQ(g.a(1), 2);
  EXPECT_EQ(g.a(4), 8);
  EXPECT_TRUE(idx(2, 5, {4, 5}).degenerate());
  EXPECT_FALSE(g.degenerate());
}

TEST(SchubertIndex, EnumerationCounts) {
  EXPECT_EQ(all_indices(3, 7).size(), 35u);
  EXPECT_EQ(all_indices(2, 5).size(), 10u);
  for (const auto& d : indices_above(idx(3, 7, {2, 3, 6}))) EXPECT_TRUE(idx(3, 7, {2, 3, 6}).leq(d));
}

TEST(JoinMeet, Examples) {
  const auto [j1, m1] = join_meet(idx(2, 5, {1, 4}), idx(2, 5, {2, 3}));
  EXPECT_EQ(j1, idx(2, 5, {2, 4}));
  EXPECT_EQ(m1, idx(2, 5, {1, 3}));
  const auto g = idx(3, 7, {2, 3, 6});
  EXPECT_EQ(join_meet(g, g), std::make_pair(g, g));
  const auto [j2, m2] = join_meet(idx(3, 7, {2, 3, 7}), idx(3, 7, {3, 4, 6}));
  EXPECT_EQ(j2, idx(3, 7, {3, 4, 7}));
  EXPECT_EQ(m2, idx(3, 7, {2, 3, 6}));
  EXPECT_THROW(join_meet(idx(2, 5, {1, 2}), idx(2, 6, {1, 2})), InvalidInput);
}

TEST(JoinMeet, LatticeLaws) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nd(2, 8);
    const int n = nd(rng);
    std::uniform_int_distribution<int> md(1, n);
    const int m = md(rng);
    const auto all = all_indices(m, n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const auto& x = all[pick(rng)];
    const auto& y = all[pick(rng)];
    const auto& z = all[pick(rng)];
    auto join = [](const SchubertIndex& a, const SchubertIndex& b) { return join_meet(a, b).first; };
    auto meet = [](const SchubertIndex& a, const SchubertIndex& b) { return join_meet(a, b).second; };
    EXPECT_EQ(join(x, join(y, z)), join(join(x, y), z));
    EXPECT_EQ(meet(x, meet(y, z)), meet(meet(x, y), z));
    EXPECT_EQ(join(x, meet(x, y)), x);
    EXPECT_EQ(meet(x, join(x, y)), x);
    EXPECT_EQ(meet(x, join(y, z)), join(meet(x, y), meet(x, z)));
    EXPECT_EQ(join(x, meet(y, z)), meet(join(x, y), join(x, z)));
    EXPECT_TRUE(meet(x, y).leq(x));
    EXPECT_TRUE(x.leq(join(x, y)));
  }
}

TEST(BlockDecomposition, Examples) {
  const auto d1 = block_decomposition(idx(3, 5, {1, 2, 3}));
  EXPECT_EQ(d1.t, 0);
  EXPECT_EQ(d1.blocks.front(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(d1.gaps, (std::vector<std::vector<int>>{{4, 5}}));
  EXPECT_EQ(d1.kappa, std::vector<Int>{5});

  const auto d2 = block_decomposition(idx(3, 7, {2, 3, 6}));
  EXPECT_EQ(d2.t, 1);
  EXPECT_EQ(d2.cut, (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(d2.blocks[0], (std::vector<int>{2, 3}));
  EXPECT_EQ(d2.blocks[1], (std::vector<int>{6}));
  EXPECT_TRUE(d2.blocks[2].empty());
  EXPECT_EQ(d2.gaps, (std::vector<std::vector<int>>{{4, 5}, {7}}));
  EXPECT_EQ(d2.kappa, (std::vector<Int>{5, 4}));
  EXPECT_EQ(d2.kappa_max, 5);
  EXPECT_EQ(d2.kappa_min, 4);

  const auto d3 = block_decomposition(idx(2, 7, {1, 5}));
  EXPECT_EQ(d3.kappa, (std::vector<Int>{6, 4}));
  EXPECT_EQ(d3.gaps, (std::vector<std::vector<int>>{{2, 3, 4}, {6, 7}}));

  const auto d4 = block_decomposition(idx(3, 7, {2, 6, 7}));
  EXPECT_EQ(d4.blocks.back(), (std::vector<int>{6, 7}));

  try {
    block_decomposition(idx(2, 5, {4, 5}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.constraint(), "degenerate");
  }
}

TEST(BlockDecomposition, KappaMatchesTwoPassOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= std::min(3, n); ++m) {
      for (const auto& g : all_indices(m, n)) {
        if (g.degenerate()) continue;
        const auto d = block_decomposition(g);
        EXPECT_EQ(d.kappa, kappa_two_pass(g));
        EXPECT_EQ(d.kappa_max, *std::max_element(d.kappa.begin(), d.kappa.end()));
        EXPECT_EQ(d.kappa_min, *std::min_element(d.kappa.begin(), d.kappa.end()));
      }
    }
  }
}

TEST(BlockDecomposition, StructuralInvariants) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= std::min(3, n); ++m) {
      for (const auto& g : all_indices(m, n)) {
        if (g.degenerate()) continue;
        const auto d = block_decomposition(g);
        ASSERT_EQ(static_cast<int>(d.blocks.size()), d.t + 2);
        ASSERT_EQ(static_cast<int>(d.gaps.size()), d.t + 1);
        std::size_t total = 0;
        std::vector<int> entries;
        for (const auto& b : d.blocks) {
          total += b.size();
          entries.insert(entries.end(), b.begin(), b.end());
          for (std::size_t j = 1; j < b.size(); ++j) EXPECT_EQ(b[j], b[j - 1] + 1);
        }
        EXPECT_EQ(entries, g.entries());
        for (const auto& c : d.gaps) {
          EXPECT_FALSE(c.empty());
          total += c.size();
        }
        // Blocks and gaps tile the columns a_1..n.
        EXPECT_EQ(static_cast<int>(total), n - g.a(1) + 1);
        EXPECT_EQ(d.blocks.back().empty(), g.a(m) < n);
      }
    }
  }
}

TEST(Verdict, CriterionTable) {
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m < n; ++m) {
      std::vector<int> first(m);
      for (int j = 0; j < m; ++j) first[j] = j + 1;
      EXPECT_EQ(schubert_verdict(idx(m, n, first)).kind, VerdictKind::Gorenstein) << m << "x" << n;
    }
  }
  const auto v = schubert_verdict(idx(3, 7, {2, 3, 6}));
  EXPECT_EQ(v.kind, VerdictKind::CtrNotGorenstein);
  const auto& c = std::get<SchubertCertificate>(v.witness);
  EXPECT_EQ(c.kappa, (std::vector<Int>{5, 4}));
  EXPECT_EQ(c.i1, std::vector<Int>{0});
  EXPECT_EQ(c.i2, std::vector<Int>{1});
  EXPECT_TRUE(c.i_prime.empty());
  EXPECT_EQ(c.i_double_prime, std::vector<Int>{1});
  ASSERT_EQ(c.sigmas.size(), 1u);
  EXPECT_EQ(c.sigmas.front(), (std::pair<Int, std::vector<Int>>{1, {2, 6, 7}}));

  const auto w = schubert_verdict(idx(2, 7, {1, 5}));
  EXPECT_EQ(w.kind, VerdictKind::NotCtr);
  const auto& wc = std::get<SchubertCertificate>(w.witness);
  EXPECT_EQ(wc.kappa, (std::vector<Int>{6, 4}));
  EXPECT_EQ(wc.trace_generator_degree, 2);
  EXPECT_EQ(wc.radical_power, 2);

  const auto p = schubert_verdict(idx(2, 5, {4, 5}));
  EXPECT_EQ(p.kind, VerdictKind::Gorenstein);
  EXPECT_TRUE(std::get<SchubertCertificate>(p.witness).polynomial_ring);
}

TEST(Verdict, KindFollowsKappaGap) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= std::min(3, n); ++m) {
      for (const auto& g : all_indices(m, n)) {
        const auto v = schubert_verdict(g);
        if (g.degenerate()) {
          EXPECT_EQ(v.kind, VerdictKind::Gorenstein);
          continue;
        }
        const auto d = block_decomposition(g);
        const Int gap = d.kappa_max - d.kappa_min;
        const auto expected = gap == 0   ? VerdictKind::Gorenstein
                              : gap == 1 ? VerdictKind::CtrNotGorenstein
                                         : VerdictKind::NotCtr;
        EXPECT_EQ(v.kind, expected);
      }
    }
  }
}

TEST(FaceIndices, Examples) {
  const auto g = idx(3, 7, {2, 3, 6});
  const auto f = face_indices(g);
  EXPECT_EQ(f.zetas, (std::vector<SchubertIndex>{idx(3, 7, {2, 4, 6}), idx(3, 7, {2, 3, 7})}));
  EXPECT_EQ(f.sigmas, std::vector<SchubertIndex>{idx(3, 7, {2, 6, 7})});
  const auto d = block_decomposition(g);
  EXPECT_TRUE(in_omega(g, d, 0, idx(3, 7, {2, 3, 7})));
  EXPECT_TRUE(in_theta(g, d, 1, idx(3, 7, {3, 4, 7})));
  EXPECT_FALSE(in_theta(g, d, 1, idx(3, 7, {3, 6, 7})));
}

TEST(FaceIndices, MembershipMatchesComplementOfUpSet) {
  // Ω_i = {δ ≥ γ : δ ≱ ζ_i} and Θ_i = {δ ≥ γ : δ ≱ σ_i}; both are poset ideals.
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= std::min(3, n); ++m) {
      for (const auto& g : all_indices(m, n)) {
        if (g.degenerate()) continue;
        const auto d = block_decomposition(g);
        const auto f = face_indices(g);
        const auto above = indices_above(g);
        for (const auto& delta : above) {
          for (int i = 0; i <= d.t; ++i) {
            EXPECT_EQ(in_omega(g, d, i, delta), !f.zetas[i].leq(delta));
          }
          for (int i = 1; i <= d.t; ++i) {
            EXPECT_EQ(in_theta(g, d, i, delta), !f.sigmas[i - 1].leq(delta));
          }
        }
        for (const auto& lo : above) {
          for (const auto& hi : above) {
            if (!lo.leq(hi)) continue;
            for (int i = 0; i <= d.t; ++i) {
              if (in_omega(g, d, i, hi)) {
                EXPECT_TRUE(in_omega(g, d, i, lo));
              }
            }
            for (int i = 1; i <= d.t; ++i) {
              if (in_theta(g, d, i, hi)) {
                EXPECT_TRUE(in_theta(g, d, i, lo));
              }
            }
          }
        }
        // ζ_{i−1}, ζ_i ≤ σ_i, hence Ω_{i−1}, Ω_i ⊆ Θ_i.
        for (int i = 1; i <= d.t; ++i) {
          EXPECT_TRUE(f.zetas[i - 1].leq(f.sigmas[i - 1]));
          EXPECT_TRUE(f.zetas[i].leq(f.sigmas[i - 1]));
        }
      }
    }
  }
}

TEST(WitnessPair, Examples) {
  const auto g = idx(3, 7, {2, 3, 6});
  EXPECT_EQ(witness_pair(g, idx(3, 7, {3, 4, 7})), std::make_pair(idx(3, 7, {2, 3, 7}), idx(3, 7, {3, 4, 6})));
  EXPECT_EQ(witness_pair(g, g), std::make_pair(g, g));
  EXPECT_EQ(witness_pair(idx(2, 5, {1, 4}), idx(2, 5, {2, 5})),
            std::make_pair(idx(2, 5, {1, 5}), idx(2, 5, {2, 4})));
}

TEST(WitnessPair, PreconditionsAreNamed) {
  const auto g = idx(3, 7, {2, 3, 6});
  try {
    witness_pair(g, idx(3, 7, {3, 6, 7}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.constraint(), "Theta_1");
  }
  try {
    witness_pair(idx(2, 7, {1, 5}), idx(2, 7, {1, 5}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.constraint(), "kappa");
  }
  try {
    witness_pair(g, idx(3, 7, {1, 3, 6}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.constraint(), "beta >= gamma");
  }
}

TEST(WitnessPair, ExhaustiveSmallCases) {
  int pairs = 0;
  for (int n = 1; n <= 7; ++n) {
    for (int m = 1; m <= std::min(3, n); ++m) {
      for (const auto& g : all_indices(m, n)) {
        if (g.degenerate()) continue;
        const auto d = block_decomposition(g);
        if (d.kappa_max - d.kappa_min != 1) continue;
        const auto sets = index_sets(d);
        for (const auto& beta : indices_above(g)) {
          bool admissible = true;
          for (int i : sets.i_prime) admissible = admissible && in_theta(g, d, i, beta);
          for (int i : sets.i_double_prime) admissible = admissible && in_theta(g, d, i, beta);
          if (!admissible) {
            EXPECT_THROW(witness_pair(g, beta), PreconditionError);
            continue;
          }
          const auto [xi, xi_prime] = witness_pair(g, beta);
          const auto [join, meet] = join_meet(xi, xi_prime);
          EXPECT_EQ(meet, g);
          EXPECT_EQ(join, beta);
          for (int i : sets.i1) EXPECT_TRUE(in_omega(g, d, i, xi));
          for (int i : sets.i2) EXPECT_TRUE(in_omega(g, d, i, xi_prime));
          ++pairs;
        }
      }
    }
  }
  EXPECT_GT(pairs, 0);
}

TEST(IndexSets, Definitions) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= std::min(3, n); ++m) {
      for (const auto& g : all_indices(m, n)) {
        if (g.degenerate()) continue;
        const auto d = block_decomposition(g);
        const auto s = index_sets(d);
        for (int i = 0; i <= d.t; ++i) {
          EXPECT_EQ(contains(s.i1, i), d.kappa[i] == d.kappa_max);
          EXPECT_EQ(contains(s.i2, i), d.kappa[i] == d.kappa_min);
          EXPECT_EQ(contains(s.i_prime, i), i > 0 && contains(s.i1, i) && contains(s.i2, i - 1));
          EXPECT_EQ(contains(s.i_double_prime, i),
                    i > 0 && contains(s.i2, i) && contains(s.i1, i - 1));
        }
      }
    }
  }
}

TEST(Determinantal, RemarkCases) {
  EXPECT_EQ(determinantal_ctr(3, 3, 2).kind, VerdictKind::Gorenstein);
  EXPECT_EQ(determinantal_ctr(2, 3, 2).kind, VerdictKind::CtrNotGorenstein);
  const auto v = determinantal_ctr(2, 5, 2);
  EXPECT_EQ(v.kind, VerdictKind::NotCtr);
  const auto& c = std::get<DeterminantalCertificate>(v.witness);
  EXPECT_EQ(c.trace_power, 3);
  EXPECT_THROW(determinantal_ctr(3, 2, 2), InvalidInput);
  EXPECT_THROW(determinantal_ctr(3, 4, 1), InvalidInput);
  EXPECT_THROW(determinantal_ctr(2, 4, 3), InvalidInput);
}
