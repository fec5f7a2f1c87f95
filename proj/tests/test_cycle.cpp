#include <gtest/gtest.h>

#include "ctrlab/error.hpp"
#include "ctrlab/parallel.hpp"
#include "support.hpp"

using namespace ctrlab;
using namespace ctrlab::testing;

namespace {

bool in_every_prime(const ShiftedSystem& s, int n, const LatticePoint& mu) {
  for (int i = 0; i < n; ++i) {
    if (!minimal_prime_member(s, n, i, mu)) return false;
  }
  return true;
}

LatticePoint indicator(int n, std::initializer_list<int> ones, Int degree) {
  LatticePoint p{std::vector<Int>(n, 0), degree};
  for (int i : ones) p.values[i] = 1;
  return p;
}

}  // namespace

TEST(CycleSystem, Shapes) {
  const auto s7 = cycle_system(7);
  ASSERT_EQ(s7.sum_constraints().size(), 8u);
  EXPECT_EQ(s7.sum_constraints().back().members.size(), 7u);
  EXPECT_EQ(s7.sum_constraints().back().coefficient, (Rational{3, 1}));
  for (int i = 0; i < 7; ++i) EXPECT_EQ(s7.sum_constraints()[i].members.size(), 2u);
  EXPECT_EQ(cycle_system(4).sum_constraints().size(), 4u);
  const auto s3 = cycle_system(3);
  ASSERT_EQ(s3.sum_constraints().size(), 1u);
  EXPECT_EQ(s3.sum_constraints().front().members.size(), 3u);
  EXPECT_EQ(cycle_system(5).sum_constraints().size(), 6u);
  EXPECT_THROW(cycle_system(2), InvalidInput);
  EXPECT_EQ(cycle_data(9).ell, 4);
  EXPECT_EQ(cycle_data(8).ell, 0);
}

TEST(CycleSystem, EvenAndTriangleMatchPerfectSystems) {
  for (int n : {3, 4, 6, 8}) {
    const auto c = cycle_system(n);
    const auto p = perfect_system(cycle_graph(n));
    for (Int d = 0; d <= 2; ++d) {
      EXPECT_EQ(enumerate_points(c, 0, d).size(), enumerate_points(p, 0, d).size()) << n;
    }
  }
}

TEST(NonCtrWitness, Shapes) {
  EXPECT_EQ(non_ctr_witness(4), indicator(9, {2, 4, 6}, 1));
  EXPECT_EQ(non_ctr_witness(5), indicator(11, {2, 4, 6, 8}, 1));
  EXPECT_THROW(non_ctr_witness(3), PreconditionError);
}

TEST(MinimalPrimes, DefiningClauses) {
  const auto mu9 = non_ctr_witness(4);
  for (int i = 0; i < 9; ++i) EXPECT_TRUE(minimal_prime_member(9, i, mu9));
  EXPECT_FALSE(minimal_prime_member(7, 0, indicator(7, {1, 3, 5}, 1)));
  EXPECT_TRUE(minimal_prime_member(9, 0, indicator(9, {0}, 1)));
  EXPECT_THROW(minimal_prime_member(5, 0, indicator(5, {}, 1)), PreconditionError);
  EXPECT_THROW(minimal_prime_member(7, 0, indicator(7, {0, 1}, 1)), PreconditionError);
}

TEST(CycleVerdict, GorensteinCases) {
  for (int n : {3, 4, 5, 6, 8}) {
    const auto v = cycle_ctr_verdict(n);
    EXPECT_EQ(v.kind, VerdictKind::Gorenstein) << n;
    const auto& cert = std::get<DecompositionCertificate>(v.witness);
    EXPECT_EQ(cert.witness.eta + cert.witness.zeta, cert.mu);
  }
}

TEST(CycleVerdict, SevenIsCtrAtBound) {
  const auto v = cycle_ctr_verdict(7);
  EXPECT_EQ(v.kind, VerdictKind::CtrNotGorenstein);
  EXPECT_TRUE(v.at_bound);
  const auto& scan = std::get<ScanCertificate>(v.witness);
  EXPECT_EQ(scan.candidates, 318);
  EXPECT_EQ(scan.in_trace, 282);
  EXPECT_EQ(scan.radical_candidates, 282);
  EXPECT_TRUE(scan.radical_not_trace.empty());
}

TEST(CycleVerdict, NineIsNotCtr) {
  const auto v = cycle_ctr_verdict(9);
  ASSERT_EQ(v.kind, VerdictKind::NotCtr);
  const auto& cert = std::get<NonTraceCertificate>(v.witness);
  EXPECT_EQ(cert.mu, non_ctr_witness(4));
  ASSERT_TRUE(cert.power);
  EXPECT_EQ(cert.power->power, 2);
  EXPECT_EQ(cert.prime_membership, std::vector<bool>(9, true));
}

TEST(CycleVerdict, ElevenIsNotCtr) {
  const auto v = cycle_ctr_verdict(11);
  ASSERT_EQ(v.kind, VerdictKind::NotCtr);
  EXPECT_EQ(std::get<NonTraceCertificate>(v.witness).mu, non_ctr_witness(5));
}

TEST(CycleInvariants, TraceInsideEveryPrime) {
  for (int n : {7, 9, 11}) {
    const auto s = cycle_system(n);
    const auto members = members_up_to(s, 0, 0, 2);
    const auto outcomes = classify_candidates(s, members, 1);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (outcomes[i].trace) {
        EXPECT_TRUE(in_every_prime(s, n, members[i])) << s.describe_point(members[i]);
      }
    }
  }
}

TEST(CycleInvariants, SevenTraceEqualsPrimeIntersection) {
  const auto s = cycle_system(7);
  const auto members = members_up_to(s, 0, 0, 2);
  EXPECT_EQ(enumerate_points(s, 0, 1).size(), 29u);
  for (const auto& mu : members) {
    EXPECT_EQ(decompose(s, mu).has_value(), in_every_prime(s, 7, mu)) << s.describe_point(mu);
  }
}

TEST(CycleInvariants, PrimeIntersectionMatchesRadicalSearch) {
  // The p_i description of the radical, sanity-checked against powers up to 4.
  for (int n : {7, 9}) {
    const auto s = cycle_system(n);
    const auto members = members_up_to(s, 0, 0, 1);
    const auto outcomes = classify_candidates(s, members, 4);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const bool radical = outcomes[i].trace || outcomes[i].power;
      EXPECT_EQ(radical, in_every_prime(s, n, members[i])) << s.describe_point(members[i]);
    }
  }
}

TEST(CycleInvariants, WitnessUnderOracle) {
  for (int ell : {4, 5}) {
    const int n = 2 * ell + 1;
    const auto s = cycle_system(n);
    const auto mu = non_ctr_witness(ell);
    EXPECT_TRUE(check_membership(s, 0, mu));
    EXPECT_TRUE(in_every_prime(s, n, mu));
    EXPECT_FALSE(decompose(s, mu, Engine::Oracle));
    // With η ≡ 1 the odd cycle constraint on ζ = kμ − η reads k ≥ ℓ − 2.
    const auto w = radical_power_search(s, mu, 4, Engine::Oracle);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->power, ell - 2);
    EXPECT_EQ(w->eta, s.uniform(1, 3));
    EXPECT_EQ(radical_power_search(s, mu, 4), w);
  }
}

TEST(CycleInvariants, NineCycleWitnessPair) {
  const auto s = cycle_system(9);
  const auto mu = non_ctr_witness(4);
  const auto w = radical_power_search(s, mu, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->eta, s.uniform(1, 3));
  EXPECT_EQ(w->zeta, (LatticePoint{{-1, -1, 1, -1, 1, -1, 1, -1, -1}, -1}));
}
