#include "siglap/eigenpair.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "siglap/errors.hpp"
#include "siglap/functional.hpp"
#include "siglap/oracle.hpp"
#include "support/test_graphs.hpp"

namespace siglap {
namespace {

using testing::complete;
using testing::cycle;
using testing::er_connected;
using testing::single_edge;
using testing::two_triangles;

TEST(VerifyEigenpair, SingleEdge) {
  auto g = single_edge();
  std::vector<double> anti{0.5, -0.5};
  auto cert = verify_eigenpair(g, anti);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 0.0, 1e-15);
  EXPECT_NEAR(cert->x.weighted_norm, 1.0, 1e-15);

  std::vector<double> aligned{1.0, 1.0};
  cert = verify_eigenpair(g, aligned);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 1.0, 1e-15);
}

TEST(VerifyEigenpair, TriangleTernary) {
  auto g = complete(3);
  std::vector<double> x{1.0, 1.0, -1.0};  // pair ({0,1},{2}), mu = 1/3
  auto cert = verify_eigenpair(g, x);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 1.0 / 3.0, 1e-12);
  // The witness is unique here: z = (1, -1/3, -1/3) on edges
  // (0,1), (0,2), (1,2).
  ASSERT_EQ(cert->z.size(), 3u);
  EXPECT_NEAR(cert->z[0], 1.0, 1e-12);
  EXPECT_NEAR(cert->z[1], -1.0 / 3.0, 1e-6);
  EXPECT_NEAR(cert->z[2], -1.0 / 3.0, 1e-6);
}

TEST(VerifyEigenpair, TrianglePairEigenvalueHalf) {
  auto g = complete(3);
  std::vector<double> x{1.0, -1.0, 0.0};  // pair ({0},{1}), mu = 1/2
  auto cert = verify_eigenpair(g, x);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 0.5, 1e-12);
}

TEST(VerifyEigenpair, PositiveVectorsSitAtOne) {
  // Any positive vector makes every edge sum positive, hence mu = 1.
  auto g = complete(3);
  std::vector<double> x{1.0, 2.0, 3.0};
  auto cert = verify_eigenpair(g, x);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 1.0, 1e-12);
}

TEST(VerifyEigenpair, RejectsNonEigenvector) {
  auto g = complete(3);
  std::vector<double> x{1.0, -1.0, 0.5};
  EXPECT_FALSE(verify_eigenpair(g, x).has_value());
}

TEST(VerifyEigenpair, RejectsZeroVector) {
  auto g = complete(3);
  std::vector<double> zero{0.0, 0.0, 0.0};
  EXPECT_THROW(verify_eigenpair(g, zero), DomainError);
}

TEST(EnumerateTernary, SingleEdgeSpectrum) {
  auto eigs = enumerate_ternary_eigenpairs(single_edge());
  ASSERT_EQ(eigs.size(), 2u);
  EXPECT_NEAR(eigs[0].mu, 0.0, 1e-15);
  EXPECT_NEAR(eigs[1].mu, 1.0, 1e-15);
}

TEST(EnumerateTernary, TriangleSpectrum) {
  auto eigs = enumerate_ternary_eigenpairs(complete(3));
  ASSERT_EQ(eigs.size(), 3u);
  EXPECT_NEAR(eigs[0].mu, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(eigs[1].mu, 0.5, 1e-12);
  EXPECT_NEAR(eigs[2].mu, 1.0, 1e-12);
}

TEST(EnumerateTernary, MatchesDualCheegerOracle) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto g = er_connected(5 + static_cast<int>(s % 2), 0.5, 300 + s);
    auto eigs = enumerate_ternary_eigenpairs(g);
    ASSERT_FALSE(eigs.empty());
    auto oracle = oracle_dual_cheeger(g);
    EXPECT_NEAR(eigs.front().mu, 1.0 - oracle.h_plus, 1e-9);
    // The minimizing witness is itself an eigenpair certificate.
    auto x = ternary_values(g, make_ternary(g, eigs.front().pair));
    auto cert = verify_eigenpair(g, x);
    ASSERT_TRUE(cert.has_value());
    EXPECT_NEAR(cert->mu, eigs.front().mu, 1e-12);
  }
}

TEST(EnumerateTernary, CapacityGuard) {
  EXPECT_THROW(enumerate_ternary_eigenpairs(testing::petersen(), 9),
               CapacityError);
}

TEST(SpectralGap, HoldsOnTriangle) {
  std::vector<double> mus{1.0 / 3.0, 0.5, 1.0};
  EXPECT_TRUE(spectral_gap_check(mus, 3));
}

TEST(SpectralGap, DetectsViolation) {
  std::vector<double> mus{0.1, 0.1 + 1e-12};
  EXPECT_FALSE(spectral_gap_check(mus, 3));
  EXPECT_THROW(spectral_gap_check(mus, 1), DomainError);
}

TEST(NodalDomains, SupportComponents) {
  auto g = two_triangles();
  std::vector<double> both{1.0, 1.0, -1.0, 1.0, 1.0, -1.0};
  auto nd = nodal_domains(g, both);
  EXPECT_EQ(nd.count, 2);
  ASSERT_EQ(nd.domains.size(), 2u);
  EXPECT_EQ(nd.domains[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(nd.domains[1], (std::vector<int>{3, 4, 5}));

  std::vector<double> first{1.0, 1.0, -1.0, 0.0, 0.0, 0.0};
  EXPECT_EQ(nodal_domains(g, first).count, 1);

  std::vector<double> zero(6, 0.0);
  EXPECT_EQ(nodal_domains(g, zero).count, 0);
}

TEST(NodalDomains, RestrictionKeepsEigenvalue) {
  auto g = two_triangles();
  // Asymmetric eigenvector across the two components: each triangle holds
  // a ({a,b},{c}) pattern, mu = 1/3 regardless of the relative scale.
  std::vector<double> x{2.0, 2.0, -2.0, 1.0, 1.0, -1.0};
  auto cert = verify_eigenpair(g, x);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 1.0 / 3.0, 1e-12);

  for (int d = 0; d < 2; ++d) {
    auto r = restrict_to_domain(g, *cert, d);
    EXPECT_NEAR(r.restricted.weighted_norm, 1.0, 1e-12);
    EXPECT_NEAR(r.restricted.iplus, cert->mu, 1e-12);
    EXPECT_NEAR(r.flattened.iplus, 1.0 / 3.0, 1e-12);
    // Both are certified eigenpairs of the whole graph again.
    auto rc = verify_eigenpair(g, r.restricted.values);
    ASSERT_TRUE(rc.has_value());
    EXPECT_NEAR(rc->mu, cert->mu, 1e-12);
    auto fc = verify_eigenpair(g, r.flattened.values);
    ASSERT_TRUE(fc.has_value());
    EXPECT_NEAR(fc->mu, cert->mu, 1e-12);
  }
  EXPECT_THROW(restrict_to_domain(g, *cert, 2), DomainError);
}

TEST(SimplexClosure, AbsorbsZerosRejectsFlips) {
  auto g = complete(3);
  std::vector<double> ones{1.0, 1.0, 1.0};
  auto cert = verify_eigenpair(g, ones);
  ASSERT_TRUE(cert.has_value());
  EXPECT_NEAR(cert->mu, 1.0, 1e-12);

  // Same signs everywhere: inside the closure, and itself an eigenvector
  // with the same eigenvalue.
  std::vector<double> y{2.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0};
  EXPECT_TRUE(simplex_closure_check(g, *cert, y));
  auto yc = verify_eigenpair(g, y);
  ASSERT_TRUE(yc.has_value());
  EXPECT_NEAR(yc->mu, cert->mu, 1e-12);

  // A zero coordinate only absorbs: still inside.
  std::vector<double> yz{0.25, 0.25, 0.0};
  EXPECT_TRUE(simplex_closure_check(g, *cert, yz));

  // A sign flip leaves the closure.
  std::vector<double> yf{1.0 / 6.0, -1.0 / 6.0, 1.0 / 6.0};
  EXPECT_FALSE(simplex_closure_check(g, *cert, yf));

  // The zero vector is never a closure point (norm collapses).
  std::vector<double> zero{0.0, 0.0, 0.0};
  EXPECT_FALSE(simplex_closure_check(g, *cert, zero));
}

TEST(SimplexClosure, EdgeSumSignsBind) {
  auto g = complete(3);
  std::vector<double> x{1.0, -1.0, 0.0};  // mu = 1/2; edge (0,1) sums to 0
  auto cert = verify_eigenpair(g, x);
  ASSERT_TRUE(cert.has_value());

  // Scaling is harmless: all signs unchanged.
  std::vector<double> y{1.0 / 8.0, -1.0 / 8.0, 0.0};
  EXPECT_TRUE(simplex_closure_check(g, *cert, y));

  // Support may not grow.
  std::vector<double> grow{0.25, -0.25, 0.125};
  EXPECT_FALSE(simplex_closure_check(g, *cert, grow));

  // The zero edge sum of (0,1) must stay zero.
  std::vector<double> tilt{0.125, -0.25, 0.0};
  EXPECT_FALSE(simplex_closure_check(g, *cert, tilt));
}

TEST(Certificates, MuEqualsIplusInUnitRange) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto g = er_connected(6, 0.5, 600 + s);
    auto eigs = enumerate_ternary_eigenpairs(g);
    for (auto& te : eigs) {
      auto x = ternary_values(g, make_ternary(g, te.pair));
      auto cert = verify_eigenpair(g, x);
      ASSERT_TRUE(cert.has_value());
      EXPECT_NEAR(cert->mu, iplus(g, cert->x.values), 1e-12);
      EXPECT_GE(cert->mu, -1e-12);
      EXPECT_LE(cert->mu, 1.0 + 1e-12);
    }
  }
}

}  // namespace
}  // namespace siglap
