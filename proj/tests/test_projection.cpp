#include <gtest/gtest.h>

#include <numbers>

#include "bdbar/domains.hpp"
#include "bdbar/projection.hpp"
#include "oracles.hpp"

using namespace bdbar;

namespace {

const DomainSpec kDisc{DomainKind::Disc};
const DomainSpec kPolydisc{DomainKind::Polydisc2};
const DomainSpec kBall{DomainKind::Ball2};

MixedPoly mono(std::vector<unsigned> a, std::vector<unsigned> b, GaussianRational c = GaussianRational(1)) {
  return MixedPoly::monomial(MixedKey{MultiIndex(std::move(a)), MultiIndex(std::move(b))}, std::move(c));
}

}  // namespace

TEST(ProjectExact, DiscExamples) {
  EXPECT_EQ(bergman_project_exact(kDisc, mono({1}, {1})), HoloPoly::constant(1, GaussianRational(make_rational(1, 2))));
  EXPECT_TRUE(bergman_project_exact(kDisc, mono({0}, {1})).is_zero());
  // P(z^3 conj z) = <z^3 conj z, z^2> / ||z^2||^2 z^2 = (1/4)/(1/3) z^2
  EXPECT_EQ(bergman_project_exact(kDisc, mono({3}, {1})), HoloPoly::monomial(MultiIndex{2}, GaussianRational(make_rational(3, 4))));
}

TEST(ProjectExact, HolomorphicIsFixed) {
  const HoloPoly h = HoloPoly::monomial(MultiIndex{2, 1}, GaussianRational(Rational(1), Rational(-3))) +
                     HoloPoly::constant(2, GaussianRational(7));
  for (const auto* d : {&kPolydisc, &kBall}) EXPECT_EQ(bergman_project_exact(*d, to_mixed(h)), h);
}

TEST(ProjectExact, BallMixesCoordinates) {
  // P(z1 conj z1) on the ball is the constant ||z1||^2 / vol = (1/6) / (1/2) = 1/3.
  EXPECT_EQ(bergman_project_exact(kBall, mono({1, 0}, {1, 0})), HoloPoly::constant(2, GaussianRational(make_rational(1, 3))));
  EXPECT_THROW(bergman_project_exact(kBall, mono({1}, {1})), Error);
}

TEST(ProjectZbar, ClosedFormExamples) {
  // disc n = 2: sqrt(4 / (3 pi)) z
  EXPECT_EQ(project_zbar_monomial(kDisc, 0, MultiIndex{2}),
            HoloPoly::monomial(MultiIndex{1}).times_sqrt(ExactScalar(make_rational(4, 3), -1)));
  EXPECT_TRUE(project_zbar_monomial(kDisc, 0, MultiIndex{0}).is_zero());
  // ball j = 0, alpha = (1, 1): sqrt(24) / (4 pi) z2
  EXPECT_EQ(project_zbar_monomial(kBall, 0, MultiIndex{1, 1}),
            HoloPoly::monomial(MultiIndex{0, 1}).times_sqrt(ExactScalar(make_rational(24, 16), -2)));
  EXPECT_THROW(project_zbar_monomial(kDisc, 1, MultiIndex{2}), Error);
}

TEST(ProjectZbar, AgreesWithMomentProjection) {
  for (const auto* d : {&kDisc, &kPolydisc, &kBall}) {
    for (const auto& alpha : indices_up_to_degree(d->dim(), 20)) {
      const HoloPoly e = orthonormal_basis_element(*d, alpha);
      for (std::size_t j = 0; j < d->dim(); ++j) {
        EXPECT_EQ(project_zbar_monomial(*d, j, alpha), bergman_project_exact(*d, times_zbar(e, j)))
            << d->name() << " " << alpha.to_string() << " j=" << j;
      }
    }
  }
}

TEST(ProjectExact, Idempotent) {
  const MixedPoly f = mono({3, 1}, {1, 1}, GaussianRational(2)) + mono({0, 2}, {0, 1}) + mono({1, 0}, {2, 0});
  for (const auto* d : {&kPolydisc, &kBall}) {
    const HoloPoly p = bergman_project_exact(*d, f);
    EXPECT_EQ(bergman_project_exact(*d, to_mixed(p)), p);
  }
}

TEST(ProjectExact, SelfAdjoint) {
  const MixedPoly f = mono({3, 1}, {1, 1}, GaussianRational(Rational(2), Rational(1))) + mono({0, 2}, {0, 1});
  const MixedPoly g = mono({2, 1}, {0, 1}) + mono({1, 0}, {0, 0}, GaussianRational(Rational(0), Rational(5)));
  for (const auto* d : {&kPolydisc, &kBall}) {
    const auto lhs = oracle::inner(d->kind(), to_mixed(bergman_project_exact(*d, f)), g);
    const auto rhs = oracle::inner(d->kind(), f, to_mixed(bergman_project_exact(*d, g)));
    EXPECT_EQ(lhs, rhs) << d->name();
  }
}

TEST(ProjectQuadrature, DiscZbarTimesBasis) {
  // P(conj(z) u_3)(0.4) with u_3 = sqrt(4/pi) z^3 is sqrt(9/(4 pi)) 0.4^2.
  const double c = std::sqrt(4 / std::numbers::pi);
  const auto v = bergman_project_quadrature(
      kDisc, [c](std::span<const Complex> w) { return c * std::conj(w[0]) * std::pow(w[0], 3); },
      std::vector<Complex>{0.4}, QuadratureSpec::polar(200, 200));
  EXPECT_NEAR(std::abs(v - std::sqrt(9 / (4 * std::numbers::pi)) * 0.16), 0.0, 1e-8);
}

TEST(ProjectQuadrature, HolomorphicAndAntiholomorphic) {
  const std::vector<Complex> z{{0.2, -0.1}};
  const auto h = bergman_project_quadrature(
      kDisc, [](std::span<const Complex> w) { return w[0] * w[0] + 1.0; }, z, QuadratureSpec::polar(200, 200));
  EXPECT_NEAR(std::abs(h - (z[0] * z[0] + 1.0)), 0.0, 1e-8);
  const auto a = bergman_project_quadrature(
      kDisc, [](std::span<const Complex> w) { return std::conj(w[0]); }, std::vector<Complex>{0.2},
      QuadratureSpec::polar(200, 200));
  EXPECT_NEAR(std::abs(a), 0.0, 1e-8);
}

TEST(ProjectQuadrature, BallAgreesWithExact) {
  const MixedPoly f = mono({2, 1}, {1, 0}) + mono({0, 1}, {0, 1}, GaussianRational(3));
  const HoloPoly p = bergman_project_exact(kBall, f);
  const CompiledPoly cf(f);
  const std::vector<Complex> z{{0.3, 0.1}, {-0.2, 0.2}};
  const auto v = bergman_project_quadrature(
      kBall, [&cf](std::span<const Complex> w) { return cf(w); }, z, QuadratureSpec::polar(48, 96));
  EXPECT_NEAR(std::abs(v - evaluate(p, z)), 0.0, 1e-6);
  EXPECT_THROW(bergman_project_quadrature(
                   kBall, [&cf](std::span<const Complex> w) { return cf(w); },
                   std::vector<Complex>{0.95, 0.0}, QuadratureSpec::polar(48, 96)),
               Error);
}
