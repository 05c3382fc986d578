#include <gtest/gtest.h>

#include <numbers>

#include "bdbar/domains.hpp"
#include "bdbar/poly.hpp"
#include "oracles.hpp"

using namespace bdbar;

namespace {

MixedPoly mono(std::vector<unsigned> a, std::vector<unsigned> b, GaussianRational c = GaussianRational(1)) {
  return MixedPoly::monomial(MixedKey{MultiIndex(std::move(a)), MultiIndex(std::move(b))}, std::move(c));
}

}  // namespace

TEST(Poly, ZeroTermsAreDropped) {
  MixedPoly p = mono({1}, {0}) - mono({1}, {0});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), 0u);
}

TEST(Poly, GradedLexOrder) {
  const HoloPoly h = HoloPoly::monomial(MultiIndex{2, 0}) + HoloPoly::monomial(MultiIndex{0, 1}) +
                     HoloPoly::monomial(MultiIndex{1, 0}) + HoloPoly::constant(2, GaussianRational(5));
  std::vector<MultiIndex> keys;
  for (const auto& [k, c] : h.terms()) keys.push_back(k);
  ASSERT_EQ(keys.size(), 4u);
  EXPECT_EQ(keys[0], (MultiIndex{0, 0}));
  EXPECT_EQ(keys[1], (MultiIndex{0, 1}));
  EXPECT_EQ(keys[2], (MultiIndex{1, 0}));
  EXPECT_EQ(keys[3], (MultiIndex{2, 0}));
}

TEST(Poly, PerfectSquareScalesFold) {
  const HoloPoly h = HoloPoly::monomial(MultiIndex{1}).times_sqrt(ExactScalar(make_rational(9, 4)));
  EXPECT_EQ(h.scale_sq(), ExactScalar(1));
  EXPECT_EQ(h.coefficient(MultiIndex{1}), GaussianRational(make_rational(3, 2)));
}

TEST(Poly, SemanticEquality) {
  // sqrt(4/pi) z == 2 sqrt(1/pi) z
  const HoloPoly a = HoloPoly::monomial(MultiIndex{1}).times_sqrt(ExactScalar(Rational(4), -1));
  const HoloPoly b = (HoloPoly::monomial(MultiIndex{1}) * GaussianRational(2)).times_sqrt(ExactScalar::pi(-1));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == HoloPoly::monomial(MultiIndex{1}));
}

TEST(Poly, CommensurableScalesAdd) {
  const HoloPoly a = HoloPoly::monomial(MultiIndex{1}).times_sqrt(ExactScalar(Rational(2), -1));
  const HoloPoly b = HoloPoly::monomial(MultiIndex{2}).times_sqrt(ExactScalar(Rational(8), -1));
  const HoloPoly s = a + b;
  EXPECT_EQ(s.size(), 2u);
  const std::vector<Complex> z{0.5};
  const double expect = std::sqrt(2 / std::numbers::pi) * 0.5 + std::sqrt(8 / std::numbers::pi) * 0.25;
  EXPECT_NEAR(std::abs(evaluate(s, z) - expect), 0.0, 1e-14);
}

TEST(Poly, IncommensurableScalesThrow) {
  const HoloPoly a = HoloPoly::monomial(MultiIndex{1}).times_sqrt(ExactScalar(Rational(2), -1));
  const HoloPoly b = HoloPoly::monomial(MultiIndex{2}).times_sqrt(ExactScalar(Rational(3), -1));
  try {
    (void)(a + b);
    FAIL() << "expected IncommensurableScale";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncommensurableScale);
  }
}

TEST(Poly, Multiplication) {
  const MixedPoly p = mono({1}, {0}) + mono({0}, {0}, GaussianRational(1));
  const MixedPoly q = mono({0}, {1}) - mono({0}, {0}, GaussianRational(1));
  // (z + 1)(conj z - 1) = |z|^2 - z + conj z - 1
  const MixedPoly expect = mono({1}, {1}) - mono({1}, {0}) + mono({0}, {1}) - mono({0}, {0});
  EXPECT_EQ(p * q, expect);
}

TEST(Poly, ConjugationAndHolomorphy) {
  const MixedPoly p = mono({2}, {1}, GaussianRational(Rational(1), Rational(2)));
  EXPECT_EQ(conj(p), mono({1}, {2}, GaussianRational(Rational(1), Rational(-2))));
  EXPECT_FALSE(is_holomorphic(p));
  EXPECT_FALSE(to_holo(p).has_value());
  EXPECT_TRUE(to_holo(mono({3}, {0})).has_value());
}

TEST(Poly, WirtingerDerivatives) {
  // d/dconj(z) (z^2 conj(z)^3) = 3 z^2 conj(z)^2
  EXPECT_EQ(d_dzbar(mono({2}, {3}), 0), mono({2}, {2}, GaussianRational(3)));
  EXPECT_TRUE(d_dzbar(mono({2}, {0}), 0).is_zero());
  EXPECT_EQ(d_dz(HoloPoly::monomial(MultiIndex{2, 3}), 1), HoloPoly::monomial(MultiIndex{2, 2}, GaussianRational(3)));
  const MixedPoly f = mono({1, 2}, {3, 1}, GaussianRational(Rational(1), Rational(1)));
  EXPECT_EQ(d_dzbar(f, 0), oracle::dzbar(f, 0));
  EXPECT_EQ(d_dzbar(f, 1), oracle::dzbar(f, 1));
  EXPECT_THROW(d_dzbar(f, 2), Error);
}

TEST(Poly, TimesZbar) {
  EXPECT_EQ(times_zbar(HoloPoly::monomial(MultiIndex{1, 2}), 1), mono({1, 2}, {0, 1}));
}

TEST(Poly, CompositionHolomorphic) {
  // (z^2 + z) o (2z) = 4 z^2 + 2 z
  const HoloPoly h = HoloPoly::monomial(MultiIndex{2}) + HoloPoly::monomial(MultiIndex{1});
  const std::vector<HoloPoly> map{HoloPoly::monomial(MultiIndex{1}, GaussianRational(2))};
  EXPECT_EQ(compose(h, map),
            HoloPoly::monomial(MultiIndex{2}, GaussianRational(4)) + HoloPoly::monomial(MultiIndex{1}, GaussianRational(2)));
}

TEST(Poly, CompositionMixedUsesConjugateMap) {
  // (z conj z) o (i z) = |z|^2
  const std::vector<HoloPoly> map{HoloPoly::monomial(MultiIndex{1}, GaussianRational::i())};
  EXPECT_EQ(compose(mono({1}, {1}), map), mono({1}, {1}));
  // conj(z) o z^2 = conj(z)^2
  const std::vector<HoloPoly> square{HoloPoly::monomial(MultiIndex{2})};
  EXPECT_EQ(compose(mono({0}, {1}), square), mono({0}, {2}));
}

TEST(Poly, CompositionDegreeCap) {
  const std::vector<HoloPoly> square{HoloPoly::monomial(MultiIndex{2})};
  EXPECT_NO_THROW(compose(HoloPoly::monomial(MultiIndex{32}), square));
  try {
    (void)compose(HoloPoly::monomial(MultiIndex{33}), square);
    FAIL() << "expected DegreeOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOverflow);
  }
}

TEST(Poly, PowerMatchesRepeatedProduct) {
  const HoloPoly h = HoloPoly::monomial(MultiIndex{1, 0}) + HoloPoly::monomial(MultiIndex{0, 1}, GaussianRational(2));
  EXPECT_EQ(power(h, 5), h * h * h * h * h);
  EXPECT_EQ(power(h, 0), HoloPoly::constant(2, GaussianRational(1)));
}

TEST(CompiledPoly, MatchesDirectEvaluation) {
  const MixedPoly f = (mono({3, 1}, {0, 2}, GaussianRational(make_rational(1, 3), Rational(2))) +
                       mono({0, 0}, {1, 0}, GaussianRational(-1)) + mono({2, 2}, {2, 2}))
                          .times_sqrt(ExactScalar(Rational(6), -2));
  const std::vector<Complex> z{{0.3, -0.4}, {0.1, 0.7}};
  EXPECT_NEAR(std::abs(evaluate(f, z) - oracle::eval(f, z)), 0.0, 1e-14);
  const CompiledPoly c(f);
  EXPECT_NEAR(std::abs(c(z) - oracle::eval(f, z)), 0.0, 1e-14);
  EXPECT_THROW(c(std::vector<Complex>{0.1}), Error);
}
