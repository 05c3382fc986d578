#include <gtest/gtest.h>

#include <numbers>

#include "bdbar/dbar_solver.hpp"
#include "bdbar/domains.hpp"
#include "bdbar/hs_analysis.hpp"
#include "oracles.hpp"

using namespace bdbar;

namespace {

const DomainSpec kDisc{DomainKind::Disc};
const DomainSpec kPolydisc{DomainKind::Polydisc2};
const DomainSpec kBall{DomainKind::Ball2};

MixedPoly mono(std::vector<unsigned> a, std::vector<unsigned> b, GaussianRational c = GaussianRational(1)) {
  return MixedPoly::monomial(MixedKey{MultiIndex(std::move(a)), MultiIndex(std::move(b))}, std::move(c));
}

// ||conj(z_j) e_alpha - P(conj(z_j) e_alpha)||^2 = ||conj(z_j) e_alpha||^2 - ||P(...)||^2, from moments.
ExactScalar reference_norm(const DomainSpec& d, const MultiIndex& alpha, std::size_t j) {
  std::vector<unsigned> a = alpha.entries();
  std::vector<unsigned> up = a;
  up[j] += 1;
  const ExactScalar na = oracle::moment(d.kind(), a, a);
  const ExactScalar total = oracle::moment(d.kind(), up, up) / na;
  if (a[j] == 0) return total;
  std::vector<unsigned> down = a;
  down[j] -= 1;
  // |<z^alpha conj z_j, z^(alpha - e_j)>|^2 / (||z^(alpha - e_j)||^2 ||z^alpha||^2)
  const ExactScalar ip = na;
  const ExactScalar proj = ip * ip / (oracle::moment(d.kind(), down, down) * na);
  return total - proj;
}

}  // namespace

TEST(S1Norms, Examples) {
  EXPECT_EQ(s1_image_norm_sq(kDisc, MultiIndex{0}, 0), ExactScalar(make_rational(1, 2)));
  EXPECT_EQ(s1_image_norm_sq(kPolydisc, MultiIndex{3, 7}, 0), ExactScalar(make_rational(1, 20)));
  EXPECT_EQ(s1_image_norm_sq(kBall, MultiIndex{1, 1}, 1), ExactScalar(make_rational(3, 20)));
}

TEST(S1Norms, AgreeWithReferenceUpToDegree40) {
  for (const auto* d : {&kDisc, &kPolydisc, &kBall}) {
    const unsigned max_deg = d->dim() == 1 ? 40 : 12;
    for (const auto& alpha : indices_up_to_degree(d->dim(), max_deg)) {
      for (std::size_t j = 0; j < d->dim(); ++j) {
        const ExactScalar ref = reference_norm(*d, alpha, j);
        EXPECT_EQ(s1_image_norm_sq_closed_form(*d, alpha, j), ref) << d->name() << alpha.to_string();
        EXPECT_EQ(s1_image_norm_sq(*d, alpha, j), ref) << d->name() << alpha.to_string();
      }
    }
  }
}

TEST(S1Norms, ClosedFormAtDegree40) {
  for (const auto* d : {&kPolydisc, &kBall}) {
    for (unsigned k = 0; k <= 40; k += 8) {
      const MultiIndex alpha{k, 40 - k};
      for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(s1_image_norm_sq_closed_form(*d, alpha, j), reference_norm(*d, alpha, j));
      }
    }
  }
}

TEST(HSPartialSum, DiscTelescopes) {
  const HSReport r = hs_partial_sum(kDisc, 98);
  EXPECT_EQ(r.partial_sum, ExactScalar(make_rational(99, 100)));
  EXPECT_EQ(r.verdict, HSVerdict::ConvergentWithLimit);
  ASSERT_TRUE(r.limit.has_value());
  EXPECT_EQ(*r.limit, ExactScalar(1));
  EXPECT_EQ(r.per_index_norms.size(), 99u);
  for (unsigned n = 1; n < 20; ++n) {
    Rational s = 0;
    for (unsigned k = 0; k <= n; ++k) s += oracle::frac(1, static_cast<long>((k + 1) * (k + 2)));
    EXPECT_EQ(hs_partial_sum(kDisc, n).partial_sum, ExactScalar(s));
  }
}

TEST(HSPartialSum, PolydiscGrows) {
  const HSReport r = hs_partial_sum(kPolydisc, 9);
  // 2 * 10 * sum_{k=0}^{9} 1/((k+1)(k+2)) = 20 * 10/11
  EXPECT_EQ(r.partial_sum, ExactScalar(make_rational(200, 11)));
  EXPECT_EQ(r.verdict, HSVerdict::DivergentTrend);
  EXPECT_FALSE(r.limit.has_value());
  EXPECT_EQ(r.per_index_norms.size(), 200u);
}

TEST(HSPartialSum, TrendIsMonotone) {
  for (const auto* d : {&kPolydisc, &kBall}) {
    const HSReport r = hs_partial_sum(*d, 40);
    ASSERT_GE(r.trend_samples.size(), 3u);
    for (std::size_t k = 1; k < r.trend_samples.size(); ++k) {
      EXPECT_LT(r.trend_samples[k - 1].second, r.trend_samples[k].second);
    }
    EXPECT_GT(r.partial_sum.to_double(), 20.0);
  }
  const HSReport disc = hs_partial_sum(kDisc, 40);
  for (const auto& [n, s] : disc.trend_samples) EXPECT_LT(s, 1.0);
}

TEST(KernelL2, IntegrandMatchesFormula) {
  const std::vector<Complex> z{{0.3, 0.1}}, w{{-0.2, 0.4}};
  const double expect = std::norm(z[0] - w[0]) / std::pow(std::norm(1.0 - z[0] * std::conj(w[0])), 2);
  EXPECT_NEAR(kernel_l2_integrand(kDisc, z, w).real(), expect, 1e-14);
}

TEST(KernelL2, DiscBoundedAndMatchesSeries) {
  const auto sweep = kernel_l2_integral(kDisc, {0.9, 0.99, 0.999}, 1'000'000, 42);
  ASSERT_EQ(sweep.size(), 3u);
  for (const auto& s : sweep) {
    EXPECT_NEAR(s.estimate.value.real(), oracle::disc_kernel_l2(s.rho), 4 * s.estimate.std_error) << s.rho;
    EXPECT_LE(s.estimate.value.real(), std::pow(std::numbers::pi, 4) / 6);
  }
  EXPECT_TRUE(kernel_l2_bounded(sweep));
  EXPECT_FALSE(kernel_l2_diverging(sweep));
  EXPECT_EQ(disc_kernel_l2_bound(), ExactScalar(make_rational(1, 6), 4));
}

TEST(KernelL2, PolydiscDiverges) {
  const auto sweep = kernel_l2_integral(kPolydisc, {0.9, 0.99, 0.999}, 400'000, 7);
  const auto ratios = kernel_l2_growth_ratios(sweep);
  ASSERT_EQ(ratios.size(), 2u);
  EXPECT_TRUE(kernel_l2_diverging(sweep));
  EXPECT_NEAR(sweep[0].estimate.value.real(), oracle::polydisc_kernel_l2(0.9), 4 * sweep[0].estimate.std_error);
}

TEST(KernelL2, SweepPreconditions) {
  EXPECT_THROW(kernel_l2_integral(kDisc, {0.9, 0.99}, 10'000, 1), Error);
  EXPECT_THROW(kernel_l2_integral(kDisc, {0.9, 0.99, 0.98}, 10'000, 1), Error);
  EXPECT_THROW(kernel_l2_integral(kDisc, {0.9, 0.99, 1.0}, 10'000, 1), Error);
}

TEST(Poisson, IntegratesToTwoPi) {
  for (double rho : {0.1, 0.5, 0.9, 0.99}) {
    for (double phi : {0.0, 1.0, 4.0}) {
      EXPECT_NEAR(poisson_check(rho, phi), 2 * std::numbers::pi, 1e-8) << rho << " " << phi;
    }
  }
  EXPECT_THROW(poisson_check(1.0, 0.0), Error);
  EXPECT_THROW(poisson_check(0.5, 0.0, 4), Error);
}

TEST(Orthogonality, DiscGramIsDiagonal) {
  const auto gram = pairwise_orthogonality(kDisc, 6);
  ASSERT_EQ(gram.size(), 7u);
  for (std::size_t m = 0; m < gram.size(); ++m) {
    for (std::size_t n = 0; n < gram.size(); ++n) {
      if (m == n) {
        EXPECT_EQ(gram[m][n], ExactComplex(ExactScalar(oracle::frac(1, static_cast<long>((m + 1) * (m + 2))))));
      } else {
        EXPECT_TRUE(gram[m][n].is_zero());
      }
    }
  }
  EXPECT_THROW(pairwise_orthogonality(kBall, 3), Error);
}

TEST(Hankel, BallExample) {
  // (I - P)(conj(z1) z1) = conj(z1) z1 - 1/3
  EXPECT_EQ(hankel_apply(kBall, 0, HoloPoly::monomial(MultiIndex{1, 0})),
            mono({1, 0}, {1, 0}) - mono({0, 0}, {0, 0}, GaussianRational(make_rational(1, 3))));
}

TEST(Hankel, EqualsCanonicalSolution) {
  for (const auto* d : {&kPolydisc, &kBall}) {
    for (const auto& alpha : indices_up_to_degree(2, 8)) {
      const HoloPoly g = HoloPoly::monomial(alpha, GaussianRational(Rational(2), Rational(-1)));
      for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(hankel_apply(*d, j, g), multiplier_solution(*d, Form01::single(g, j)));
      }
    }
  }
}
