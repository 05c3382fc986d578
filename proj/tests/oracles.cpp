#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

bdbar::Integer fact(unsigned n) {
  bdbar::Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// sqrt(q pi^k) when it is again rational times a power of pi.
ExactScalar exact_sqrt(const ExactScalar& s) {
  if (s.pi_power() % 2 != 0) throw std::runtime_error("odd pi power under square root");
  const Rational& q = s.rational();
  bdbar::Integer num, den, rem;
  mpz_sqrtrem(num.get_mpz_t(), rem.get_mpz_t(), q.get_num_mpz_t());
  if (rem != 0) throw std::runtime_error("numerator is not a square");
  mpz_sqrtrem(den.get_mpz_t(), rem.get_mpz_t(), q.get_den_mpz_t());
  if (rem != 0) throw std::runtime_error("denominator is not a square");
  Rational root(num, den);
  root.canonicalize();
  return ExactScalar(root, s.pi_power() / 2);
}

}  // namespace

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

ExactScalar moment(DomainKind kind, const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  if (a != b) return ExactScalar();
  switch (kind) {
    case DomainKind::Disc:
      return ExactScalar(frac(1, a[0] + 1), 1);
    case DomainKind::Polydisc2:
      return ExactScalar(frac(1, static_cast<long>((a[0] + 1) * (a[1] + 1))), 2);
    case DomainKind::Ball2: {
      Rational q(fact(a[0]) * fact(a[1]), fact(a[0] + a[1] + 2));
      q.canonicalize();
      return ExactScalar(q, 2);
    }
  }
  return ExactScalar();
}

ExactComplex inner(DomainKind kind, const MixedPoly& f, const MixedPoly& g) {
  Rational re = 0;
  Rational im = 0;
  int pi_power = 0;
  bool any = false;
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      std::vector<unsigned> a, b;
      for (std::size_t j = 0; j < f.dim(); ++j) {
        a.push_back(kf.alpha[j] + kg.beta[j]);
        b.push_back(kf.beta[j] + kg.alpha[j]);
      }
      const ExactScalar m = moment(kind, a, b);
      if (m.is_zero()) continue;
      const auto c = cf * cg.conj();
      re += c.re * m.rational();
      im += c.im * m.rational();
      pi_power = m.pi_power();
      any = true;
    }
  }
  if (!any || (re == 0 && im == 0)) return ExactComplex();
  const ExactScalar s = exact_sqrt(f.scale_sq() * g.scale_sq());
  return ExactComplex(bdbar::GaussianRational(re * s.rational(), im * s.rational()), pi_power + s.pi_power());
}

MixedPoly dzbar(const MixedPoly& f, std::size_t j) {
  MixedPoly::TermMap terms;
  for (const auto& [key, c] : f.terms()) {
    if (key.beta[j] == 0) continue;
    auto beta = key.beta.entries();
    const unsigned bj = beta[j];
    beta[j] -= 1;
    terms.emplace(bdbar::MixedKey{key.alpha, bdbar::MultiIndex(beta)}, c * bdbar::GaussianRational(bj));
  }
  return MixedPoly(f.dim(), std::move(terms), f.scale_sq());
}

Complex eval(const MixedPoly& f, const std::vector<Complex>& z) {
  Complex sum = 0.0;
  for (const auto& [key, c] : f.terms()) {
    Complex term(c.re.get_d(), c.im.get_d());
    for (std::size_t j = 0; j < z.size(); ++j) {
      term *= std::pow(z[j], static_cast<int>(key.alpha[j])) * std::pow(std::conj(z[j]), static_cast<int>(key.beta[j]));
    }
    sum += term;
  }
  return std::sqrt(f.scale_sq().to_double()) * sum;
}

double disc_kernel_l2(double rho) {
  // 2 pi^2 (1 - rho^2) sum_k (k+1)/(k+2) rho^(4k+6)
  const double r4 = std::pow(rho, 4);
  double term = std::pow(rho, 6);
  double sum = 0.0;
  for (long k = 0; k < 2'000'000 && term > 1e-20; ++k) {
    sum += static_cast<double>(k + 1) / static_cast<double>(k + 2) * term;
    term *= r4;
  }
  return 2.0 * std::numbers::pi * std::numbers::pi * (1.0 - rho * rho) * sum;
}

double disc_inverse_fourth(double rho) {
  const double r4 = std::pow(rho, 4);
  return std::numbers::pi * std::numbers::pi * r4 / (1.0 - r4);
}

double disc_inverse_square(double rho) {
  const double r4 = std::pow(rho, 4);
  double term = 1.0;
  double sum = 0.0;
  for (long k = 1; k < 2'000'000; ++k) {
    term *= r4;
    const double add = term / static_cast<double>(k * k);
    sum += add;
    if (add < 1e-20) break;
  }
  return std::numbers::pi * std::numbers::pi * sum;
}

double polydisc_kernel_l2(double rho) { return 2.0 * disc_kernel_l2(rho) * disc_inverse_fourth(rho); }

}  // namespace oracle
