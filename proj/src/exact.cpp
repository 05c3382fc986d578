#include "bdbar/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "bdbar/errors.hpp"

namespace bdbar {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::OutsideDomain: return "outside_domain";
    case ErrorCode::NearSingularity: return "near_singularity";
    case ErrorCode::NonFiniteIntegrand: return "non_finite_integrand";
    case ErrorCode::IncommensurableScale: return "incommensurable_scale";
    case ErrorCode::DegreeOverflow: return "degree_overflow";
    case ErrorCode::ConsistencyFailure: return "consistency_failure";
    case ErrorCode::Parse: return "parse_error";
  }
  return "unknown";
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

// --- ExactScalar ------------------------------------------------------------

ExactScalar::ExactScalar(Rational value, int pi_power) : value_(std::move(value)), pi_power_(pi_power) {
  value_.canonicalize();
  if (sgn(value_) == 0) pi_power_ = 0;
}

double ExactScalar::to_double() const {
  return value_.get_d() * std::pow(std::numbers::pi, pi_power_);
}

std::string ExactScalar::to_string() const {
  std::string out = bdbar::to_string(value_);
  if (pi_power_ == 1) out += "*pi";
  else if (pi_power_ != 0) out += "*pi^" + std::to_string(pi_power_);
  return out;
}

ExactScalar ExactScalar::operator+(const ExactScalar& rhs) const {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return rhs;
  if (pi_power_ != rhs.pi_power_) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot add exact scalars with different powers of pi: " + to_string() + " + " + rhs.to_string());
  }
  return {Rational(value_ + rhs.value_), pi_power_};
}

ExactScalar ExactScalar::operator-(const ExactScalar& rhs) const { return *this + (-rhs); }

ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const {
  return {Rational(value_ * rhs.value_), pi_power_ + rhs.pi_power_};
}

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division of exact scalar by zero");
  return {Rational(value_ / rhs.value_), pi_power_ - rhs.pi_power_};
}

std::strong_ordering ExactScalar::operator<=>(const ExactScalar& rhs) const {
  if (!is_zero() && !rhs.is_zero() && pi_power_ != rhs.pi_power_) {
    throw Error(ErrorCode::InvalidArgument,
                "exact comparison across powers of pi: " + to_string() + " vs " + rhs.to_string());
  }
  const int c = cmp(value_, rhs.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool ExactScalar::sqrt(ExactScalar& root) const {
  if (pi_power_ % 2 != 0) return false;
  Rational r;
  if (!rational_sqrt(value_, r)) return false;
  root = ExactScalar(r, pi_power_ / 2);
  return true;
}

// --- GaussianRational -------------------------------------------------------

GaussianRational GaussianRational::operator/(const GaussianRational& b) const {
  const Rational d = b.norm_sq();
  if (sgn(d) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero Gaussian rational");
  return {Rational((re * b.re + im * b.im) / d), Rational((im * b.re - re * b.im) / d)};
}

std::string GaussianRational::to_string() const {
  if (is_real()) return bdbar::to_string(re);
  std::string out = sgn(re) == 0 ? "" : bdbar::to_string(re) + (sgn(im) > 0 ? "+" : "");
  return out + bdbar::to_string(im) + "i";
}

// --- ExactComplex -----------------------------------------------------------

ExactComplex::ExactComplex(GaussianRational value, int pi_power) : value_(std::move(value)), pi_power_(pi_power) {
  value_.re.canonicalize();
  value_.im.canonicalize();
  if (value_.is_zero()) pi_power_ = 0;
}

std::complex<double> ExactComplex::to_complex() const {
  return value_.to_complex() * std::pow(std::numbers::pi, pi_power_);
}

std::string ExactComplex::to_string() const {
  std::string out = value_.is_real() ? value_.to_string() : "(" + value_.to_string() + ")";
  if (pi_power_ == 1) out += "*pi";
  else if (pi_power_ != 0) out += "*pi^" + std::to_string(pi_power_);
  return out;
}

ExactComplex ExactComplex::operator+(const ExactComplex& rhs) const {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return rhs;
  if (pi_power_ != rhs.pi_power_) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot add exact values with different powers of pi: " + to_string() + " + " + rhs.to_string());
  }
  return {value_ + rhs.value_, pi_power_};
}

ExactComplex ExactComplex::operator*(const ExactComplex& rhs) const {
  return {value_ * rhs.value_, pi_power_ + rhs.pi_power_};
}

}  // namespace bdbar
