#pragma once

#include <compare>
#include <complex>
#include <string>

#include <gmpxx.h>

namespace bdbar {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);

// num / den in canonical form.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Returns true and stores the root when q = root^2 with root >= 0.
bool rational_sqrt(const Rational& q, Rational& root);

// rational * pi^pi_power. Zero is always stored with pi_power 0.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational value, int pi_power = 0);  // NOLINT(google-explicit-constructor)
  ExactScalar(long value) : ExactScalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static ExactScalar pi(int power = 1) { return ExactScalar(Rational(1), power); }

  const Rational& rational() const { return value_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const;
  std::string to_string() const;

  // Addition requires matching powers of pi unless one side is zero.
  ExactScalar operator+(const ExactScalar& rhs) const;
  ExactScalar operator-(const ExactScalar& rhs) const;
  ExactScalar operator-() const { return ExactScalar(-value_, pi_power_); }
  ExactScalar operator*(const ExactScalar& rhs) const;
  ExactScalar operator/(const ExactScalar& rhs) const;
  ExactScalar& operator+=(const ExactScalar& rhs) { return *this = *this + rhs; }

  bool operator==(const ExactScalar& rhs) const {
    return pi_power_ == rhs.pi_power_ && value_ == rhs.value_;
  }
  // Ordering across different pi powers is not representable exactly; throws.
  std::strong_ordering operator<=>(const ExactScalar& rhs) const;

  // sqrt(*this) as an ExactScalar if it is one.
  bool sqrt(ExactScalar& root) const;

 private:
  Rational value_{0};
  int pi_power_ = 0;
};

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;

  GaussianRational operator+(const GaussianRational& b) const { return {re + b.re, im + b.im}; }
  GaussianRational operator-(const GaussianRational& b) const { return {re - b.re, im - b.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& b) const {
    return {re * b.re - im * b.im, re * b.im + im * b.re};
  }
  GaussianRational operator/(const GaussianRational& b) const;
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  bool operator==(const GaussianRational& b) const { return re == b.re && im == b.im; }
};

// Gaussian rational * pi^pi_power; the value type of exact inner products.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(GaussianRational value, int pi_power = 0);  // NOLINT(google-explicit-constructor)
  ExactComplex(const ExactScalar& s) : ExactComplex(GaussianRational(s.rational()), s.pi_power()) {}  // NOLINT

  const GaussianRational& value() const { return value_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_real() const { return value_.is_real(); }
  ExactScalar real() const { return {value_.re, pi_power_}; }
  ExactScalar imag() const { return {value_.im, pi_power_}; }
  ExactComplex conj() const { return {value_.conj(), pi_power_}; }
  std::complex<double> to_complex() const;
  std::string to_string() const;

  ExactComplex operator+(const ExactComplex& rhs) const;
  ExactComplex operator*(const ExactComplex& rhs) const;
  ExactComplex& operator+=(const ExactComplex& rhs) { return *this = *this + rhs; }
  bool operator==(const ExactComplex& rhs) const {
    return pi_power_ == rhs.pi_power_ && value_ == rhs.value_;
  }

 private:
  GaussianRational value_;
  int pi_power_ = 0;
};

}  // namespace bdbar
