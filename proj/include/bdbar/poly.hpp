#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bdbar/domain_spec.hpp"
#include "bdbar/errors.hpp"
#include "bdbar/exact.hpp"

namespace bdbar {

// A finite polynomial sqrt(scale_sq) * sum_k c_k m_k with Gaussian-rational
// coefficients c_k over monomials m_k keyed by Key, plus one common positive
// scale carried as its exact square. The scale is what lets orthonormal basis
// elements such as sqrt((n+1)/pi) z^n stay exact.
//
// Key = MultiIndex gives holomorphic polynomials, Key = MixedKey polynomials
// in z and conj(z). Terms are kept in graded-lex order without zeros.
template <class Key>
class Poly {
 public:
  using TermMap = std::map<Key, GaussianRational, GradedLexLess>;

  explicit Poly(std::size_t dim) : dim_(dim) {}
  Poly(std::size_t dim, TermMap terms, ExactScalar scale_sq = ExactScalar(1));

  static Poly monomial(const Key& key, GaussianRational c = GaussianRational(1)) {
    Poly out(key.size());
    out.add_term(key, std::move(c));
    return out;
  }
  static Poly constant(std::size_t dim, GaussianRational c);

  std::size_t dim() const { return dim_; }
  const ExactScalar& scale_sq() const { return scale_sq_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const;
  // Unscaled coefficient of a monomial (zero if absent).
  GaussianRational coefficient(const Key& key) const;

  Poly& add_term(const Key& key, const GaussianRational& c);

  // Multiply by sqrt(s) for a positive exact scalar s.
  Poly times_sqrt(const ExactScalar& s) const;
  Poly operator*(const GaussianRational& c) const;
  Poly operator-() const { return *this * GaussianRational(-1); }

  // Sums require the two scales to differ by a rational square; otherwise
  // the result has no exact representation and IncommensurableScale is thrown.
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs) { return *this += -rhs; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

  // Equality of the represented functions, independent of how the scale is split.
  friend bool operator==(const Poly& a, const Poly& b) { return equal_values(a, b); }

  // Floating-point coefficients with the scale folded in.
  std::vector<std::pair<Key, Complex>> materialize() const;

 private:
  void canonicalize();
  static Poly multiply(const Poly& a, const Poly& b);
  static bool equal_values(const Poly& a, const Poly& b);
  void require_same_dim(const Poly& rhs) const;

  std::size_t dim_;
  TermMap terms_;
  ExactScalar scale_sq_{1};
};

using HoloPoly = Poly<MultiIndex>;
using MixedPoly = Poly<MixedKey>;

extern template class Poly<MultiIndex>;
extern template class Poly<MixedKey>;

MixedPoly to_mixed(const HoloPoly& h);
// Lossless conversion when every term has beta = 0.
std::optional<HoloPoly> to_holo(const MixedPoly& f);
bool is_holomorphic(const MixedPoly& f);

// Complex conjugate of the represented function.
MixedPoly conj(const MixedPoly& f);
MixedPoly conj(const HoloPoly& h);

// conj(z_j) * f.
MixedPoly times_zbar(const MixedPoly& f, std::size_t j);
MixedPoly times_zbar(const HoloPoly& h, std::size_t j);

// Wirtinger derivatives: d/dconj(z_j) maps z^a conj(z)^b to b_j z^a conj(z)^(b - e_j).
MixedPoly d_dzbar(const MixedPoly& f, std::size_t j);
HoloPoly d_dz(const HoloPoly& h, std::size_t j);

Complex evaluate(const HoloPoly& h, std::span<const Complex> z);
Complex evaluate(const MixedPoly& f, std::span<const Complex> z);

// Upper bound on the total degree of compositions with a holomorphic map.
inline constexpr unsigned kMaxCompositionDegree = 64;

// h o F and f o F for a holomorphic polynomial map F = (F_1, ..., F_dim).
HoloPoly compose(const HoloPoly& h, std::span<const HoloPoly> map);
MixedPoly compose(const MixedPoly& f, std::span<const HoloPoly> map);

HoloPoly power(const HoloPoly& h, unsigned k);

// Floating-point evaluator for repeated evaluation inside quadrature loops.
// Supports dimension <= 2 and partial degrees <= kMaxCompositionDegree.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MixedPoly& f);
  explicit CompiledPoly(const HoloPoly& h);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::span<const Complex> z) const;

 private:
  struct Term {
    unsigned a[2];
    unsigned b[2];
    Complex c;
  };
  void add(const MultiIndex& alpha, const MultiIndex& beta, Complex c);

  std::size_t dim_ = 0;
  unsigned max_a_ = 0;
  unsigned max_b_ = 0;
  std::vector<Term> terms_;
};

}  // namespace bdbar
