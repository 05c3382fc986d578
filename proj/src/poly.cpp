#include "bdbar/poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bdbar {

namespace {

// Rational q with q^2 = s when s has no pi factor and is a rational square.
bool rational_root_of(const ExactScalar& s, Rational& q) {
  return s.pi_power() == 0 && rational_sqrt(s.rational(), q);
}

}  // namespace

template <class Key>
Poly<Key>::Poly(std::size_t dim, TermMap terms, ExactScalar scale_sq)
    : dim_(dim), terms_(std::move(terms)), scale_sq_(std::move(scale_sq)) {
  for (const auto& [key, c] : terms_) {
    if (key.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "polynomial term has wrong dimension");
  }
  canonicalize();
}

template <class Key>
Poly<Key> Poly<Key>::constant(std::size_t dim, GaussianRational c) {
  if constexpr (std::is_same_v<Key, MultiIndex>) {
    return monomial(MultiIndex(dim), std::move(c));
  } else {
    return monomial(MixedKey{MultiIndex(dim), MultiIndex(dim)}, std::move(c));
  }
}

template <class Key>
void Poly<Key>::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  if (scale_sq_.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "polynomial scale must be positive");
  if (terms_.empty()) {
    scale_sq_ = ExactScalar(1);
    return;
  }
  Rational root;
  if (scale_sq_ != ExactScalar(1) && rational_root_of(scale_sq_, root)) {
    for (auto& [key, c] : terms_) c *= GaussianRational(root);
    scale_sq_ = ExactScalar(1);
  }
}

template <class Key>
unsigned Poly<Key>::degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.degree());
  return d;
}

template <class Key>
GaussianRational Poly<Key>::coefficient(const Key& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational() : it->second;
}

template <class Key>
Poly<Key>& Poly<Key>::add_term(const Key& key, const GaussianRational& c) {
  if (key.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "polynomial term has wrong dimension");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

template <class Key>
Poly<Key> Poly<Key>::times_sqrt(const ExactScalar& s) const {
  if (s.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "times_sqrt requires a positive factor");
  return Poly(dim_, terms_, scale_sq_ * s);
}

template <class Key>
Poly<Key> Poly<Key>::operator*(const GaussianRational& c) const {
  Poly out(dim_);
  if (c.is_zero()) return out;
  out.scale_sq_ = scale_sq_;
  for (const auto& [key, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, v * c);
  return out;
}

template <class Key>
void Poly<Key>::require_same_dim(const Poly& rhs) const {
  if (rhs.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "polynomials of different dimension");
}

template <class Key>
Poly<Key>& Poly<Key>::operator+=(const Poly& rhs) {
  require_same_dim(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  GaussianRational factor(1);
  if (rhs.scale_sq_ != scale_sq_) {
    Rational q;
    if (!rational_root_of(rhs.scale_sq_ / scale_sq_, q)) {
      throw Error(ErrorCode::IncommensurableScale,
                  "sum of polynomials with scales sqrt(" + scale_sq_.to_string() + ") and sqrt(" +
                      rhs.scale_sq_.to_string() + ") has no exact representation");
    }
    factor = GaussianRational(q);
  }
  for (const auto& [key, c] : rhs.terms_) add_term(key, c * factor);
  canonicalize();
  return *this;
}

template <class Key>
Poly<Key> Poly<Key>::multiply(const Poly& a, const Poly& b) {
  a.require_same_dim(b);
  Poly out(a.dim_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  out.scale_sq_ = a.scale_sq_ * b.scale_sq_;
  out.canonicalize();
  return out;
}

template <class Key>
bool Poly<Key>::equal_values(const Poly& a, const Poly& b) {
  if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  // a = sqrt(sa) ca, b = sqrt(sb) cb; equal iff ca = q cb with q = sqrt(sb / sa) rational.
  Rational q(1);
  if (a.scale_sq_ != b.scale_sq_ && !rational_root_of(b.scale_sq_ / a.scale_sq_, q)) return false;
  const GaussianRational factor(q);
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !(ia->second == ib->second * factor)) return false;
  }
  return true;
}

template <class Key>
std::vector<std::pair<Key, Complex>> Poly<Key>::materialize() const {
  std::vector<std::pair<Key, Complex>> out;
  out.reserve(terms_.size());
  const double s = std::sqrt(scale_sq_.to_double());
  for (const auto& [key, c] : terms_) out.emplace_back(key, s * c.to_complex());
  return out;
}

template class Poly<MultiIndex>;
template class Poly<MixedKey>;

// --- free functions ---------------------------------------------------------

MixedPoly to_mixed(const HoloPoly& h) {
  MixedPoly::TermMap terms;
  for (const auto& [alpha, c] : h.terms()) terms.emplace(MixedKey{alpha, MultiIndex(h.dim())}, c);
  return MixedPoly(h.dim(), std::move(terms), h.scale_sq());
}

bool is_holomorphic(const MixedPoly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& kv) { return kv.first.beta.is_zero(); });
}

std::optional<HoloPoly> to_holo(const MixedPoly& f) {
  if (!is_holomorphic(f)) return std::nullopt;
  HoloPoly::TermMap terms;
  for (const auto& [key, c] : f.terms()) terms.emplace(key.alpha, c);
  return HoloPoly(f.dim(), std::move(terms), f.scale_sq());
}

MixedPoly conj(const MixedPoly& f) {
  MixedPoly::TermMap terms;
  for (const auto& [key, c] : f.terms()) terms.emplace(MixedKey{key.beta, key.alpha}, c.conj());
  return MixedPoly(f.dim(), std::move(terms), f.scale_sq());
}

MixedPoly conj(const HoloPoly& h) { return conj(to_mixed(h)); }

MixedPoly times_zbar(const MixedPoly& f, std::size_t j) {
  if (j >= f.dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
  const MultiIndex ej = MultiIndex::unit(f.dim(), j);
  MixedPoly::TermMap terms;
  for (const auto& [key, c] : f.terms()) terms.emplace(MixedKey{key.alpha, key.beta + ej}, c);
  return MixedPoly(f.dim(), std::move(terms), f.scale_sq());
}

MixedPoly times_zbar(const HoloPoly& h, std::size_t j) { return times_zbar(to_mixed(h), j); }

MixedPoly d_dzbar(const MixedPoly& f, std::size_t j) {
  if (j >= f.dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
  const MultiIndex ej = MultiIndex::unit(f.dim(), j);
  MixedPoly::TermMap terms;
  for (const auto& [key, c] : f.terms()) {
    if (key.beta[j] == 0) continue;
    terms.emplace(MixedKey{key.alpha, key.beta - ej}, c * GaussianRational(static_cast<long>(key.beta[j])));
  }
  return MixedPoly(f.dim(), std::move(terms), f.scale_sq());
}

HoloPoly d_dz(const HoloPoly& h, std::size_t j) {
  if (j >= h.dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
  const MultiIndex ej = MultiIndex::unit(h.dim(), j);
  HoloPoly::TermMap terms;
  for (const auto& [alpha, c] : h.terms()) {
    if (alpha[j] == 0) continue;
    terms.emplace(alpha - ej, c * GaussianRational(static_cast<long>(alpha[j])));
  }
  return HoloPoly(h.dim(), std::move(terms), h.scale_sq());
}

Complex evaluate(const HoloPoly& h, std::span<const Complex> z) { return CompiledPoly(h)(z); }

Complex evaluate(const MixedPoly& f, std::span<const Complex> z) { return CompiledPoly(f)(z); }

HoloPoly power(const HoloPoly& h, unsigned k) {
  HoloPoly out = HoloPoly::constant(h.dim(), GaussianRational(1));
  HoloPoly base = h;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

namespace {

void require_map(std::size_t dim, std::span<const HoloPoly> map, unsigned degree) {
  if (map.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "holomorphic map has " + std::to_string(map.size()) +
                                                  " components, expected " + std::to_string(dim));
  }
  unsigned map_degree = 0;
  for (const auto& c : map) {
    if (c.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "map component of wrong dimension");
    map_degree = std::max(map_degree, c.degree());
  }
  if (static_cast<unsigned long>(degree) * map_degree > kMaxCompositionDegree) {
    throw Error(ErrorCode::DegreeOverflow, "composition degree " + std::to_string(degree * map_degree) +
                                               " exceeds the cap " + std::to_string(kMaxCompositionDegree));
  }
}

// Lazily filled table of powers F_j^k (or conj(F_j)^k).
template <class P>
class PowerTable {
 public:
  PowerTable(std::vector<P> bases, std::size_t dim) : bases_(std::move(bases)), dim_(dim), powers_(bases_.size()) {}

  const P& get(std::size_t j, unsigned k) {
    auto& row = powers_[j];
    if (row.empty()) row.push_back(P::constant(dim_, GaussianRational(1)));
    while (row.size() <= k) row.push_back(row.back() * bases_[j]);
    return row[k];
  }

 private:
  std::vector<P> bases_;
  std::size_t dim_;
  std::vector<std::vector<P>> powers_;
};

}  // namespace

HoloPoly compose(const HoloPoly& h, std::span<const HoloPoly> map) {
  require_map(h.dim(), map, h.degree());
  PowerTable<HoloPoly> table(std::vector<HoloPoly>(map.begin(), map.end()), h.dim());
  HoloPoly out(h.dim());
  for (const auto& [alpha, c] : h.terms()) {
    HoloPoly term = HoloPoly::constant(h.dim(), c);
    for (std::size_t j = 0; j < h.dim(); ++j) term = term * table.get(j, alpha[j]);
    out += term;
  }
  return out.times_sqrt(h.scale_sq());
}

MixedPoly compose(const MixedPoly& f, std::span<const HoloPoly> map) {
  require_map(f.dim(), map, f.degree());
  std::vector<MixedPoly> holo, anti;
  for (const auto& c : map) {
    holo.push_back(to_mixed(c));
    anti.push_back(conj(c));
  }
  PowerTable<MixedPoly> ht(std::move(holo), f.dim());
  PowerTable<MixedPoly> at(std::move(anti), f.dim());
  MixedPoly out(f.dim());
  for (const auto& [key, c] : f.terms()) {
    MixedPoly term = MixedPoly::constant(f.dim(), c);
    for (std::size_t j = 0; j < f.dim(); ++j) term = term * ht.get(j, key.alpha[j]) * at.get(j, key.beta[j]);
    out += term;
  }
  return out.times_sqrt(f.scale_sq());
}

// --- CompiledPoly -----------------------------------------------------------

void CompiledPoly::add(const MultiIndex& alpha, const MultiIndex& beta, Complex c) {
  Term t{{0, 0}, {0, 0}, c};
  for (std::size_t j = 0; j < dim_; ++j) {
    t.a[j] = alpha[j];
    t.b[j] = beta[j];
    if (t.a[j] > kMaxCompositionDegree || t.b[j] > kMaxCompositionDegree) {
      throw Error(ErrorCode::DegreeOverflow, "degree too large for floating evaluation");
    }
    max_a_ = std::max(max_a_, t.a[j]);
    max_b_ = std::max(max_b_, t.b[j]);
  }
  terms_.push_back(t);
}

CompiledPoly::CompiledPoly(const MixedPoly& f) : dim_(f.dim()) {
  if (dim_ > 2) throw Error(ErrorCode::DimensionMismatch, "floating evaluation supports dimension <= 2");
  for (const auto& [key, c] : f.materialize()) add(key.alpha, key.beta, c);
}

CompiledPoly::CompiledPoly(const HoloPoly& h) : dim_(h.dim()) {
  if (dim_ > 2) throw Error(ErrorCode::DimensionMismatch, "floating evaluation supports dimension <= 2");
  const MultiIndex zero(dim_);
  for (const auto& [alpha, c] : h.materialize()) add(alpha, zero, c);
}

Complex CompiledPoly::operator()(std::span<const Complex> z) const {
  if (z.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
  // Power tables: zp[j * stride + k] = z_j^k, zbp likewise for conj(z_j).
  thread_local std::vector<Complex> scratch;
  const std::size_t na = max_a_ + 1, nb = max_b_ + 1;
  scratch.resize(dim_ * (na + nb));
  Complex* zp = scratch.data();
  Complex* zbp = zp + dim_ * na;
  for (std::size_t j = 0; j < dim_; ++j) {
    Complex* a = zp + j * na;
    Complex* b = zbp + j * nb;
    a[0] = b[0] = 1.0;
    for (unsigned k = 1; k < na; ++k) a[k] = a[k - 1] * z[j];
    const Complex zb = std::conj(z[j]);
    for (unsigned k = 1; k < nb; ++k) b[k] = b[k - 1] * zb;
  }
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    Complex m = t.c;
    for (std::size_t j = 0; j < dim_; ++j) m *= zp[j * na + t.a[j]] * zbp[j * nb + t.b[j]];
    sum += m;
  }
  return sum;
}

}  // namespace bdbar
