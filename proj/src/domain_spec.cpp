#include "bdbar/domain_spec.hpp"

#include <algorithm>
#include <numeric>

#include "bdbar/errors.hpp"

namespace bdbar {

DomainSpec DomainSpec::parse(std::string_view name) {
  if (name == "disc" || name == "D") return DomainSpec(DomainKind::Disc);
  if (name == "polydisc2" || name == "bidisc" || name == "D2") return DomainSpec(DomainKind::Polydisc2);
  if (name == "ball2" || name == "B2") return DomainSpec(DomainKind::Ball2);
  throw Error(ErrorCode::InvalidArgument,
              "unknown domain '" + std::string(name) + "' (expected disc, polydisc2 or ball2)");
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case DomainKind::Disc: return "disc";
    case DomainKind::Polydisc2: return "polydisc2";
    case DomainKind::Ball2: return "ball2";
  }
  return "?";
}

ExactScalar DomainSpec::volume() const {
  switch (kind_) {
    case DomainKind::Disc: return ExactScalar::pi(1);
    case DomainKind::Polydisc2: return ExactScalar::pi(2);
    case DomainKind::Ball2: return ExactScalar(Rational(1, 2), 2);
  }
  return {};
}

bool DomainSpec::contains(std::span<const Complex> z, double rho) const {
  if (z.size() != dim()) return false;
  const double r2 = rho * rho;
  if (kind_ == DomainKind::Ball2) {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return s < r2;
  }
  return std::all_of(z.begin(), z.end(), [r2](const Complex& c) { return std::norm(c) < r2; });
}

void DomainSpec::require_interior(std::span<const Complex> z, std::string_view what) const {
  if (z.size() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected " + std::to_string(dim()) +
                                                  " coordinates, got " + std::to_string(z.size()));
  }
  if (!contains(z)) {
    throw Error(ErrorCode::OutsideDomain, std::string(what) + " is not in the open " + name());
  }
}

double DomainSpec::max_modulus(std::span<const Complex> z) {
  double m = 0.0;
  for (const auto& c : z) m = std::max(m, std::abs(c));
  return m;
}

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t j) {
  MultiIndex out(dim);
  out[j] = 1;
  return out;
}

unsigned MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0U); }

bool MultiIndex::dominates(const MultiIndex& other) const {
  for (std::size_t j = 0; j < e_.size(); ++j)
    if (e_[j] < other.e_[j]) return false;
  return true;
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < e_.size(); ++j) out += (j ? "," : "") + std::to_string(e_[j]);
  return out + ")";
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
  if (rhs.size() != size()) throw Error(ErrorCode::DimensionMismatch, "multi-index lengths differ");
  MultiIndex out(*this);
  for (std::size_t j = 0; j < e_.size(); ++j) out.e_[j] += rhs.e_[j];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& rhs) const {
  if (rhs.size() != size()) throw Error(ErrorCode::DimensionMismatch, "multi-index lengths differ");
  if (!dominates(rhs)) throw Error(ErrorCode::InvalidArgument, "negative multi-index entry");
  MultiIndex out(*this);
  for (std::size_t j = 0; j < e_.size(); ++j) out.e_[j] -= rhs.e_[j];
  return out;
}

void require_dim(const DomainSpec& domain, const MultiIndex& alpha) {
  if (alpha.size() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "multi-index " + alpha.to_string() + " does not match " +
                                                  domain.name() + " (dimension " + std::to_string(domain.dim()) +
                                                  ")");
  }
}

std::vector<MultiIndex> indices_up_to_degree(std::size_t dim, unsigned max_degree) {
  std::vector<MultiIndex> out;
  if (dim == 1) {
    for (unsigned n = 0; n <= max_degree; ++n) out.push_back(MultiIndex{n});
    return out;
  }
  if (dim != 2) throw Error(ErrorCode::InvalidArgument, "only dimensions 1 and 2 are supported");
  for (unsigned d = 0; d <= max_degree; ++d)
    for (unsigned a = 0; a <= d; ++a) out.push_back(MultiIndex{a, d - a});
  return out;
}

}  // namespace bdbar
