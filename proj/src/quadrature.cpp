#include "bdbar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <gsl/gsl_integration.h>

#include "bdbar/errors.hpp"

namespace bdbar {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kMcChunk = 1U << 16U;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

// Runs fn(i) for i in [0, n) on a fixed static partition. Results must be
// written to per-index slots by fn; the first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

template <class T>
T pairwise_sum_impl(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum_impl(v.first(half)) + pairwise_sum_impl(v.subspan(half));
}

void check_finite(Complex value, std::span<const Complex> z, std::span<const Complex> w = {}) {
  if (std::isfinite(value.real()) && std::isfinite(value.imag())) return;
  std::vector<Complex> point(z.begin(), z.end());
  point.insert(point.end(), w.begin(), w.end());
  std::ostringstream os;
  os << "integrand is not finite at (";
  for (std::size_t j = 0; j < point.size(); ++j) os << (j ? ", " : "") << point[j];
  os << ")";
  throw IntegrandError(std::move(point), os.str());
}

struct RadialNode {
  double r[2];
  double weight;
};

// Radial part of the polar tensor rule (everything except the angles).
std::vector<RadialNode> radial_nodes(const DomainSpec& domain, const QuadratureSpec& spec) {
  const double rho = spec.radius_cutoff;
  const auto radial = gauss_legendre(spec.radial_nodes, 0.0, rho);
  std::vector<RadialNode> out;
  switch (domain.kind()) {
    case DomainKind::Disc:
      for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        out.push_back({{radial.nodes[i], 0.0}, radial.weights[i] * radial.nodes[i]});
      }
      break;
    case DomainKind::Polydisc2:
      for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
          out.push_back({{radial.nodes[i], radial.nodes[k]},
                         radial.weights[i] * radial.nodes[i] * radial.weights[k] * radial.nodes[k]});
        }
      }
      break;
    case DomainKind::Ball2: {
      // r1 r2 dr1 dr2 = t^3 cos(phi) sin(phi) dt dphi
      const auto polar = gauss_legendre(spec.radial_nodes, 0.0, std::numbers::pi / 2);
      for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double t = radial.nodes[i];
        for (std::size_t k = 0; k < polar.nodes.size(); ++k) {
          const double c = std::cos(polar.nodes[k]), s = std::sin(polar.nodes[k]);
          out.push_back({{t * c, t * s}, radial.weights[i] * t * t * t * polar.weights[k] * c * s});
        }
      }
      break;
    }
  }
  return out;
}

IntegralEstimate integrate_polar(const DomainSpec& domain, const PointIntegrand& f, const QuadratureSpec& spec) {
  const auto radial = radial_nodes(domain, spec);
  const unsigned na = spec.angular_nodes;
  std::vector<Complex> phase(na);
  for (unsigned k = 0; k < na; ++k) phase[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / na);
  const double dtheta = 2.0 * std::numbers::pi / na;
  const double angular_weight = domain.dim() == 1 ? dtheta : dtheta * dtheta;

  std::vector<Complex> partial(radial.size());
  parallel_for(radial.size(), [&](std::size_t i) {
    const RadialNode& node = radial[i];
    std::vector<Complex> rows(domain.dim() == 1 ? 1 : na);
    Complex z[2];
    if (domain.dim() == 1) {
      Complex s = 0.0;
      for (unsigned k = 0; k < na; ++k) {
        z[0] = node.r[0] * phase[k];
        const Complex v = f(std::span<const Complex>(z, 1));
        check_finite(v, std::span<const Complex>(z, 1));
        s += v;
      }
      rows[0] = s;
    } else {
      for (unsigned k1 = 0; k1 < na; ++k1) {
        z[0] = node.r[0] * phase[k1];
        Complex s = 0.0;
        for (unsigned k2 = 0; k2 < na; ++k2) {
          z[1] = node.r[1] * phase[k2];
          const Complex v = f(std::span<const Complex>(z, 2));
          check_finite(v, std::span<const Complex>(z, 2));
          s += v;
        }
        rows[k1] = s;
      }
    }
    partial[i] = node.weight * angular_weight * pairwise_sum(rows);
  });
  return {pairwise_sum(partial), 0.0, spec};
}

// Shared Monte Carlo driver: `sample_value(rng, index)` draws the point(s) for
// one sample from its own stream and returns the integrand value.
template <class SampleFn>
IntegralEstimate monte_carlo(std::uint64_t samples, double volume, const QuadratureSpec& spec,
                             SampleFn&& sample_value) {
  const std::size_t chunks = (samples + kMcChunk - 1) / kMcChunk;
  std::vector<Complex> sums(chunks);
  std::vector<double> squares(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = c * kMcChunk;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kMcChunk);
    std::vector<Complex> values(end - begin);
    std::vector<double> sq(end - begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      CounterRng rng(spec.seed, i);
      const Complex v = sample_value(rng);
      values[i - begin] = v;
      sq[i - begin] = std::norm(v);
    }
    sums[c] = pairwise_sum(values);
    squares[c] = pairwise_sum(sq);
  });
  const auto n = static_cast<double>(samples);
  const Complex mean = pairwise_sum(sums) / n;
  const double mean_sq = pairwise_sum(squares) / n;
  const double variance = std::max(0.0, (mean_sq - std::norm(mean)) * n / (n - 1.0));
  return {volume * mean, volume * std::sqrt(variance / n), spec};
}

double dilated_volume(const DomainSpec& domain, double rho) {
  return domain.volume().to_double() * std::pow(rho, 2.0 * static_cast<double>(domain.dim()));
}

}  // namespace

// --- QuadratureSpec ---------------------------------------------------------

QuadratureSpec QuadratureSpec::polar(unsigned radial, unsigned angular, double rho) {
  QuadratureSpec s;
  s.method = QuadratureMethod::PolarTensor;
  s.radial_nodes = radial;
  s.angular_nodes = angular;
  s.radius_cutoff = rho;
  return s;
}

QuadratureSpec QuadratureSpec::monte_carlo(std::uint64_t samples, std::uint64_t seed, double rho) {
  QuadratureSpec s;
  s.method = QuadratureMethod::MonteCarlo;
  s.mc_samples = samples;
  s.seed = seed;
  s.radius_cutoff = rho;
  return s;
}

void QuadratureSpec::validate(bool boundary_singular) const {
  if (!(radius_cutoff > 0.0 && radius_cutoff <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "radius cutoff must lie in (0, 1]");
  }
  if (boundary_singular && radius_cutoff >= 1.0) {
    throw Error(ErrorCode::InvalidArgument, "boundary-singular integrands need a radius cutoff < 1");
  }
  if (method == QuadratureMethod::PolarTensor) {
    if (radial_nodes < 4 || angular_nodes < 8) {
      throw Error(ErrorCode::InvalidArgument, "polar rule needs >= 4 radial and >= 8 angular nodes");
    }
  } else if (mc_samples < 1000) {
    throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs >= 1000 samples");
  }
}

std::string QuadratureSpec::describe() const {
  std::ostringstream os;
  if (method == QuadratureMethod::PolarTensor) {
    os << "polar " << radial_nodes << "x" << angular_nodes;
  } else {
    os << "mc " << mc_samples << " samples seed " << seed;
  }
  os << " rho " << radius_cutoff;
  return os.str();
}

// --- integration ------------------------------------------------------------

IntegralEstimate integrate(const DomainSpec& domain, const PointIntegrand& f, const QuadratureSpec& spec,
                           bool boundary_singular) {
  spec.validate(boundary_singular);
  if (spec.method == QuadratureMethod::PolarTensor) return integrate_polar(domain, f, spec);
  const std::size_t dim = domain.dim();
  return monte_carlo(spec.mc_samples, dilated_volume(domain, spec.radius_cutoff), spec, [&](CounterRng& rng) {
    Complex z[2];
    sample_uniform(domain, spec.radius_cutoff, rng, std::span<Complex>(z, dim));
    const Complex v = f(std::span<const Complex>(z, dim));
    check_finite(v, std::span<const Complex>(z, dim));
    return v;
  });
}

IntegralEstimate integrate_product_domain(const DomainSpec& domain, const PairIntegrand& g,
                                          const QuadratureSpec& spec, bool boundary_singular) {
  if (spec.method != QuadratureMethod::MonteCarlo) {
    throw Error(ErrorCode::InvalidArgument, "product-domain integration is Monte Carlo only");
  }
  spec.validate(boundary_singular);
  const std::size_t dim = domain.dim();
  const double volume = dilated_volume(domain, spec.radius_cutoff);
  return monte_carlo(spec.mc_samples, volume * volume, spec, [&](CounterRng& rng) {
    Complex z[2], w[2];
    sample_uniform(domain, spec.radius_cutoff, rng, std::span<Complex>(z, dim));
    sample_uniform(domain, spec.radius_cutoff, rng, std::span<Complex>(w, dim));
    const Complex v = g(std::span<const Complex>(z, dim), std::span<const Complex>(w, dim));
    check_finite(v, std::span<const Complex>(z, dim), std::span<const Complex>(w, dim));
    return v;
  });
}

GaussLegendreRule gauss_legendre(unsigned n, double a, double b) {
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n);
  if (table == nullptr) throw Error(ErrorCode::InvalidArgument, "cannot build Gauss-Legendre rule");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (unsigned i = 0; i < n; ++i) gsl_integration_glfixed_point(a, b, i, &rule.nodes[i], &rule.weights[i], table);
  gsl_integration_glfixed_table_free(table);
  return rule;
}

// --- sampling ---------------------------------------------------------------

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index) : key_(mix64(mix64(seed + kGolden) ^ (index * kGolden + 1))) {}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

void sample_uniform(const DomainSpec& domain, double rho, CounterRng& rng, std::span<Complex> out) {
  auto symmetric = [&rng] { return 2.0 * rng.next_uniform() - 1.0; };
  if (domain.kind() == DomainKind::Ball2) {
    double x[4];
    for (;;) {
      double s = 0.0;
      for (double& v : x) {
        v = symmetric();
        s += v * v;
      }
      if (s < 1.0) break;
    }
    out[0] = rho * Complex(x[0], x[1]);
    out[1] = rho * Complex(x[2], x[3]);
    return;
  }
  for (auto& c : out) {
    double x, y;
    do {
      x = symmetric();
      y = symmetric();
    } while (x * x + y * y >= 1.0);
    c = rho * Complex(x, y);
  }
}

Complex pairwise_sum(std::span<const Complex> values) { return pairwise_sum_impl(values); }
double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values); }

}  // namespace bdbar
