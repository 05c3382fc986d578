#include "bdbar/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bdbar/dbar_solver.hpp"
#include "bdbar/domains.hpp"
#include "bdbar/hs_analysis.hpp"
#include "bdbar/kernels.hpp"
#include "bdbar/symbol_parser.hpp"

namespace bdbar {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail.str("");
      detail << message;
    }
  }
};

const DomainSpec kDisc{DomainKind::Disc};
const DomainSpec kPolydisc{DomainKind::Polydisc2};
const DomainSpec kBall{DomainKind::Ball2};

Rational q(long num, long den) { return make_rational(num, den); }

// Both coordinate norms of the polydisc and ball for n1, n2 <= max_n.
void check_two_dim_norms(Check& c, const DomainSpec& domain, unsigned max_n) {
  std::size_t count = 0;
  for (unsigned n1 = 0; n1 <= max_n && c.ok; ++n1) {
    for (unsigned n2 = 0; n2 <= max_n && c.ok; ++n2) {
      const MultiIndex alpha{n1, n2};
      for (std::size_t j = 0; j < 2; ++j) {
        const long nj = j == 0 ? n1 : n2;
        const long other = j == 0 ? n2 : n1;
        const long s = n1 + n2;
        const Rational expected = domain.kind() == DomainKind::Polydisc2 ? q(1, (nj + 1) * (nj + 2))
                                                                         : q(other + 2, (s + 2) * (s + 3));
        const ExactScalar got = s1_image_norm_sq(domain, alpha, j);
        c.require(got == ExactScalar(expected), "norm at " + alpha.to_string() + " j=" + std::to_string(j) + " is " +
                                                    got.to_string() + ", expected " + to_string(expected));
        ++count;
      }
    }
  }
  if (c.ok) c.detail << count << " exact norms";
}

void check_divergence(Check& c, const DomainSpec& domain, unsigned n, long bound) {
  const HSReport report = hs_partial_sum(domain, n);
  c.require(report.verdict == HSVerdict::DivergentTrend, "verdict is not DivergentTrend");
  c.require(report.partial_sum > ExactScalar(bound), "partial sum " + report.partial_sum.to_string() +
                                                         " does not exceed " + std::to_string(bound));
  if (c.ok) {
    c.detail << "; S(" << n << ") = " << report.partial_sum.to_string() << " ~ " << report.partial_sum.to_double()
             << " > " << bound << ", " << to_string(report.verdict);
  }
}

HoloPoly random_holo(std::mt19937_64& rng, std::size_t dim, unsigned max_degree) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> terms(0, 4);
  const auto indices = indices_up_to_degree(dim, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  HoloPoly h(dim);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    const auto& alpha = indices[pick(rng)];
    const Rational re = q(num(rng), den(rng));
    const Rational im = q(num(rng), den(rng));
    h += HoloPoly::monomial(alpha, GaussianRational(re, im));
  }
  return h;
}

Form01 random_form(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<unsigned> degree(0, 5);
  std::vector<HoloPoly> coeffs;
  for (std::size_t j = 0; j < dim; ++j) coeffs.push_back(random_holo(rng, dim, degree(rng)));
  return Form01(std::move(coeffs));
}

// Interior sample points: radii spread up to max_modulus, golden-angle phases.
std::vector<std::vector<Complex>> sample_points(std::size_t dim, std::size_t count, double max_modulus) {
  constexpr double kGolden = 2.399963229728653;
  std::vector<std::vector<Complex>> points;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Complex> z;
    for (std::size_t j = 0; j < dim; ++j) {
      const double r = max_modulus * static_cast<double>((k + 3 * j) % count + 1) / static_cast<double>(count);
      z.push_back(std::polar(r, kGolden * static_cast<double>(k * (j + 1) + j)));
    }
    points.push_back(std::move(z));
  }
  return points;
}

CriterionResult disc_norms() {
  Check c;
  for (unsigned n = 0; n <= 40 && c.ok; ++n) {
    const ExactScalar got = s1_image_norm_sq(kDisc, MultiIndex{n}, 0);
    const Rational expected = q(1, static_cast<long>((n + 1) * (n + 2)));
    c.require(got == ExactScalar(expected), "n = " + std::to_string(n) + ": " + got.to_string());
  }
  if (c.ok) c.detail << "41 exact norms 1/((n+1)(n+2))";
  return {1, "disc HS norms", c.ok, c.detail.str()};
}

CriterionResult disc_sum() {
  Check c;
  const HSReport report = hs_partial_sum(kDisc, 98);
  c.require(report.partial_sum == ExactScalar(q(99, 100)), "S(98) = " + report.partial_sum.to_string());
  c.require(report.verdict == HSVerdict::ConvergentWithLimit && report.limit && *report.limit == ExactScalar(1),
            "limit is not 1");
  if (c.ok) c.detail << "S(98) = " << report.partial_sum.to_string() << ", limit 1";
  return {2, "disc HS sum", c.ok, c.detail.str()};
}

CriterionResult polydisc_divergence() {
  Check c;
  check_two_dim_norms(c, kPolydisc, 30);
  if (c.ok) check_divergence(c, kPolydisc, 50, 50);
  return {3, "polydisc norms and divergence", c.ok, c.detail.str()};
}

CriterionResult ball_divergence() {
  Check c;
  check_two_dim_norms(c, kBall, 30);
  if (c.ok) check_divergence(c, kBall, 50, 25);
  return {4, "ball norms and divergence", c.ok, c.detail.str()};
}

CriterionResult orthogonality() {
  Check c;
  const auto gram = pairwise_orthogonality(kDisc, 20);
  c.require(gram.size() == 21, "Gram matrix has the wrong size");
  for (std::size_t m = 0; m < gram.size() && c.ok; ++m) {
    for (std::size_t n = 0; n < gram.size() && c.ok; ++n) {
      const ExactComplex expected =
          m == n ? ExactComplex(ExactScalar(q(1, static_cast<long>((n + 1) * (n + 2))))) : ExactComplex();
      c.require(gram[m][n] == expected,
                "entry (" + std::to_string(m) + "," + std::to_string(n) + ") = " + gram[m][n].to_string());
    }
  }
  if (c.ok) c.detail << "21x21 Gram matrix exactly diagonal";
  return {5, "pairwise orthogonality", c.ok, c.detail.str()};
}

CriterionResult dbar_exactness(const SuiteSettings& s) {
  Check c;
  std::mt19937_64 rng(s.random_seed);
  std::size_t checks = 0;
  for (const auto* domain : {&kDisc, &kPolydisc, &kBall}) {
    for (int k = 0; k < 100 && c.ok; ++k) {
      const Form01 g = random_form(rng, domain->dim());
      const MixedPoly u = multiplier_solution(*domain, g);
      const auto d = dbar_apply(u);
      for (std::size_t j = 0; j < g.dim(); ++j) c.require(d[j] == to_mixed(g[j]), "dbar residual nonzero");
      for (const auto& gamma : indices_up_to_degree(domain->dim(), g.degree() + 2)) {
        const auto ip = inner_product_mixed(*domain, u, to_mixed(HoloPoly::monomial(gamma)));
        c.require(ip.is_zero(), "solution not orthogonal to z^" + gamma.to_string() + " on " + domain->name());
        ++checks;
      }
    }
  }
  if (c.ok) c.detail << "300 forms, " << checks << " orthogonality checks";
  return {6, "dbar exactness", c.ok, c.detail.str()};
}

CriterionResult representation_equivalence(const SuiteSettings& s) {
  Check c;
  struct Case {
    const DomainSpec* domain;
    std::vector<std::string> forms;
    double max_modulus;
    QuadratureSpec quad;
  };
  const std::vector<Case> cases{
      {&kDisc, {"u(1)", "(1+2i)*z - z^3/3 + 1/2"}, 0.9, s.disc_quad},
      {&kPolydisc, {"z1*z2 + 1/3; (2-i)*z1^2 - z2/2", "u(1,2); 0"}, 0.6, s.polydisc_quad},
      {&kBall, {"U(1,0); 0", "z2^2 - i*z1/2 + 1/4; z1*z2 + 2/5"}, 0.6, s.ball_quad},
  };
  double worst = 0.0;
  for (const auto& cs : cases) {
    std::vector<Form01> forms;
    std::vector<MixedPoly> exact;
    for (const auto& text : cs.forms) {
      forms.push_back(parse_form(*cs.domain, text));
      exact.push_back(multiplier_solution(*cs.domain, forms.back()));
    }
    const auto points = sample_points(cs.domain->dim(), 20, cs.max_modulus);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const std::size_t f = k % forms.size();
      const Complex a = integral_solution_eval(*cs.domain, forms[f], points[k], cs.quad);
      const Complex b = evaluate(exact[f], points[k]);
      worst = std::max(worst, std::abs(a - b));
      c.require(std::abs(a - b) <= 1e-5, cs.domain->name() + ": |integral - multiplier| = " +
                                             std::to_string(std::abs(a - b)) + " at point " + std::to_string(k));
    }
  }
  if (c.ok) c.detail << "60 points, max |diff| = " << worst;
  return {7, "representation equivalence", c.ok, c.detail.str()};
}

CriterionResult reproducing(const SuiteSettings& s) {
  Check c;
  struct Case {
    const DomainSpec* domain;
    std::string f;
    double tol;
    QuadratureSpec quad;
  };
  const std::vector<Case> cases{
      {&kDisc, "z^5 - (1/2 - i)*z^2 + 3/4", 1e-6, s.disc_quad},
      {&kPolydisc, "z1^3*z2^2 - 2*i*z1 + 1/3", 1e-5, s.polydisc_quad},
      {&kBall, "z1^2*z2^3 + z1*z2 - 1/5", 1e-5, s.ball_quad},
  };
  double worst = 0.0;
  for (const auto& cs : cases) {
    const HoloPoly f = parse_holo(*cs.domain, cs.f);
    for (const auto& z : sample_points(cs.domain->dim(), 10, 0.5)) {
      const double r = std::abs(reproducing_check(*cs.domain, f, z, cs.quad));
      worst = std::max(worst, r);
      c.require(r <= cs.tol, cs.domain->name() + ": reproducing residual " + std::to_string(r));
    }
  }
  if (c.ok) c.detail << "30 points, max residual = " << worst;
  return {8, "reproducing property", c.ok, c.detail.str()};
}

CriterionResult poisson() {
  Check c;
  double worst = 0.0;
  for (double rho : {0.1, 0.5, 0.9, 0.99}) {
    const double err = std::abs(poisson_check(rho, 1.0) - 2.0 * std::numbers::pi);
    worst = std::max(worst, err);
    c.require(err <= 1e-8, "rho = " + std::to_string(rho) + ": error " + std::to_string(err));
  }
  if (c.ok) c.detail << "max |estimate - 2 pi| = " << worst;
  return {9, "Poisson identity", c.ok, c.detail.str()};
}

CriterionResult kernel_l2(const SuiteSettings& s) {
  Check c;
  const double bound = disc_kernel_l2_bound().to_double();
  const auto a = kernel_l2_integral(kDisc, {0.9, 0.99, 0.999}, s.kernel_l2_samples, s.kernel_l2_seed_a);
  const auto b = kernel_l2_integral(kDisc, {0.9, 0.99, 0.999}, s.kernel_l2_samples, s.kernel_l2_seed_b);
  const double va = a.back().estimate.value.real();
  const double vb = b.back().estimate.value.real();
  c.require(va <= bound && vb <= bound, "disc estimate exceeds pi^4/6");
  c.require(kernel_l2_bounded(a) && kernel_l2_bounded(b), "disc sweep is not increasing and bounded");
  c.require(std::abs(va - vb) <= 0.05 * std::max(va, vb), "seeds disagree by more than 5%");
  std::ostringstream growth;
  for (const auto* domain : {&kPolydisc, &kBall}) {
    const auto sweep = kernel_l2_integral(*domain, {0.9, 0.99, 0.999}, s.kernel_l2_samples / 4, s.kernel_l2_seed_a);
    const auto ratios = kernel_l2_growth_ratios(sweep);
    c.require(kernel_l2_diverging(sweep), domain->name() + " sweep grows by less than 1.5 per step");
    growth << "; " << domain->name() << " ratios " << ratios[0] << ", " << ratios[1];
  }
  if (c.ok) c.detail << "disc " << va << " / " << vb << " <= " << bound << growth.str();
  return {10, "kernel L2 bound and divergence", c.ok, c.detail.str()};
}

CriterionResult nn_forms() {
  Check c;
  std::size_t count = 0;
  for (const auto* domain : {&kPolydisc, &kBall}) {
    for (const char* density : {"1", "z1", "z1*z2"}) {
      const NNForm omega{parse_holo(*domain, density)};
      const auto u = nn_form_solution(*domain, omega);
      for (const auto& uj : u) {
        for (const auto& gamma : indices_up_to_degree(2, omega.density.degree() + 2)) {
          c.require(inner_product_mixed(*domain, uj, to_mixed(HoloPoly::monomial(gamma))).is_zero(),
                    "component not orthogonal on " + domain->name());
        }
      }
      c.require(nn_wedge_reassembly(u) == to_mixed(omega.density), "reassembly differs from the density");
      ++count;
    }
  }
  if (c.ok) c.detail << count << " densities on D^2 and B^2";
  return {11, "(n,n)-form solution", c.ok, c.detail.str()};
}

CriterionResult pullback() {
  Check c;
  const std::vector<std::string> maps{"z", "z^2", "(1/2 + i/3)*z"};
  std::size_t count = 0;
  for (const auto& text : maps) {
    const auto map = parse_map(kDisc, text);
    for (unsigned n = 0; n <= 3; ++n) {
      const Form01 g = Form01::single(orthonormal_basis_element(kDisc, MultiIndex{n}), 0);
      const MixedPoly u = multiplier_solution(kDisc, g);
      const auto lhs = dbar_apply(compose(u, map));
      const auto rhs = pullback_01(map, g);
      c.require(lhs[0] == rhs[0], "F = " + text + ", n = " + std::to_string(n));
      ++count;
    }
  }
  if (c.ok) c.detail << count << " exact identities";
  return {12, "pullback identity", c.ok, c.detail.str()};
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteSettings& settings) {
  static const char* const kTitles[] = {"disc HS norms",
                                        "disc HS sum",
                                        "polydisc norms and divergence",
                                        "ball norms and divergence",
                                        "pairwise orthogonality",
                                        "dbar exactness",
                                        "representation equivalence",
                                        "reproducing property",
                                        "Poisson identity",
                                        "kernel L2 bound and divergence",
                                        "(n,n)-form solution",
                                        "pullback identity"};
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "criterion id must be 1..12");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    switch (id) {
      case 1: result = disc_norms(); break;
      case 2: result = disc_sum(); break;
      case 3: result = polydisc_divergence(); break;
      case 4: result = ball_divergence(); break;
      case 5: result = orthogonality(); break;
      case 6: result = dbar_exactness(settings); break;
      case 7: result = representation_equivalence(settings); break;
      case 8: result = reproducing(settings); break;
      case 9: result = poisson(); break;
      case 10: result = kernel_l2(settings); break;
      case 11: result = nn_forms(); break;
      default: result = pullback(); break;
    }
  } catch (const std::exception& e) {
    result = {id, kTitles[id - 1], false, std::string("exception: ") + e.what()};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double budget = id == 1 ? 5.0 : id == 6 ? 30.0 : id == 7 ? 120.0 : 0.0;
  if (budget > 0.0 && result.seconds > budget && result.passed) {
    result.passed = false;
    result.detail += "; runtime " + std::to_string(result.seconds) + " s exceeds " + std::to_string(budget) + " s";
  }
  return result;
}

std::vector<CriterionResult> run_paper_suite(const SuiteSettings& settings,
                                             const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, settings));
    if (progress) progress(results.back());
  }
  return results;
}

}  // namespace bdbar
