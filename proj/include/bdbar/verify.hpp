#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bdbar/quadrature.hpp"

namespace bdbar {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Quadrature settings used by the representation-equivalence and reproducing checks.
struct SuiteSettings {
  QuadratureSpec disc_quad = QuadratureSpec::polar(96, 192);
  QuadratureSpec polydisc_quad = QuadratureSpec::polar(24, 48);
  QuadratureSpec ball_quad = QuadratureSpec::polar(24, 48);
  std::uint64_t kernel_l2_samples = 10'000'000;
  std::uint64_t kernel_l2_seed_a = 42;
  std::uint64_t kernel_l2_seed_b = 7;
  std::uint64_t random_seed = 20240601;
};

inline constexpr int kCriterionCount = 12;

// Runs one criterion (1..12). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const SuiteSettings& settings = {});

// Runs every criterion in order; `progress` is called after each one.
std::vector<CriterionResult> run_paper_suite(const SuiteSettings& settings = {},
                                             const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace bdbar
