#pragma once

// Rigidity constants for products of space forms and Kaehler space forms,
// the averaging inequality f(A, x) <= x mean(A), and falsification harnesses
// that sample curvature tensors and look for counterexamples to the
// product-splitting rigidity statements.
//
// Sampling cannot prove a universal statement: a harness that finds nothing
// reports "consistent", never "proved".

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curv2k/curvature.hpp"

namespace curv2k {

/// 1 + n1 n2 + (n1(n2-1) + n2(n1-1)) / (n1+n2). n1, n2 >= 1.
double a_const(std::size_t n1, std::size_t n2);

/// 4 m1 m2 + 3/2 (m1^2 + m2^2) + m1 m2 / (m1+m2). m1, m2 >= 1.
double b_const(std::size_t m1, std::size_t m2);

/// Sum of the floor(x) smallest values plus frac(x) times the next one.
/// Throws InvalidInput unless 1 <= x <= values.size().
double f_lemma(std::vector<double> values, double x);

enum class CheckStatus { passed, failed, not_applicable };
enum class HarnessVerdict { consistent, violated, not_applicable };

std::string_view to_string(CheckStatus s) noexcept;
std::string_view to_string(HarnessVerdict v) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  double max_error = 0.0;
  std::string detail;
};

struct Counterexample {
  std::uint64_t seed = 0;
  std::string diagnostics;
};

struct HarnessReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::size_t samples_run = 0;
  std::vector<CheckResult> checks;
  std::vector<Counterexample> counterexamples;
  /// Disagreements between a stated equivalence and the computed verdicts.
  /// Findings never make a harness "violated".
  std::vector<std::string> findings;
  HarnessVerdict verdict = HarnessVerdict::not_applicable;

  /// Records a check; a failed check also becomes a counterexample.
  void add_check(CheckResult check, std::uint64_t seed = 0);
  /// violated iff counterexamples exist; not_applicable iff nothing ran.
  void finalize();
};

/// In the product-adapted basis of r1 (+) r2:
///  (a) the mixed xi rows vanish (no hypothesis);
///  (b) with Einstein factors, the matrix is block diagonal with the factor
///      operators and zeta entry -(n2 rho1 + n1 rho2)/(n1+n2);
///  (c) with Einstein factors, the product spectrum is the union of the
///      factor spectra, n1 n2 zeros and the zeta value.
HarnessReport verify_product_structure(const CurvatureTensor& r1, const CurvatureTensor& r2,
                                       double tol = 1e-9);

enum class RigidityCase { line, product_spheres, product_kahler, iff_spheres, iff_kahler };

std::string_view to_string(RigidityCase c) noexcept;
/// Throws InvalidInput on unknown names.
RigidityCase parse_rigidity_case(std::string_view name);

struct RigidityParams {
  std::size_t n = 4;    // line: total dimension, the curved factor has n-1
  std::size_t n1 = 2;   // spheres
  std::size_t n2 = 2;
  std::size_t m1 = 1;   // kahler
  std::size_t m2 = 1;
  std::vector<double> kappa_grid = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
};

/// Relative tolerance of the constant-curvature detectors used by harnesses.
inline constexpr double kDetectorRelTol = 1e-6;

HarnessReport check_rigidity(RigidityCase which, const RigidityParams& params, std::uint64_t seed,
                             std::size_t samples, double tol = 1e-9);

}  // namespace curv2k
