#pragma once

// The curvature operator of the second kind,
//   R(phi, psi) = sum_{ijkl} R_ijkl phi_il psi_jk,
// restricted to traceless symmetric two-tensors, and the fractional
// alpha-nonnegativity condition built from its eigenvalues.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curv2k/curvature.hpp"
#include "curv2k/numerics.hpp"
#include "curv2k/sym2.hpp"

namespace curv2k {

struct Spectrum {
  std::size_t n = 0;                 // ambient dimension
  std::size_t N = 0;                 // dim S^2_0 = (n-1)(n+2)/2
  std::vector<double> eigenvalues;   // ascending
  std::vector<Cluster> clusters;

  /// Spectrum of -R: negated, re-sorted, re-clustered.
  Spectrum negated() const;
};

/// Entry [a,b] = sum R_ijkl phi_a(i,l) phi_b(j,k). Throws InvalidInput if
/// the basis lives on a different dimension.
SymMatrix operator_matrix(const CurvatureTensor& r, const Sym2Basis& basis);

/// R(phi, psi) for a single pair; no tracelessness required.
double pairing(const CurvatureTensor& r, const Sym2Tensor& phi, const Sym2Tensor& psi);

/// Eigenvalues of operator_matrix(r, traceless_basis(dim)), clustered at
/// the default relative tolerance. dim 1 gives an empty spectrum.
Spectrum spectrum(const CurvatureTensor& r);

/// Builds a Spectrum from explicit eigenvalues (sorted internally).
Spectrum spectrum_from_values(std::size_t n, std::vector<double> values);

/// g(alpha) = lambda_1 + ... + lambda_floor(alpha) + frac(alpha) lambda_{floor+1}.
/// Throws InvalidInput unless 1 <= alpha <= N.
double alpha_sum(const Spectrum& s, double alpha);

inline constexpr double kVerdictTol = 1e-9;

enum class Verdict { nonnegative, nonpositive, both, neither };
std::string_view to_string(Verdict v) noexcept;

struct Classification {
  double alpha = 0.0;
  double g_nonneg = 0.0;  // alpha_sum(spectrum(R), alpha)
  double g_nonpos = 0.0;  // alpha_sum(spectrum(-R), alpha)
  Verdict verdict = Verdict::neither;

  bool nonnegative() const noexcept {
    return verdict == Verdict::nonnegative || verdict == Verdict::both;
  }
  bool nonpositive() const noexcept {
    return verdict == Verdict::nonpositive || verdict == Verdict::both;
  }
};

Classification classify(const Spectrum& s, double alpha, double tol = kVerdictTol);
Classification classify(const CurvatureTensor& r, double alpha, double tol = kVerdictTol);

/// Least alpha in [1, N] with g(alpha) >= 0; values of g within `tol` of
/// zero count as zero at the endpoints. Absent if g(N) < -tol.
std::optional<double> nonneg_threshold(const Spectrum& s, double tol = kVerdictTol);
/// Same for the spectrum of -R.
std::optional<double> nonpos_threshold(const Spectrum& s, double tol = kVerdictTol);

struct OracleResult {
  double min = 0.0;                  // smallest weighted diagonal sum seen
  std::size_t argmin_sample = 0;     // 0 is the eigenbasis
  std::string argmin_digest;         // FNV-1a of the argmin basis coefficients
  std::vector<double> sample_values; // index 0 = eigenbasis, then 1..samples
};

/// Samples orthonormal bases of S^2_0 (Haar rotations of the standard basis
/// in coefficient space, sample k seeded with seed ^ k) and minimizes the
/// weighted sum of ascending diagonal values. The eigenbasis is always
/// evaluated as sample 0. Work is sharded over threads for large sample
/// counts; the result does not depend on the sharding.
OracleResult bruteforce_min_alpha_sum(const CurvatureTensor& r, double alpha, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace curv2k
