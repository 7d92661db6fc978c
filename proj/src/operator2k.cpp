#include "curv2k/operator2k.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <sstream>

#include "curv2k/error.hpp"
#include "parallel.hpp"

namespace curv2k {

namespace {

// img(j,k) = sum_{i,l} R_ijkl phi(i,l)
std::vector<double> contract(const CurvatureTensor& r, const Sym2Tensor& phi) {
  const std::size_t n = r.dim();
  std::vector<double> img(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const double p = phi(i, l);
      if (p == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) img[j * n + k] += r(i, j, k, l) * p;
    }
  return img;
}

std::string fnv1a_digest(const std::vector<double>& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : data) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// Weighted ascending sum of the diagonal of Q^T M Q, rows of Q in `rows`.
double rotated_alpha_sum(const SymMatrix& m, const std::vector<double>& rows, double alpha) {
  const std::size_t n = m.dim();
  std::vector<double> diag(n);
  std::vector<double> mq(n);
  for (std::size_t a = 0; a < n; ++a) {
    const double* q = rows.data() + a * n;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * q[j];
      mq[i] = s;
    }
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) d += q[i] * mq[i];
    diag[a] = d;
  }
  std::sort(diag.begin(), diag.end());
  return fractional_partial_sum(diag, alpha);
}

std::optional<double> threshold_of(const std::vector<double>& ascending, double tol) {
  if (ascending.empty()) return std::nullopt;
  double g = 0.0;
  for (std::size_t k = 1; k <= ascending.size(); ++k) {
    const double prev = g;
    g += ascending[k - 1];
    if (g >= -tol) {
      if (k == 1) return 1.0;
      const double slope = ascending[k - 1];
      const double step = std::clamp(-prev / slope, 0.0, 1.0);
      return static_cast<double>(k - 1) + step;
    }
  }
  return std::nullopt;
}

}  // namespace

Spectrum Spectrum::negated() const {
  std::vector<double> vals(eigenvalues.rbegin(), eigenvalues.rend());
  for (double& v : vals) v = -v;
  return spectrum_from_values(n, std::move(vals));
}

double pairing(const CurvatureTensor& r, const Sym2Tensor& phi, const Sym2Tensor& psi) {
  if (phi.dim() != r.dim() || psi.dim() != r.dim()) {
    throw InvalidInput("pairing: dimension mismatch");
  }
  const auto img = contract(r, phi);
  double s = 0.0;
  const auto& p = psi.entries();
  for (std::size_t k = 0; k < img.size(); ++k) s += img[k] * p[k];
  return s;
}

SymMatrix operator_matrix(const CurvatureTensor& r, const Sym2Basis& basis) {
  if (basis.dim() != r.dim()) {
    throw InvalidInput("operator_matrix: basis on dim " + std::to_string(basis.dim()) +
                       ", tensor on dim " + std::to_string(r.dim()));
  }
  const std::size_t count = basis.size();
  std::vector<std::vector<double>> images;
  images.reserve(count);
  for (const auto& phi : basis.tensors()) images.push_back(contract(r, phi));

  std::vector<double> full(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const auto& pb = basis[b].entries();
      double s = 0.0;
      for (std::size_t k = 0; k < pb.size(); ++k) s += images[a][k] * pb[k];
      full[a * count + b] = s;
    }
  // The pairing is symmetric for any tensor with pair symmetry; average away
  // the rounding so the result is exactly symmetric.
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      const double mean = 0.5 * (full[a * count + b] + full[b * count + a]);
      full[a * count + b] = mean;
      full[b * count + a] = mean;
    }
  return SymMatrix(count, std::move(full));
}

Spectrum spectrum_from_values(std::size_t n, std::vector<double> values) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.n = n;
  s.N = values.size();
  s.clusters = cluster_spectrum(values);
  s.eigenvalues = std::move(values);
  return s;
}

Spectrum spectrum(const CurvatureTensor& r) {
  if (r.dim() < 1) throw InvalidInput("spectrum: empty tensor");
  if (r.dim() == 1) return spectrum_from_values(1, {});
  const SymMatrix m = operator_matrix(r, traceless_basis(r.dim()));
  return spectrum_from_values(r.dim(), jacobi_eigen(m).values);
}

double alpha_sum(const Spectrum& s, double alpha) {
  return fractional_partial_sum(s.eigenvalues, alpha);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::nonnegative: return "nonnegative";
    case Verdict::nonpositive: return "nonpositive";
    case Verdict::both: return "both";
    case Verdict::neither: return "neither";
  }
  return "?";
}

Classification classify(const Spectrum& s, double alpha, double tol) {
  Classification c;
  c.alpha = alpha;
  c.g_nonneg = alpha_sum(s, alpha);
  c.g_nonpos = alpha_sum(s.negated(), alpha);
  const bool nonneg = c.g_nonneg >= -tol;
  const bool nonpos = c.g_nonpos >= -tol;
  c.verdict = nonneg ? (nonpos ? Verdict::both : Verdict::nonnegative)
                     : (nonpos ? Verdict::nonpositive : Verdict::neither);
  return c;
}

Classification classify(const CurvatureTensor& r, double alpha, double tol) {
  return classify(spectrum(r), alpha, tol);
}

std::optional<double> nonneg_threshold(const Spectrum& s, double tol) {
  return threshold_of(s.eigenvalues, tol);
}

std::optional<double> nonpos_threshold(const Spectrum& s, double tol) {
  return threshold_of(s.negated().eigenvalues, tol);
}

OracleResult bruteforce_min_alpha_sum(const CurvatureTensor& r, double alpha, std::size_t samples,
                                      std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("bruteforce_min_alpha_sum: samples must be >= 1");
  const Sym2Basis basis = traceless_basis(r.dim());
  const std::size_t big_n = basis.size();
  if (!(alpha >= 1.0 && alpha <= static_cast<double>(big_n))) {
    std::ostringstream os;
    os << "bruteforce_min_alpha_sum: alpha = " << alpha << " outside [1, " << big_n << "]";
    throw InvalidInput(os.str());
  }
  const SymMatrix m = operator_matrix(r, basis);
  const EigenDecomposition eig = jacobi_eigen(m);

  OracleResult out;
  out.sample_values.assign(samples + 1, 0.0);
  out.sample_values[0] = rotated_alpha_sum(m, eig.vectors.rows(), alpha);

  detail::parallel_for(1, samples + 1, [&](std::size_t k) {
    const auto q = random_orthonormal_family(big_n, big_n, seed ^ k);
    out.sample_values[k] = rotated_alpha_sum(m, q.rows(), alpha);
  });

  out.argmin_sample = 0;
  out.min = out.sample_values[0];
  for (std::size_t k = 1; k <= samples; ++k) {
    if (out.sample_values[k] < out.min) {
      out.min = out.sample_values[k];
      out.argmin_sample = k;
    }
  }
  out.argmin_digest =
      out.argmin_sample == 0
          ? fnv1a_digest(eig.vectors.rows())
          : fnv1a_digest(random_orthonormal_family(big_n, big_n, seed ^ out.argmin_sample).rows());
  return out;
}

}  // namespace curv2k
