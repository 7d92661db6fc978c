#include "curv2k/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "curv2k/error.hpp"

namespace curv2k {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw InvalidInput("SymMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                       std::to_string(data_.size()));
  }
  const double scale = std::max(1.0, max_abs());
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double a = data_[i * dim_ + j];
      const double b = data_[j * dim_ + i];
      if (!(std::abs(a - b) <= 1e-12 * scale)) {
        std::ostringstream os;
        os << "SymMatrix: asymmetric at (" << i << "," << j << "): " << a << " vs " << b;
        throw InvalidInput(os.str());
      }
      const double mean = 0.5 * (a + b);
      data_[i * dim_ + j] = mean;
      data_[j * dim_ + i] = mean;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i * m.dim_ + i] = values[i];
  return m;
}

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

double SymMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

OrthonormalFamily::OrthonormalFamily(std::size_t ambient_dim, std::size_t count,
                                     std::vector<double> rows)
    : ambient_dim_(ambient_dim), count_(count), rows_(std::move(rows)) {
  if (rows_.size() != ambient_dim_ * count_) {
    throw InvalidInput("OrthonormalFamily: row storage has wrong size");
  }
  if (count_ > ambient_dim_) {
    throw InvalidInput("OrthonormalFamily: more vectors than dimensions");
  }
  if (gram_deviation() > 1e-12) {
    throw InvalidInput("OrthonormalFamily: vectors are not orthonormal");
  }
}

double OrthonormalFamily::gram_deviation() const noexcept {
  double worst = 0.0;
  for (std::size_t a = 0; a < count_; ++a) {
    for (std::size_t b = a; b < count_; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < ambient_dim_; ++i) {
        dot += rows_[a * ambient_dim_ + i] * rows_[b * ambient_dim_ + i];
      }
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

EigenDecomposition jacobi_eigen(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) throw InvalidInput("jacobi_eigen: empty matrix");

  std::vector<double> a = m.entries();
  // Columns of v are eigenvectors; v starts as the identity.
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = 1e-13 * std::max(1.0, m.frobenius_norm());
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; off_norm() >= threshold; ++sweep) {
    if (sweep == kMaxSweeps) {
      std::ostringstream os;
      os << "jacobi_eigen: no convergence after " << kMaxSweeps
         << " sweeps (dim=" << n << ", off-diagonal norm " << off_norm()
         << ", threshold " << threshold << ")";
      throw NumericError(os.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.reserve(n);
  std::vector<double> rows(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t col = order[k];
    const double lambda = a[col * n + col];
    if (!std::isfinite(lambda)) throw NumericError("jacobi_eigen: non-finite eigenvalue");
    out.values.push_back(lambda);
    for (std::size_t i = 0; i < n; ++i) rows[k * n + i] = v[i * n + col];
  }
  out.vectors = OrthonormalFamily(n, n, std::move(rows));
  return out;
}

CounterRng::result_type CounterRng::operator()() noexcept {
  std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> standard_normals(std::uint64_t seed, std::size_t count) {
  CounterRng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(count);
  for (double& x : out) x = normal(rng);
  return out;
}

void orthonormalize_rows(std::vector<double>& rows, std::size_t count, std::size_t dim) {
  for (std::size_t k = 0; k < count; ++k) {
    double* vk = rows.data() + k * dim;
    double initial = 0.0;
    for (std::size_t i = 0; i < dim; ++i) initial += vk[i] * vk[i];
    initial = std::sqrt(initial);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const double* vj = rows.data() + j * dim;
        double dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += vj[i] * vk[i];
        for (std::size_t i = 0; i < dim; ++i) vk[i] -= dot * vj[i];
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm += vk[i] * vk[i];
    norm = std::sqrt(norm);
    if (!(norm > 1e-10 * std::max(initial, 1e-300))) {
      throw NumericError("orthonormalize_rows: row " + std::to_string(k) + " is dependent");
    }
    for (std::size_t i = 0; i < dim; ++i) vk[i] /= norm;
  }
}

OrthonormalFamily random_orthonormal_family(std::size_t ambient_dim, std::size_t count,
                                            std::uint64_t seed) {
  if (count < 1 || count > ambient_dim) {
    throw InvalidInput("random_orthonormal_family: need 1 <= count <= ambient_dim (count=" +
                       std::to_string(count) + ", ambient_dim=" +
                       std::to_string(ambient_dim) + ")");
  }
  std::vector<double> rows = standard_normals(seed, ambient_dim * count);
  orthonormalize_rows(rows, count, ambient_dim);
  return OrthonormalFamily(ambient_dim, count, std::move(rows));
}

std::vector<Cluster> cluster_spectrum(std::span<const double> values, double rel_tol) {
  if (!std::is_sorted(values.begin(), values.end())) {
    throw InvalidInput("cluster_spectrum: values must be sorted ascending");
  }
  std::vector<Cluster> out;
  double sum = 0.0;
  double last = 0.0;
  for (double x : values) {
    if (!out.empty() && x - last <= rel_tol * std::max(1.0, std::abs(x))) {
      auto& c = out.back();
      ++c.multiplicity;
      sum += x;
      c.value = sum / static_cast<double>(c.multiplicity);
    } else {
      out.push_back({x, 1});
      sum = x;
    }
    last = x;
  }
  return out;
}

double fractional_partial_sum(std::span<const double> ascending, double x) {
  const auto n = static_cast<double>(ascending.size());
  if (!(x >= 1.0 && x <= n)) {
    std::ostringstream os;
    os << "alpha/x = " << x << " outside [1, " << ascending.size() << "]";
    throw InvalidInput(os.str());
  }
  const double whole = std::floor(x);
  const auto k = static_cast<std::size_t>(whole);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += ascending[i];
  const double frac = x - whole;
  if (frac > 0.0) sum += frac * ascending[k];
  return sum;
}

}  // namespace curv2k
