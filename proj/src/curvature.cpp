#include "curv2k/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "curv2k/error.hpp"

namespace curv2k {

class CurvatureBuilder {
public:
  explicit CurvatureBuilder(std::size_t dim) {
    t_.dim_ = dim;
    t_.data_.assign(dim * dim * dim * dim, 0.0);
  }
  double& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const std::size_t n = t_.dim_;
    return t_.data_[((i * n + j) * n + k) * n + l];
  }
  static CurvatureTensor adopt(std::size_t dim, std::vector<double> data) {
    CurvatureTensor t;
    t.dim_ = dim;
    t.data_ = std::move(data);
    return t;
  }
  CurvatureTensor finish() && { return std::move(t_); }

private:
  CurvatureTensor t_;
};

namespace {

void require_same_dim(const CurvatureTensor& a, const CurvatureTensor& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw InvalidInput(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

CurvatureTensor CurvatureTensor::zero(std::size_t dim) {
  if (dim < 1) throw InvalidInput("CurvatureTensor::zero: dim must be >= 1");
  return CurvatureBuilder(dim).finish();
}

CurvatureTensor CurvatureTensor::from_components(std::size_t dim, std::vector<double> components,
                                                 double tol) {
  if (dim < 1) throw ValidationError("curvature tensor: dim must be >= 1");
  const std::size_t expected = dim * dim * dim * dim;
  if (components.size() != expected) {
    throw ValidationError("curvature tensor: expected " + std::to_string(expected) +
                          " components for dim " + std::to_string(dim) + ", got " +
                          std::to_string(components.size()));
  }
  for (double x : components) {
    if (!std::isfinite(x)) throw ValidationError("curvature tensor: non-finite component");
  }
  CurvatureTensor t = CurvatureBuilder::adopt(dim, std::move(components));
  const double defect = t.symmetry_defect();
  if (defect > tol * std::max(1.0, t.max_abs())) {
    std::ostringstream os;
    os << "curvature tensor: symmetries/Bianchi violated by " << defect;
    throw ValidationError(os.str());
  }
  return t;
}

double CurvatureTensor::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double CurvatureTensor::symmetry_defect() const noexcept {
  const auto& r = *this;
  const std::size_t n = dim_;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double x = r(i, j, k, l);
          worst = std::max({worst, std::abs(x + r(j, i, k, l)), std::abs(x + r(i, j, l, k)),
                            std::abs(x - r(k, l, i, j)),
                            std::abs(x + r(j, k, i, l) + r(k, i, j, l))});
        }
  return worst;
}

CurvatureTensor CurvatureTensor::operator-() const { return scaled(-1.0); }

CurvatureTensor CurvatureTensor::scaled(double factor) const {
  CurvatureTensor out = *this;
  for (double& x : out.data_) x *= factor;
  return out;
}

CurvatureTensor operator+(const CurvatureTensor& a, const CurvatureTensor& b) {
  require_same_dim(a, b, "operator+");
  CurvatureTensor out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

CurvatureTensor operator-(const CurvatureTensor& a, const CurvatureTensor& b) {
  return a + (-b);
}

double max_abs_difference(const CurvatureTensor& a, const CurvatureTensor& b) {
  require_same_dim(a, b, "max_abs_difference");
  double m = 0.0;
  const auto& x = a.components();
  const auto& y = b.components();
  for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

ComplexStructure::ComplexStructure(std::size_t dim, std::vector<double> matrix)
    : dim_(dim), mat_(std::move(matrix)) {
  if (dim_ == 0 || dim_ % 2 != 0) {
    throw InvalidInput("ComplexStructure: dimension must be even and positive, got " +
                       std::to_string(dim_));
  }
  if (mat_.size() != dim_ * dim_) throw InvalidInput("ComplexStructure: wrong matrix size");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      double jj = 0.0;
      double jtj = 0.0;
      for (std::size_t l = 0; l < dim_; ++l) {
        jj += mat_[i * dim_ + l] * mat_[l * dim_ + k];
        jtj += mat_[l * dim_ + i] * mat_[l * dim_ + k];
      }
      const double id = (i == k) ? 1.0 : 0.0;
      worst = std::max({worst, std::abs(jj + id), std::abs(jtj - id)});
    }
  if (worst > 1e-12) throw InvalidInput("ComplexStructure: not an orthogonal square root of -Id");
}

ComplexStructure ComplexStructure::standard(std::size_t m) {
  if (m < 1) throw InvalidInput("ComplexStructure::standard: m must be >= 1");
  const std::size_t n = 2 * m;
  std::vector<double> j(n * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    j[(m + i) * n + i] = 1.0;   // J e_i = e_{m+i}
    j[i * n + (m + i)] = -1.0;  // J e_{m+i} = -e_i
  }
  return ComplexStructure(n, std::move(j));
}

std::vector<double> ComplexStructure::apply(const std::vector<double>& x) const {
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) y[i] += mat_[i * dim_ + k] * x[k];
  return y;
}

CurvatureTensor space_form(std::size_t n, double c) {
  if (n < 2) throw InvalidInput("space_form: n must be >= 2, got " + std::to_string(n));
  CurvatureBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      b.at(i, j, i, j) = c;
      b.at(i, j, j, i) = -c;
    }
  return std::move(b).finish();
}

CurvatureTensor kahler_tensor(const ComplexStructure& j, double kappa) {
  const std::size_t n = j.dim();
  // jm(a,b) = <J e_a, e_b>
  auto jm = [&](std::size_t a, std::size_t b) { return j(b, a); };
  auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };
  CurvatureBuilder out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const double v = delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c) +
                           jm(a, c) * jm(b, d) - jm(a, d) * jm(b, c) +
                           2.0 * jm(a, b) * jm(c, d);
          out.at(a, b, c, d) = kappa * v;
        }
  return std::move(out).finish();
}

KahlerSpaceForm kahler_space_form(std::size_t m, double kappa) {
  if (m < 1) throw InvalidInput("kahler_space_form: m must be >= 1");
  ComplexStructure j = ComplexStructure::standard(m);
  CurvatureTensor r = kahler_tensor(j, kappa);
  return {std::move(r), std::move(j)};
}

CurvatureTensor product(const CurvatureTensor& r1, const CurvatureTensor& r2) {
  const std::size_t n1 = r1.dim();
  const std::size_t n2 = r2.dim();
  CurvatureBuilder b(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k)
        for (std::size_t l = 0; l < n1; ++l) b.at(i, j, k, l) = r1(i, j, k, l);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t l = 0; l < n2; ++l) b.at(n1 + i, n1 + j, n1 + k, n1 + l) = r2(i, j, k, l);
  return std::move(b).finish();
}

SymMatrix ricci(const CurvatureTensor& r) {
  const std::size_t n = r.dim();
  std::vector<double> ric(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r(i, j, i, l);
      ric[j * n + l] = s;
    }
  return SymMatrix(n, std::move(ric));
}

double scalar(const CurvatureTensor& r) { return ricci(r).trace(); }

std::optional<double> einstein_constant(const CurvatureTensor& r, double tol) {
  const SymMatrix ric = ricci(r);
  const std::size_t n = r.dim();
  const double rho = ric.trace() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double expected = (i == j) ? rho : 0.0;
      if (std::abs(ric(i, j) - expected) > tol) return std::nullopt;
    }
  return rho;
}

std::optional<double> constant_sectional(const CurvatureTensor& r, double tol) {
  const std::size_t n = r.dim();
  if (n < 2) return 0.0;
  const double c = scalar(r) / static_cast<double>(n * (n - 1));
  if (max_abs_difference(r, space_form(n, c)) <= tol) return c;
  return std::nullopt;
}

std::optional<double> constant_holomorphic(const CurvatureTensor& r, const ComplexStructure& j,
                                           double tol) {
  if (r.dim() != j.dim()) {
    throw InvalidInput("constant_holomorphic: tensor dim " + std::to_string(r.dim()) +
                       " vs complex structure dim " + std::to_string(j.dim()));
  }
  const double m = static_cast<double>(j.complex_dim());
  const double c = 4.0 * scalar(r) / (2.0 * m * (2.0 * m + 2.0));
  if (max_abs_difference(r, kahler_tensor(j, c / 4.0)) <= tol) return c;
  return std::nullopt;
}

CurvatureTensor random_curvature(std::size_t n, std::uint64_t seed, double scale) {
  if (n < 2) throw InvalidInput("random_curvature: n must be >= 2, got " + std::to_string(n));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t p = pairs.size();
  const std::vector<double> draws = standard_normals(seed, p * (p + 1) / 2);

  CurvatureBuilder t(n);
  std::size_t next = 0;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      const double s = scale * draws[next++];
      for (int swap = 0; swap < 2; ++swap) {
        const auto [w, x] = swap ? pairs[b] : pairs[a];
        const auto [y, z] = swap ? pairs[a] : pairs[b];
        t.at(w, x, y, z) = s;
        t.at(x, w, y, z) = -s;
        t.at(w, x, z, y) = -s;
        t.at(x, w, z, y) = s;
      }
    }
  const CurvatureTensor raw = std::move(t).finish();

  CurvatureBuilder out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double bianchi = raw(i, j, k, l) + raw(j, k, i, l) + raw(k, i, j, l);
          out.at(i, j, k, l) = raw(i, j, k, l) - bianchi / 3.0;
        }
  return std::move(out).finish();
}

}  // namespace curv2k
