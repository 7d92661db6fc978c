#include "curv2k/sym2.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "curv2k/error.hpp"

namespace curv2k {

Sym2Tensor::Sym2Tensor(std::size_t dim, std::vector<double> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) throw InvalidInput("Sym2Tensor: wrong number of entries");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (std::abs(data_[i * dim_ + j] - data_[j * dim_ + i]) > 1e-12) {
        throw InvalidInput("Sym2Tensor: entries are not symmetric");
      }
}

Sym2Tensor Sym2Tensor::symmetric_product(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw InvalidInput("symmetric_product: length mismatch");
  const std::size_t n = u.size();
  Sym2Tensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.data_[i * n + j] = u[i] * v[j] + u[j] * v[i];
  return t;
}

Sym2Tensor Sym2Tensor::unit_product(std::size_t dim, std::size_t i, std::size_t j) {
  Sym2Tensor t(dim);
  t.data_[i * dim + j] += 1.0;
  t.data_[j * dim + i] += 1.0;
  return t;
}

void Sym2Tensor::add(std::size_t i, std::size_t j, double v) noexcept {
  data_[i * dim_ + j] += v;
  if (i != j) data_[j * dim_ + i] += v;
}

double Sym2Tensor::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

double Sym2Tensor::norm() const noexcept { return std::sqrt(inner(*this, *this)); }

Sym2Tensor Sym2Tensor::zero_extended(std::size_t offset, std::size_t total_dim) const {
  if (offset + dim_ > total_dim) throw InvalidInput("zero_extended: block exceeds ambient dim");
  Sym2Tensor out(total_dim);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out.data_[(offset + i) * total_dim + offset + j] = data_[i * dim_ + j];
  return out;
}

Sym2Tensor& Sym2Tensor::operator+=(const Sym2Tensor& other) {
  if (other.dim_ != dim_) throw InvalidInput("Sym2Tensor: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Sym2Tensor& Sym2Tensor::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

double inner(const Sym2Tensor& a, const Sym2Tensor& b) {
  if (a.dim() != b.dim()) throw InvalidInput("inner: dimension mismatch");
  double s = 0.0;
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

std::string_view to_string(BasisLabel label) noexcept {
  switch (label) {
    case BasisLabel::factor1: return "factor1";
    case BasisLabel::factor2: return "factor2";
    case BasisLabel::mixed_xi: return "mixed-xi";
    case BasisLabel::trace_zeta: return "trace-zeta";
    case BasisLabel::plus: return "plus";
    case BasisLabel::minus: return "minus";
    case BasisLabel::alpha: return "alpha";
    case BasisLabel::eta: return "eta";
    case BasisLabel::generic: return "generic";
  }
  return "?";
}

void Sym2Basis::push_back(Sym2Tensor t, BasisLabel label) {
  if (t.dim() != dim_) throw InvalidInput("Sym2Basis: tensor dimension mismatch");
  tensors_.push_back(std::move(t));
  labels_.push_back(label);
}

std::size_t Sym2Basis::count(BasisLabel label) const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

double Sym2Basis::gram_deviation() const noexcept {
  double worst = 0.0;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a; b < size(); ++b)
      worst = std::max(worst, std::abs(inner(tensors_[a], tensors_[b]) - (a == b ? 1.0 : 0.0)));
  return worst;
}

double Sym2Basis::max_trace() const noexcept {
  double worst = 0.0;
  for (const auto& t : tensors_) worst = std::max(worst, std::abs(t.trace()));
  return worst;
}

Sym2Basis standard_basis(std::size_t n) {
  if (n < 2) throw InvalidInput("standard_basis: n must be >= 2, got " + std::to_string(n));
  return traceless_basis(n);
}

Sym2Basis traceless_basis(std::size_t n) {
  if (n < 1) throw InvalidInput("traceless_basis: n must be >= 1");
  Sym2Basis basis(n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      basis.push_back(Sym2Tensor::unit_product(n, i, j) * inv_sqrt2, BasisLabel::generic);
  for (std::size_t k = 1; k < n; ++k) {
    Sym2Tensor t(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t i = 0; i < k; ++i) t.add(i, i, s);
    t.add(k, k, -static_cast<double>(k) * s);
    basis.push_back(std::move(t), BasisLabel::generic);
  }
  return basis;
}

Sym2Basis product_adapted_basis(std::size_t n1, std::size_t n2, const Sym2Basis& b1,
                                const Sym2Basis& b2) {
  if (n1 < 1 || n2 < 1) throw InvalidInput("product_adapted_basis: factor dims must be >= 1");
  if (b1.dim() != n1 || b2.dim() != n2) {
    throw InvalidInput("product_adapted_basis: factor basis dimension mismatch");
  }
  if (!b1.spans_traceless() || !b2.spans_traceless()) {
    throw InvalidInput("product_adapted_basis: factor bases must span S^2_0 of each factor");
  }
  const std::size_t n = n1 + n2;
  Sym2Basis out(n);
  for (const auto& t : b1.tensors()) out.push_back(t.zero_extended(0, n), BasisLabel::factor1);
  for (const auto& t : b2.tensors()) out.push_back(t.zero_extended(n1, n), BasisLabel::factor2);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t q = n1; q < n; ++q)
      out.push_back(Sym2Tensor::unit_product(n, p, q) * inv_sqrt2, BasisLabel::mixed_xi);

  const double d1 = static_cast<double>(n1);
  const double d2 = static_cast<double>(n2);
  const double norm = 1.0 / std::sqrt(d1 * d2 * (d1 + d2));
  Sym2Tensor zeta(n);
  for (std::size_t i = 0; i < n1; ++i) zeta.add(i, i, d2 * norm);
  for (std::size_t i = n1; i < n; ++i) zeta.add(i, i, -d1 * norm);
  out.push_back(std::move(zeta), BasisLabel::trace_zeta);
  return out;
}

namespace {

// Unit vectors u_0..u_{m-1} with {u_k, J u_k} orthonormal.
std::vector<std::vector<double>> unitary_frame(const ComplexStructure& j) {
  const std::size_t n = j.dim();
  const std::size_t m = j.complex_dim();
  std::vector<std::vector<double>> span;  // u_0, Ju_0, u_1, Ju_1, ...
  std::vector<std::vector<double>> frame;
  for (std::size_t c = 0; c < n && frame.size() < m; ++c) {
    std::vector<double> v(n, 0.0);
    v[c] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& w : span) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += v[i] * w[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * w[i];
      }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-8) continue;
    for (double& x : v) x /= norm;
    std::vector<double> jv = j.apply(v);
    span.push_back(v);
    span.push_back(jv);
    frame.push_back(std::move(v));
  }
  if (frame.size() != m) throw NumericError("kahler_basis: could not build a unitary frame");
  return frame;
}

}  // namespace

Sym2Basis kahler_basis(std::size_t m, const ComplexStructure& j) {
  if (m < 1) throw InvalidInput("kahler_basis: m must be >= 1");
  if (j.dim() != 2 * m) {
    throw InvalidInput("kahler_basis: complex structure acts on dim " + std::to_string(j.dim()) +
                       ", expected " + std::to_string(2 * m));
  }
  const std::size_t n = 2 * m;
  const auto u = unitary_frame(j);
  std::vector<std::vector<double>> ju;
  for (const auto& v : u) ju.push_back(j.apply(v));
  auto sp = [](const std::vector<double>& a, const std::vector<double>& b) {
    return Sym2Tensor::symmetric_product(a, b);
  };

  Sym2Basis basis(n);
  // phi^{+-}_ij = (u_i.u_j -+ Ju_i.Ju_j)/2
  for (double sign : {-1.0, 1.0}) {
    const BasisLabel label = sign < 0 ? BasisLabel::plus : BasisLabel::minus;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        basis.push_back(0.5 * (sp(u[a], u[b]) + sign * sp(ju[a], ju[b])), label);
  }
  // psi^{+-}_ij = (u_i.Ju_j +- Ju_i.u_j)/2
  for (double sign : {1.0, -1.0}) {
    const BasisLabel label = sign > 0 ? BasisLabel::plus : BasisLabel::minus;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        basis.push_back(0.5 * (sp(u[a], ju[b]) + sign * sp(ju[a], u[b])), label);
  }
  const double alpha_scale = 1.0 / (2.0 * std::sqrt(2.0));
  for (std::size_t a = 0; a < m; ++a)
    basis.push_back(alpha_scale * (sp(u[a], u[a]) - sp(ju[a], ju[a])), BasisLabel::alpha);
  for (std::size_t a = 0; a < m; ++a)
    basis.push_back((1.0 / std::sqrt(2.0)) * sp(u[a], ju[a]), BasisLabel::alpha);
  for (std::size_t k = 1; k < m; ++k) {
    const double kd = static_cast<double>(k);
    const double s = 1.0 / std::sqrt(8.0 * kd * (kd + 1.0));
    Sym2Tensor eta = (kd * s) * (sp(u[k], u[k]) + sp(ju[k], ju[k]));
    for (std::size_t i = 0; i < k; ++i) eta += (-s) * (sp(u[i], u[i]) + sp(ju[i], ju[i]));
    basis.push_back(std::move(eta), BasisLabel::eta);
  }
  return basis;
}

}  // namespace curv2k
