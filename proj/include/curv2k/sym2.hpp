#pragma once

// Symmetric two-tensors on R^n and orthonormal bases of the traceless part
// S^2_0, with the Frobenius inner product <a, b> = sum_ij a_ij b_ij.
// The symmetric product is (u . v)_ij = u_i v_j + u_j v_i.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "curv2k/curvature.hpp"

namespace curv2k {

class Sym2Tensor {
public:
  Sym2Tensor() = default;
  explicit Sym2Tensor(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  /// Throws InvalidInput if asymmetric beyond 1e-12.
  Sym2Tensor(std::size_t dim, std::vector<double> entries);

  /// u . v
  static Sym2Tensor symmetric_product(std::span<const double> u, std::span<const double> v);
  /// e_i . e_j on R^dim
  static Sym2Tensor unit_product(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }
  void add(std::size_t i, std::size_t j, double v) noexcept;  // symmetric update
  const std::vector<double>& entries() const noexcept { return data_; }

  double trace() const noexcept;
  double norm() const noexcept;

  /// Places this tensor in rows/columns [offset, offset+dim) of R^total_dim.
  Sym2Tensor zero_extended(std::size_t offset, std::size_t total_dim) const;

  Sym2Tensor& operator+=(const Sym2Tensor& other);
  Sym2Tensor& operator*=(double s);
  friend Sym2Tensor operator+(Sym2Tensor a, const Sym2Tensor& b) { return a += b; }
  friend Sym2Tensor operator-(Sym2Tensor a, const Sym2Tensor& b) { return a += b * -1.0; }
  friend Sym2Tensor operator*(Sym2Tensor a, double s) { return a *= s; }
  friend Sym2Tensor operator*(double s, Sym2Tensor a) { return a *= s; }
  friend bool operator==(const Sym2Tensor&, const Sym2Tensor&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

double inner(const Sym2Tensor& a, const Sym2Tensor& b);

enum class BasisLabel { factor1, factor2, mixed_xi, trace_zeta, plus, minus, alpha, eta, generic };

std::string_view to_string(BasisLabel label) noexcept;

/// Dimension of S^2_0(R^n): (n-1)(n+2)/2.
constexpr std::size_t traceless_dim(std::size_t n) noexcept {
  return n == 0 ? 0 : (n - 1) * (n + 2) / 2;
}

class Sym2Basis {
public:
  Sym2Basis() = default;
  /// Empty basis of S^2_0(R^dim); only complete when dim == 1.
  explicit Sym2Basis(std::size_t dim) : dim_(dim) {}

  void push_back(Sym2Tensor t, BasisLabel label);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return tensors_.size(); }
  const Sym2Tensor& operator[](std::size_t k) const noexcept { return tensors_[k]; }
  BasisLabel label(std::size_t k) const noexcept { return labels_[k]; }
  const std::vector<Sym2Tensor>& tensors() const noexcept { return tensors_; }
  const std::vector<BasisLabel>& labels() const noexcept { return labels_; }

  std::size_t count(BasisLabel label) const noexcept;
  bool spans_traceless() const noexcept { return size() == traceless_dim(dim_); }

  /// max |<b_a, b_b> - delta_ab|
  double gram_deviation() const noexcept;
  /// max |trace(b_a)|
  double max_trace() const noexcept;

private:
  std::size_t dim_ = 0;
  std::vector<Sym2Tensor> tensors_;
  std::vector<BasisLabel> labels_;
};

/// (1/sqrt 2) e_i . e_j for i < j (lexicographic), then the telescoping
/// diagonal tensors (sum_{i<=k} e_i e_i - k e_{k+1} e_{k+1}) / sqrt(k(k+1)).
Sym2Basis standard_basis(std::size_t n);

/// Orthonormal basis of S^2_0(R^n) for any n >= 1 (empty for n = 1).
Sym2Basis traceless_basis(std::size_t n);

/// [b1 zero-extended | b2 zero-extended | xi_pq = (1/sqrt 2) e_p . e_q |
///  zeta = (n2 g1 - n1 g2) / sqrt(n1 n2 (n1+n2))].
Sym2Basis product_adapted_basis(std::size_t n1, std::size_t n2, const Sym2Basis& b1,
                                const Sym2Basis& b2);

/// Unitary-frame basis of S^2_0(R^{2m}) built from e_1..e_m, Je_1..Je_m:
/// phi+, phi-, psi+, psi- for i < j, the 2m "alpha-diagonal" tensors, and
/// the m-1 eta tensors. The frame is obtained from the coordinate vectors by
/// J-adapted Gram-Schmidt, so for the standard J it is exactly e_i, e_{m+i}.
Sym2Basis kahler_basis(std::size_t m, const ComplexStructure& j);

}  // namespace curv2k
