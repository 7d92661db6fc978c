#pragma once

// Algebraic curvature tensors at a point of an n-dimensional Euclidean space.
//
// Convention: R(i,j,i,j) is the sectional curvature of span(e_i, e_j), and
// Ric(j,l) = sum_i R(i,j,i,l). With this convention the round sphere has
// positive Ricci curvature and the curvature operator of the second kind of
// c * I_n is c times the identity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "curv2k/numerics.hpp"

namespace curv2k {

class CurvatureTensor {
public:
  CurvatureTensor() = default;

  /// Zero tensor on R^dim. dim >= 1 (dimension one is the flat line factor).
  static CurvatureTensor zero(std::size_t dim);

  /// Loads components flattened with l fastest. Throws ValidationError if any
  /// of the antisymmetries, pair symmetry or the first Bianchi identity fails
  /// by more than tol * max(1, max|R|).
  static CurvatureTensor from_components(std::size_t dim, std::vector<double> components,
                                         double tol = 1e-12);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const noexcept {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const std::vector<double>& components() const noexcept { return data_; }

  double max_abs() const noexcept;

  /// Largest violation of the curvature symmetries and first Bianchi identity.
  double symmetry_defect() const noexcept;

  CurvatureTensor operator-() const;
  CurvatureTensor scaled(double factor) const;
  friend CurvatureTensor operator+(const CurvatureTensor& a, const CurvatureTensor& b);
  friend CurvatureTensor operator-(const CurvatureTensor& a, const CurvatureTensor& b);
  friend bool operator==(const CurvatureTensor&, const CurvatureTensor&) = default;

private:
  friend class CurvatureBuilder;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// max_{ijkl} |a - b|; throws InvalidInput on dimension mismatch.
double max_abs_difference(const CurvatureTensor& a, const CurvatureTensor& b);

/// Orthogonal J with J^2 = -Id on R^{2m}.
class ComplexStructure {
public:
  ComplexStructure() = default;

  /// Throws InvalidInput on odd dimension or if J^2 = -Id / J^T J = Id fail
  /// beyond 1e-12.
  ComplexStructure(std::size_t dim, std::vector<double> matrix);

  /// J e_i = e_{m+i}, J e_{m+i} = -e_i.
  static ComplexStructure standard(std::size_t m);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t complex_dim() const noexcept { return dim_ / 2; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return mat_[i * dim_ + j]; }
  std::vector<double> apply(const std::vector<double>& x) const;

private:
  std::size_t dim_ = 0;
  std::vector<double> mat_;
};

/// c (delta_ik delta_jl - delta_il delta_jk). n >= 2.
CurvatureTensor space_form(std::size_t n, double c);

/// Constant holomorphic sectional curvature 4 kappa with respect to `j`.
CurvatureTensor kahler_tensor(const ComplexStructure& j, double kappa);

struct KahlerSpaceForm {
  CurvatureTensor tensor;
  ComplexStructure complex_structure;
};

/// CP^m(kappa) for kappa > 0, CH^m(-|kappa|) for kappa < 0, flat C^m for 0;
/// uses the standard complex structure. m >= 1.
KahlerSpaceForm kahler_space_form(std::size_t m, double kappa);

/// Block tensor R1 (+) R2 on R^{n1+n2}; mixed components are zero.
CurvatureTensor product(const CurvatureTensor& r1, const CurvatureTensor& r2);

SymMatrix ricci(const CurvatureTensor& r);
double scalar(const CurvatureTensor& r);

/// rho = scal/dim if ||Ric - rho Id||_inf <= tol.
std::optional<double> einstein_constant(const CurvatureTensor& r, double tol);

/// c = scal/(n(n-1)) if ||r - space_form(n, c)||_inf <= tol. Dimension one
/// (where every tensor is zero) reports 0.
std::optional<double> constant_sectional(const CurvatureTensor& r, double tol);

/// Holomorphic sectional curvature c = 4 scal / (2m(2m+2)) if
/// ||r - kahler_tensor(j, c/4)||_inf <= tol. Throws InvalidInput on
/// dimension mismatch.
std::optional<double> constant_holomorphic(const CurvatureTensor& r, const ComplexStructure& j,
                                           double tol);

/// Random symmetric form on Lambda^2 with entries N(0, scale^2), projected
/// onto the kernel of the Bianchi map. Deterministic per seed. n >= 2.
CurvatureTensor random_curvature(std::size_t n, std::uint64_t seed, double scale = 1.0);

}  // namespace curv2k
