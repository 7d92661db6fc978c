#pragma once

// Small dense linear algebra used throughout: a symmetric matrix value type,
// a cyclic Jacobi eigensolver, seeded orthonormal families and eigenvalue
// clustering. Sizes here are at most a few hundred, so everything is plain
// row-major std::vector<double>.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace curv2k {

/// Symmetric dim x dim matrix, row-major. Entries are symmetrized on
/// construction, so (i,j) and (j,i) are bitwise equal.
class SymMatrix {
public:
  SymMatrix() = default;

  /// Zero matrix.
  explicit SymMatrix(std::size_t dim);

  /// Throws InvalidInput if entries.size() != dim*dim or if the input is
  /// asymmetric beyond 1e-12 * max(1, max|entry|).
  SymMatrix(std::size_t dim, std::vector<double> entries);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

  /// Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v) noexcept {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }

  const std::vector<double>& entries() const noexcept { return data_; }
  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// `count` vectors of length `ambient_dim`, stored row by row, with Gram
/// matrix equal to the identity to 1e-12.
class OrthonormalFamily {
public:
  OrthonormalFamily() = default;
  OrthonormalFamily(std::size_t ambient_dim, std::size_t count, std::vector<double> rows);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t count() const noexcept { return count_; }
  std::span<const double> vector(std::size_t k) const noexcept {
    return {rows_.data() + k * ambient_dim_, ambient_dim_};
  }
  const std::vector<double>& rows() const noexcept { return rows_; }

  /// max_{a,b} |<v_a, v_b> - delta_ab|
  double gram_deviation() const noexcept;

  friend bool operator==(const OrthonormalFamily&, const OrthonormalFamily&) = default;

private:
  std::size_t ambient_dim_ = 0;
  std::size_t count_ = 0;
  std::vector<double> rows_;
};

struct EigenDecomposition {
  std::vector<double> values;     // ascending
  OrthonormalFamily vectors;      // vectors.vector(k) belongs to values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi. Converged when the off-diagonal Frobenius norm drops below
/// 1e-13 * max(1, ||m||_F); throws NumericError after 100 sweeps.
EigenDecomposition jacobi_eigen(const SymMatrix& m);

/// Orthonormalizes `count` independent standard normal vectors drawn from the
/// counter stream for `seed`. Throws InvalidInput unless 1 <= count <= ambient_dim.
OrthonormalFamily random_orthonormal_family(std::size_t ambient_dim, std::size_t count,
                                            std::uint64_t seed);

struct Cluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

inline constexpr double kDefaultClusterTol = 1e-7;

/// Merges consecutive values closer than rel_tol * max(1, |value|). The
/// cluster value is the mean of its members. Throws InvalidInput if `values`
/// is not sorted ascending.
std::vector<Cluster> cluster_spectrum(std::span<const double> values,
                                      double rel_tol = kDefaultClusterTol);

/// sum_{i<floor(x)} a_i + (x - floor(x)) a_floor(x) over an ascending list,
/// for x in [1, size]. Throws InvalidInput otherwise.
double fractional_partial_sum(std::span<const double> ascending, double x);

/// Counter-based 64-bit stream (splitmix64 over seed + k * golden gamma).
/// Satisfies UniformRandomBitGenerator; copies replay the same stream.
class CounterRng {
public:
  using result_type = std::uint64_t;
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept;

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Draws `count` standard normal variates from the stream for `seed`.
std::vector<double> standard_normals(std::uint64_t seed, std::size_t count);

/// Modified Gram-Schmidt applied twice, in place, on `count` rows of length
/// `dim`. Throws NumericError if a row becomes numerically dependent.
void orthonormalize_rows(std::vector<double>& rows, std::size_t count, std::size_t dim);

}  // namespace curv2k
