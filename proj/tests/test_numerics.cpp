#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curv2k/error.hpp"
#include "curv2k/numerics.hpp"
#include "oracle.hpp"

using namespace curv2k;

namespace {

SymMatrix random_sym(std::size_t n, std::uint64_t seed) {
  const auto z = standard_normals(seed, n * n);
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = z[std::min(i, j) * n + std::max(i, j)];
  return SymMatrix(n, e);
}

double det(std::vector<double> a, std::size_t n) {
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      d = -d;
    }
    d *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return d;
}

}  // namespace

TEST_CASE("SymMatrix validates shape and symmetry") {
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 3.0}), InvalidInput);
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 2.1, 1.0}), InvalidInput);
  const SymMatrix m(2, {1.0, 2.0, 2.0 + 1e-15, 3.0});
  CHECK(m(0, 1) == m(1, 0));
  CHECK(m.trace() == doctest::Approx(4.0));
  CHECK(SymMatrix::identity(3).frobenius_norm() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("jacobi_eigen: small closed forms") {
  SUBCASE("identity") {
    const auto e = jacobi_eigen(SymMatrix::identity(3));
    CHECK(e.values == std::vector<double>{1.0, 1.0, 1.0});
  }
  SUBCASE("diagonal") {
    const std::vector<double> d{2.0, -1.0};
    const auto e = jacobi_eigen(SymMatrix::diagonal(d));
    CHECK(e.values == std::vector<double>{-1.0, 2.0});
  }
  SUBCASE("swap") {
    const auto e = jacobi_eigen(SymMatrix(2, {0.0, 1.0, 1.0, 0.0}));
    CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("jacobi_eigen matches the 2x2 characteristic polynomial") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto z = standard_normals(seed, 3);
    const double a = z[0], b = z[1], c = z[2];
    const auto e = jacobi_eigen(SymMatrix(2, {a, b, b, c}));
    const double mid = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    CHECK(std::abs(e.values[0] - (mid - rad)) < 1e-12);
    CHECK(std::abs(e.values[1] - (mid + rad)) < 1e-12);
  }
}

TEST_CASE("jacobi_eigen agrees with an independent solver and has small residuals") {
  for (std::size_t n : {1u, 3u, 9u, 20u, 35u}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SymMatrix m = random_sym(n, 1000 * n + seed);
      const auto e = jacobi_eigen(m);
      CHECK(oracle::max_abs_diff(e.values, oracle::eigen_values(m)) < 1e-11);
      CHECK(e.vectors.gram_deviation() < 1e-12);
      const double scale = std::max(1.0, m.frobenius_norm());
      double sum = 0.0;
      for (double v : e.values) sum += v;
      CHECK(std::abs(sum - m.trace()) < 1e-10 * scale);
      for (std::size_t k = 0; k < n; ++k) {
        const auto v = e.vectors.vector(k);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double mv = 0.0;
          for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * v[j];
          res = std::max(res, std::abs(mv - e.values[k] * v[i]));
        }
        CHECK(res < 1e-11 * scale);
      }
    }
  }
}

TEST_CASE("jacobi_eigen on a highly degenerate matrix") {
  std::vector<double> d(30, 2.0);
  d[0] = -1.0;
  const auto q = random_orthonormal_family(30, 30, 3);
  std::vector<double> e(900, 0.0);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 30; ++j)
      for (std::size_t k = 0; k < 30; ++k) e[i * 30 + j] += q.vector(k)[i] * d[k] * q.vector(k)[j];
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = i + 1; j < 30; ++j) e[j * 30 + i] = e[i * 30 + j];
  const auto vals = jacobi_eigen(SymMatrix(30, e)).values;
  CHECK(std::abs(vals[0] + 1.0) < 1e-12);
  for (std::size_t k = 1; k < 30; ++k) CHECK(std::abs(vals[k] - 2.0) < 1e-12);
}

TEST_CASE("random_orthonormal_family") {
  SUBCASE("one dimension gives a unit sign") {
    for (std::uint64_t s : {0ULL, 1ULL, 99ULL}) {
      const auto f = random_orthonormal_family(1, 1, s);
      CHECK(std::abs(f.vector(0)[0]) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("deterministic per seed") {
    CHECK(random_orthonormal_family(5, 3, 42) == random_orthonormal_family(5, 3, 42));
    CHECK_FALSE(random_orthonormal_family(5, 3, 42) == random_orthonormal_family(5, 3, 43));
  }
  SUBCASE("orthonormal and unimodular") {
    const auto f = random_orthonormal_family(9, 9, 7);
    CHECK(f.gram_deviation() < 1e-12);
    CHECK(std::abs(std::abs(det(f.rows(), 9)) - 1.0) < 1e-10);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(random_orthonormal_family(3, 4, 0), InvalidInput);
    CHECK_THROWS_AS(random_orthonormal_family(3, 0, 0), InvalidInput);
  }
}

TEST_CASE("CounterRng replays") {
  CounterRng a(17), b(17);
  for (int k = 0; k < 10; ++k) CHECK(a() == b());
  CHECK(standard_normals(5, 4) == standard_normals(5, 4));
}

TEST_CASE("cluster_spectrum") {
  SUBCASE("equal values") {
    const std::vector<double> v{1.0, 1.0, 1.0};
    CHECK(cluster_spectrum(v) == std::vector<Cluster>{{1.0, 3}});
  }
  SUBCASE("line-factor product spectrum") {
    const std::vector<double> v{-0.5, 0, 0, 0, 1, 1, 1, 1, 1};
    CHECK(cluster_spectrum(v) == std::vector<Cluster>{{-0.5, 1}, {0.0, 3}, {1.0, 5}});
  }
  SUBCASE("sub-tolerance gap merges") {
    const std::vector<double> v{0.0, 1e-12};
    const auto c = cluster_spectrum(v);
    REQUIRE(c.size() == 1);
    CHECK(c[0].multiplicity == 2);
    CHECK(std::abs(c[0].value) < 1e-12);
  }
  SUBCASE("unsorted input") {
    const std::vector<double> v{1.0, 0.0};
    CHECK_THROWS_AS(cluster_spectrum(v), InvalidInput);
  }
}

TEST_CASE("fractional_partial_sum") {
  const std::vector<double> v{1.0, 2.0, 3.0};
  CHECK(fractional_partial_sum(v, 1.0) == 1.0);
  CHECK(fractional_partial_sum(v, 2.0) == 3.0);
  CHECK(fractional_partial_sum(v, 2.5) == 4.5);
  CHECK(fractional_partial_sum(v, 3.0) == 6.0);
  CHECK_THROWS_AS(fractional_partial_sum(v, 0.5), InvalidInput);
  CHECK_THROWS_AS(fractional_partial_sum(v, 3.5), InvalidInput);
}

TEST_CASE("orthonormalize_rows rejects dependent rows") {
  std::vector<double> rows{1.0, 0.0, 2.0, 0.0};
  CHECK_THROWS_AS(orthonormalize_rows(rows, 2, 2), NumericError);
}
