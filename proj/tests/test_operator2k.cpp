#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curv2k/error.hpp"
#include "curv2k/operator2k.hpp"
#include "oracle.hpp"

using namespace curv2k;

namespace {

bool clusters_are(const Spectrum& s, const std::vector<Cluster>& want, double tol = 1e-9) {
  if (s.clusters.size() != want.size()) return false;
  for (std::size_t k = 0; k < want.size(); ++k) {
    if (s.clusters[k].multiplicity != want[k].multiplicity) return false;
    if (std::abs(s.clusters[k].value - want[k].value) > tol) return false;
  }
  return true;
}

double total(const Spectrum& s) {
  double t = 0.0;
  for (double v : s.eigenvalues) t += v;
  return t;
}

}  // namespace

TEST_CASE("operator_matrix of the unit sphere is the identity") {
  const SymMatrix m = operator_matrix(space_form(4, 1.0), standard_basis(4));
  CHECK(m.dim() == 9);
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) CHECK(std::abs(m(a, b) - (a == b ? 1.0 : 0.0)) < 1e-14);
  CHECK_THROWS_AS(operator_matrix(space_form(3, 1.0), standard_basis(4)), InvalidInput);
}

TEST_CASE("spectra of model products") {
  CHECK(clusters_are(spectrum(space_form(4, 1.0)), {{1.0, 9}}));
  CHECK(clusters_are(spectrum(kahler_space_form(2, 1.0).tensor), {{-2.0, 3}, {4.0, 6}}));
  CHECK(clusters_are(spectrum(product(space_form(2, 1.0), space_form(2, 1.0))),
                     {{-1.0, 1}, {0.0, 4}, {1.0, 4}}));
  CHECK(clusters_are(spectrum(product(space_form(3, 1.0), CurvatureTensor::zero(1))),
                     {{-0.5, 1}, {0.0, 3}, {1.0, 5}}));
  CHECK(clusters_are(spectrum(product(space_form(2, 1.0), space_form(2, -1.0))),
                     {{-1.0, 2}, {0.0, 5}, {1.0, 2}}));
  CHECK(clusters_are(spectrum(product(space_form(2, 1.0), space_form(3, 1.0))),
                     {{-1.4, 1}, {0.0, 6}, {1.0, 7}}));
  const auto cp1 = kahler_space_form(1, 1.0).tensor;
  CHECK(clusters_are(spectrum(product(cp1, cp1)), {{-4.0, 1}, {0.0, 4}, {4.0, 4}}));
  CHECK(clusters_are(spectrum(CurvatureTensor::zero(5)), {{0.0, 14}}));
  CHECK(spectrum(CurvatureTensor::zero(1)).N == 0);
}

TEST_CASE("spectrum agrees with the basis-free projector oracle") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t s = 0; s < 6; ++s) {
      const auto r = random_curvature(n, 100 * n + s);
      CHECK(oracle::max_abs_diff(spectrum(r).eigenvalues, oracle::projector_spectrum(r)) < 1e-10);
    }
}

TEST_CASE("frozen spectra of seeded random tensors") {
  // Values computed once with the projector oracle.
  const std::vector<double> n3_s11{-2.553933156767, -1.419303597857, -1.161933378719,
                                   2.486183076256, 2.490563889887};
  const std::vector<double> n4_s5{-3.431890775942, -2.329318369704, -1.739578364831,
                                  -0.423482117516, 0.375577372551,  1.403526663046,
                                  2.386501159946,  4.075012859819,  4.462396237816};
  CHECK(oracle::max_abs_diff(spectrum(random_curvature(3, 11)).eigenvalues, n3_s11) < 1e-11);
  CHECK(oracle::max_abs_diff(spectrum(random_curvature(4, 5)).eigenvalues, n4_s5) < 1e-11);
}

TEST_CASE("trace identity") {
  auto check = [](const CurvatureTensor& r) {
    const double n = static_cast<double>(r.dim());
    CHECK(std::abs(total(spectrum(r)) - (n + 2) / (2 * n) * scalar(r)) < 1e-9);
  };
  for (std::size_t n = 2; n <= 7; ++n) {
    check(space_form(n, 1.3));
    check(space_form(n, -0.4));
    for (std::uint64_t s = 0; s < 5; ++s) check(random_curvature(n, s));
  }
  for (std::size_t m = 1; m <= 3; ++m) check(kahler_space_form(m, 0.5).tensor);
  check(product(kahler_space_form(2, 1.0).tensor, space_form(3, -2.0)));
}

TEST_CASE("alpha_sum") {
  const Spectrum s = spectrum(product(space_form(3, 1.0), CurvatureTensor::zero(1)));
  CHECK(std::abs(alpha_sum(s, 4.5)) < 1e-12);
  CHECK(std::abs(alpha_sum(s, 4.0) + 0.5) < 1e-12);
  CHECK(std::abs(alpha_sum(s, 9.0) - 6.0 / 8.0 * 6.0) < 1e-12);
  CHECK_THROWS_AS(alpha_sum(s, 0.99), InvalidInput);
  CHECK_THROWS_AS(alpha_sum(s, 9.01), InvalidInput);

  SUBCASE("convex in alpha and monotone in the eigenvalues") {
    const Spectrum r = spectrum(random_curvature(4, 21));
    for (double a = 1.0; a + 0.5 <= 9.0; a += 0.25) {
      const double mid = alpha_sum(r, a + 0.25);
      CHECK(mid <= 0.5 * (alpha_sum(r, a) + alpha_sum(r, a + 0.5)) + 1e-12);
    }
    auto lowered = r.eigenvalues;
    lowered[5] -= 0.3;
    const Spectrum l = spectrum_from_values(4, lowered);
    for (double a = 1.0; a <= 9.0; a += 0.5) CHECK(alpha_sum(l, a) <= alpha_sum(r, a) + 1e-12);
  }
}

TEST_CASE("classify") {
  CHECK(classify(space_form(4, 1.0), 3.0).verdict == Verdict::nonnegative);
  CHECK(classify(space_form(4, -1.0), 3.0).verdict == Verdict::nonpositive);
  CHECK(classify(product(space_form(3, 1.0), CurvatureTensor::zero(1)), 4.5).verdict ==
        Verdict::nonnegative);
  CHECK(classify(product(space_form(2, 1.0), space_form(2, 1.0)), 5.9).verdict ==
        Verdict::neither);
  CHECK(classify(CurvatureTensor::zero(3), 2.0).verdict == Verdict::both);

  SUBCASE("sign symmetry") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto r = random_curvature(3 + s % 3, s);
      for (double a : {1.0, 2.5, 4.0}) {
        const auto c = classify(r, a);
        const auto d = classify(-r, a);
        CHECK(c.nonpositive() == d.nonnegative());
        CHECK(c.nonnegative() == d.nonpositive());
      }
    }
  }
}

TEST_CASE("thresholds") {
  CHECK(*nonneg_threshold(spectrum(product(space_form(3, 1.0), CurvatureTensor::zero(1)))) ==
        doctest::Approx(4.5).epsilon(1e-12));
  CHECK(*nonneg_threshold(spectrum(product(space_form(2, 1.0), space_form(2, 1.0)))) ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK(*nonneg_threshold(spectrum(space_form(5, 1.0))) == 1.0);
  CHECK_FALSE(nonneg_threshold(spectrum(space_form(5, -1.0))).has_value());
  CHECK(*nonpos_threshold(spectrum(space_form(5, -1.0))) == 1.0);
  CHECK(*nonpos_threshold(spectrum(product(space_form(3, -1.0), CurvatureTensor::zero(1)))) ==
        doctest::Approx(4.5).epsilon(1e-12));
  CHECK_FALSE(nonneg_threshold(spectrum(CurvatureTensor::zero(1))).has_value());

  SUBCASE("g vanishes at the threshold and the verdict flips there") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const Spectrum sp = spectrum(random_curvature(4, 500 + s));
      const auto t = nonneg_threshold(sp);
      if (!t) continue;
      if (*t > 1.0) {
        CHECK(std::abs(alpha_sum(sp, *t)) < 1e-9);
        CHECK_FALSE(classify(sp, std::max(1.0, *t - 1e-3)).nonnegative());
      }
      CHECK(classify(sp, std::min(9.0, *t + 1e-6)).nonnegative());
    }
  }
}

TEST_CASE("brute-force oracle") {
  SUBCASE("unit sphere: every basis gives the same sums") {
    const auto res = bruteforce_min_alpha_sum(space_form(3, 1.0), 2.0, 100, 0);
    CHECK(std::abs(res.min - 2.0) < 1e-12);
    for (double v : res.sample_values) CHECK(std::abs(v - 2.0) < 1e-12);
  }
  SUBCASE("eigenbasis attains alpha_sum, random bases never undercut it") {
    for (std::uint64_t s = 0; s < 6; ++s) {
      const auto r = random_curvature(4, 900 + s);
      const Spectrum sp = spectrum(r);
      for (double a : {1.0, 2.5, 4.0, 9.0}) {
        const auto res = bruteforce_min_alpha_sum(r, a, 100, s);
        const double exact = alpha_sum(sp, a);
        CHECK(std::abs(res.sample_values[0] - exact) < 1e-9);
        CHECK(std::abs(res.min - exact) < 1e-9);
        for (double v : res.sample_values) CHECK(v >= exact - 1e-8);
      }
    }
  }
  SUBCASE("results do not depend on sharding") {
    const auto r = random_curvature(4, 77);
    const auto small = bruteforce_min_alpha_sum(r, 3.5, 10, 5);
    const auto large = bruteforce_min_alpha_sum(r, 3.5, 300, 5);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(small.sample_values[k] == large.sample_values[k]);
    const auto again = bruteforce_min_alpha_sum(r, 3.5, 300, 5);
    CHECK(again.sample_values == large.sample_values);
    CHECK(again.argmin_digest == large.argmin_digest);
    CHECK(large.argmin_digest.size() == 16);
  }
  CHECK_THROWS_AS(bruteforce_min_alpha_sum(space_form(3, 1.0), 6.0, 10, 0), InvalidInput);
  CHECK_THROWS_AS(bruteforce_min_alpha_sum(space_form(3, 1.0), 2.0, 0, 0), InvalidInput);
}

TEST_CASE("pairing is symmetric and matches the operator matrix") {
  const auto r = random_curvature(4, 31);
  const auto b = standard_basis(4);
  const SymMatrix m = operator_matrix(r, b);
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = 0; c < b.size(); ++c) {
      CHECK(std::abs(pairing(r, b[a], b[c]) - pairing(r, b[c], b[a])) < 1e-13);
      CHECK(std::abs(pairing(r, b[a], b[c]) - m(a, c)) < 1e-13);
    }
}
