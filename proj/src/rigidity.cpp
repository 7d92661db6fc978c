#include "curv2k/rigidity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "curv2k/error.hpp"
#include "curv2k/operator2k.hpp"
#include "curv2k/sym2.hpp"
#include "parallel.hpp"

namespace curv2k {

double a_const(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw InvalidInput("a_const: dimensions must be >= 1");
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  return 1.0 + a * b + (a * (b - 1.0) + b * (a - 1.0)) / (a + b);
}

double b_const(std::size_t m1, std::size_t m2) {
  if (m1 < 1 || m2 < 1) throw InvalidInput("b_const: dimensions must be >= 1");
  const double a = static_cast<double>(m1);
  const double b = static_cast<double>(m2);
  return 4.0 * a * b + 1.5 * (a * a + b * b) + a * b / (a + b);
}

double f_lemma(std::vector<double> values, double x) {
  std::sort(values.begin(), values.end());
  return fractional_partial_sum(values, x);
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string_view to_string(HarnessVerdict v) noexcept {
  switch (v) {
    case HarnessVerdict::consistent: return "consistent";
    case HarnessVerdict::violated: return "violated";
    case HarnessVerdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string_view to_string(RigidityCase c) noexcept {
  switch (c) {
    case RigidityCase::line: return "line";
    case RigidityCase::product_spheres: return "product-spheres";
    case RigidityCase::product_kahler: return "product-kahler";
    case RigidityCase::iff_spheres: return "iff-spheres";
    case RigidityCase::iff_kahler: return "iff-kahler";
  }
  return "?";
}

RigidityCase parse_rigidity_case(std::string_view name) {
  for (auto c : {RigidityCase::line, RigidityCase::product_spheres, RigidityCase::product_kahler,
                 RigidityCase::iff_spheres, RigidityCase::iff_kahler}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidInput("unknown rigidity case '" + std::string(name) + "'");
}

void HarnessReport::add_check(CheckResult check, std::uint64_t seed) {
  if (check.status == CheckStatus::failed) {
    counterexamples.push_back({seed, check.name + ": " + check.detail});
  }
  checks.push_back(std::move(check));
}

void HarnessReport::finalize() {
  if (!counterexamples.empty()) {
    verdict = HarnessVerdict::violated;
  } else if (samples_run == 0 &&
             std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
               return c.status == CheckStatus::not_applicable;
             })) {
    verdict = HarnessVerdict::not_applicable;
  } else {
    verdict = HarnessVerdict::consistent;
  }
}

namespace {

// Shortest round-trip decimal.
std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

CheckResult tolerance_check(std::string name, double error, double tol, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.max_error = error;
  c.status = (error <= tol) ? CheckStatus::passed : CheckStatus::failed;
  std::ostringstream os;
  os << "max error " << error << " (tol " << tol << ")";
  if (!detail.empty()) os << "; " << detail;
  c.detail = os.str();
  return c;
}

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::not_applicable, 0.0, std::move(why)};
}

double detector_tol(const CurvatureTensor& r) {
  return kDetectorRelTol * std::max(1.0, r.max_abs());
}

}  // namespace

HarnessReport verify_product_structure(const CurvatureTensor& r1, const CurvatureTensor& r2,
                                       double tol) {
  if (!(tol > 0.0)) throw InvalidInput("verify_product_structure: tol must be positive");
  HarnessReport rep;
  rep.name = "product-structure";
  const std::size_t n1 = r1.dim();
  const std::size_t n2 = r2.dim();
  rep.parameters = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}, {"tol", fmt(tol)}};

  const CurvatureTensor r = product(r1, r2);
  const Sym2Basis b1 = traceless_basis(n1);
  const Sym2Basis b2 = traceless_basis(n2);
  const Sym2Basis basis = product_adapted_basis(n1, n2, b1, b2);
  const SymMatrix m = operator_matrix(r, basis);
  const std::size_t total = basis.size();

  double xi_err = 0.0;
  for (std::size_t a = 0; a < total; ++a) {
    if (basis.label(a) != BasisLabel::mixed_xi) continue;
    double row = 0.0;
    for (std::size_t b = 0; b < total; ++b) row += m(a, b) * m(a, b);
    xi_err = std::max(xi_err, std::sqrt(row));
  }
  rep.add_check(tolerance_check("xi-kernel", xi_err, tol,
                                std::to_string(n1 * n2) + " mixed tensors"));

  const auto rho1 = einstein_constant(r1, detector_tol(r1));
  const auto rho2 = einstein_constant(r2, detector_tol(r2));
  rep.parameters.emplace_back("rho1", rho1 ? fmt(*rho1) : "null");
  rep.parameters.emplace_back("rho2", rho2 ? fmt(*rho2) : "null");
  if (!rho1 || !rho2) {
    const std::string why = "factor is not Einstein";
    rep.add_check(skipped("block-diagonal", why));
    rep.add_check(skipped("factor-blocks", why));
    rep.add_check(skipped("zeta-eigenvalue", why));
    rep.add_check(skipped("spectrum-union", why));
    rep.finalize();
    return rep;
  }

  const double d1 = static_cast<double>(n1);
  const double d2 = static_cast<double>(n2);
  const double zeta_value = -(d2 * *rho1 + d1 * *rho2) / (d1 + d2);
  rep.parameters.emplace_back("zeta", fmt(zeta_value));

  // Group indices by block; factor blocks are dense, xi and zeta diagonal.
  auto block_of = [&](std::size_t a) {
    switch (basis.label(a)) {
      case BasisLabel::factor1: return 0;
      case BasisLabel::factor2: return 1;
      default: return 2 + static_cast<int>(a);  // singleton blocks
    }
  };
  double off_err = 0.0;
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b)
      if (block_of(a) != block_of(b)) off_err = std::max(off_err, std::abs(m(a, b)));
  rep.add_check(tolerance_check("block-diagonal", off_err, tol));

  double factor_err = 0.0;
  const std::size_t big_n1 = b1.size();
  if (n1 >= 2) {
    const SymMatrix m1 = operator_matrix(r1, b1);
    for (std::size_t a = 0; a < big_n1; ++a)
      for (std::size_t b = 0; b < big_n1; ++b)
        factor_err = std::max(factor_err, std::abs(m(a, b) - m1(a, b)));
  }
  if (n2 >= 2) {
    const SymMatrix m2 = operator_matrix(r2, b2);
    for (std::size_t a = 0; a < b2.size(); ++a)
      for (std::size_t b = 0; b < b2.size(); ++b)
        factor_err = std::max(factor_err, std::abs(m(big_n1 + a, big_n1 + b) - m2(a, b)));
  }
  rep.add_check(tolerance_check("factor-blocks", factor_err, tol));

  rep.add_check(tolerance_check("zeta-eigenvalue", std::abs(m(total - 1, total - 1) - zeta_value),
                                tol, "expected " + fmt(zeta_value)));

  std::vector<double> expected;
  for (double v : spectrum(r1).eigenvalues) expected.push_back(v);
  for (double v : spectrum(r2).eigenvalues) expected.push_back(v);
  expected.insert(expected.end(), n1 * n2, 0.0);
  expected.push_back(zeta_value);
  std::sort(expected.begin(), expected.end());
  const std::vector<double> actual = spectrum(r).eigenvalues;
  double spec_err = actual.size() == expected.size() ? 0.0 : INFINITY;
  for (std::size_t k = 0; k < std::min(actual.size(), expected.size()); ++k)
    spec_err = std::max(spec_err, std::abs(actual[k] - expected[k]));
  rep.add_check(tolerance_check("spectrum-union", spec_err, tol));

  rep.finalize();
  return rep;
}

namespace {

struct Sample {
  CurvatureTensor r1;
  CurvatureTensor r2;
  std::string kind;
};

// What the rigidity statement says about a sample that passes the threshold.
using StructureCheck =
    std::function<std::optional<std::string>(const Sample&, bool nonneg_premise, double tol)>;

std::optional<std::string> describe_failure(const Sample& s, const Classification& top,
                                            const std::string& why) {
  std::ostringstream os;
  os << "kind=" << s.kind << " alpha=" << top.alpha << " verdict=" << to_string(top.verdict)
     << " g(R)=" << top.g_nonneg << " g(-R)=" << top.g_nonpos << ": " << why;
  return os.str();
}

// Shared sampling loop for the line / product-spheres / product-kahler cases.
void run_implication_samples(HarnessReport& rep, std::size_t samples, std::uint64_t seed,
                             double alpha_top, double tol,
                             const std::function<Sample(std::size_t, std::uint64_t)>& draw,
                             const StructureCheck& structure) {
  std::vector<std::optional<std::string>> failures(samples);
  std::vector<int> premise(samples, 0);
  const double alpha_low = alpha_top - 1e-3;

  detail::parallel_for(0, samples, [&](std::size_t s) {
    const std::uint64_t sample_seed = seed ^ static_cast<std::uint64_t>(s);
    const Sample smp = draw(s, sample_seed);
    const CurvatureTensor r = product(smp.r1, smp.r2);
    const Spectrum spec = spectrum(r);

    const Classification top = classify(spec, alpha_top, kVerdictTol);
    if (top.nonnegative() || top.nonpositive()) {
      premise[s] = 1;
      if (top.nonnegative()) {
        if (auto why = structure(smp, true, tol)) {
          failures[s] = describe_failure(smp, top, *why);
          return;
        }
      }
      if (top.nonpositive()) {
        if (auto why = structure(smp, false, tol)) {
          failures[s] = describe_failure(smp, top, *why);
          return;
        }
      }
    }
    if (alpha_low >= 1.0) {
      const Classification low = classify(spec, alpha_low, kVerdictTol);
      if ((low.nonnegative() || low.nonpositive()) && r.max_abs() > tol) {
        failures[s] = describe_failure(smp, low, "below the threshold but not flat (max|R| = " +
                                                     fmt(r.max_abs()) + ")");
      }
    }
  });

  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    hits += static_cast<std::size_t>(premise[s]);
    if (failures[s]) rep.counterexamples.push_back({seed ^ s, *failures[s]});
  }
  rep.samples_run = samples;
  rep.parameters.emplace_back("premise_hits", std::to_string(hits));
}

double signed_constant(std::uint64_t seed, std::size_t s) {
  const double z = standard_normals(seed ^ 0x9e3779b97f4a7c15ULL, 1)[0];
  const double sign = ((s / 4) % 2 == 0) ? 1.0 : -1.0;
  return sign * (0.25 + std::abs(z));
}

double second_factor_ratio(std::uint64_t seed) {
  return 1.5 + std::abs(standard_normals(seed ^ 0x632be59bd9b4e019ULL, 1)[0]);
}

std::uint64_t second_stream(std::uint64_t seed) { return seed ^ 0xd1b54a32d192ed03ULL; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidInput(msg);
}

HarnessReport line_case(const RigidityParams& p, std::uint64_t seed, std::size_t samples,
                        double tol) {
  require(p.n >= 3, "line: n must be >= 3");
  HarnessReport rep;
  rep.name = "line";
  const std::size_t d = p.n - 1;
  const double big_a = a_const(d, 1);
  rep.parameters = {{"n", std::to_string(p.n)}, {"alpha", fmt(big_a)}, {"tol", fmt(tol)},
                    {"seed", std::to_string(seed)}, {"samples", std::to_string(samples)}};

  const CurvatureTensor flat_line = CurvatureTensor::zero(1);
  const Spectrum model = spectrum(product(space_form(d, 1.0), flat_line));
  const auto thr = nonneg_threshold(model);
  rep.add_check(tolerance_check("model-threshold", thr ? std::abs(*thr - big_a) : INFINITY, tol,
                                "S^{n-1} x R threshold " + (thr ? fmt(*thr) : "null")));
  rep.add_check(tolerance_check("model-g-at-threshold", std::abs(alpha_sum(model, big_a)), 1e-12));
  const auto thr_h = nonpos_threshold(spectrum(product(space_form(d, -1.0), flat_line)));
  rep.add_check(tolerance_check("model-nonpos-threshold",
                                thr_h ? std::abs(*thr_h - big_a) : INFINITY, tol,
                                "H^{n-1} x R threshold " + (thr_h ? fmt(*thr_h) : "null")));

  auto draw = [&](std::size_t s, std::uint64_t sseed) {
    const double c = signed_constant(sseed, s);
    switch (s % 4) {
      case 0: return Sample{random_curvature(d, sseed), flat_line, "random"};
      case 1: return Sample{space_form(d, c), flat_line, "model"};
      case 2: return Sample{space_form(d, c) + random_curvature(d, sseed, 1e-3), flat_line,
                            "model+1e-3"};
      default: return Sample{space_form(d, c) + random_curvature(d, sseed, 0.1), flat_line,
                             "model+0.1"};
    }
  };
  auto structure = [](const Sample& s, bool nonneg, double t) -> std::optional<std::string> {
    const auto c = constant_sectional(s.r1, detector_tol(s.r1));
    if (!c) return "curved factor does not have constant sectional curvature";
    if (nonneg ? (*c < -t) : (*c > t)) return "constant curvature has the wrong sign: " + fmt(*c);
    return std::nullopt;
  };
  run_implication_samples(rep, samples, seed, big_a, tol, draw, structure);
  rep.finalize();
  return rep;
}

HarnessReport spheres_case(const RigidityParams& p, std::uint64_t seed, std::size_t samples,
                           double tol) {
  require(p.n1 >= 2 && p.n2 >= 2, "product-spheres: n1, n2 must be >= 2");
  HarnessReport rep;
  rep.name = "product-spheres";
  const double big_a = a_const(p.n1, p.n2);
  rep.parameters = {{"n1", std::to_string(p.n1)}, {"n2", std::to_string(p.n2)},
                    {"alpha", fmt(big_a)},        {"tol", fmt(tol)},
                    {"seed", std::to_string(seed)}, {"samples", std::to_string(samples)}};

  const Spectrum model = spectrum(product(space_form(p.n1, 1.0), space_form(p.n2, 1.0)));
  const auto thr = nonneg_threshold(model);
  rep.add_check(tolerance_check("model-threshold", thr ? std::abs(*thr - big_a) : INFINITY, tol,
                                "S^n1 x S^n2 threshold " + (thr ? fmt(*thr) : "null")));
  rep.add_check(tolerance_check("model-g-at-threshold", std::abs(alpha_sum(model, big_a)), 1e-12));
  const auto thr_h =
      nonpos_threshold(spectrum(product(space_form(p.n1, -1.0), space_form(p.n2, -1.0))));
  rep.add_check(tolerance_check("model-nonpos-threshold",
                                thr_h ? std::abs(*thr_h - big_a) : INFINITY, tol));

  auto draw = [&](std::size_t s, std::uint64_t sseed) {
    const double c = signed_constant(sseed, s);
    const std::uint64_t s2 = second_stream(sseed);
    switch (s % 4) {
      case 0: return Sample{random_curvature(p.n1, sseed), random_curvature(p.n2, s2), "random"};
      case 1: return Sample{space_form(p.n1, c), space_form(p.n2, c), "model"};
      case 2: return Sample{space_form(p.n1, c), space_form(p.n2, c * second_factor_ratio(sseed)),
                            "unequal-constants"};
      default: return Sample{space_form(p.n1, c) + random_curvature(p.n1, sseed, 1e-3),
                             space_form(p.n2, c) + random_curvature(p.n2, s2, 1e-3),
                             "model+1e-3"};
    }
  };
  auto structure = [](const Sample& s, bool nonneg, double t) -> std::optional<std::string> {
    const auto c1 = constant_sectional(s.r1, detector_tol(s.r1));
    const auto c2 = constant_sectional(s.r2, detector_tol(s.r2));
    if (!c1 || !c2) return "a factor does not have constant sectional curvature";
    if (std::abs(*c1 - *c2) > kDetectorRelTol * std::max({1.0, std::abs(*c1), std::abs(*c2)}))
      return "factor curvatures differ: " + fmt(*c1) + " vs " + fmt(*c2);
    if (nonneg ? (*c1 < -t) : (*c1 > t)) return "common curvature has the wrong sign";
    return std::nullopt;
  };
  run_implication_samples(rep, samples, seed, big_a, tol, draw, structure);
  rep.finalize();
  return rep;
}

HarnessReport kahler_case(const RigidityParams& p, std::uint64_t seed, std::size_t samples,
                          double tol) {
  require(p.m1 >= 1 && p.m2 >= 1, "product-kahler: m1, m2 must be >= 1");
  HarnessReport rep;
  rep.name = "product-kahler";
  const double big_b = b_const(p.m1, p.m2);
  rep.parameters = {{"m1", std::to_string(p.m1)}, {"m2", std::to_string(p.m2)},
                    {"alpha", fmt(big_b)},        {"tol", fmt(tol)},
                    {"seed", std::to_string(seed)}, {"samples", std::to_string(samples)}};

  const auto cp1 = kahler_space_form(p.m1, 1.0);
  const auto cp2 = kahler_space_form(p.m2, 1.0);
  const Spectrum model = spectrum(product(cp1.tensor, cp2.tensor));
  const Classification at_b = classify(model, big_b);
  rep.add_check({"model-nonneg-at-B",
                 at_b.nonnegative() ? CheckStatus::passed : CheckStatus::failed, 0.0,
                 "g(B) = " + fmt(at_b.g_nonneg)});
  const Classification at_b_h = classify(spectrum(product(-cp1.tensor, -cp2.tensor)), big_b);
  rep.add_check({"model-nonpos-at-B",
                 at_b_h.nonpositive() ? CheckStatus::passed : CheckStatus::failed, 0.0,
                 "g(B) = " + fmt(at_b_h.g_nonpos)});
  if (const auto thr = nonneg_threshold(model); thr && *thr < big_b - tol) {
    rep.findings.push_back("CP^m1 x CP^m2 is already " + fmt(*thr) +
                           "-nonnegative, below B = " + fmt(big_b));
  }

  const std::size_t d1 = 2 * p.m1;
  const std::size_t d2 = 2 * p.m2;
  auto draw = [&](std::size_t s, std::uint64_t sseed) {
    const double c = signed_constant(sseed, s);
    const std::uint64_t s2 = second_stream(sseed);
    switch (s % 4) {
      case 0: return Sample{random_curvature(d1, sseed), random_curvature(d2, s2), "random"};
      case 1: return Sample{cp1.tensor.scaled(c), cp2.tensor.scaled(c), "model"};
      case 2: return Sample{cp1.tensor.scaled(c), cp2.tensor.scaled(c * second_factor_ratio(sseed)),
                            "unequal-constants"};
      default: return Sample{cp1.tensor.scaled(c) + random_curvature(d1, sseed, 1e-3),
                             cp2.tensor.scaled(c) + random_curvature(d2, s2, 1e-3),
                             "model+1e-3"};
    }
  };
  auto structure = [&](const Sample& s, bool nonneg, double t) -> std::optional<std::string> {
    const auto c1 = constant_holomorphic(s.r1, cp1.complex_structure, detector_tol(s.r1));
    const auto c2 = constant_holomorphic(s.r2, cp2.complex_structure, detector_tol(s.r2));
    if (!c1 || !c2) return "a factor does not have constant holomorphic sectional curvature";
    if (std::abs(*c1 - *c2) > kDetectorRelTol * std::max({1.0, std::abs(*c1), std::abs(*c2)}))
      return "holomorphic curvatures differ: " + fmt(*c1) + " vs " + fmt(*c2);
    if (nonneg ? (*c1 < -t) : (*c1 > t)) return "common curvature has the wrong sign";
    return std::nullopt;
  };
  run_implication_samples(rep, samples, seed, big_b, tol, draw, structure);
  rep.finalize();
  return rep;
}

HarnessReport iff_case(bool kahler, const RigidityParams& p, double tol) {
  HarnessReport rep;
  rep.name = kahler ? "iff-kahler" : "iff-spheres";
  if (p.kappa_grid.empty()) throw InvalidInput("iff harness: kappa grid is empty");
  for (double k : p.kappa_grid) require(k > 0.0, "iff harness: kappa values must be positive");
  double alpha = 0.0;
  if (kahler) {
    require(p.m1 >= 1 && p.m2 >= 1, "iff-kahler: m1, m2 must be >= 1");
    alpha = b_const(p.m1, p.m2);
    rep.parameters = {{"m1", std::to_string(p.m1)}, {"m2", std::to_string(p.m2)}};
  } else {
    require(p.n1 >= 2 && p.n2 >= 2, "iff-spheres: n1, n2 must be >= 2");
    alpha = a_const(p.n1, p.n2);
    rep.parameters = {{"n1", std::to_string(p.n1)}, {"n2", std::to_string(p.n2)}};
  }
  rep.parameters.emplace_back("alpha", fmt(alpha));
  rep.parameters.emplace_back("tol", fmt(tol));
  rep.parameters.emplace_back("grid_size", std::to_string(p.kappa_grid.size()));

  auto factor = [&](std::size_t which, double curvature) {
    if (kahler) return kahler_space_form(which == 0 ? p.m1 : p.m2, curvature).tensor;
    return space_form(which == 0 ? p.n1 : p.n2, curvature);
  };

  const std::size_t g = p.kappa_grid.size();
  // One entry per (k1, k2, sign): [positive models then negative models].
  std::vector<std::optional<std::string>> mismatch(2 * g * g);
  detail::parallel_for(0, 2 * g * g, [&](std::size_t idx) {
    const bool negative = idx >= g * g;
    const std::size_t cell = idx % (g * g);
    const double k1 = p.kappa_grid[cell / g];
    const double k2 = p.kappa_grid[cell % g];
    const double sign = negative ? -1.0 : 1.0;
    const Spectrum s = spectrum(product(factor(0, sign * k1), factor(1, sign * k2)));
    const Classification c = classify(s, alpha, kVerdictTol);
    const bool holds = negative ? c.nonpositive() : c.nonnegative();
    const bool equal = k1 == k2;
    if (holds != equal) {
      std::ostringstream os;
      os << (kahler ? (negative ? "CH x CH" : "CP x CP") : (negative ? "H x H" : "S x S"))
         << " kappa=(" << k1 << "," << k2 << "): "
         << (negative ? "nonpositive" : "nonnegative") << " at alpha=" << alpha << " is "
         << (holds ? "true" : "false") << " but kappa1 " << (equal ? "==" : "!=")
         << " kappa2; g=" << fmt(negative ? c.g_nonpos : c.g_nonneg);
      const auto thr = negative ? nonpos_threshold(s) : nonneg_threshold(s);
      os << ", threshold=" << (thr ? fmt(*thr) : "null");
      mismatch[idx] = os.str();
    }
  });
  for (auto& m : mismatch)
    if (m) rep.findings.push_back(std::move(*m));
  rep.samples_run = 2 * g * g;
  rep.add_check({"grid-evaluated", CheckStatus::passed, 0.0,
                 std::to_string(2 * g * g) + " products classified, " +
                     std::to_string(rep.findings.size()) + " disagreements"});
  rep.finalize();
  return rep;
}

}  // namespace

HarnessReport check_rigidity(RigidityCase which, const RigidityParams& params, std::uint64_t seed,
                             std::size_t samples, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("check_rigidity: tol must be positive");
  switch (which) {
    case RigidityCase::line: return line_case(params, seed, samples, tol);
    case RigidityCase::product_spheres: return spheres_case(params, seed, samples, tol);
    case RigidityCase::product_kahler: return kahler_case(params, seed, samples, tol);
    case RigidityCase::iff_spheres: return iff_case(false, params, tol);
    case RigidityCase::iff_kahler: return iff_case(true, params, tol);
  }
  throw InvalidInput("check_rigidity: unknown case");
}

}  // namespace curv2k
