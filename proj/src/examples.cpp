#include "curv2k/examples.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <utility>

namespace curv2k {

namespace {

double sz(std::size_t k) { return static_cast<double>(k); }

std::size_t big_n(std::size_t n) { return traceless_dim(n); }

// Kaehler model pieces: (m-1)(m+1) and m(m+1).
std::size_t eta_mult(std::size_t m) { return (m - 1) * (m + 1); }
std::size_t plus_mult(std::size_t m) { return m * (m + 1); }

// Canonical factor order inside a family.
int rank(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::sphere: return 0;
    case ManifoldKind::hyperbolic: return 1;
    case ManifoldKind::euclidean: return 2;
    case ManifoldKind::cp: return 3;
    case ManifoldKind::ch: return 4;
    case ManifoldKind::complex_euclidean: return 5;
    default: return -1;
  }
}

std::optional<ClosedForm> single(const ManifoldDescriptor& d) {
  const double k = d.kappa;
  switch (d.kind) {
    case ManifoldKind::sphere: return ClosedForm{"S^n", {{k, big_n(d.dim)}}};
    case ManifoldKind::hyperbolic: return ClosedForm{"H^n", {{-k, big_n(d.dim)}}};
    case ManifoldKind::euclidean: return ClosedForm{"R^n", {{0.0, big_n(d.dim)}}};
    case ManifoldKind::cp:
      return ClosedForm{"CP^m", {{-2 * k, eta_mult(d.m)}, {4 * k, plus_mult(d.m)}}};
    case ManifoldKind::ch:
      return ClosedForm{"CH^m", {{2 * k, eta_mult(d.m)}, {-4 * k, plus_mult(d.m)}}};
    case ManifoldKind::complex_euclidean:
      return ClosedForm{"C^m", {{0.0, big_n(2 * d.m)}}};
    default: return std::nullopt;
  }
}

std::optional<ClosedForm> pair(const ManifoldDescriptor& f1, const ManifoldDescriptor& f2) {
  using K = ManifoldKind;
  const K a = f1.kind;
  const K b = f2.kind;
  const double k1 = f1.kappa;
  const double k2 = f2.kappa;

  if (rank(a) <= 2 && rank(b) <= 2) {
    const double n1 = sz(f1.dim);
    const double n2 = sz(f2.dim);
    const std::size_t mixed = f1.dim * f2.dim;
    const double sum = n1 + n2;
    if (a == K::sphere && b == K::sphere) {
      return ClosedForm{"S^n1 x S^n2",
                        {{k1, big_n(f1.dim)},
                         {k2, big_n(f2.dim)},
                         {0.0, mixed},
                         {-(n1 * (n2 - 1) * k2 + n2 * (n1 - 1) * k1) / sum, 1}}};
    }
    if (a == K::hyperbolic && b == K::hyperbolic) {
      return ClosedForm{"H^n1 x H^n2",
                        {{-k1, big_n(f1.dim)},
                         {-k2, big_n(f2.dim)},
                         {0.0, mixed},
                         {(n1 * (n2 - 1) * k2 + n2 * (n1 - 1) * k1) / sum, 1}}};
    }
    if (a == K::sphere && b == K::euclidean) {
      return ClosedForm{"S^n1 x R^n2",
                        {{k1, big_n(f1.dim)},
                         {0.0, mixed + big_n(f2.dim)},
                         {-n2 * (n1 - 1) * k1 / sum, 1}}};
    }
    if (a == K::hyperbolic && b == K::euclidean) {
      return ClosedForm{"H^n1 x R^n2",
                        {{-k1, big_n(f1.dim)},
                         {0.0, mixed + big_n(f2.dim)},
                         {n2 * (n1 - 1) * k1 / sum, 1}}};
    }
    if (a == K::sphere && b == K::hyperbolic) {
      return ClosedForm{"S^n1 x H^n2",
                        {{k1, big_n(f1.dim)},
                         {-k2, big_n(f2.dim)},
                         {0.0, mixed},
                         {-(n1 * n2 * (k1 - k2) + n1 * k2 - n2 * k1) / sum, 1}}};
    }
    return std::nullopt;
  }

  if (rank(a) >= 3 && rank(b) >= 3) {
    const std::size_t m1 = f1.m;
    const std::size_t m2 = f2.m;
    const double p = sz(m1);
    const double q = sz(m2);
    const std::size_t mixed = 4 * m1 * m2;
    if (a == K::cp && b == K::cp) {
      return ClosedForm{"CP^m1 x CP^m2",
                        {{-2 * k1, eta_mult(m1)},
                         {-2 * k2, eta_mult(m2)},
                         {4 * k1, plus_mult(m1)},
                         {4 * k2, plus_mult(m2)},
                         {0.0, mixed},
                         {-(2 * p * (q + 1) * k2 + 2 * q * (p + 1) * k1) / (p + q), 1}}};
    }
    if (a == K::ch && b == K::ch) {
      return ClosedForm{"CH^m1 x CH^m2",
                        {{2 * k1, eta_mult(m1)},
                         {2 * k2, eta_mult(m2)},
                         {-4 * k1, plus_mult(m1)},
                         {-4 * k2, plus_mult(m2)},
                         {0.0, mixed},
                         {(2 * p * (q + 1) * k2 + 2 * q * (p + 1) * k1) / (p + q), 1}}};
    }
    if (a == K::cp && b == K::complex_euclidean) {
      return ClosedForm{"CP^m1 x C^m2",
                        {{-2 * k1, eta_mult(m1)},
                         {4 * k1, plus_mult(m1)},
                         {0.0, mixed + big_n(2 * m2)},
                         {-2 * q * (p + 1) * k1 / (p + q), 1}}};
    }
    if (a == K::ch && b == K::complex_euclidean) {
      return ClosedForm{"CH^m1 x C^m2",
                        {{2 * k1, eta_mult(m1)},
                         {-4 * k1, plus_mult(m1)},
                         {0.0, mixed + big_n(2 * m2)},
                         {2 * q * (p + 1) * k1 / (p + q), 1}}};
    }
    if (a == K::cp && b == K::ch) {
      return ClosedForm{"CP^m1 x CH^m2",
                        {{-2 * k1, eta_mult(m1)},
                         {4 * k1, plus_mult(m1)},
                         {2 * k2, eta_mult(m2)},
                         {-4 * k2, plus_mult(m2)},
                         {0.0, mixed},
                         {-(2 * p * q * (k1 - k2) + 2 * q * k1 - 2 * p * k2) / (p + q), 1}}};
    }
  }
  return std::nullopt;
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

ManifoldDescriptor real_model(ManifoldKind kind, std::size_t dim, double kappa) {
  ManifoldDescriptor d;
  d.kind = kind;
  d.dim = dim;
  if (kind != ManifoldKind::euclidean) d.kappa = kappa;
  return d;
}

ManifoldDescriptor complex_model(ManifoldKind kind, std::size_t m, double kappa) {
  ManifoldDescriptor d;
  d.kind = kind;
  d.m = m;
  if (kind != ManifoldKind::complex_euclidean) d.kappa = kappa;
  return d;
}

ManifoldDescriptor product_of(ManifoldDescriptor a, ManifoldDescriptor b) {
  ManifoldDescriptor d;
  d.kind = ManifoldKind::product;
  d.factors = {std::move(a), std::move(b)};
  return d;
}

ExampleCase make_case(std::string label, ManifoldDescriptor d) {
  auto cf = closed_form(d);
  return {std::move(label), std::move(d), std::move(*cf)};
}

constexpr double kKappas[] = {0.5, 1.0, 2.0};
constexpr std::size_t kRealDims[] = {2, 3, 4};
constexpr std::size_t kComplexDims[] = {1, 2, 3};
constexpr std::size_t kFlatDims[] = {1, 2};

ExampleFamily real_pair_family(std::string name, ManifoldKind a, ManifoldKind b) {
  ExampleFamily fam{std::move(name), {}};
  const bool flat = b == ManifoldKind::euclidean;
  const std::span<const std::size_t> second =
      flat ? std::span<const std::size_t>(kFlatDims) : std::span<const std::size_t>(kRealDims);
  for (std::size_t n1 : kRealDims)
    for (std::size_t n2 : second) {
      for (double k1 : kKappas)
        for (double k2 : kKappas) {
          if (flat && k2 != kKappas[0]) continue;
          std::string label = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                              " kappa1=" + num(k1);
          if (!flat) label += " kappa2=" + num(k2);
          fam.cases.push_back(
              make_case(std::move(label), product_of(real_model(a, n1, k1), real_model(b, n2, k2))));
        }
    }
  return fam;
}

ExampleFamily complex_pair_family(std::string name, ManifoldKind a, ManifoldKind b) {
  ExampleFamily fam{std::move(name), {}};
  const bool flat = b == ManifoldKind::complex_euclidean;
  const std::span<const std::size_t> second = flat ? std::span<const std::size_t>(kFlatDims)
                                                    : std::span<const std::size_t>(kComplexDims);
  for (std::size_t m1 : kComplexDims)
    for (std::size_t m2 : second) {
      for (double k1 : kKappas)
        for (double k2 : kKappas) {
          if (flat && k2 != kKappas[0]) continue;
          std::string label = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                              " kappa1=" + num(k1);
          if (!flat) label += " kappa2=" + num(k2);
          fam.cases.push_back(make_case(
              std::move(label), product_of(complex_model(a, m1, k1), complex_model(b, m2, k2))));
        }
    }
  return fam;
}

}  // namespace

std::optional<ClosedForm> closed_form(const ManifoldDescriptor& d) {
  if (d.kind == ManifoldKind::custom) return std::nullopt;
  if (d.kind != ManifoldKind::product) return single(d);
  if (d.factors.size() != 2) return std::nullopt;
  const ManifoldDescriptor& f1 = d.factors[0];
  const ManifoldDescriptor& f2 = d.factors[1];
  if (rank(f1.kind) < 0 || rank(f2.kind) < 0) return std::nullopt;
  return rank(f1.kind) <= rank(f2.kind) ? pair(f1, f2) : pair(f2, f1);
}

std::vector<Cluster> expected_clusters(const std::vector<SpectrumTerm>& terms, double rel_tol) {
  std::vector<double> values;
  for (const auto& t : terms) values.insert(values.end(), t.multiplicity, t.value);
  std::sort(values.begin(), values.end());
  return cluster_spectrum(values, rel_tol);
}

SpectrumComparison compare_spectrum(const Spectrum& computed,
                                    const std::vector<SpectrumTerm>& terms, double tol) {
  SpectrumComparison out;
  out.expected = expected_clusters(terms);

  std::vector<double> values;
  for (const auto& t : terms) values.insert(values.end(), t.multiplicity, t.value);
  std::sort(values.begin(), values.end());
  if (values.size() != computed.eigenvalues.size()) {
    out.max_error = INFINITY;
  } else {
    for (std::size_t k = 0; k < values.size(); ++k)
      out.max_error = std::max(out.max_error, std::abs(values[k] - computed.eigenvalues[k]));
  }

  out.multiplicities_match = out.expected.size() == computed.clusters.size();
  for (std::size_t k = 0; out.multiplicities_match && k < out.expected.size(); ++k) {
    out.multiplicities_match =
        out.expected[k].multiplicity == computed.clusters[k].multiplicity &&
        std::abs(out.expected[k].value - computed.clusters[k].value) <= tol;
  }
  out.match = out.multiplicities_match && out.max_error <= tol;
  return out;
}

std::vector<ExampleFamily> example_families() {
  using K = ManifoldKind;
  std::vector<ExampleFamily> fams;

  ExampleFamily space_forms{"S^n(kappa) and H^n(-kappa)", {}};
  for (K kind : {K::sphere, K::hyperbolic})
    for (std::size_t n : kRealDims)
      for (double k : kKappas)
        space_forms.cases.push_back(make_case(std::string(to_string(kind)) + " n=" +
                                                  std::to_string(n) + " kappa=" + num(k),
                                              real_model(kind, n, k)));
  fams.push_back(std::move(space_forms));

  ExampleFamily kahler{"CP^m(kappa) and CH^m(-kappa)", {}};
  for (K kind : {K::cp, K::ch})
    for (std::size_t m : kComplexDims)
      for (double k : kKappas)
        kahler.cases.push_back(make_case(std::string(to_string(kind)) + " m=" + std::to_string(m) +
                                             " kappa=" + num(k),
                                         complex_model(kind, m, k)));
  fams.push_back(std::move(kahler));

  fams.push_back(real_pair_family("S^n1(kappa1) x S^n2(kappa2)", K::sphere, K::sphere));
  fams.push_back(real_pair_family("H^n1(-kappa1) x H^n2(-kappa2)", K::hyperbolic, K::hyperbolic));
  fams.push_back(real_pair_family("S^n1(kappa1) x R^n2", K::sphere, K::euclidean));
  fams.push_back(real_pair_family("H^n1(-kappa1) x R^n2", K::hyperbolic, K::euclidean));
  fams.push_back(real_pair_family("S^n1(kappa1) x H^n2(-kappa2)", K::sphere, K::hyperbolic));
  fams.push_back(complex_pair_family("CP^m1(kappa1) x CP^m2(kappa2)", K::cp, K::cp));
  fams.push_back(complex_pair_family("CH^m1(-kappa1) x CH^m2(-kappa2)", K::ch, K::ch));
  fams.push_back(complex_pair_family("CP^m1(kappa1) x C^m2", K::cp, K::complex_euclidean));
  fams.push_back(complex_pair_family("CH^m1(-kappa1) x C^m2", K::ch, K::complex_euclidean));
  fams.push_back(complex_pair_family("CP^m1(kappa1) x CH^m2(-kappa2)", K::cp, K::ch));
  return fams;
}

}  // namespace curv2k
