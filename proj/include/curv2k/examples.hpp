#pragma once

// Closed-form spectra of the curvature operator of the second kind on the
// model spaces and on two-factor products of them, and the table that
// compares those formulas with computed spectra.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curv2k/descriptor.hpp"
#include "curv2k/numerics.hpp"
#include "curv2k/operator2k.hpp"

namespace curv2k {

/// One closed-form eigenvalue; multiplicity may be zero at small dimensions.
struct SpectrumTerm {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

struct ClosedForm {
  std::string family;  // e.g. "S^n1 x S^n2"
  std::vector<SpectrumTerm> terms;
};

/// Formula for single models (S, H, R, CP, CH, C) and the ten two-factor
/// families S x S, H x H, S x R, H x R, S x H, CP x CP, CH x CH, CP x C,
/// CH x C, CP x CH (either factor order). Absent for anything else.
std::optional<ClosedForm> closed_form(const ManifoldDescriptor& d);

/// Zero-multiplicity terms dropped, coinciding values merged with the same
/// relative tolerance as computed spectra.
std::vector<Cluster> expected_clusters(const std::vector<SpectrumTerm>& terms,
                                       double rel_tol = kDefaultClusterTol);

struct SpectrumComparison {
  std::vector<Cluster> expected;
  /// max |computed - expected| over the sorted eigenvalue lists; infinite
  /// when the total multiplicities differ.
  double max_error = 0.0;
  bool multiplicities_match = false;
  bool match = false;
};

SpectrumComparison compare_spectrum(const Spectrum& computed,
                                    const std::vector<SpectrumTerm>& terms, double tol = 1e-9);

struct ExampleCase {
  std::string label;
  ManifoldDescriptor descriptor;
  ClosedForm expected;
};

struct ExampleFamily {
  std::string name;
  std::vector<ExampleCase> cases;
};

/// The twelve example families over kappa in {0.5, 1, 2}, real dimensions
/// {2, 3, 4}, complex dimensions {1, 2, 3} and flat factors of dimension
/// {1, 2}.
std::vector<ExampleFamily> example_families();

}  // namespace curv2k
