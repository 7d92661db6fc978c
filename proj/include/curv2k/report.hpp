#pragma once

// JSON documents emitted by the command-line front end.

#include <string>
#include <vector>

#include "json.hpp"

#include "curv2k/descriptor.hpp"
#include "curv2k/examples.hpp"
#include "curv2k/operator2k.hpp"
#include "curv2k/rigidity.hpp"

namespace curv2k {

nlohmann::json to_json(const std::vector<Cluster>& clusters);
nlohmann::json to_json(const HarnessReport& report);

struct ReportOptions {
  /// Raw --alpha arguments (numbers or the symbols A, B, line), in order.
  std::vector<std::string> alphas;
  /// threshold subcommand: input, n, N and thresholds only.
  bool thresholds_only = false;
  bool timing = true;
};

/// {input, n, N, spectrum, scalar_curvature, einstein_constant, thresholds,
///  classifications, closed_form, timing}. Multiplicities sum to N.
nlohmann::json make_report(const ManifoldDescriptor& d, const ReportOptions& options);

struct ExamplesSummary {
  nlohmann::json document;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
};

/// Computes every case of example_families() and compares it with its
/// closed form at tolerance tol.
ExamplesSummary run_examples(double tol = 1e-9);

}  // namespace curv2k
