#include "curv2k/report.hpp"

#include <chrono>

#include "parallel.hpp"

namespace curv2k {

using nlohmann::json;

namespace {

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Einstein detection in reports uses the harness detector tolerance.
std::optional<double> report_einstein(const CurvatureTensor& r) {
  return einstein_constant(r, kDetectorRelTol * std::max(1.0, r.max_abs()));
}

}  // namespace

json to_json(const std::vector<Cluster>& clusters) {
  json out = json::array();
  for (const auto& c : clusters) out.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return out;
}

json to_json(const HarnessReport& report) {
  json params = json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", std::string(to_string(c.status))},
                      {"max_error", c.max_error},
                      {"detail", c.detail}});
  }
  json cex = json::array();
  for (const auto& c : report.counterexamples) {
    cex.push_back({{"seed", c.seed}, {"diagnostics", c.diagnostics}});
  }
  return {{"harness", report.name},
          {"parameters", std::move(params)},
          {"samples_run", report.samples_run},
          {"checks", std::move(checks)},
          {"counterexamples", std::move(cex)},
          {"findings", report.findings},
          {"verdict", std::string(to_string(report.verdict))}};
}

json make_report(const ManifoldDescriptor& d, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const CurvatureTensor r = build_tensor(d);
  const Spectrum s = spectrum(r);

  json out;
  out["input"] = to_json(d);
  out["n"] = s.n;
  out["N"] = s.N;
  out["thresholds"] = {{"nonneg", nullable(nonneg_threshold(s))},
                       {"nonpos", nullable(nonpos_threshold(s))}};
  if (!options.thresholds_only) {
    out["spectrum"] = to_json(s.clusters);
    out["scalar_curvature"] = scalar(r);
    out["einstein_constant"] = nullable(report_einstein(r));

    json verdicts = json::array();
    for (const auto& text : options.alphas) {
      const double alpha = resolve_alpha(text, d);
      const Classification c = classify(s, alpha);
      verdicts.push_back({{"alpha_input", text},
                          {"alpha", alpha},
                          {"g_nonneg", c.g_nonneg},
                          {"g_nonpos", c.g_nonpos},
                          {"verdict", std::string(to_string(c.verdict))}});
    }
    out["classifications"] = std::move(verdicts);

    if (const auto cf = closed_form(d)) {
      const SpectrumComparison cmp = compare_spectrum(s, cf->terms);
      out["closed_form"] = {{"family", cf->family},
                            {"expected", to_json(cmp.expected)},
                            {"max_error", cmp.max_error},
                            {"match", cmp.match}};
    } else {
      out["closed_form"] = nullptr;
    }
  }
  if (options.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    out["timing"] = {{"elapsed_ms", ms.count()}};
  }
  return out;
}

ExamplesSummary run_examples(double tol) {
  const std::vector<ExampleFamily> fams = example_families();

  struct Slot {
    const ExampleCase* c;
    json entry;
    bool match = false;
  };
  std::vector<Slot> slots;
  for (const auto& f : fams)
    for (const auto& c : f.cases) slots.push_back({&c, {}, false});

  detail::parallel_for(0, slots.size(), [&](std::size_t i) {
    const ExampleCase& c = *slots[i].c;
    const Spectrum s = spectrum(build_tensor(c.descriptor));
    const SpectrumComparison cmp = compare_spectrum(s, c.expected.terms, tol);
    slots[i].match = cmp.match;
    slots[i].entry = {{"label", c.label},
                      {"expected", to_json(cmp.expected)},
                      {"computed", to_json(s.clusters)},
                      {"max_error", cmp.max_error},
                      {"match", cmp.match}};
  }, 1);

  ExamplesSummary out;
  json families = json::array();
  std::size_t k = 0;
  for (const auto& f : fams) {
    json cases = json::array();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < f.cases.size(); ++i, ++k) {
      bad += slots[k].match ? 0 : 1;
      cases.push_back(std::move(slots[k].entry));
    }
    out.cases += f.cases.size();
    out.mismatches += bad;
    families.push_back({{"family", f.name},
                        {"cases", std::move(cases)},
                        {"mismatches", bad}});
  }
  out.document = {{"tolerance", tol},
                  {"families", std::move(families)},
                  {"cases", out.cases},
                  {"mismatches", out.mismatches}};
  return out;
}

}  // namespace curv2k
