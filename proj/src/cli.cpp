#include "curv2k/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "curv2k/descriptor.hpp"
#include "curv2k/error.hpp"
#include "curv2k/operator2k.hpp"
#include "curv2k/report.hpp"
#include "curv2k/rigidity.hpp"

namespace curv2k::cli {

using nlohmann::json;

namespace {

constexpr int kIndent = 2;

// Lower bound slack of the oracle comparison: sampled sums must not undercut
// the eigenvalue sum by more than this.
constexpr double kOracleSlack = 1e-8;

struct Options {
  std::string file;
  std::vector<std::string> alphas;
  std::string harness;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  double tol = 1e-9;
  RigidityParams params;
  bool no_timing = false;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(kIndent) << '\n'; }

int cmd_report(const Options& o, bool thresholds_only, std::ostream& out) {
  const ManifoldDescriptor d = load_descriptor(o.file);
  ReportOptions ro;
  ro.alphas = o.alphas;
  ro.thresholds_only = thresholds_only;
  ro.timing = !o.no_timing;
  emit(out, make_report(d, ro));
  return ok;
}

int cmd_examples(const Options& o, std::ostream& out) {
  const ExamplesSummary s = run_examples(o.tol);
  emit(out, s.document);
  return s.mismatches == 0 ? ok : mismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
  HarnessReport rep;
  if (o.harness == "product-structure") {
    if (o.file.empty()) throw InvalidInput("verify product-structure needs a descriptor file");
    const ManifoldDescriptor d = load_descriptor(o.file);
    if (d.kind != ManifoldKind::product || d.factors.size() != 2) {
      throw InvalidInput("verify product-structure needs a product of exactly two factors");
    }
    rep = verify_product_structure(build_tensor(d.factors[0]), build_tensor(d.factors[1]), o.tol);
  } else {
    rep = check_rigidity(parse_rigidity_case(o.harness), o.params, o.seed, o.samples, o.tol);
  }
  emit(out, to_json(rep));
  return rep.verdict == HarnessVerdict::violated ? mismatch : ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const ManifoldDescriptor d = load_descriptor(o.file);
  if (o.alphas.size() != 1) throw InvalidInput("oracle takes exactly one --alpha");
  const double alpha = resolve_alpha(o.alphas.front(), d);
  const CurvatureTensor r = build_tensor(d);
  const double exact = alpha_sum(spectrum(r), alpha);
  const OracleResult res = bruteforce_min_alpha_sum(r, alpha, o.samples, o.seed);

  const double eig_gap = std::abs(res.sample_values.front() - exact);
  const bool consistent = eig_gap <= o.tol && res.min >= exact - kOracleSlack;
  emit(out, {{"input", to_json(d)},
             {"alpha_input", o.alphas.front()},
             {"alpha", alpha},
             {"alpha_sum", exact},
             {"samples", o.samples},
             {"seed", o.seed},
             {"eigenbasis_value", res.sample_values.front()},
             {"oracle_min", res.min},
             {"argmin_sample", res.argmin_sample},
             {"argmin_digest", res.argmin_digest},
             {"gap", res.min - exact},
             {"consistent", consistent}});
  return consistent ? ok : mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Curvature operator of the second kind: spectra, thresholds and rigidity checks",
               "curv2k"};
  app.require_subcommand(1);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum report for a descriptor");
  spectrum_cmd->add_option("file", o.file, "Descriptor JSON")->required();
  spectrum_cmd->add_flag("--no-timing", o.no_timing, "Omit the timing field");

  auto* classify_cmd = app.add_subcommand("classify", "Spectrum report plus alpha verdicts");
  classify_cmd->add_option("file", o.file, "Descriptor JSON")->required();
  classify_cmd->add_option("--alpha", o.alphas, "Number, A, B or line (repeatable)")->required();
  classify_cmd->add_flag("--no-timing", o.no_timing, "Omit the timing field");

  auto* threshold_cmd = app.add_subcommand("threshold", "Nonnegativity thresholds only");
  threshold_cmd->add_option("file", o.file, "Descriptor JSON")->required();
  threshold_cmd->add_flag("--no-timing", o.no_timing, "Omit the timing field");

  auto* examples_cmd = app.add_subcommand("examples", "Compare model spectra with closed forms");
  examples_cmd->add_option("--tol", o.tol, "Value tolerance")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run a rigidity or product-structure harness");
  verify_cmd
      ->add_option("harness", o.harness,
                   "line | product-spheres | product-kahler | iff-spheres | iff-kahler | "
                   "product-structure")
      ->required();
  verify_cmd->add_option("file", o.file, "Two-factor product descriptor (product-structure)");
  verify_cmd->add_option("--seed", o.seed, "Base seed");
  verify_cmd->add_option("--samples", o.samples, "Number of samples");
  verify_cmd->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", o.params.n, "line: total dimension");
  verify_cmd->add_option("--n1", o.params.n1, "product-spheres / iff-spheres");
  verify_cmd->add_option("--n2", o.params.n2, "product-spheres / iff-spheres");
  verify_cmd->add_option("--m1", o.params.m1, "product-kahler / iff-kahler");
  verify_cmd->add_option("--m2", o.params.m2, "product-kahler / iff-kahler");
  verify_cmd->add_option("--kappa-grid", o.params.kappa_grid, "iff harnesses: positive kappas")
      ->delimiter(',');

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force basis sampling vs alpha_sum");
  oracle_cmd->add_option("file", o.file, "Descriptor JSON")->required();
  oracle_cmd->add_option("--alpha", o.alphas, "Number, A, B or line")->required();
  oracle_cmd->add_option("--samples", o.samples, "Number of random bases")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", o.seed, "Base seed");
  oracle_cmd->add_option("--tol", o.tol, "Eigenbasis agreement tolerance")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_report(o, false, out);
    if (classify_cmd->parsed()) return cmd_report(o, false, out);
    if (threshold_cmd->parsed()) return cmd_report(o, true, out);
    if (examples_cmd->parsed()) return cmd_examples(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return usage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return usage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return numeric;
  }
  return usage;
}

}  // namespace curv2k::cli
