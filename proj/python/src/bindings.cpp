#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curv2k/cli.hpp"
#include "curv2k/descriptor.hpp"
#include "curv2k/error.hpp"
#include "curv2k/operator2k.hpp"
#include "curv2k/report.hpp"
#include "curv2k/rigidity.hpp"

namespace py = pybind11;
using namespace curv2k;

namespace {

py::dict spectrum_dict(const Spectrum& s) {
  py::list clusters;
  for (const Cluster& c : s.clusters) {
    py::dict d;
    d["value"] = c.value;
    d["multiplicity"] = c.multiplicity;
    clusters.append(d);
  }
  py::dict out;
  out["n"] = s.n;
  out["N"] = s.N;
  out["eigenvalues"] = s.eigenvalues;
  out["clusters"] = clusters;
  return out;
}

py::dict classification_dict(const Classification& c) {
  py::dict out;
  out["alpha"] = c.alpha;
  out["g_nonneg"] = c.g_nonneg;
  out["g_nonpos"] = c.g_nonpos;
  out["verdict"] = std::string(to_string(c.verdict));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature operator of the second kind on traceless symmetric 2-tensors.";

  // ParseError derives from runtime_error, so register the specific types first.
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<NumericError> numeric_error(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const ValidationError& e) {
      validation_error(e.what());
    } catch (const NumericError& e) {
      numeric_error(e.what());
    }
  });

  py::class_<CurvatureTensor>(m, "CurvatureTensor")
      .def_static("zero", &CurvatureTensor::zero, py::arg("dim"))
      .def_static(
          "from_components",
          [](std::size_t dim, std::vector<double> c) {
            return CurvatureTensor::from_components(dim, std::move(c));
          },
          py::arg("dim"), py::arg("components"))
      .def_property_readonly("dim", &CurvatureTensor::dim)
      .def("components", &CurvatureTensor::components)
      .def("__call__", &CurvatureTensor::operator(), py::arg("i"), py::arg("j"), py::arg("k"),
           py::arg("l"))
      .def("__neg__", [](const CurvatureTensor& r) { return -r; })
      .def("scaled", &CurvatureTensor::scaled, py::arg("factor"))
      .def("__repr__",
           [](const CurvatureTensor& r) { return "<CurvatureTensor dim=" + std::to_string(r.dim()) + ">"; });

  m.def("space_form", &space_form, py::arg("n"), py::arg("c"));
  m.def(
      "kahler_space_form", [](std::size_t mm, double kappa) { return kahler_space_form(mm, kappa).tensor; },
      py::arg("m"), py::arg("kappa"));
  m.def("product", &product, py::arg("r1"), py::arg("r2"));
  m.def(
      "random_curvature",
      [](std::size_t n, std::uint64_t seed, double scale) { return random_curvature(n, seed, scale); },
      py::arg("n"), py::arg("seed"), py::arg("scale") = 1.0);
  m.def("scalar", &scalar, py::arg("r"));
  m.def("einstein_constant", &einstein_constant, py::arg("r"), py::arg("tol") = 1e-9);

  m.def(
      "spectrum", [](const CurvatureTensor& r) { return spectrum_dict(spectrum(r)); }, py::arg("r"));
  m.def(
      "alpha_sum", [](const CurvatureTensor& r, double a) { return alpha_sum(spectrum(r), a); },
      py::arg("r"), py::arg("alpha"));
  m.def(
      "classify",
      [](const CurvatureTensor& r, double a, double tol) { return classification_dict(classify(r, a, tol)); },
      py::arg("r"), py::arg("alpha"), py::arg("tol") = kVerdictTol);
  m.def(
      "thresholds",
      [](const CurvatureTensor& r) {
        const Spectrum s = spectrum(r);
        py::dict out;
        out["nonneg"] = nonneg_threshold(s);
        out["nonpos"] = nonpos_threshold(s);
        return out;
      },
      py::arg("r"));

  m.def("a_const", &a_const, py::arg("n1"), py::arg("n2"));
  m.def("b_const", &b_const, py::arg("m1"), py::arg("m2"));
  m.def("f_lemma", &f_lemma, py::arg("values"), py::arg("x"));

  m.def(
      "check_rigidity_json",
      [](const std::string& which, std::uint64_t seed, std::size_t samples, double tol, std::size_t n,
         std::size_t n1, std::size_t n2, std::size_t m1, std::size_t m2,
         std::optional<std::vector<double>> grid) {
        RigidityParams p;
        p.n = n;
        p.n1 = n1;
        p.n2 = n2;
        p.m1 = m1;
        p.m2 = m2;
        if (grid) p.kappa_grid = *grid;
        HarnessReport rep;
        {
          py::gil_scoped_release release;
          rep = check_rigidity(parse_rigidity_case(which), p, seed, samples, tol);
        }
        return to_json(rep).dump();
      },
      py::arg("case"), py::arg("seed") = 0, py::arg("samples") = 100, py::arg("tol") = 1e-9,
      py::arg("n") = 4, py::arg("n1") = 2, py::arg("n2") = 2, py::arg("m1") = 1, py::arg("m2") = 1,
      py::arg("kappa_grid") = py::none());

  m.def(
      "report_json",
      [](const std::string& descriptor, std::vector<std::string> alphas, bool thresholds_only) {
        ReportOptions opt;
        opt.alphas = std::move(alphas);
        opt.thresholds_only = thresholds_only;
        opt.timing = false;
        return make_report(parse_descriptor(descriptor), opt).dump();
      },
      py::arg("descriptor"), py::arg("alphas") = std::vector<std::string>{},
      py::arg("thresholds_only") = false);
  m.def(
      "build_tensor", [](const std::string& descriptor) { return build_tensor(parse_descriptor(descriptor)); },
      py::arg("descriptor"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
