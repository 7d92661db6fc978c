#include "curv2k/descriptor.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "curv2k/error.hpp"
#include "curv2k/rigidity.hpp"

namespace curv2k {

using nlohmann::json;

std::string_view to_string(ManifoldKind k) noexcept {
  switch (k) {
    case ManifoldKind::sphere: return "sphere";
    case ManifoldKind::hyperbolic: return "hyperbolic";
    case ManifoldKind::euclidean: return "euclidean";
    case ManifoldKind::cp: return "cp";
    case ManifoldKind::ch: return "ch";
    case ManifoldKind::complex_euclidean: return "complex_euclidean";
    case ManifoldKind::product: return "product";
    case ManifoldKind::custom: return "custom";
  }
  return "?";
}

std::size_t ManifoldDescriptor::real_dim() const noexcept {
  switch (kind) {
    case ManifoldKind::cp:
    case ManifoldKind::ch:
    case ManifoldKind::complex_euclidean: return 2 * m;
    case ManifoldKind::product: {
      std::size_t n = 0;
      for (const auto& f : factors) n += f.real_dim();
      return n;
    }
    default: return dim;
  }
}

bool ManifoldDescriptor::is_kahler_model() const noexcept {
  return kind == ManifoldKind::cp || kind == ManifoldKind::ch ||
         kind == ManifoldKind::complex_euclidean;
}

namespace {

ManifoldKind kind_from_string(const std::string& s, const std::string& path) {
  for (auto k : {ManifoldKind::sphere, ManifoldKind::hyperbolic, ManifoldKind::euclidean,
                 ManifoldKind::cp, ManifoldKind::ch, ManifoldKind::complex_euclidean,
                 ManifoldKind::product, ManifoldKind::custom}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError(path, "unknown kind '" + s + "'");
}

const json& field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key, "missing required field");
  return *it;
}

std::size_t size_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(path + "." + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

double kappa_field(const json& obj, const std::string& path) {
  const json& v = field(obj, "kappa", path);
  if (!v.is_number()) throw ParseError(path + ".kappa", "expected a number");
  const double k = v.get<double>();
  if (!std::isfinite(k) || k <= 0.0) {
    throw ValidationError(path + ".kappa: must be positive (sign is implied by the kind)");
  }
  return k;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(path + "." + key, "unexpected field");
  }
}

ManifoldDescriptor parse_node(const json& node, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  const json& kind_node = field(node, "kind", path);
  if (!kind_node.is_string()) throw ParseError(path + ".kind", "expected a string");

  ManifoldDescriptor d;
  d.kind = kind_from_string(kind_node.get<std::string>(), path + ".kind");
  switch (d.kind) {
    case ManifoldKind::sphere:
    case ManifoldKind::hyperbolic:
      reject_unknown(node, {"kind", "dim", "kappa"}, path);
      d.dim = size_field(node, "dim", path);
      d.kappa = kappa_field(node, path);
      if (d.dim < 2) throw ValidationError(path + ".dim: " + std::string(to_string(d.kind)) +
                                           " needs dim >= 2");
      break;
    case ManifoldKind::euclidean:
      reject_unknown(node, {"kind", "dim"}, path);
      d.dim = size_field(node, "dim", path);
      if (d.dim < 1) throw ValidationError(path + ".dim: euclidean needs dim >= 1");
      break;
    case ManifoldKind::cp:
    case ManifoldKind::ch:
      reject_unknown(node, {"kind", "m", "kappa"}, path);
      d.m = size_field(node, "m", path);
      d.kappa = kappa_field(node, path);
      if (d.m < 1) throw ValidationError(path + ".m: must be >= 1");
      break;
    case ManifoldKind::complex_euclidean:
      reject_unknown(node, {"kind", "m"}, path);
      d.m = size_field(node, "m", path);
      if (d.m < 1) throw ValidationError(path + ".m: must be >= 1");
      break;
    case ManifoldKind::product: {
      reject_unknown(node, {"kind", "factors"}, path);
      const json& fs = field(node, "factors", path);
      if (!fs.is_array()) throw ParseError(path + ".factors", "expected an array");
      for (std::size_t i = 0; i < fs.size(); ++i) {
        d.factors.push_back(parse_node(fs[i], path + ".factors[" + std::to_string(i) + "]"));
      }
      if (d.factors.size() < 2) throw ValidationError(path + ".factors: need at least two");
      break;
    }
    case ManifoldKind::custom: {
      reject_unknown(node, {"kind", "dim", "components"}, path);
      d.dim = size_field(node, "dim", path);
      if (d.dim < 1) throw ValidationError(path + ".dim: custom needs dim >= 1");
      const json& cs = field(node, "components", path);
      if (!cs.is_array()) throw ParseError(path + ".components", "expected an array");
      d.components.reserve(cs.size());
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_number()) {
          throw ParseError(path + ".components[" + std::to_string(i) + "]", "expected a number");
        }
        d.components.push_back(cs[i].get<double>());
      }
      const std::size_t want = d.dim * d.dim * d.dim * d.dim;
      if (d.components.size() != want) {
        throw ValidationError(path + ".components: expected " + std::to_string(want) +
                              " values, got " + std::to_string(d.components.size()));
      }
      try {
        (void)CurvatureTensor::from_components(d.dim, d.components);
      } catch (const ValidationError& e) {
        throw ValidationError(path + ".components: " + e.what());
      }
      break;
    }
  }
  return d;
}

}  // namespace

ManifoldDescriptor descriptor_from_json(const json& doc) { return parse_node(doc, "$"); }

ManifoldDescriptor parse_descriptor(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  return descriptor_from_json(doc);
}

json to_json(const ManifoldDescriptor& d) {
  json j;
  j["kind"] = std::string(to_string(d.kind));
  switch (d.kind) {
    case ManifoldKind::sphere:
    case ManifoldKind::hyperbolic:
      j["dim"] = d.dim;
      j["kappa"] = d.kappa;
      break;
    case ManifoldKind::euclidean: j["dim"] = d.dim; break;
    case ManifoldKind::cp:
    case ManifoldKind::ch:
      j["m"] = d.m;
      j["kappa"] = d.kappa;
      break;
    case ManifoldKind::complex_euclidean: j["m"] = d.m; break;
    case ManifoldKind::product: {
      json fs = json::array();
      for (const auto& f : d.factors) fs.push_back(to_json(f));
      j["factors"] = std::move(fs);
      break;
    }
    case ManifoldKind::custom:
      j["dim"] = d.dim;
      j["components"] = d.components;
      break;
  }
  return j;
}

ManifoldDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_descriptor(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.path(), std::string(e.what()).substr(e.path().size() + 2));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ":" + e.what());
  }
}

CurvatureTensor build_tensor(const ManifoldDescriptor& d) {
  switch (d.kind) {
    case ManifoldKind::sphere: return space_form(d.dim, d.kappa);
    case ManifoldKind::hyperbolic: return space_form(d.dim, -d.kappa);
    case ManifoldKind::euclidean: return CurvatureTensor::zero(d.dim);
    case ManifoldKind::cp: return kahler_space_form(d.m, d.kappa).tensor;
    case ManifoldKind::ch: return kahler_space_form(d.m, -d.kappa).tensor;
    case ManifoldKind::complex_euclidean: return CurvatureTensor::zero(2 * d.m);
    case ManifoldKind::product: {
      if (d.factors.empty()) throw InvalidInput("build_tensor: product without factors");
      CurvatureTensor r = build_tensor(d.factors.front());
      for (std::size_t i = 1; i < d.factors.size(); ++i) r = product(r, build_tensor(d.factors[i]));
      return r;
    }
    case ManifoldKind::custom: return CurvatureTensor::from_components(d.dim, d.components);
  }
  throw InvalidInput("build_tensor: unknown kind");
}

double resolve_alpha(std::string_view text, const ManifoldDescriptor& d) {
  if (text == "A") {
    if (d.kind != ManifoldKind::product || d.factors.size() != 2) {
      throw InvalidInput("alpha 'A' needs a product of exactly two factors");
    }
    return a_const(d.factors[0].real_dim(), d.factors[1].real_dim());
  }
  if (text == "B") {
    if (d.kind != ManifoldKind::product || d.factors.size() != 2 ||
        !d.factors[0].is_kahler_model() || !d.factors[1].is_kahler_model()) {
      throw InvalidInput("alpha 'B' needs a product of exactly two Kaehler model factors");
    }
    return b_const(d.factors[0].m, d.factors[1].m);
  }
  if (text == "line") {
    if (d.real_dim() < 2) throw InvalidInput("alpha 'line' needs dimension >= 2");
    return a_const(d.real_dim() - 1, 1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InvalidInput("alpha must be a number, 'A', 'B' or 'line'; got '" + std::string(text) +
                       "'");
  }
  return value;
}

}  // namespace curv2k
