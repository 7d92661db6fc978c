#pragma once

// JSON manifold descriptors: the model spaces, products of them, and raw
// tensors given component by component.
//
//   {"kind": "sphere", "dim": 3, "kappa": 1}
//   {"kind": "cp", "m": 2, "kappa": 1}
//   {"kind": "product", "factors": [ ... at least two ... ]}
//   {"kind": "custom", "dim": 3, "components": [ dim^4 numbers, l fastest ]}
//
// kappa is always stored positive; hyperbolic and ch apply the sign.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "curv2k/curvature.hpp"

namespace curv2k {

enum class ManifoldKind { sphere, hyperbolic, euclidean, cp, ch, complex_euclidean, product, custom };

std::string_view to_string(ManifoldKind k) noexcept;

struct ManifoldDescriptor {
  ManifoldKind kind = ManifoldKind::euclidean;
  std::size_t dim = 0;  // sphere, hyperbolic, euclidean, custom
  std::size_t m = 0;    // cp, ch, complex_euclidean
  double kappa = 0.0;   // sphere, hyperbolic, cp, ch
  std::vector<ManifoldDescriptor> factors;
  std::vector<double> components;

  /// Real dimension of the manifold.
  std::size_t real_dim() const noexcept;
  /// cp, ch or complex_euclidean.
  bool is_kahler_model() const noexcept;

  friend bool operator==(const ManifoldDescriptor&, const ManifoldDescriptor&) = default;
};

/// Throws ParseError (with a "$.factors[1].kappa"-style path) on malformed
/// JSON or schema violations, ValidationError on invariant violations.
ManifoldDescriptor parse_descriptor(std::string_view text);
ManifoldDescriptor descriptor_from_json(const nlohmann::json& doc);

/// Canonical JSON; parse_descriptor(to_json(d).dump()) == d.
nlohmann::json to_json(const ManifoldDescriptor& d);

/// Reads and parses a file; ParseError carries the file name on I/O errors.
ManifoldDescriptor load_descriptor(const std::string& path);

/// Tensor of the described manifold; products are block sums in factor order.
CurvatureTensor build_tensor(const ManifoldDescriptor& d);

/// Resolves an alpha argument: a decimal number, "A" (two-factor product,
/// a_const of the factor dimensions), "B" (two Kaehler-model factors, b_const
/// of the complex dimensions) or "line" (a_const(n-1, 1)). Throws
/// InvalidInput when the symbol does not apply to the descriptor.
double resolve_alpha(std::string_view text, const ManifoldDescriptor& d);

}  // namespace curv2k
