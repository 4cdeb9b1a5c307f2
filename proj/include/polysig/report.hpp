#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polysig/areaform.hpp"
#include "polysig/curvature.hpp"

namespace polysig {

enum class Method { All, Closed, Numeric, Recursive };

Method method_from_name(const std::string& name);

// Aggregated result of the signature computations for one tuple. Serialized
// with fixed key order, complex entries as [re, im] pairs, and floats with
// 17 significant digits.
struct SignatureReport {
  std::vector<std::string> kappa_tokens;
  int n = 0;
  int dim = 0;
  int epsilon = 0;
  int q = 0;
  int p = 0;
  std::optional<Inertia> numeric;
  std::optional<Signature> recursive;
  std::optional<Signature> closed;
  std::optional<bool> agree;
  std::optional<Eigen::MatrixXcd> gram;
  double basis_condition = 0.0;
};

SignatureReport build_signature_report(const CurvatureData& kappa, Method method,
                                       double tol, bool with_gram);

std::string report_json(const SignatureReport& report);
std::string report_text(const SignatureReport& report);

// 17-significant-digit decimal form used across all machine-readable output.
std::string format_double(double v);

}  // namespace polysig
