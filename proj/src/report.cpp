#include "polysig/report.hpp"

#include <cstdio>
#include <sstream>

#include "polysig/transforms.hpp"

namespace polysig {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Method method_from_name(const std::string& name) {
  if (name == "all") return Method::All;
  if (name == "closed") return Method::Closed;
  if (name == "numeric") return Method::Numeric;
  if (name == "recursive") return Method::Recursive;
  throw DomainError("unknown method '" + name + "'");
}

SignatureReport build_signature_report(const CurvatureData& kappa, Method method,
                                       double tol, bool with_gram) {
  SignatureReport r;
  r.kappa_tokens = kappa.tokens();
  r.n = static_cast<int>(kappa.size());
  r.dim = r.n - 1;
  r.epsilon = epsilon(kappa);
  r.q = q_of(kappa);
  r.p = p_of(kappa);

  const bool want_numeric = method == Method::All || method == Method::Numeric;
  const bool want_recursive = method == Method::All || method == Method::Recursive;
  const bool want_closed = method == Method::All || method == Method::Closed;

  if (want_closed) r.closed = closed_form_signature(kappa);
  if (want_numeric || with_gram) {
    const Basis basis = standard_basis(kappa);
    r.basis_condition = basis_condition(basis.vectors);
    const GramMatrix g = gram(kappa, basis);
    if (want_numeric) r.numeric = inertia(g, tol);
    if (with_gram) r.gram = g.entries;
  }
  if (want_recursive) r.recursive = recursive_signature(kappa);

  if (method == Method::All) {
    const Signature num{r.numeric->positive, r.numeric->negative};
    r.agree = num == *r.closed && num == *r.recursive && r.numeric->zero == r.epsilon;
  }
  return r;
}

namespace {

void append_signature(std::string& out, const Signature& s) {
  out += "{\"P\": " + std::to_string(s.positive) +
         ", \"N\": " + std::to_string(s.negative) + "}";
}

}  // namespace

std::string report_json(const SignatureReport& r) {
  std::string out = "{\n";
  out += "  \"kappa_tokens\": [";
  for (std::size_t i = 0; i < r.kappa_tokens.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + r.kappa_tokens[i] + "\"";
  }
  out += "],\n";
  out += "  \"n\": " + std::to_string(r.n) + ",\n";
  out += "  \"dim\": " + std::to_string(r.dim) + ",\n";
  out += "  \"epsilon\": " + std::to_string(r.epsilon) + ",\n";
  out += "  \"q\": " + std::to_string(r.q) + ",\n";
  out += "  \"p\": " + std::to_string(r.p);
  if (r.numeric) {
    out += ",\n  \"numeric\": {\"P\": " + std::to_string(r.numeric->positive) +
           ", \"N\": " + std::to_string(r.numeric->negative) +
           ", \"Z\": " + std::to_string(r.numeric->zero) +
           ", \"tolerance\": " + format_double(r.numeric->tolerance_used) + "}";
  }
  if (r.recursive) {
    out += ",\n  \"recursive\": ";
    append_signature(out, *r.recursive);
  }
  if (r.closed) {
    out += ",\n  \"closed\": ";
    append_signature(out, *r.closed);
  }
  if (r.agree) out += ",\n  \"agree\": " + std::string(*r.agree ? "true" : "false");
  if (r.gram) {
    out += ",\n  \"gram\": [";
    for (Eigen::Index row = 0; row < r.gram->rows(); ++row) {
      if (row) out += ", ";
      out += "[";
      for (Eigen::Index col = 0; col < r.gram->cols(); ++col) {
        if (col) out += ", ";
        const Complex v = (*r.gram)(row, col);
        out += "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
      }
      out += "]";
    }
    out += "]";
  }
  out += "\n}\n";
  return out;
}

std::string report_text(const SignatureReport& r) {
  std::ostringstream out;
  out << "kappa:";
  for (const std::string& t : r.kappa_tokens) out << " " << t;
  out << "  (n = " << r.n << ", dim = " << r.dim << ")\n";
  out << "epsilon = " << r.epsilon << ", q = " << r.q << ", p = " << r.p << "\n";
  if (r.closed) {
    out << "closed form:  (P, N) = (" << r.closed->positive << ", "
        << r.closed->negative << ")\n";
  }
  if (r.numeric) {
    out << "numeric:      (P, N, Z) = (" << r.numeric->positive << ", "
        << r.numeric->negative << ", " << r.numeric->zero << ")  tolerance "
        << format_double(r.numeric->tolerance_used) << "\n";
    out << "basis condition estimate: " << format_double(r.basis_condition) << "\n";
  }
  if (r.recursive) {
    out << "recursive:    (P, N) = (" << r.recursive->positive << ", "
        << r.recursive->negative << ")\n";
  }
  if (r.gram) {
    out << "gram:\n";
    for (Eigen::Index row = 0; row < r.gram->rows(); ++row) {
      out << " ";
      for (Eigen::Index col = 0; col < r.gram->cols(); ++col) {
        const Complex v = (*r.gram)(row, col);
        out << " (" << format_double(v.real()) << ", " << format_double(v.imag())
            << ")";
      }
      out << "\n";
    }
  }
  if (r.agree) out << "agree: " << (*r.agree ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace polysig
