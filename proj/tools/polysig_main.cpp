#include <CLI11.hpp>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "polysig/report.hpp"
#include "polysig/svg.hpp"
#include "polysig/transforms.hpp"
#include "polysig/verify.hpp"

namespace {

using namespace polysig;

// Parses one complex token: "1", "-2.5", "1+2i", "-1i", "2i", "0.5-1e-3i".
Complex parse_complex_token(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw SyntaxError("empty coefficient");

  const auto parse_num = [](const std::string& body) {
    if (body == "" || body == "+") return 1.0;
    if (body == "-") return -1.0;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (errno == ERANGE || end != body.c_str() + body.size())
      throw SyntaxError("bad coefficient '" + body + "'");
    return v;
  };

  if (s.back() != 'i') return Complex(parse_num(s), 0.0);

  const std::string body = s.substr(0, s.size() - 1);
  // Split before the sign of the imaginary part, skipping exponent signs.
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      return Complex(parse_num(body.substr(0, k)), parse_num(body.substr(k)));
    }
  }
  return Complex(0.0, parse_num(body));
}

ComplexVector parse_coefficients(const std::string& text) {
  ComplexVector out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    out.push_back(parse_complex_token(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_vector(const std::string& label, const ComplexVector& z) {
  for (std::size_t j = 0; j < z.size(); ++j) {
    std::cout << label << "[" << j + 1 << "] = (" << format_double(z[j].real())
              << ", " << format_double(z[j].imag()) << ")\n";
  }
}

PolygonVector element_from_flags(const CurvatureData& kappa, const std::string& coeffs,
                                 std::uint64_t seed) {
  const std::vector<PolygonVector> basis = basis_vectors(std::span(kappa.angles()));
  if (!coeffs.empty()) return combine(basis, parse_coefficients(coeffs));
  return combine(basis, random_coefficients(basis.size(), seed));
}

int cmd_signature(const std::string& kappa_text, const std::string& method_name,
                  double tol, bool json, bool with_gram) {
  const CurvatureData kappa = parse_curvature(kappa_text);
  const Method method = method_from_name(method_name);
  const SignatureReport report = build_signature_report(kappa, method, tol, with_gram);
  std::cout << (json ? report_json(report) : report_text(report));
  if (report.agree && !*report.agree) return 2;
  return 0;
}

int cmd_gram(const std::string& kappa_text, bool json) {
  const CurvatureData kappa = parse_curvature(kappa_text);
  const GramMatrix g = gram(kappa, standard_basis(kappa));
  if (json) {
    std::string out = "{\n  \"kappa_tokens\": [";
    const auto tokens = kappa.tokens();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + tokens[i] + "\"";
    }
    out += "],\n  \"n\": " + std::to_string(kappa.size());
    out += ",\n  \"dim\": " + std::to_string(kappa.size() - 1);
    out += ",\n  \"basis_id\": \"" + g.basis_id + "\"";
    out += ",\n  \"entries\": [";
    for (Eigen::Index r = 0; r < g.entries.rows(); ++r) {
      if (r) out += ", ";
      out += "[";
      for (Eigen::Index c = 0; c < g.entries.cols(); ++c) {
        if (c) out += ", ";
        out += "[" + format_double(g.entries(r, c).real()) + ", " +
               format_double(g.entries(r, c).imag()) + "]";
      }
      out += "]";
    }
    out += "]\n}\n";
    std::cout << out;
    return 0;
  }
  std::cout << "kappa:";
  for (const std::string& t : kappa.tokens()) std::cout << " " << t;
  std::cout << "\n";
  for (Eigen::Index r = 0; r < g.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.entries.cols(); ++c) {
      std::cout << " (" << format_double(g.entries(r, c).real()) << ", "
                << format_double(g.entries(r, c).imag()) << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_sample(const std::string& kappa_text, std::uint64_t seed,
               const std::string& coeffs, const std::string& svg_path) {
  const CurvatureData kappa = parse_curvature(kappa_text);
  const PolygonVector z = element_from_flags(kappa, coeffs, seed);

  std::cout << "kappa:";
  for (const std::string& t : kappa.tokens()) std::cout << " " << t;
  std::cout << "\n";
  print_vector("z", z.coords);
  const Complex norm = area_pairing(z.coords, z.coords);
  std::cout << "square-norm: " << format_double(norm.real()) << "\n";

  if (!svg_path.empty()) {
    const std::string doc = svg_polygon_document(realize(z));
    std::ofstream out(svg_path, std::ios::binary);
    if (!out || !(out << doc)) {
      std::cerr << "error: cannot write SVG to '" << svg_path << "'\n";
      return 1;
    }
    std::cout << "svg: " << svg_path << "\n";
  }
  return 0;
}

int cmd_transform(const std::string& kappa_text, const std::string& op, int index,
                  std::uint64_t seed, const std::string& coeffs) {
  if (op != "cut-glue" && op != "reverse")
    throw DomainError("unknown op '" + op + "' (expected cut-glue or reverse)");
  const CurvatureData kappa = parse_curvature(kappa_text);
  const PolygonVector z = element_from_flags(kappa, coeffs, seed);

  std::cout << "kappa:";
  for (const std::string& t : kappa.tokens()) std::cout << " " << t;
  std::cout << "\n";
  print_vector("input z", z.coords);
  const Complex norm_in = area_pairing(z.coords, z.coords);
  std::cout << "input square-norm: " << format_double(norm_in.real()) << "\n";

  PolygonVector image;
  CurvatureData target = kappa;
  if (op == "cut-glue") {
    image = cut_glue(kappa, index, z);
    target = transposed(kappa, index);
  } else {
    image = reverse(kappa, z);
    target = reversed_tuple(kappa);
  }

  std::cout << "target kappa:";
  for (const std::string& t : target.tokens()) std::cout << " " << t;
  std::cout << "\n";
  print_vector("output z", image.coords);
  const Complex norm_out = area_pairing(image.coords, image.coords);
  std::cout << "output square-norm: " << format_double(norm_out.real()) << "\n";
  return 0;
}

int cmd_verify(int n_max, int trials, std::uint64_t seed, const std::string& fault) {
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.trials = trials;
  opts.seed = seed;
  if (fault == "negate-q") {
    opts.fault_negate_q = true;
  } else if (!fault.empty()) {
    throw DomainError("unknown fault '" + fault + "'");
  }
  const VerifyReport report = run_verify(opts);
  std::cout << verify_table(report);
  return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature of the area Hermitian form on spaces of cone-angle polygons"};
  app.require_subcommand(1);

  std::string kappa_text;
  std::string method_name = "all";
  double tol = 0.0;
  bool json = false;
  bool with_gram = false;

  CLI::App* sig = app.add_subcommand("signature",
                                     "Compute the signature by all three methods");
  sig->add_option("--kappa", kappa_text, "curvature tuple")->required();
  sig->add_option("--method", method_name, "all|closed|numeric|recursive");
  sig->add_option("--tol", tol, "absolute eigenvalue tolerance");
  sig->add_flag("--json", json, "emit the JSON report");
  sig->add_flag("--gram", with_gram, "include the Gram matrix");

  CLI::App* gram_cmd = app.add_subcommand("gram", "Print the Gram matrix");
  gram_cmd->add_option("--kappa", kappa_text, "curvature tuple")->required();
  gram_cmd->add_flag("--json", json, "emit JSON");

  std::uint64_t seed = 0;
  std::string coeffs;
  std::string svg_path;
  CLI::App* sample = app.add_subcommand("sample", "Sample an element and print it");
  sample->add_option("--kappa", kappa_text, "curvature tuple")->required();
  sample->add_option("--seed", seed, "random seed (default 0)");
  sample->add_option("--coeffs", coeffs, "basis coefficients, e.g. 1+0i,2,-1i");
  sample->add_option("--svg", svg_path, "write an SVG rendering to this path");

  std::string op;
  int index = 0;
  CLI::App* transform = app.add_subcommand("transform", "Apply cut-glue or reversal");
  transform->add_option("--kappa", kappa_text, "curvature tuple")->required();
  transform->add_option("--op", op, "cut-glue|reverse")->required();
  transform->add_option("--index", index, "transposition index (cut-glue)");
  transform->add_option("--seed", seed, "random seed (default 0)");
  transform->add_option("--coeffs", coeffs, "basis coefficients");

  int n_max = 8;
  int trials = 200;
  std::string fault;
  CLI::App* verify = app.add_subcommand("verify", "Run the self-verification sweep");
  verify->add_option("--n-max", n_max, "largest tuple length (default 8)");
  verify->add_option("--trials", trials, "random trials per check (default 200)");
  verify->add_option("--seed", seed, "sweep seed");
  verify->add_option("--inject-fault", fault, "test hook")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sig->parsed()) return cmd_signature(kappa_text, method_name, tol, json, with_gram);
    if (gram_cmd->parsed()) return cmd_gram(kappa_text, json);
    if (sample->parsed()) return cmd_sample(kappa_text, seed, coeffs, svg_path);
    if (transform->parsed()) return cmd_transform(kappa_text, op, index, seed, coeffs);
    if (verify->parsed()) return cmd_verify(n_max, trials, seed, fault);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
