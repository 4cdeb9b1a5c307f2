#include "polysig/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "polysig/areaform.hpp"
#include "polysig/transforms.hpp"

namespace polysig {

bool VerifyReport::all_pass() const {
  for (const VerifyCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string verify_table(const VerifyReport& report) {
  std::ostringstream out;
  for (const VerifyCheck& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (report.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

CurvatureData random_rational_tuple(std::mt19937_64& rng, int n, int max_two_den) {
  const int max_den = max_two_den / 2;
  std::vector<Angle> angles;
  angles.reserve(n);
  for (int k = 0; k < n; ++k) {
    const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, max_den)(rng);
    const std::int64_t a = std::uniform_int_distribution<std::int64_t>(1, 2 * b - 1)(rng);
    angles.push_back(Angle::rational_pi(a, b));
  }
  return CurvatureData(std::move(angles));
}

CurvatureData random_real_tuple(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  std::vector<Angle> angles;
  angles.reserve(n);
  for (int k = 0; k < n; ++k) {
    double x = 0.0;
    while (!(x > 0.0)) x = dist(rng);
    angles.push_back(Angle::radians(x));
  }
  return CurvatureData(std::move(angles));
}

namespace {

// Uniform composition of `total` into `parts` integers, each in [1, hi].
std::vector<std::int64_t> bounded_composition(std::mt19937_64& rng, std::int64_t total,
                                              int parts, std::int64_t hi) {
  if (total < parts || total > parts * hi)
    throw DomainError("infeasible composition request");
  std::vector<std::int64_t> out(parts);
  std::int64_t rem = total;
  for (int k = 0; k < parts; ++k) {
    const std::int64_t slots = parts - 1 - k;
    const std::int64_t lo = std::max<std::int64_t>(1, rem - slots * hi);
    const std::int64_t up = std::min<std::int64_t>(hi, rem - slots);
    const std::int64_t a = std::uniform_int_distribution<std::int64_t>(lo, up)(rng);
    out[k] = a;
    rem -= a;
  }
  return out;
}

CurvatureData tuple_from_numerators(const std::vector<std::int64_t>& nums,
                                    std::int64_t den) {
  std::vector<Angle> angles;
  angles.reserve(nums.size());
  for (std::int64_t a : nums) angles.push_back(Angle::rational_pi(a, den));
  return CurvatureData(std::move(angles));
}

// Running sums T_i confined to the open bands (2b(i-1), 2bi) for the first
// `bands` steps, every step in [1, 2b-1]. Retries on dead ends.
std::vector<std::int64_t> band_walk(std::mt19937_64& rng, int bands, std::int64_t b) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::int64_t> nums;
    std::int64_t prev = 0;
    bool ok = true;
    for (int i = 1; i <= bands && ok; ++i) {
      const std::int64_t band_lo = 2 * b * (i - 1) + 1;
      const std::int64_t band_hi = 2 * b * i - 1;
      const std::int64_t lo = std::max(band_lo, prev + 1);
      const std::int64_t hi = std::min(band_hi, prev + 2 * b - 1);
      if (lo > hi) {
        ok = false;
        break;
      }
      const std::int64_t t = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
      nums.push_back(t - prev);
      prev = t;
    }
    if (ok) return nums;
  }
  throw NumericError("band walk failed to converge");
}

}  // namespace

Signature sum_range_case_expected(int part, int n) {
  switch (part) {
    case 1:
      return {1, n - 2};
    case 2:
      return {0, n - 2};
    case 3:
      return {n - 2, 0};
    case 4:
      return {0, n - 1};
    case 5:
      return {n - 1, 0};
    case 6:
      return {n - 2, 1};
    case 7:
      return {n - 1, 0};
    case 8:
      return {n - 2, 0};
    default:
      throw DomainError("case part must be 1..8");
  }
}

CurvatureData sum_range_case_tuple(std::mt19937_64& rng, int part, int n) {
  const std::int64_t b = 12;  // common denominator; angles a/b with a in [1, 2b-1]
  const std::int64_t hi = 2 * b - 1;
  auto pick = [&rng](std::int64_t lo, std::int64_t up) {
    return std::uniform_int_distribution<std::int64_t>(lo, up)(rng);
  };
  switch (part) {
    case 1:  // 2pi < total < 4pi
      return tuple_from_numerators(
          bounded_composition(rng, pick(2 * b + 1, std::min(4 * b - 1, n * hi)), n, hi),
          b);
    case 2:  // total = 2pi
      return tuple_from_numerators(bounded_composition(rng, 2 * b, n, hi), b);
    case 3:  // total = 2pi(n-1)
      return tuple_from_numerators(bounded_composition(rng, 2 * b * (n - 1), n, hi), b);
    case 4:  // total < 2pi
      return tuple_from_numerators(
          bounded_composition(rng, pick(n, 2 * b - 1), n, hi), b);
    case 5:  // 2pi(n-1) < total < 2pi n
      return tuple_from_numerators(
          bounded_composition(rng, pick(2 * b * (n - 1) + 1, 2 * b * n - n), n, hi), b);
    case 6:  // 2pi(n-2) < total < 2pi(n-1)
      return tuple_from_numerators(
          bounded_composition(rng, pick(2 * b * (n - 2) + 1, 2 * b * (n - 1) - 1), n,
                              hi),
          b);
    case 7:  // every running sum strictly inside its own band
      return tuple_from_numerators(band_walk(rng, n, b), b);
    default:
      throw DomainError("sum_range_case_tuple handles parts 1..7");
  }
}

GeneralizedCurvatureData sum_range_case8_tuple(std::mt19937_64& rng, int n) {
  const std::int64_t b = 12;
  // Bands up to i = n-1, then the last entry tops the total up to exactly
  // 2pi n; it lands in (2pi, 4pi).
  const std::vector<std::int64_t> prefix = band_walk(rng, n - 1, b);
  std::int64_t partial = 0;
  for (std::int64_t a : prefix) partial += a;
  std::vector<Angle> angles;
  angles.reserve(n);
  for (std::int64_t a : prefix) angles.push_back(Angle::rational_pi(a, b));
  angles.push_back(Angle::rational_pi(2 * b * n - partial, b));
  return GeneralizedCurvatureData(std::move(angles));
}

namespace {

using TuplePredicate = std::function<bool(const CurvatureData&)>;

std::string tuple_string(const std::vector<std::string>& tokens) {
  std::string out = "(";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ",";
    out += tokens[i];
  }
  return out + ")";
}

// Minimizes a failing tuple by repeatedly keeping whichever half still
// fails; stops at n = 2 or when both halves pass.
CurvatureData shrink_by_halving(CurvatureData kappa, const TuplePredicate& fails) {
  bool improved = true;
  while (kappa.size() > 2 && improved) {
    improved = false;
    const std::vector<Angle>& a = kappa.angles();
    const std::size_t half = (a.size() + 1) / 2;
    const std::vector<std::vector<Angle>> candidates = {
        {a.begin(), a.begin() + half}, {a.begin() + half, a.end()}};
    for (const auto& c : candidates) {
      if (c.size() < 2) continue;
      CurvatureData cand{std::vector<Angle>(c)};
      if (fails(cand)) {
        kappa = std::move(cand);
        improved = true;
        break;
      }
    }
  }
  return kappa;
}

struct SweepState {
  const VerifyOptions& opts;
  VerifyReport report;

  void add(const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
  }
};

Signature closed_with_fault(const CurvatureData& kappa, bool fault) {
  Signature s = closed_form_signature(kappa);
  if (fault) s.negative = -s.negative;
  return s;
}

bool triple_agreement_holds(const CurvatureData& kappa, bool fault) {
  const Signature closed = closed_with_fault(kappa, fault);
  const Signature rec = recursive_signature(kappa);
  const Inertia num = numeric_signature(kappa);
  return Signature{num.positive, num.negative} == closed && rec == closed &&
         num.zero == epsilon(kappa);
}

void check_triple_agreement(SweepState& s, const std::string& name, bool rational) {
  std::mt19937_64 rng(s.opts.seed * 1000003ULL + (rational ? 1 : 2));
  const TuplePredicate fails = [&s](const CurvatureData& k) {
    return !triple_agreement_holds(k, s.opts.fault_negate_q);
  };
  for (int t = 0; t < s.opts.trials; ++t) {
    const int n = std::uniform_int_distribution<int>(2, s.opts.n_max)(rng);
    const CurvatureData kappa =
        rational ? random_rational_tuple(rng, n) : random_real_tuple(rng, n);
    if (fails(kappa)) {
      const CurvatureData minimal = shrink_by_halving(kappa, fails);
      s.add(name, false, "minimal failing kappa=" + tuple_string(minimal.tokens()));
      return;
    }
  }
  std::ostringstream d;
  d << "(" << s.opts.trials << " tuples, n in 2.." << s.opts.n_max << ")";
  s.add(name, true, d.str());
}

void check_cut_glue(SweepState& s) {
  std::mt19937_64 rng(s.opts.seed * 1000003ULL + 3);
  for (int t = 0; t < s.opts.trials; ++t) {
    const int n = std::uniform_int_distribution<int>(2, s.opts.n_max)(rng);
    const CurvatureData kappa = random_rational_tuple(rng, n);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector image = cut_glue(kappa, i, z);
    const CurvatureData target = transposed(kappa, i);
    const Complex norm_in = area_pairing(z.coords, z.coords);
    const Complex norm_out = area_pairing(image.coords, image.coords);
    const bool ok = is_member(target, image.coords, kMemberTol) &&
                    std::abs(norm_out - norm_in) <= 1e-10 * (1.0 + std::abs(norm_in));
    if (!ok) {
      s.add("cut-glue-isometry", false,
            "kappa=" + tuple_string(kappa.tokens()) + " i=" + std::to_string(i));
      return;
    }
  }
  s.add("cut-glue-isometry", true,
        "(" + std::to_string(s.opts.trials) + " random (kappa, i, seed) triples)");
}

void check_reversal(SweepState& s) {
  std::mt19937_64 rng(s.opts.seed * 1000003ULL + 4);
  for (int t = 0; t < s.opts.trials; ++t) {
    const int n = std::uniform_int_distribution<int>(2, s.opts.n_max)(rng);
    const CurvatureData kappa = random_rational_tuple(rng, n);
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector image = reverse(kappa, z);
    const CurvatureData target = reversed_tuple(kappa);
    const Complex norm_in = area_pairing(z.coords, z.coords);
    const Complex norm_out = area_pairing(image.coords, image.coords);
    const bool ok = is_member(target, image.coords, kMemberTol) &&
                    std::abs(norm_out + norm_in) <= 1e-10 * (1.0 + std::abs(norm_in));
    if (!ok) {
      s.add("reversal-anti-isometry", false, "kappa=" + tuple_string(kappa.tokens()));
      return;
    }
  }
  s.add("reversal-anti-isometry", true,
        "(" + std::to_string(s.opts.trials) + " random samples)");
}

void check_decomposition(SweepState& s) {
  std::mt19937_64 rng(s.opts.seed * 1000003ULL + 5);
  const int n_max = std::max(3, s.opts.n_max);
  for (int t = 0; t < s.opts.trials; ++t) {
    const int n = std::uniform_int_distribution<int>(3, n_max)(rng);
    CurvatureData kappa = random_rational_tuple(rng, n);
    while (is_2pi_multiple(angle_sum(kappa[0], kappa[1])))
      kappa = random_rational_tuple(rng, n);

    const PolygonVector x = special_X(kappa);
    const std::vector<PolygonVector> merged_basis =
        basis_vectors(std::span(merged_tuple(kappa).angles()));
    const auto euclid = [](const ComplexVector& v) {
      double s = 0.0;
      for (const Complex& c : v) s += std::norm(c);
      return std::sqrt(s);
    };
    const double x_scale = euclid(x.coords);

    std::vector<PolygonVector> combined{x};
    for (const PolygonVector& w : merged_basis) {
      const PolygonVector emb = embed_merged(kappa, w);
      if (std::abs(area_pairing(x.coords, emb.coords)) >
          1e-10 * (1.0 + x_scale * euclid(emb.coords))) {
        s.add("decomposition", false,
              "orthogonality failed for kappa=" + tuple_string(kappa.tokens()));
        return;
      }
      combined.push_back(emb);
    }
    const double cond = basis_condition(combined);
    if (!(cond < 1e8)) {
      s.add("decomposition", false,
            "rank deficiency for kappa=" + tuple_string(kappa.tokens()));
      return;
    }
  }
  s.add("decomposition", true,
        "(" + std::to_string(s.opts.trials) + " tuples, n in 3.." +
            std::to_string(n_max) + ")");
}

void check_sum_range_cases(SweepState& s) {
  std::mt19937_64 rng(s.opts.seed * 1000003ULL + 6);
  const int per_case = std::max(1, s.opts.trials / 8);
  for (int part = 1; part <= 8; ++part) {
    for (int t = 0; t < per_case; ++t) {
      const int lo = part == 6 || part == 8 ? 3 : 2;
      const int n = std::uniform_int_distribution<int>(lo, 8)(rng);
      const Signature want = sum_range_case_expected(part, n);
      Signature closed;
      Inertia num;
      std::string shown;
      if (part == 8) {
        const GeneralizedCurvatureData kappa = sum_range_case8_tuple(rng, n);
        closed = closed_form_signature(kappa);
        num = numeric_signature(kappa);
        shown = tuple_string(kappa.tokens());
      } else {
        const CurvatureData kappa = sum_range_case_tuple(rng, part, n);
        closed = closed_form_signature(kappa);
        num = numeric_signature(kappa);
        shown = tuple_string(kappa.tokens());
      }
      if (!(closed == want && Signature{num.positive, num.negative} == want)) {
        s.add("sum-range-cases", false,
              "case " + std::to_string(part) + " kappa=" + shown);
        return;
      }
    }
  }
  s.add("sum-range-cases", true,
        "(8 cases x " + std::to_string(per_case) + " tuples)");
}

void check_allpi(SweepState& s) {
  for (int n = 2; n <= std::max(2, s.opts.n_max); ++n) {
    std::vector<Angle> angles(n, Angle::rational_pi(1, 1));
    const CurvatureData kappa{std::move(angles)};
    const Signature want = allpi_signature(n);
    const Signature closed = closed_with_fault(kappa, s.opts.fault_negate_q);
    const Inertia num = numeric_signature(kappa);
    const bool ok = closed == want && Signature{num.positive, num.negative} == want &&
                    num.zero == epsilon(kappa);
    if (!ok) {
      s.add("all-pi", false, "n=" + std::to_string(n));
      return;
    }
  }
  s.add("all-pi", true, "(n = 2.." + std::to_string(std::max(2, s.opts.n_max)) + ")");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  SweepState s{options, {}};
  check_triple_agreement(s, "agreement-rational", true);
  check_triple_agreement(s, "agreement-real", false);
  check_cut_glue(s);
  check_reversal(s);
  check_decomposition(s);
  check_sum_range_cases(s);
  check_allpi(s);
  return s.report;
}

}  // namespace polysig
