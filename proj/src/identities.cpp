#include "hypersum/identities.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hypersum/acceleration.hpp"
#include "hypersum/asymptotic.hpp"
#include "hypersum/euler_sums.hpp"
#include "hypersum/special_functions.hpp"

namespace hypersum {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_ = Clock::now();
};

IdentityReport compare(std::string id, const Ball& lhs, const Ball& rhs, const PrecisionRequest& req, long terms,
                       const Stopwatch& watch, std::string note = {}) {
  IdentityReport report;
  report.identity_id = std::move(id);
  report.lhs = lhs.mid;
  report.rhs = rhs.mid;
  report.tolerance = default_tolerance(req, lhs.rad, rhs.rad);
  report.terms_used = terms;
  report.note = std::move(note);
  finalize(report);
  report.elapsed = watch.elapsed();
  return report;
}

long param(const IdentityParams& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("missing parameter '" + name + "'");
  return it->second;
}

long param_or(const IdentityParams& params, const std::string& name, long fallback) {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

int int_param(const IdentityParams& params, const std::string& name) {
  const long value = param(params, name);
  if (value < -1000000 || value > 1000000) throw std::invalid_argument("parameter '" + name + "' out of range");
  return static_cast<int>(value);
}

Ball ball_of(const EvalResult& result) { return Ball(result.value, result.error_bound); }

EvalResult run_sigma(int r, int m, SumMethod method, int k, const PrecisionRequest& req) {
  return evaluate(SumQuery{r, m, method, k, req.digits()});
}

// Each side is evaluated two digits beyond the comparison precision so
// bound slack cannot mask a discrepancy.
PrecisionRequest side_request(const PrecisionRequest& req) { return req.tighter(2); }

Ball zeta_ball(int s, const PrecisionRequest& req) { return zeta_int_ball(s, req); }

// sum_{n>=1} h_n^(r) prod 1/(n + shift) over the shifts, times `scale`.
CertifiedSum hyperharmonic_rational_series(unsigned r, const std::vector<long>& shifts, const ExactRational& scale,
                                           const PrecisionRequest& req) {
  PartialSum partial = [&](long count, Precision bits) {
    Ball total = Ball::exact(0, bits);
    for (long n = 1; n <= count; ++n) {
      BigInt denominator = 1;
      for (long s : shifts) denominator *= n + s;
      total += Ball::exact(hyperharmonic(static_cast<std::uint64_t>(n), r) * scale / ExactRational(denominator), bits);
    }
    return total;
  };
  ExpansionBuilder expansion = [&](int cutoff) {
    const int factor_cutoff = cutoff + static_cast<int>(r);
    LogPowerSeries product = hyperharmonic_expansion(r, cutoff);
    for (long s : shifts) product = product * reciprocal_shift_expansion(ExactRational(s), factor_cutoff);
    product *= scale;
    return product;
  };
  const long widest = shifts.empty() ? 1 : *std::max_element(shifts.begin(), shifts.end());
  return certified_sum(partial, expansion, static_cast<int>(shifts.size()) - static_cast<int>(r) + 1,
                       std::max(2.0, static_cast<double>(widest + r)), req);
}

std::string rational_label(const ExactRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

IdentityReport exact_grid_report(std::string id, long agreeing, long total, const Stopwatch& watch, std::string note) {
  IdentityReport report;
  report.identity_id = std::move(id);
  report.lhs = PrecReal(agreeing, kMinPrecision);
  report.rhs = PrecReal(total, kMinPrecision);
  report.tolerance = PrecReal(0, kMinPrecision);
  report.terms_used = total;
  report.note = std::move(note);
  finalize(report);
  report.elapsed = watch.elapsed();
  return report;
}

IdentityReport verify_i2() {
  Stopwatch watch;
  long agreeing = 0;
  long total = 0;
  for (unsigned r = 1; r <= 10; ++r)
    for (std::uint64_t n = 1; n <= 30; ++n, ++total)
      if (hyperharmonic_recurrence(n, r) == hyperharmonic_closed(n, r)) ++agreeing;
  return exact_grid_report("i2", agreeing, total, watch,
                           "exact agreement count, recurrence vs binomial closed form, 1<=n<=30, 1<=r<=10");
}

IdentityReport verify_i4() {
  Stopwatch watch;
  long agreeing = 0;
  long total = 0;
  for (unsigned r = 1; r <= 5; ++r) {
    const std::vector<ExactRational> coeffs = log_over_power_series(r, 20);
    for (std::uint64_t n = 1; n <= 20; ++n, ++total)
      if (coeffs.at(n) == hyperharmonic_recurrence(n, r)) ++agreeing;
  }
  return exact_grid_report("i4", agreeing, total, watch,
                           "exact agreement count, series coefficients of -ln(1-x)/(1-x)^r, n<=20, r<=5");
}

// (1/2) zeta_H(m-2) + (3/2) zeta_H(m-1) + zeta_H(m) - (5/4) zeta(m-1) - (3/4) zeta(m-2)
Ball sigma3_formula(int m, const PrecisionRequest& req) {
  return zeta_H_ball(m - 2, req) * ExactRational(1, 2) + zeta_H_ball(m - 1, req) * ExactRational(3, 2) +
         zeta_H_ball(m, req) - zeta_ball(m - 1, req) * ExactRational(5, 4) -
         zeta_ball(m - 2, req) * ExactRational(3, 4);
}

Ball sigma2_formula(int m, const PrecisionRequest& req) {
  return zeta_H_ball(m - 1, req) + zeta_H_ball(m, req) - zeta_ball(m - 1, req);
}

std::string sum_note(const EvalResult& result) {
  std::ostringstream out;
  out << to_string(result.method);
  if (result.k) out << " k=" << *result.k;
  out << ", error bound " << result.error_bound.to_scientific_up();
  return out.str();
}

}  // namespace

void finalize(IdentityReport& report) {
  const Precision bits = std::max(report.lhs.precision(), report.rhs.precision());
  PrecReal difference(bits);
  mpfr_sub(difference.raw(), report.lhs.raw(), report.rhs.raw(), MPFR_RNDN);
  report.residual = abs_up(difference);
  report.passed = report.residual.is_finite() && report.residual <= report.tolerance;
}

PrecReal default_tolerance(const PrecisionRequest& req, const PrecReal& lhs_error, const PrecReal& rhs_error) {
  return add_up(pow10(-req.digits(), kMinPrecision), add_up(lhs_error, rhs_error));
}

IdentityReport verify_prop5(int r, const PrecisionRequest& req, bool beta_form) {
  if (r < 0) throw std::invalid_argument("prop5: r must be >= 0");
  Stopwatch watch;
  const PrecisionRequest side = side_request(req);
  const BigInt r_factorial = factorial(static_cast<unsigned>(r));
  // B(r+1, n+1) = r! / ((n+1)...(n+r+1))
  std::vector<long> shifts;
  for (long i = 1; i <= r + 1; ++i) shifts.push_back(i);
  const ExactRational scale = beta_form ? ExactRational(r_factorial) : ExactRational(1);
  const CertifiedSum lhs = hyperharmonic_rational_series(static_cast<unsigned>(r), shifts, scale, side);
  const ExactRational rhs = beta_form ? ExactRational(1) : make_rational(1, r_factorial);
  return compare((beta_form ? "prop5beta_r" : "prop5_r") + std::to_string(r), lhs.value,
                 Ball::exact(rhs, side.bits()), req, lhs.terms, watch);
}

IdentityReport verify_prop6(int r, const PrecisionRequest& req, bool beta_form) {
  if (r < 0) throw std::invalid_argument("prop6: r must be >= 0");
  Stopwatch watch;
  const PrecisionRequest side = side_request(req);
  const BigInt r_factorial = factorial(static_cast<unsigned>(r));
  // B(r+1, n) = r! / (n(n+1)...(n+r))
  std::vector<long> shifts;
  for (long i = 0; i <= r; ++i) shifts.push_back(i);
  const ExactRational scale = beta_form ? ExactRational(r_factorial) : ExactRational(1);
  const CertifiedSum lhs = hyperharmonic_rational_series(static_cast<unsigned>(r), shifts, scale, side);
  Ball rhs = zeta_ball(2, side);
  if (!beta_form) rhs *= make_rational(1, r_factorial);
  return compare((beta_form ? "prop6beta_r" : "prop6_r") + std::to_string(r), lhs.value, rhs, req, lhs.terms, watch);
}

std::pair<ExactRational, ExactRational> alternating_rhs_parts(long n, AlternatingVariant variant) {
  if (n < 0) throw std::domain_error("alternating: n must be >= 0");
  if (variant == AlternatingVariant::second && n == 0) throw std::domain_error("alternating: second variant needs n >= 1");
  const long odd_last = variant == AlternatingVariant::first ? n : n - 1;
  const long j_last = variant == AlternatingVariant::first ? 2 * n + 1 : 2 * n;
  ExactRational odd = 0;
  for (long k = 0; k <= odd_last; ++k) odd += make_rational(1, BigInt(2 * k + 1));
  ExactRational nested = 0;
  ExactRational inner = 0;
  for (long j = 1; j <= j_last; ++j) {
    const ExactRational step = make_rational(1, BigInt(j));
    inner += (j % 2 == 1) ? step : ExactRational(-step);
    nested += inner * step;
  }
  return {odd, nested};
}

ExactRational alternating_term(long n, AlternatingVariant variant, long m) {
  if (m < 1) throw std::domain_error("alternating: index must be >= 1");
  const ExactRational h = harmonic(static_cast<std::uint64_t>(m));
  ExactRational value = variant == AlternatingVariant::first
                            ? make_rational(BigInt(2 * m + 2 * n + 3), BigInt(m + 1) * BigInt(m + 2 * n + 2)) * h
                            : make_rational(BigInt(2 * n), BigInt(m + 1) * BigInt(m + 2 * n + 1)) * h;
  return m % 2 == 1 ? value : ExactRational(-value);
}

namespace {

IdentityReport alternating_impl(long n, AlternatingVariant variant, const PrecisionRequest& req,
                                const PrecReal* fixed_tolerance) {
  Stopwatch watch;
  const auto [odd, nested] = alternating_rhs_parts(n, variant);
  const PrecisionRequest side = side_request(req);
  const Precision bits = side.bits() + 32;

  // The raw terms use a running H_m; exact harmonic numbers would not fit
  // in memory at the raw-term cap.
  SeriesTerm term = [n, variant, h = PrecReal(0, bits), last = 0L](long m, Precision precision) mutable {
    if (m != last + 1) throw std::logic_error("alternating terms must be requested in order");
    last = m;
    h += PrecReal(1, precision) / PrecReal(m, precision);
    PrecReal value = variant == AlternatingVariant::first
                         ? h * PrecReal(2 * m + 2 * n + 3, precision) /
                               (PrecReal(m + 1, precision) * PrecReal(m + 2 * n + 2, precision))
                         : h * PrecReal(2 * n, precision) /
                               (PrecReal(m + 1, precision) * PrecReal(m + 2 * n + 1, precision));
    return m % 2 == 1 ? value : -value;
  };
  const PrecReal target =
      fixed_tolerance ? PrecReal(*fixed_tolerance / 100) : pow10(-req.digits(), kMinPrecision) / 10;
  const AcceleratedSum lhs = accelerate_alternating(term, target, bits);

  Ball rhs = const_ln2_ball(side) * (ExactRational(2) * odd) - Ball::exact(nested, side.bits());

  IdentityReport report;
  report.identity_id =
      (variant == AlternatingVariant::first ? "alt_first_n" : "alt_second_n") + std::to_string(n);
  report.lhs = lhs.value;
  report.rhs = rhs.mid;
  report.tolerance = fixed_tolerance ? *fixed_tolerance : default_tolerance(req, lhs.residual, rhs.rad);
  report.terms_used = lhs.raw_terms;
  std::ostringstream note;
  note << "accelerated: residual " << lhs.residual.to_scientific_up() << ", " << lhs.levels << " levels, "
       << lhs.raw_terms << " raw terms, " << (lhs.converged ? "converged" : "residual above target") << ", "
       << (lhs.brackets ? "estimates bracket the limit" : "estimates do not bracket the limit");
  report.note = note.str();
  finalize(report);
  report.elapsed = watch.elapsed();
  return report;
}

}  // namespace

IdentityReport verify_alternating(long n, AlternatingVariant variant, const PrecisionRequest& req) {
  return alternating_impl(n, variant, req, nullptr);
}

IdentityReport verify_alternating(long n, AlternatingVariant variant, const PrecisionRequest& req,
                                  const PrecReal& tolerance) {
  return alternating_impl(n, variant, req, &tolerance);
}

IdentityReport verify_eq(const std::string& identity_id, const IdentityParams& params, const PrecisionRequest& req) {
  Stopwatch watch;
  const PrecisionRequest side = side_request(req);
  auto suffix = [&](std::initializer_list<const char*> names) {
    std::string out;
    for (const char* name : names) out += std::string("_") + name + std::to_string(param(params, name));
    return out;
  };

  if (identity_id == "i2") return verify_i2();
  if (identity_id == "i4") return verify_i4();

  if (identity_id == "eq1") {
    const int m = int_param(params, "m");
    if (m < 2) throw std::invalid_argument("eq1: m must be >= 2");
    const EvalResult direct = run_sigma(1, m, SumMethod::direct, 0, side);
    return compare("eq1" + suffix({"m"}), zeta_H_ball(m, side), ball_of(direct), req, direct.terms_used, watch,
                   "zeta_H by zeta values vs " + sum_note(direct));
  }
  if (identity_id == "eq2" || identity_id == "thm2") {
    const int r = int_param(params, "r");
    const int m = int_param(params, "m");
    const EvalResult direct = run_sigma(r, m, SumMethod::direct, 0, side);
    const EvalResult other =
        run_sigma(r, m, identity_id == "eq2" ? SumMethod::hurwitz : SumMethod::closed, 0, side);
    return compare(identity_id + suffix({"r", "m"}), ball_of(direct), ball_of(other), req,
                   direct.terms_used + other.terms_used, watch, sum_note(direct) + " vs " + sum_note(other));
  }
  if (identity_id == "eq3") {
    const int m = int_param(params, "m");
    if (m < 2) throw std::invalid_argument("eq3: m must be >= 2");
    return compare("eq3" + suffix({"m"}), mezo_dil_identity_lhs_ball(m, side), mezo_dil_identity_rhs_ball(m, side),
                   req, 0, watch);
  }
  if (identity_id == "eq4" || identity_id == "eq4plus") {
    const int m = int_param(params, "m");
    if (m < 3) throw std::invalid_argument(identity_id + ": m must be >= 3");
    const EvalResult lhs = run_sigma(2, m, identity_id == "eq4" ? SumMethod::closed : SumMethod::hurwitz, 0, side);
    return compare(identity_id + suffix({"m"}), ball_of(lhs), sigma2_formula(m, side), req, lhs.terms_used, watch,
                   sum_note(lhs));
  }
  if (identity_id == "eq5") {
    const EvalResult lhs = run_sigma(2, 3, SumMethod::hurwitz, 0, side);
    const Ball rhs = zeta_ball(3, side) * ExactRational(2) + zeta_ball(4, side) * ExactRational(5, 4) -
                     zeta_ball(2, side);
    return compare("eq5", ball_of(lhs), rhs, req, lhs.terms_used, watch, sum_note(lhs));
  }
  if (identity_id == "eq6") {
    const EvalResult lhs = run_sigma(2, 4, SumMethod::hurwitz, 0, side);
    const Ball rhs = zeta_ball(4, side) * ExactRational(5, 4) + zeta_ball(5, side) * ExactRational(3) -
                     zeta_ball(2, side) * zeta_ball(3, side) - zeta_ball(3, side);
    return compare("eq6", ball_of(lhs), rhs, req, lhs.terms_used, watch, sum_note(lhs));
  }
  if (identity_id == "eq8") {
    const EvalResult lhs = run_sigma(3, 4, SumMethod::hurwitz, 0, side);
    const Ball rhs = zeta_ball(4, side) * ExactRational(15, 8) + zeta_H_ball(4, side) -
                     zeta_ball(3, side) * ExactRational(1, 4) - zeta_ball(2, side) * ExactRational(3, 4);
    return compare("eq8", ball_of(lhs), rhs, req, lhs.terms_used, watch,
                   sum_note(lhs) + "; zeta(4) coefficient 15/8 from the r=3 closed form at m=4");
  }
  if (identity_id == "sigma3") {
    const int m = int_param(params, "m");
    if (m < 4) throw std::invalid_argument("sigma3: m must be >= 4");
    const EvalResult lhs = run_sigma(3, m, SumMethod::closed, 0, side);
    return compare("sigma3" + suffix({"m"}), ball_of(lhs), sigma3_formula(m, side), req, lhs.terms_used, watch,
                   sum_note(lhs));
  }
  if (identity_id == "thm1") {
    const int r = int_param(params, "r");
    const int m = int_param(params, "m");
    const int k = int_param(params, "k");
    const EvalResult lhs = run_sigma(r, m, SumMethod::hurwitz, k, side);
    const EvalResult rhs = run_sigma(r, m, SumMethod::closed, 0, side);
    return compare("thm1" + suffix({"r", "m", "k"}), ball_of(lhs), ball_of(rhs), req, lhs.terms_used, watch,
                   sum_note(lhs) + " vs " + sum_note(rhs));
  }
  if (identity_id == "lemma_l") {
    const int m = int_param(params, "m");
    const ExactRational rho = make_rational(BigInt(param(params, "rho_num")), BigInt(param_or(params, "rho_den", 1)));
    if (m < 1 || sgn(rho) <= 0) throw std::invalid_argument("lemma_l: requires m >= 1 and rho > 0");
    PartialSum partial = [&](long count, Precision bits) {
      Ball total = Ball::exact(0, bits);
      for (long n = 1; n <= count; ++n) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
        total += Ball::exact(1 / (ExactRational(power) * (ExactRational(n) + rho)), bits);
      }
      return total;
    };
    ExpansionBuilder expansion = [&](int cutoff) {
      return LogPowerSeries::monomial(m, 1, cutoff) * reciprocal_shift_expansion(rho, cutoff);
    };
    const CertifiedSum series = certified_sum(partial, expansion, m + 1, std::max(2.0, rho.get_d()), side);
    return compare("lemma_l_m" + std::to_string(m) + "_rho" + rational_label(rho), mu_ball(m, rho, side),
                   series.value, req, series.terms, watch, "closed form vs certified series");
  }
  throw UnknownIdentityError("unknown identity '" + identity_id + "'");
}

SuiteGrid SuiteGrid::defaults() {
  SuiteGrid grid;
  grid.eq1_m = {2, 3, 4, 5, 6, 7};
  grid.eq3_m = {2, 3, 4, 5, 6, 7};
  grid.eq4_m = {3, 4, 5, 6, 7, 8};
  grid.sigma3_m = {4, 5, 6, 7, 8};
  grid.pairs = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  grid.lemma_m = {1, 2, 3, 4, 5};
  grid.lemma_rho = {ExactRational(1), ExactRational(2), ExactRational(3), ExactRational(1, 2), ExactRational(5, 2)};
  grid.prop_r = {0, 1, 2, 3, 4};
  grid.alt_first_n = {0, 1, 2, 3};
  grid.alt_second_n = {1, 2, 3};
  return grid;
}

SuiteGrid SuiteGrid::empty() {
  SuiteGrid grid;
  grid.exact_layer = false;
  grid.eq5_6_8 = false;
  return grid;
}

std::vector<IdentityCase> registered_cases(const SuiteGrid& grid) {
  std::vector<IdentityCase> cases;
  auto add_eq = [&](const std::string& id, IdentityParams params, std::string label) {
    cases.push_back({std::move(label),
                     [id, params](const PrecisionRequest& req) { return verify_eq(id, params, req); }});
  };
  if (grid.exact_layer) {
    add_eq("i2", {}, "i2");
    add_eq("i4", {}, "i4");
  }
  for (int m : grid.eq1_m) add_eq("eq1", {{"m", m}}, "eq1_m" + std::to_string(m));
  for (auto [r, m] : grid.pairs)
    add_eq("eq2", {{"r", r}, {"m", m}}, "eq2_r" + std::to_string(r) + "_m" + std::to_string(m));
  for (int m : grid.eq3_m) add_eq("eq3", {{"m", m}}, "eq3_m" + std::to_string(m));
  for (int m : grid.eq4_m) add_eq("eq4", {{"m", m}}, "eq4_m" + std::to_string(m));
  for (int m : grid.eq4_m) add_eq("eq4plus", {{"m", m}}, "eq4plus_m" + std::to_string(m));
  if (grid.eq5_6_8) {
    add_eq("eq5", {}, "eq5");
    add_eq("eq6", {}, "eq6");
    add_eq("eq8", {}, "eq8");
  }
  for (int m : grid.sigma3_m) add_eq("sigma3", {{"m", m}}, "sigma3_m" + std::to_string(m));
  for (auto [r, m] : grid.pairs)
    for (int k = 0; k < r; ++k)
      add_eq("thm1", {{"r", r}, {"m", m}, {"k", k}},
             "thm1_r" + std::to_string(r) + "_m" + std::to_string(m) + "_k" + std::to_string(k));
  for (auto [r, m] : grid.pairs)
    add_eq("thm2", {{"r", r}, {"m", m}}, "thm2_r" + std::to_string(r) + "_m" + std::to_string(m));
  for (int m : grid.lemma_m)
    for (const ExactRational& rho : grid.lemma_rho)
      add_eq("lemma_l", {{"m", m}, {"rho_num", rho.get_num().get_si()}, {"rho_den", rho.get_den().get_si()}},
             "lemma_l_m" + std::to_string(m) + "_rho" + rational_label(rho));
  for (int r : grid.prop_r) {
    cases.push_back({"prop5_r" + std::to_string(r), [r](const PrecisionRequest& req) { return verify_prop5(r, req); }});
    cases.push_back(
        {"prop5beta_r" + std::to_string(r), [r](const PrecisionRequest& req) { return verify_prop5(r, req, true); }});
  }
  for (int r : grid.prop_r) {
    cases.push_back({"prop6_r" + std::to_string(r), [r](const PrecisionRequest& req) { return verify_prop6(r, req); }});
    cases.push_back(
        {"prop6beta_r" + std::to_string(r), [r](const PrecisionRequest& req) { return verify_prop6(r, req, true); }});
  }
  for (long n : grid.alt_first_n)
    cases.push_back({"alt_first_n" + std::to_string(n), [n](const PrecisionRequest& req) {
                       return verify_alternating(n, AlternatingVariant::first, req);
                     }});
  for (long n : grid.alt_second_n)
    cases.push_back({"alt_second_n" + std::to_string(n), [n](const PrecisionRequest& req) {
                       return verify_alternating(n, AlternatingVariant::second, req);
                     }});
  return cases;
}

bool matches_filter(const std::string& id, const std::string& filter) {
  if (fnmatch(filter.c_str(), id.c_str(), 0) == 0) return true;
  return id.size() > filter.size() && id.compare(0, filter.size(), filter) == 0 && id[filter.size()] == '_';
}

std::vector<IdentityReport> run_cases(const std::vector<IdentityCase>& cases, const PrecisionRequest& req,
                                      unsigned threads) {
  std::vector<IdentityReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      Stopwatch watch;
      try {
        reports[i] = cases[i].run(req);
        reports[i].identity_id = cases[i].id;
      } catch (const std::exception& error) {
        IdentityReport failed;
        failed.identity_id = cases[i].id;
        failed.note = std::string("error: ") + error.what();
        failed.elapsed = watch.elapsed();
        reports[i] = std::move(failed);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return reports;
}

std::vector<IdentityReport> run_full_suite(const PrecisionRequest& req, const SuiteGrid& grid) {
  return run_cases(registered_cases(grid), req);
}

}  // namespace hypersum
