#include "hypersum/euler_sums.hpp"

#include <cmath>

#include "hypersum/asymptotic.hpp"
#include "hypersum/special_functions.hpp"

namespace hypersum {

namespace {

// Re-evaluates `compute` with more working digits until the enclosure is
// within 10^-digits.
template <class Compute>
Ball within_digits(const PrecisionRequest& req, Compute&& compute) {
  const PrecReal target = pow10(-req.digits(), kMinPrecision);
  for (int extra = 4; extra <= 4 + 16 * 12; extra += 12) {
    Ball b = compute(req.tighter(extra));
    if (b.rad <= target) return b;
  }
  throw std::runtime_error("could not reach the requested precision");
}

// zeta(s) for s = 2..max_s, indexed by s.
std::vector<Ball> zeta_values(int max_s, const PrecisionRequest& req) {
  std::vector<Ball> out(static_cast<std::size_t>(std::max(max_s, 1)) + 1);
  for (int s = 2; s <= max_s; ++s) out[s] = zeta_int_ball(s, req);
  return out;
}

Ball zeta_H_from(const std::vector<Ball>& z, int m) {
  Ball acc = z[m + 1] * ExactRational(m + 2);
  for (int n = 1; n <= m - 2; ++n) acc -= z[m - n] * z[n + 1];
  return acc * ExactRational(1, 2);
}

Ball mu_from(const std::vector<Ball>& z, int m, const ExactRational& rho, const Ball& bracket) {
  const Precision bits = bracket.precision();
  Ball acc = Ball::exact(0, bits);
  ExactRational inv_power = 1;
  const ExactRational inv_rho = 1 / rho;
  for (int k = 1; k <= m - 1; ++k) {
    inv_power *= inv_rho;
    Ball term = z[m - k + 1] * inv_power;
    if (k % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  inv_power *= inv_rho;
  Ball last = bracket * inv_power;
  if (m % 2 == 1)
    acc += last;
  else
    acc -= last;
  return acc;
}

// Psi(rho+1) + gamma, exactly H_rho for integer rho.
Ball digamma_bracket(const ExactRational& rho, const PrecisionRequest& req) {
  if (rho.get_den() == 1) return Ball::exact(harmonic(rho.get_num().get_ui()), req.bits());
  return digamma_ball(rho + 1, req) + euler_gamma_ball(req);
}

void require_positive_mu_args(int m, const ExactRational& rho) {
  if (m < 1) throw std::domain_error("mu: m must be >= 1");
  if (sgn(rho) <= 0) throw std::domain_error("mu: rho must be positive");
}

EvalResult to_result(const Ball& b, long terms, SumMethod method, std::optional<int> k = std::nullopt) {
  EvalResult out;
  out.value = b.mid;
  out.error_bound = b.rad;
  out.terms_used = terms;
  out.method = method;
  out.k = k;
  return out;
}

std::vector<ExactRational> trimmed(std::vector<ExactRational> p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

// C(x) = sum_{i=1}^{x} c(i) via Faulhaber's formula.
std::vector<ExactRational> prefix_sum_polynomial(const std::vector<ExactRational>& c) {
  std::vector<ExactRational> out(c.size() + 1, ExactRational(0));
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (sgn(c[d]) == 0) continue;
    const ExactRational scale = c[d] / ExactRational(static_cast<long>(d) + 1);
    for (std::size_t j = 0; j <= d; ++j) {
      ExactRational b = bernoulli(static_cast<unsigned>(j));
      if (j == 1) b = -b;  // B_1 = +1/2 in the Faulhaber sum
      out[d + 1 - j] += scale * ExactRational(binomial(d + 1, j)) * b;
    }
  }
  return trimmed(out);
}

// p(x - 1)
std::vector<ExactRational> shifted_down(const std::vector<ExactRational>& p) {
  std::vector<ExactRational> out(p.size(), ExactRational(0));
  for (std::size_t d = 0; d < p.size(); ++d) {
    for (std::size_t e = 0; e <= d; ++e) {
      ExactRational term = p[d] * ExactRational(binomial(d, e));
      if ((d - e) % 2 == 1) term = -term;
      out[e] += term;
    }
  }
  return trimmed(out);
}

ExactRational evaluate_polynomial(const std::vector<ExactRational>& p, const ExactRational& x) {
  ExactRational out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
  return out;
}

// sum_n h_n^(r-k-1) Z_k(n, m) as a certified series.
CertifiedSum hurwitz_series(int r, int m, int k, const PrecisionRequest& req) {
  const unsigned weight_order = static_cast<unsigned>(r - k - 1);
  const NestedHurwitzForm form = nested_hurwitz_form(m, k);
  int max_degree = 0;
  for (const auto& [s, c] : form) max_degree = std::max(max_degree, static_cast<int>(c.size()) - 1);

  PartialSum partial = [&](long count, Precision bits) {
    // zeta(s, n) by downward recurrence from zeta(s); its absolute error is
    // amplified by up to count^(r+1) through the weights.
    const int extra = 6 + static_cast<int>(std::ceil((r + 2) * std::log10(static_cast<double>(count))));
    const PrecisionRequest zeta_req = PrecisionRequest(req.digits()).tighter(extra);
    const Precision work = std::max(bits, zeta_req.bits());
    std::map<int, Ball> zeta;
    for (const auto& [s, c] : form) zeta[s] = zeta_int_ball(s, zeta_req);
    Ball total = Ball::exact(0, work);
    for (long n = 1; n <= count; ++n) {
      const ExactRational x(n);
      Ball nested = Ball::exact(0, work);
      for (const auto& [s, c] : form) nested += zeta[s] * evaluate_polynomial(c, x);
      total += nested * hyperharmonic(static_cast<std::uint64_t>(n), weight_order);
      for (auto& [s, value] : zeta) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
        value -= Ball::exact(make_rational(1, power), work);
      }
    }
    return total;
  };

  ExpansionBuilder expansion = [&](int cutoff) {
    const int nested_cutoff = cutoff + static_cast<int>(weight_order) + 1;
    LogPowerSeries nested(nested_cutoff);
    for (const auto& [s, c] : form) {
      const int degree = static_cast<int>(c.size()) - 1;
      nested += LogPowerSeries::polynomial(c, nested_cutoff) * hurwitz_expansion(s, nested_cutoff + degree);
    }
    const int weight_cutoff = cutoff - (m - k - 1) + 1;
    return hyperharmonic_expansion(weight_order, weight_cutoff) * nested;
  };

  const double shift_scale = std::max(2.0, static_cast<double>(weight_order + max_degree));
  return certified_sum(partial, expansion, m - r + 1, shift_scale, req);
}

}  // namespace

std::string to_string(SumMethod method) {
  switch (method) {
    case SumMethod::direct:
      return "direct";
    case SumMethod::closed:
      return "closed";
    case SumMethod::hurwitz:
      return "hurwitz";
  }
  return "unknown";
}

SumMethod parse_method(const std::string& name) {
  if (name == "direct") return SumMethod::direct;
  if (name == "closed") return SumMethod::closed;
  if (name == "hurwitz") return SumMethod::hurwitz;
  throw std::invalid_argument("unknown method '" + name + "' (expected direct, closed or hurwitz)");
}

void SumQuery::validate() const {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (m <= r) throw DivergenceError("divergent: requires m > r");
  PrecisionRequest{digits};
  if (method == SumMethod::hurwitz && (k < 0 || k > r - 1))
    throw std::invalid_argument("hurwitz method requires 0 <= k <= r-1");
}

Ball zeta_H_ball(int m, const PrecisionRequest& req) {
  if (m <= 1) throw std::domain_error("zeta_H: m must be >= 2");
  return within_digits(req, [&](const PrecisionRequest& inner) { return zeta_H_from(zeta_values(m + 1, inner), m); });
}

PrecReal zeta_H(int m, const PrecisionRequest& req) { return zeta_H_ball(m, req).mid; }

Ball mu_ball(int m, const ExactRational& rho, const PrecisionRequest& req) {
  require_positive_mu_args(m, rho);
  return within_digits(req, [&](const PrecisionRequest& inner) {
    return mu_from(zeta_values(m, inner), m, rho, digamma_bracket(rho, inner));
  });
}

PrecReal mu(int m, const ExactRational& rho, const PrecisionRequest& req) { return mu_ball(m, rho, req).mid; }

EvalResult sigma_closed(const SumQuery& q) {
  q.validate();
  const int r = q.r;
  const int m = q.m;
  const ExactRational h_prev = harmonic(static_cast<std::uint64_t>(r - 1));
  const ExactRational scale = make_rational(1, factorial(static_cast<unsigned>(r - 1)));
  Ball value = within_digits(PrecisionRequest(q.digits), [&](const PrecisionRequest& inner) {
    const std::vector<Ball> z = zeta_values(m + 1, inner);
    Ball total = Ball::exact(0, inner.bits());
    for (int k = 1; k <= r; ++k) {
      const int s = m - k + 1;
      Ball bracket = zeta_H_from(z, s) - z[s] * h_prev;
      for (int j = 1; j <= r - 1; ++j)
        bracket += mu_from(z, s, ExactRational(j), Ball::exact(harmonic(static_cast<std::uint64_t>(j)), inner.bits()));
      total += bracket * ExactRational(stirling_first(static_cast<unsigned>(r), static_cast<unsigned>(k)));
    }
    return total * scale;
  });
  return to_result(value, m, SumMethod::closed);
}

EvalResult sigma_direct(const SumQuery& q) {
  q.validate();
  const unsigned r = static_cast<unsigned>(q.r);
  const int m = q.m;
  PartialSum partial = [&](long count, Precision bits) {
    Ball total = Ball::exact(0, bits);
    for (long n = 1; n <= count; ++n) {
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
      total += Ball::exact(hyperharmonic(static_cast<std::uint64_t>(n), r) / ExactRational(power), bits);
    }
    return total;
  };
  ExpansionBuilder expansion = [&](int cutoff) {
    return hyperharmonic_expansion(r, cutoff - m) * LogPowerSeries::monomial(m, 1, cutoff);
  };
  CertifiedSum sum = certified_sum(partial, expansion, m - q.r + 1, std::max(2.0, static_cast<double>(r)),
                                   PrecisionRequest(q.digits));
  return to_result(sum.value, sum.terms, SumMethod::direct);
}

EvalResult sigma_hurwitz(const SumQuery& q) {
  q.validate();
  if (q.k < 0 || q.k > q.r - 1) throw std::invalid_argument("hurwitz method requires 0 <= k <= r-1");
  CertifiedSum sum = hurwitz_series(q.r, q.m, q.k, PrecisionRequest(q.digits));
  return to_result(sum.value, sum.terms, SumMethod::hurwitz, q.k);
}

EvalResult evaluate(const SumQuery& q) {
  switch (q.method) {
    case SumMethod::direct:
      return sigma_direct(q);
    case SumMethod::closed:
      return sigma_closed(q);
    case SumMethod::hurwitz:
      return sigma_hurwitz(q);
  }
  throw std::invalid_argument("unknown method");
}

NestedHurwitzForm nested_hurwitz_form(int m, int k) {
  if (k < 0) throw std::domain_error("nested Hurwitz sum: depth must be >= 0");
  if (m < k + 2) throw std::domain_error("nested Hurwitz sum: requires m >= k + 2");
  NestedHurwitzForm form{{m, {ExactRational(1)}}};
  auto accumulate = [](NestedHurwitzForm& target, int s, const std::vector<ExactRational>& p, bool negate) {
    auto& slot = target[s];
    if (slot.size() < p.size()) slot.resize(p.size(), ExactRational(0));
    for (std::size_t d = 0; d < p.size(); ++d) slot[d] += negate ? ExactRational(-p[d]) : p[d];
    slot = trimmed(slot);
    if (slot.empty()) target.erase(s);
  };
  for (int level = 1; level <= k; ++level) {
    NestedHurwitzForm next;
    for (const auto& [s, c] : form) {
      const std::vector<ExactRational> prefix = prefix_sum_polynomial(c);
      for (std::size_t t = 0; t < prefix.size(); ++t)
        if (sgn(prefix[t]) != 0) accumulate(next, s - static_cast<int>(t), {prefix[t]}, false);
      accumulate(next, s, shifted_down(prefix), true);
    }
    form = std::move(next);
  }
  for (const auto& [s, c] : form)
    if (s < 2) throw std::logic_error("nested Hurwitz reduction produced a divergent term");
  return form;
}

Ball hurwitz_nested_sum_ball(long n, int m, int k, const PrecisionRequest& req) {
  if (n < 1) throw std::domain_error("nested Hurwitz sum: n must be >= 1");
  const NestedHurwitzForm form = nested_hurwitz_form(m, k);
  return within_digits(req, [&](const PrecisionRequest& inner) {
    // the polynomial weights grow like n^k
    const PrecisionRequest wide = inner.tighter(static_cast<int>(std::ceil(k * std::log10(static_cast<double>(n) + 1))));
    Ball total = Ball::exact(0, wide.bits());
    for (const auto& [s, c] : form)
      total += hurwitz_zeta_ball(s, ExactRational(n), wide) * evaluate_polynomial(c, ExactRational(n));
    return total;
  });
}

PrecReal hurwitz_nested_sum(long n, int m, int k, const PrecisionRequest& req) {
  return hurwitz_nested_sum_ball(n, m, k, req).mid;
}

Ball mezo_dil_identity_lhs_ball(int m, const PrecisionRequest& req) {
  if (m <= 1) throw std::domain_error("mezo_dil_identity_lhs: m must be >= 2");
  Ball sum = hurwitz_series(1, m, 0, req.tighter(1)).value;
  return sum * ExactRational(2);
}

PrecReal mezo_dil_identity_lhs(int m, const PrecisionRequest& req) { return mezo_dil_identity_lhs_ball(m, req).mid; }

Ball mezo_dil_identity_rhs_ball(int m, const PrecisionRequest& req) {
  if (m <= 1) throw std::domain_error("mezo_dil_identity_rhs: m must be >= 2");
  return within_digits(req, [&](const PrecisionRequest& inner) {
    const std::vector<Ball> z = zeta_values(m + 1, inner);
    Ball acc = z[m + 1] * ExactRational(m + 2);
    for (int n = 1; n <= m - 2; ++n) acc -= z[m - n] * z[n + 1];
    return acc;
  });
}

}  // namespace hypersum
