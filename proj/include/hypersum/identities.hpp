#ifndef HYPERSUM_IDENTITIES_HPP
#define HYPERSUM_IDENTITIES_HPP

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/exact.hpp"
#include "hypersum/prec_real.hpp"

namespace hypersum {

struct IdentityReport {
  std::string identity_id;
  PrecReal lhs;
  PrecReal rhs;
  PrecReal tolerance;
  bool passed = false;
  long terms_used = 0;
  std::chrono::nanoseconds elapsed{0};
  PrecReal residual;  // |lhs - rhs|
  std::string note;
};

/// Fills residual and passed (|lhs - rhs| <= tolerance).
void finalize(IdentityReport& report);

/// Default tolerance: 10^-digits plus both sides' error bounds.
PrecReal default_tolerance(const PrecisionRequest& req, const PrecReal& lhs_error, const PrecReal& rhs_error);

/// sum h_n^(r) / ((n+1)...(n+r+1)) against 1/r!. With `beta_form` the
/// summand is h_n^(r) B(r+1, n+1) and the right side 1.
IdentityReport verify_prop5(int r, const PrecisionRequest& req, bool beta_form = false);

/// sum h_n^(r) / (n(n+1)...(n+r)) against zeta(2)/r!. With `beta_form`
/// the summand is h_n^(r) B(r+1, n) and the right side zeta(2).
IdentityReport verify_prop6(int r, const PrecisionRequest& req, bool beta_form = false);

enum class AlternatingVariant { first, second };

/// Exact rational parts (a, b) of the right side 2 ln 2 * a - b.
std::pair<ExactRational, ExactRational> alternating_rhs_parts(long n, AlternatingVariant variant);

/// Summand of the left side at index m >= 1, sign included.
ExactRational alternating_term(long n, AlternatingVariant variant, long m);

/// Left side by accelerated summation. `tolerance` defaults to
/// 10^-digits; the report note carries the achieved residual.
/// Throws std::domain_error for n = 0 with the second variant.
IdentityReport verify_alternating(long n, AlternatingVariant variant, const PrecisionRequest& req);
IdentityReport verify_alternating(long n, AlternatingVariant variant, const PrecisionRequest& req,
                                  const PrecReal& tolerance);

class UnknownIdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer parameters of a registered identity, e.g. {"m", 5}.
using IdentityParams = std::map<std::string, long>;

/// Dispatches one named identity: eq1 (m), eq2 (r, m), eq3 (m), eq4 (m),
/// eq4plus (m), eq5, eq6, eq8, sigma3 (m), thm1 (r, m, k), thm2 (r, m),
/// lemma_l (m, rho_num, rho_den), i2, i4.
/// Throws UnknownIdentityError for other ids and std::invalid_argument for
/// bad parameters.
IdentityReport verify_eq(const std::string& identity_id, const IdentityParams& params, const PrecisionRequest& req);

struct SuiteGrid {
  bool exact_layer = true;
  std::vector<int> eq1_m;
  std::vector<int> eq3_m;
  std::vector<int> eq4_m;
  std::vector<int> sigma3_m;
  std::vector<std::pair<int, int>> pairs;  // (r, m) for cross-method checks
  bool eq5_6_8 = true;
  std::vector<int> lemma_m;
  std::vector<ExactRational> lemma_rho;
  std::vector<int> prop_r;
  std::vector<long> alt_first_n;
  std::vector<long> alt_second_n;

  static SuiteGrid defaults();
  static SuiteGrid empty();
};

struct IdentityCase {
  std::string id;
  std::function<IdentityReport(const PrecisionRequest&)> run;
};

/// Every case of the grid in registered order.
std::vector<IdentityCase> registered_cases(const SuiteGrid& grid = SuiteGrid::defaults());

/// Shell-style glob on the full id, or an id prefix followed by '_'
/// ("eq4" selects eq4_m3 ... but not eq4plus_m3).
bool matches_filter(const std::string& id, const std::string& filter);

/// Runs the cases concurrently; reports come back in registered order.
/// Failures inside a case become failed reports, never exceptions.
std::vector<IdentityReport> run_cases(const std::vector<IdentityCase>& cases, const PrecisionRequest& req,
                                      unsigned threads = 0);

std::vector<IdentityReport> run_full_suite(const PrecisionRequest& req, const SuiteGrid& grid = SuiteGrid::defaults());

}  // namespace hypersum

#endif  // HYPERSUM_IDENTITIES_HPP
