#include <doctest.h>

#include <set>

#include "hypersum/identities.hpp"
#include "hypersum/special_functions.hpp"
#include "support.hpp"

using namespace hypersum;
using test_support::distance;
using test_support::reference;
using test_support::tenth_power;

TEST_CASE("report invariant") {
  IdentityReport report;
  report.lhs = PrecReal(ExactRational(1, 3), 128);
  report.rhs = PrecReal(ExactRational(1, 3) + ExactRational(1, 1000), 128);
  report.tolerance = PrecReal(ExactRational(1, 500), 128);
  finalize(report);
  CHECK(report.passed);
  report.tolerance = PrecReal(ExactRational(1, 2000), 128);
  finalize(report);
  CHECK_FALSE(report.passed);
}

TEST_CASE("Beta-weighted hyperharmonic series") {
  const PrecisionRequest req(15);
  for (int r = 0; r <= 4; ++r) {
    CAPTURE(r);
    for (bool beta : {false, true}) {
      const IdentityReport five = verify_prop5(r, req, beta);
      CHECK(five.passed);
      CHECK(five.residual <= tenth_power(-10));
      const IdentityReport six = verify_prop6(r, req, beta);
      CHECK(six.passed);
      CHECK(six.residual <= tenth_power(-10));
    }
  }
  CHECK(distance(verify_prop5(3, req).rhs, PrecReal(ExactRational(1, 6), 128)) <= tenth_power(-25));
  CHECK(distance(verify_prop6(2, req).rhs, reference("pi") * reference("pi") / 12) <= tenth_power(-15));
  CHECK(verify_prop5(2, req).identity_id == "prop5_r2");
  CHECK(verify_prop6(2, req, true).identity_id == "prop6beta_r2");
}

TEST_CASE("Beta-series partial sums increase towards the limit") {
  for (unsigned r = 0; r <= 4; ++r) {
    ExactRational partial = 0;
    ExactRational previous = -1;
    const ExactRational limit = make_rational(1, factorial(r));
    for (std::uint64_t n = 1; n <= 400; ++n) {
      partial += hyperharmonic(n, r) * beta_int(r + 1, static_cast<long>(n) + 1) / ExactRational(factorial(r));
      CHECK(partial > previous);
      CHECK(partial < limit);
      previous = partial;
    }
  }
}

TEST_CASE("alternating right sides") {
  auto [a0, b0] = alternating_rhs_parts(0, AlternatingVariant::first);
  CHECK(a0 == 1);
  CHECK(b0 == 1);
  auto [a1, b1] = alternating_rhs_parts(1, AlternatingVariant::second);
  CHECK(a1 == 1);
  CHECK(b1 == ExactRational(5, 4));
  CHECK_THROWS_AS(alternating_rhs_parts(0, AlternatingVariant::second), std::domain_error);
  CHECK_THROWS_AS(verify_alternating(0, AlternatingVariant::second, PrecisionRequest(10)), std::domain_error);
}

TEST_CASE("alternating terms") {
  CHECK(alternating_term(0, AlternatingVariant::first, 1) == ExactRational(5, 6));
  CHECK(alternating_term(0, AlternatingVariant::first, 2) == -ExactRational(7, 12) * ExactRational(3, 2));
  CHECK(alternating_term(1, AlternatingVariant::second, 1) == ExactRational(1, 4));
}

TEST_CASE("alternating series") {
  const PrecisionRequest req(15);
  const IdentityReport first = verify_alternating(0, AlternatingVariant::first, req);
  CHECK(first.passed);
  CHECK(distance(first.rhs, reference("ln2") * 2 - PrecReal(1, 64)) <= tenth_power(-16));
  CHECK(first.note.find("residual") != std::string::npos);
  for (long n = 1; n <= 3; ++n) {
    CHECK(verify_alternating(n, AlternatingVariant::first, req).passed);
    CHECK(verify_alternating(n, AlternatingVariant::second, req, tenth_power(-8)).passed);
  }
}

TEST_CASE("registered identities") {
  const PrecisionRequest req(15);
  CHECK(verify_eq("eq5", {}, req).passed);
  CHECK(verify_eq("eq3", {{"m", 2}}, req).passed);
  CHECK(verify_eq("eq1", {{"m", 5}}, PrecisionRequest(20)).passed);
  for (int m = 3; m <= 8; ++m) {
    CHECK(verify_eq("eq4", {{"m", m}}, req).passed);
    CHECK(verify_eq("eq4plus", {{"m", m}}, req).passed);
  }
  CHECK(verify_eq("eq5", {}, PrecisionRequest(20)).residual < tenth_power(-20));
  CHECK_THROWS_AS(verify_eq("eq99", {}, req), UnknownIdentityError);
  CHECK_THROWS_AS(verify_eq("eq1", {}, req), std::invalid_argument);
  CHECK_THROWS_AS(verify_eq("eq1", {{"m", 1}}, req), std::invalid_argument);
}

TEST_CASE("filter semantics") {
  CHECK(matches_filter("eq5", "eq5"));
  CHECK(matches_filter("eq4_m3", "eq4"));
  CHECK_FALSE(matches_filter("eq4plus_m3", "eq4"));
  CHECK(matches_filter("eq4plus_m3", "eq4*"));
  CHECK(matches_filter("lemma_l_m1_rho1/2", "lemma_l"));
  CHECK(matches_filter("thm1_r2_m3_k1", "thm1_*_k1"));
  CHECK_FALSE(matches_filter("eq5", "nosuch"));
}

TEST_CASE("suite ordering and grids") {
  const auto cases = registered_cases();
  std::set<std::string> ids;
  for (const auto& c : cases) ids.insert(c.id);
  CHECK(ids.size() == cases.size());
  for (const char* id : {"i2", "i4", "eq1_m2", "eq3_m7", "eq4_m8", "eq5", "eq6", "eq8", "sigma3_m8", "thm1_r4_m5_k3",
                         "thm2_r1_m2", "eq2_r2_m3", "lemma_l_m5_rho5/2", "prop5_r4", "prop6beta_r0", "alt_first_n3",
                         "alt_second_n1"})
    CHECK(ids.count(id) == 1);
  CHECK(registered_cases(SuiteGrid::empty()).empty());
  CHECK(run_full_suite(PrecisionRequest(15), SuiteGrid::empty()).empty());
}

TEST_CASE("full suite passes at 15 digits in registered order") {
  const auto cases = registered_cases();
  const auto reports = run_full_suite(PrecisionRequest(15));
  REQUIRE(reports.size() == cases.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].identity_id);
    CAPTURE(reports[i].note);
    CHECK(reports[i].identity_id == cases[i].id);
    CHECK(reports[i].passed);
  }
}

TEST_CASE("suite at 25 digits") {
  SuiteGrid grid = SuiteGrid::defaults();
  grid.lemma_rho = {ExactRational(1, 2)};
  for (const auto& report : run_full_suite(PrecisionRequest(25), grid)) {
    CAPTURE(report.identity_id);
    CHECK(report.passed);
  }
}

TEST_CASE("failures become reports") {
  std::vector<IdentityCase> cases{
      {"boom", [](const PrecisionRequest&) -> IdentityReport { throw std::runtime_error("broken"); }}};
  const auto reports = run_cases(cases, PrecisionRequest(10));
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].passed);
  CHECK(reports[0].note == "error: broken");
}
