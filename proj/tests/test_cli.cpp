#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "hypersum/cli.hpp"

using namespace hypersum;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute text output") {
  const Outcome o = cli({"compute", "--r", "1", "--m", "2", "--method", "direct", "--digits", "10"});
  CHECK(o.code == 0);
  CHECK(o.out.find("sigma(1,2) = 2.4041138063") != std::string::npos);
  CHECK(o.out.find("method: direct") != std::string::npos);
}

TEST_CASE("compute json document") {
  const Outcome o = cli({"compute", "--r", "2", "--m", "3", "--method", "closed", "--digits", "20", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"query", "value", "error_bound", "terms_used", "elapsed_ms"});
  std::vector<std::string> query_keys;
  for (const auto& item : doc["query"].items()) query_keys.push_back(item.key());
  CHECK(query_keys == std::vector<std::string>{"r", "m", "k", "method", "digits"});
  CHECK(doc["query"]["k"].is_null());
  CHECK(doc["value"] == "2.11208378160988487372");
  CHECK(doc["value"].is_string());
  CHECK(doc["error_bound"].is_string());
  CHECK(doc["elapsed_ms"] == 0);
  // byte-identical on regeneration
  CHECK(cli({"compute", "--r", "2", "--m", "3", "--method", "closed", "--digits", "20", "--format", "json"}).out ==
        o.out);
}

TEST_CASE("compute hurwitz records k") {
  const Outcome o = cli({"compute", "--r", "3", "--m", "4", "--method", "hurwitz", "--k", "2", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["query"]["k"] == 2);
  CHECK(doc["query"]["method"] == "hurwitz");
  CHECK(doc["value"] == "1.628620202415129");
}

TEST_CASE("timing flag fills elapsed_ms") {
  const Outcome o = cli({"compute", "--r", "2", "--m", "3", "--format", "json", "--timing"});
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["elapsed_ms"].is_number_integer());
}

TEST_CASE("usage errors exit 2") {
  const Outcome divergent = cli({"compute", "--r", "3", "--m", "3"});
  CHECK(divergent.code == 2);
  CHECK(divergent.err.find("divergent: requires m > r") != std::string::npos);
  CHECK(divergent.out.empty());
  CHECK(cli({"compute", "--r", "2"}).code == 2);
  CHECK(cli({"compute", "--r", "2", "--m", "4", "--method", "fast"}).code == 2);
  CHECK(cli({"compute", "--r", "2", "--m", "4", "--digits", "0"}).code == 2);
  CHECK(cli({"compute", "--r", "2", "--m", "4", "--digits", "x"}).code == 2);
  CHECK(cli({"compute", "--r", "2", "--m", "4", "--method", "hurwitz", "--k", "2"}).code == 2);
  CHECK(cli({"compute", "--r", "2", "--m", "4", "--method", "closed", "--k", "1"}).code == 2);
  CHECK(cli({"compute", "--r", "0", "--m", "4"}).code == 2);
  CHECK(cli({"compute", "--r", "2", "--m", "4", "--format", "yaml"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"verify", "--filter", "nosuch"}).code == 2);
  CHECK(cli({"table", "--r", "3..1", "--m", "2..4"}).code == 2);
  CHECK(cli({"table", "--r", "0..2", "--m", "2..4"}).code == 2);
  CHECK(cli({"table", "--r", "a..b", "--m", "2..4"}).code == 2);
  CHECK(cli({"table", "--r", "1..2"}).code == 2);
}

TEST_CASE("help exits 0") {
  const Outcome o = cli({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("compute") != std::string::npos);
}

TEST_CASE("failing identities exit 1") {
  CliConfig config;
  config.command = "verify";
  config.digits = 10;
  auto report_with = [](bool pass) {
    return [pass](const PrecisionRequest&) {
      IdentityReport report;
      report.lhs = PrecReal(1, 64);
      report.rhs = PrecReal(pass ? 1 : 2, 64);
      report.tolerance = PrecReal(0, 64);
      finalize(report);
      return report;
    };
  };
  std::ostringstream out, err;
  CHECK(emit_verification({{"good", report_with(true)}}, config, out, err) == 0);
  CHECK(emit_verification({{"good", report_with(true)}, {"bad", report_with(false)}}, config, out, err) == 1);
  CHECK(out.str().find("FAIL bad") != std::string::npos);
  const std::vector<IdentityCase> throwing{
      {"boom", [](const PrecisionRequest&) -> IdentityReport { throw std::runtime_error("broken"); }}};
  CHECK(emit_verification(throwing, config, out, err) == 1);
}

TEST_CASE("verify filter and json") {
  const Outcome o = cli({"verify", "--filter", "eq5", "--digits", "25", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["identity_id"] == "eq5");
  CHECK(doc[0]["passed"] == true);
  std::vector<std::string> keys;
  for (const auto& item : doc[0].items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"identity_id", "lhs", "rhs", "tolerance", "passed", "terms_used",
                                         "elapsed_ms", "residual", "note"});
  CHECK(o.err.find("1 passed, 0 failed") != std::string::npos);
}

TEST_CASE("verify text summary") {
  const Outcome o = cli({"verify", "--filter", "prop*", "--digits", "12"});
  CHECK(o.code == 0);
  CHECK(o.out.find("20 passed, 0 failed") != std::string::npos);
}

TEST_CASE("table layout") {
  const Outcome single = cli({"table", "--r", "2..2", "--m", "2..2"});
  CHECK(single.code == 0);
  CHECK(single.out.find("—") != std::string::npos);

  const Outcome grid = cli({"table", "--r", "1..3", "--m", "2..5", "--digits", "10"});
  CHECK(grid.code == 0);
  CHECK(grid.out.find("2.1120837816") != std::string::npos);  // (2,3)

  const Outcome row = cli({"table", "--r", "1..1", "--m", "2..4", "--digits", "12", "--format", "json"});
  REQUIRE(row.code == 0);
  const auto doc = nlohmann::json::parse(row.out);
  const auto& cells = doc["rows"][0]["cells"];
  REQUIRE(cells.size() == 3);
  CHECK(cells[0]["value"] == "2.404113806319");
  CHECK(cells[1]["value"] == "1.352904042139");
  CHECK(cells[2]["value"] == "1.133478915133");

  const Outcome divergent = cli({"table", "--r", "2..3", "--m", "2..3", "--format", "json"});
  const auto d = nlohmann::json::parse(divergent.out);
  CHECK(d["rows"][0]["cells"][0]["value"].is_null());
  CHECK(d["rows"][0]["cells"][1]["value"].is_string());
  CHECK(d["rows"][1]["cells"][1]["value"].is_null());
}

TEST_CASE("range parsing") {
  CHECK(parse_range("1..3").first == 1);
  CHECK(parse_range("1..3").last == 3);
  CHECK(parse_range("4").last == 4);
  CHECK_THROWS(parse_range("3..1"));
  CHECK_THROWS(parse_range("1..x"));
  CHECK_THROWS(parse_range(""));
}
