#include "hypersum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <ostream>

#include "hypersum/euler_sums.hpp"
#include "hypersum/identities.hpp"

namespace hypersum {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kDivergentCell = "—";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

long long milliseconds(std::chrono::nanoseconds elapsed, bool timing) {
  return timing ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() : 0;
}

int parse_int(const std::string& text) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

Json report_json(const IdentityReport& report, int digits, bool timing) {
  Json out;
  out["identity_id"] = report.identity_id;
  out["lhs"] = report.lhs.to_fixed(digits);
  out["rhs"] = report.rhs.to_fixed(digits);
  out["tolerance"] = report.tolerance.to_scientific_up();
  out["passed"] = report.passed;
  out["terms_used"] = report.terms_used;
  out["elapsed_ms"] = milliseconds(report.elapsed, timing);
  out["residual"] = report.residual.to_scientific_up();
  out["note"] = report.note;
  return out;
}

void validate_digits(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw UsageError("--digits must be in 1.." + std::to_string(kMaxDigits));
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange range;
  if (dots == std::string::npos) {
    range.first = range.last = parse_int(text);
  } else {
    range.first = parse_int(text.substr(0, dots));
    range.last = parse_int(text.substr(dots + 2));
  }
  if (range.first > range.last) throw std::invalid_argument("empty range '" + text + "'");
  return range;
}

int cmd_compute(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.r || !config.m) throw UsageError("compute requires --r and --m");
    validate_digits(config.digits);
    SumQuery query;
    query.r = *config.r;
    query.m = *config.m;
    query.method = parse_method(config.method.value_or("closed"));
    query.digits = config.digits;
    if (config.k && query.method != SumMethod::hurwitz) throw UsageError("--k applies only to the hurwitz method");
    query.k = config.k.value_or(0);
    query.validate();

    const auto start = Clock::now();
    const EvalResult result = evaluate(query);
    const auto elapsed = Clock::now() - start;

    if (config.format == OutputFormat::json) {
      Json doc;
      doc["query"]["r"] = query.r;
      doc["query"]["m"] = query.m;
      doc["query"]["k"] = query.method == SumMethod::hurwitz ? Json(query.k) : Json(nullptr);
      doc["query"]["method"] = to_string(query.method);
      doc["query"]["digits"] = query.digits;
      doc["value"] = result.value.to_fixed(query.digits);
      doc["error_bound"] = result.error_bound.to_scientific_up();
      doc["terms_used"] = result.terms_used;
      doc["elapsed_ms"] = milliseconds(elapsed, config.timing);
      out << doc.dump(2) << '\n';
    } else {
      out << "sigma(" << query.r << "," << query.m << ") = " << result.value.to_fixed(query.digits) << '\n';
      out << "error_bound: " << result.error_bound.to_scientific_up() << '\n';
      out << "method: " << to_string(query.method);
      if (query.method == SumMethod::hurwitz) out << " (k=" << query.k << ")";
      out << '\n';
      out << "terms_used: " << result.terms_used << '\n';
      if (config.timing) out << "elapsed_ms: " << milliseconds(elapsed, true) << '\n';
    }
    return kExitOk;
  } catch (const std::invalid_argument& error) {
    err << error.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& error) {
    err << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << '\n';
    return kExitFailure;
  }
}

int emit_verification(const std::vector<IdentityCase>& cases, const CliConfig& config, std::ostream& out,
                      std::ostream& err) {
  const std::vector<IdentityReport> reports = run_cases(cases, PrecisionRequest(config.digits));
  const auto passed = std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
  const auto failed = static_cast<long>(reports.size()) - passed;

  if (config.format == OutputFormat::json) {
    Json doc = Json::array();
    for (const auto& report : reports) doc.push_back(report_json(report, config.digits, config.timing));
    out << doc.dump(2) << '\n';
    err << passed << " passed, " << failed << " failed\n";
  } else {
    std::size_t width = 0;
    for (const auto& report : reports) width = std::max(width, report.identity_id.size());
    for (const auto& report : reports) {
      out << (report.passed ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width))
          << report.identity_id << "  lhs=" << report.lhs.to_fixed(config.digits)
          << "  rhs=" << report.rhs.to_fixed(config.digits) << "  |diff|=" << report.residual.to_scientific_up()
          << "  tol=" << report.tolerance.to_scientific_up();
      if (config.timing) out << "  " << milliseconds(report.elapsed, true) << "ms";
      if (!report.note.empty()) out << "  [" << report.note << "]";
      out << '\n';
    }
    out << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_digits(config.digits);
    std::vector<IdentityCase> cases = registered_cases();
    if (config.filter) {
      std::erase_if(cases, [&](const IdentityCase& c) { return !matches_filter(c.id, *config.filter); });
      if (cases.empty()) throw UsageError("no registered identity matches '" + *config.filter + "'");
    }
    return emit_verification(cases, config, out, err);
  } catch (const std::invalid_argument& error) {
    err << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << '\n';
    return kExitFailure;
  }
}

int cmd_table(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.r_range || !config.m_range) throw UsageError("table requires --r and --m ranges");
    validate_digits(config.digits);
    const IntRange rs = *config.r_range;
    const IntRange ms = *config.m_range;
    if (rs.first < 1 || ms.first < 1) throw UsageError("table ranges must start at 1 or above");

    // rows[r][m] is empty for divergent cells
    std::vector<std::vector<std::optional<std::string>>> rows;
    for (int r = rs.first; r <= rs.last; ++r) {
      auto& row = rows.emplace_back();
      for (int m = ms.first; m <= ms.last; ++m) {
        if (m <= r) {
          row.emplace_back();
          continue;
        }
        const EvalResult result = sigma_closed(SumQuery{r, m, SumMethod::closed, 0, config.digits});
        row.emplace_back(result.value.to_fixed(config.digits));
      }
    }

    if (config.format == OutputFormat::json) {
      Json doc;
      doc["digits"] = config.digits;
      doc["method"] = "closed";
      doc["rows"] = Json::array();
      for (int r = rs.first; r <= rs.last; ++r) {
        Json row;
        row["r"] = r;
        row["cells"] = Json::array();
        for (int m = ms.first; m <= ms.last; ++m) {
          const auto& cell = rows[r - rs.first][m - ms.first];
          Json entry;
          entry["m"] = m;
          entry["value"] = cell ? Json(*cell) : Json(nullptr);
          row["cells"].push_back(entry);
        }
        doc["rows"].push_back(row);
      }
      out << doc.dump(2) << '\n';
      return kExitOk;
    }

    std::size_t width = 3;
    for (const auto& row : rows)
      for (const auto& cell : row)
        if (cell) width = std::max(width, cell->size());
    auto pad = [&](const std::string& text, std::size_t visible) {
      return std::string(width > visible ? width - visible : 0, ' ') + text;
    };
    const std::size_t label_width = std::max<std::size_t>(3, std::to_string(rs.last).size());
    out << std::setw(static_cast<int>(label_width)) << "r\\m";
    for (int m = ms.first; m <= ms.last; ++m) out << "  " << pad(std::to_string(m), std::to_string(m).size());
    out << '\n';
    for (int r = rs.first; r <= rs.last; ++r) {
      out << std::setw(static_cast<int>(label_width)) << r;
      for (const auto& cell : rows[r - rs.first]) out << "  " << (cell ? pad(*cell, cell->size()) : pad(kDivergentCell, 1));
      out << '\n';
    }
    return kExitOk;
  } catch (const std::invalid_argument& error) {
    err << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler sums of hyperharmonic numbers", "hypersum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hypersum 1.0.0");

  CliConfig config;
  std::string format = "text";
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text}, {"json", OutputFormat::json}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--digits", config.digits, "decimal digits (default 15)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", config.timing, "report wall-clock times");
  };

  CLI::App* compute = app.add_subcommand("compute", "evaluate sigma(r, m)");
  int r = 0;
  int m = 0;
  int k = 0;
  std::string method;
  CLI::Option* r_opt = compute->add_option("--r", r, "hyperharmonic order")->required();
  CLI::Option* m_opt = compute->add_option("--m", m, "power")->required();
  CLI::Option* k_opt = compute->add_option("--k", k, "nesting depth for the hurwitz method");
  CLI::Option* method_opt = compute->add_option("--method", method, "direct, closed (default) or hurwitz");
  common(compute);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  std::string filter;
  CLI::Option* filter_opt = verify->add_option("--filter", filter, "identity id glob or id prefix");
  common(verify);

  CLI::App* table = app.add_subcommand("table", "grid of sigma(r, m) values");
  std::string r_text;
  std::string m_text;
  table->add_option("--r", r_text, "range a..b")->required();
  table->add_option("--m", m_text, "range a..b")->required();
  common(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& success) {
    return app.exit(success, out, err);
  } catch (const CLI::ParseError& error) {
    err << error.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  config.format = formats.at(format);
  try {
    if (compute->parsed()) {
      config.command = "compute";
      if (*r_opt) config.r = r;
      if (*m_opt) config.m = m;
      if (*k_opt) config.k = k;
      if (*method_opt) config.method = method;
      return cmd_compute(config, out, err);
    }
    if (verify->parsed()) {
      config.command = "verify";
      if (*filter_opt) config.filter = filter;
      return cmd_verify(config, out, err);
    }
    config.command = "table";
    config.r_range = parse_range(r_text);
    config.m_range = parse_range(m_text);
    return cmd_table(config, out, err);
  } catch (const std::invalid_argument& error) {
    err << error.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace hypersum
