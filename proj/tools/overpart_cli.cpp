// overpart: expand named series, evaluate r_k(n), and run congruence checks.
//
// Exit codes: 0 success, 1 counterexample or cross-check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "overpart/overpart.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

int report_failure(overpart_status status) {
  std::fprintf(stderr, "overpart: %s: %s\n", overpart_status_string(status), overpart_last_error());
  return status == OVERPART_E_ROUTE_MISMATCH ? kExitMath : kExitUsage;
}

// JSON string literal for the few strings written here by hand; coefficients
// and check ids never need escaping, but anchors might.
std::string quoted(const char* s) {
  std::string out = "\"";
  for (const char* p = s; *p; ++p) {
    if (*p == '"' || *p == '\\') out += '\\';
    out += *p;
  }
  return out + "\"";
}

void emit(const char* line) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

struct SeriesDeleter {
  void operator()(overpart_series* s) const { overpart_series_free(s); }
};

struct LabDeleter {
  void operator()(overpart_lab* l) const { overpart_lab_free(l); }
};

int run_expand(const std::string& name, std::int64_t terms, std::uint64_t modulus, bool exact) {
  overpart_series* raw = nullptr;
  const overpart_status st = overpart_series_expand(name.c_str(), terms - 1, modulus, exact ? 1 : 0, &raw);
  if (st != OVERPART_OK) return report_failure(st);
  std::unique_ptr<overpart_series, SeriesDeleter> series(raw);

  std::vector<char> buf(64);
  for (std::int64_t n = 0; n < terms; ++n) {
    std::size_t needed = 0;
    overpart_status cs = overpart_series_coeff(series.get(), n, buf.data(), buf.size(), &needed);
    if (cs == OVERPART_E_BUFFER_TOO_SMALL) {
      buf.resize(needed);
      cs = overpart_series_coeff(series.get(), n, buf.data(), buf.size(), &needed);
    }
    if (cs != OVERPART_OK) return report_failure(cs);
    const std::string line = "{\"n\":" + std::to_string(n) + ",\"coeff\":\"" + buf.data() + "\"}";
    emit(line.c_str());
  }
  return kExitOk;
}

int run_rk(int k, std::int64_t n, const std::string& method, bool cross_check) {
  std::vector<char> buf(64);
  std::size_t needed = 0;
  overpart_status st = overpart_rk(k, n, method.c_str(), cross_check ? 1 : 0, buf.data(), buf.size(), &needed);
  if (st == OVERPART_E_BUFFER_TOO_SMALL) {
    buf.resize(needed);
    st = overpart_rk(k, n, method.c_str(), cross_check ? 1 : 0, buf.data(), buf.size(), &needed);
  }
  if (st != OVERPART_OK) return report_failure(st);
  emit(buf.data());
  return kExitOk;
}

int run_verify(const std::vector<std::string>& checks, const overpart_budget& budget, unsigned jobs,
               bool stop_on_first) {
  overpart_lab* raw = nullptr;
  overpart_status st = overpart_lab_new(&budget, &raw);
  if (st != OVERPART_OK) return report_failure(st);
  std::unique_ptr<overpart_lab, LabDeleter> lab(raw);

  std::vector<const char*> ids;
  for (const auto& c : checks) ids.push_back(c.c_str());
  overpart_summary summary{};
  st = overpart_lab_run(
      lab.get(), ids.data(), ids.size(), jobs, stop_on_first ? 1 : 0,
      [](const char* line, void*) { emit(line); }, nullptr, &summary);
  if (st != OVERPART_OK) return report_failure(st);
  return summary.fail == 0 ? kExitOk : kExitMath;
}

int run_list_checks() {
  for (std::size_t i = 0; i < overpart_check_count(); ++i) {
    const std::string line = "{\"check_id\":" + quoted(overpart_check_id(i)) +
                             ",\"anchor\":" + quoted(overpart_check_anchor(i)) + "}";
    emit(line.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overpartition congruences and sums of squares"};
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "Print the coefficients of a named series as JSON lines");
  std::string series_name;
  std::int64_t terms = 0;
  std::uint64_t modulus = 0;
  bool exact = false;
  expand->add_option("series", series_name, "phi | euler | neg-euler | overpartition | hs43-rhs")
      ->required()
      ->check(CLI::IsMember({"phi", "euler", "neg-euler", "overpartition", "hs43-rhs"}));
  expand->add_option("--terms", terms, "Number of coefficients, q^0 .. q^(terms-1)")->required()->check(CLI::PositiveNumber);
  expand->add_option("--mod", modulus, "Reduce coefficients modulo m (built modularly unless --exact)")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{0xFFFFFFFFull}));
  expand->add_flag("--exact", exact, "Build with exact integers (then reduce if --mod is given)");

  auto* rk = app.add_subcommand("rk", "Number of representations of n as a sum of k squares");
  int k = 0;
  std::int64_t n = 0;
  std::string method = "series";
  bool cross_check = false;
  rk->add_option("--k", k, "Number of squares, 1..8")->required()->check(CLI::Range(1, 8));
  rk->add_option("--n", n, "Argument n >= 0")->required()->check(CLI::NonNegativeNumber);
  rk->add_option("--method", method, "series | formula | recursion | brute-force")->capture_default_str()
      ->check(CLI::IsMember({"series", "formula", "recursion", "brute-force"}));
  rk->add_flag("--cross-check", cross_check, "Also evaluate every other valid route; exit 1 on disagreement");

  auto* verify = app.add_subcommand("verify", "Run congruence checks and stream JSON-lines reports");
  std::vector<std::string> checks;
  bool all = false;
  overpart_budget budget = overpart_budget_default();
  unsigned jobs = 1;
  bool stop_on_first = false;
  auto* checks_opt = verify->add_option("--checks", checks, "Comma-separated check ids (see list-checks)")->delimiter(',');
  verify->add_flag("--all", all, "Run every check (the default)")->excludes(checks_opt);
  verify->add_option("--max-arg", budget.max_argument, "Largest pbar / r_k index evaluated")->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-prime", budget.max_prime, "Largest prime in family grids")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--max-alpha", budget.max_alpha, "Largest exponent parameter in family grids")->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  verify->add_flag("--stop-on-first", stop_on_first, "Stop at the first counterexample");

  app.add_subcommand("list-checks", "List check ids with the statement each one exercises");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*expand) return run_expand(series_name, terms, modulus, exact);
  if (*rk) return run_rk(k, n, method, cross_check);
  if (*verify) return run_verify(all ? std::vector<std::string>{} : checks, budget, jobs, stop_on_first);
  return run_list_checks();
}
