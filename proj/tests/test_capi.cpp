// Exercises the shared library through its C header only.
#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "overpart/overpart.h"

namespace {

std::string coeff(const overpart_series* s, int64_t k) {
  size_t needed = 0;
  REQUIRE(overpart_series_coeff(s, k, nullptr, 0, &needed) == OVERPART_E_BUFFER_TOO_SMALL);
  std::vector<char> buf(needed);
  REQUIRE(overpart_series_coeff(s, k, buf.data(), buf.size(), &needed) == OVERPART_OK);
  return buf.data();
}

std::string rk(int k, int64_t n, const char* method, int cross, overpart_status* status = nullptr) {
  char buf[128];
  size_t needed = 0;
  const overpart_status st = overpart_rk(k, n, method, cross, buf, sizeof buf, &needed);
  if (status) *status = st;
  return st == OVERPART_OK ? std::string(buf) : std::string();
}

void collect_line(const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->emplace_back(line); }

}  // namespace

TEST_CASE("C API: series handles") {
  overpart_series* s = nullptr;
  REQUIRE(overpart_series_named("overpartition", 100, 0, &s) == OVERPART_OK);
  CHECK(overpart_series_order(s) == 100);
  CHECK(overpart_series_modulus(s) == 0);
  CHECK(coeff(s, 4) == "14");
  CHECK(coeff(s, 100) == "53287424374");
  CHECK(overpart_series_coeff(s, 101, nullptr, 0, nullptr) == OVERPART_E_INVALID_ARGUMENT);

  size_t needed = 0;
  CHECK(overpart_series_to_json(s, nullptr, 0, &needed) == OVERPART_E_BUFFER_TOO_SMALL);
  std::vector<char> text(needed);
  REQUIRE(overpart_series_to_json(s, text.data(), text.size(), &needed) == OVERPART_OK);
  overpart_series* back = nullptr;
  REQUIRE(overpart_series_from_json(text.data(), &back) == OVERPART_OK);
  CHECK(coeff(back, 100) == "53287424374");
  overpart_series_free(back);
  overpart_series_free(s);
  overpart_series_free(nullptr);

  REQUIRE(overpart_series_expand("overpartition", 35, 40, 0, &s) == OVERPART_OK);
  CHECK(overpart_series_modulus(s) == 40);
  CHECK(coeff(s, 35) == "0");
  overpart_series_free(s);
}

TEST_CASE("C API: error codes") {
  overpart_series* s = nullptr;
  CHECK(overpart_series_named("psi", 10, 0, &s) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(overpart_last_error()).find("psi") != std::string::npos);
  CHECK(overpart_series_named("phi", -1, 0, &s) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(overpart_series_named("phi", 10, 1, &s) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(overpart_series_named(nullptr, 10, 0, &s) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(overpart_series_named("phi", 10, 0, nullptr) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(overpart_series_from_json("{\"ring\":\"exact\"}", &s) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(overpart_series_from_json("not json", &s) == OVERPART_E_INVALID_ARGUMENT);
  CHECK(std::string(overpart_status_string(OVERPART_E_ROUTE_MISMATCH)).size() > 0);
}

TEST_CASE("C API: r_k") {
  CHECK(rk(4, 1, "formula", 0) == "8");
  CHECK(rk(3, 7, "series", 0) == "0");
  CHECK(rk(8, 2, "formula", 1) == "112");
  CHECK(rk(5, 18, "recursion", 1) == "1240");
  overpart_status st{};
  rk(3, 5, "formula", 0, &st);
  CHECK(st == OVERPART_E_INVALID_ARGUMENT);
  rk(4, 5, "guess", 0, &st);
  CHECK(st == OVERPART_E_INVALID_ARGUMENT);
  rk(5, 600, "brute-force", 0, &st);
  CHECK(st == OVERPART_E_BUDGET_EXCEEDED);
  char tiny[2];
  size_t needed = 0;
  CHECK(overpart_rk(4, 12, "formula", 0, tiny, sizeof tiny, &needed) == OVERPART_E_BUFFER_TOO_SMALL);
  CHECK(needed == 3);
}

TEST_CASE("C API: lab") {
  REQUIRE(overpart_check_count() > 0);
  CHECK(std::string(overpart_check_id(0)) == "thm-main");
  CHECK(overpart_check_id(overpart_check_count()) == nullptr);
  CHECK(overpart_check_anchor(0) != nullptr);

  overpart_budget budget = overpart_budget_default();
  CHECK(budget.max_argument == 10000);
  CHECK(budget.max_prime == 23);
  CHECK(budget.max_alpha == 3);

  budget.max_argument = 500;
  overpart_lab* lab = nullptr;
  REQUIRE(overpart_lab_new(&budget, &lab) == OVERPART_OK);
  const char* ids[] = {"thm-main", "conj-40"};
  std::vector<std::string> lines;
  overpart_summary summary{};
  REQUIRE(overpart_lab_run(lab, ids, 2, 2, 0, collect_line, &lines, &summary) == OVERPART_OK);
  REQUIRE(lines.size() == 4);
  CHECK(nlohmann::json::parse(lines[1])["status"] == "Pass");
  CHECK(summary.pass == 2);
  CHECK(summary.fail == 0);

  const char* bad[] = {"no-such"};
  lines.clear();
  CHECK(overpart_lab_run(lab, bad, 1, 1, 0, collect_line, &lines, &summary) == OVERPART_E_UNKNOWN_CHECK);
  CHECK(lines.empty());
  overpart_lab_free(lab);

  overpart_budget broken{0, 23, 3};
  CHECK(overpart_lab_new(&broken, &lab) == OVERPART_E_INVALID_ARGUMENT);
}
