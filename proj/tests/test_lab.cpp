#include <doctest.h>

#include <json.hpp>

#include <regex>
#include <set>

#include "oracles.hpp"
#include "overpart/error.hpp"
#include "overpart/lab.hpp"

using namespace overpart;
using json = nlohmann::json;

namespace {

std::vector<std::string> collect(const Budget& budget, const std::vector<std::string>& ids, RunOptions options,
                                 RunSummary* summary = nullptr) {
  std::vector<std::string> lines;
  const RunSummary s = run_checks(budget, ids, options, [&](std::string_view line) { lines.emplace_back(line); });
  if (summary) *summary = s;
  return lines;
}

std::string without_timing(const std::string& line) {
  static const std::regex elapsed(R"("elapsed_ms":\d+)");
  return std::regex_replace(line, elapsed, "\"elapsed_ms\":0");
}

}  // namespace

TEST_CASE("ReportBuilder status rules") {
  SUBCASE("nothing tested is Skipped with a reason") {
    ReportBuilder b("x", false);
    const CheckReport r = std::move(b).finish("empty");
    CHECK(r.status == CheckStatus::Skipped);
    CHECK(r.reason == "empty");
    CHECK(json::parse(report_to_json(r))["reason"] == "empty");
  }
  SUBCASE("a counterexample fails the check") {
    ReportBuilder b("x", false);
    b.expect(true, {{"n", 1}}, "a", "a");
    b.expect(false, {{"n", 2}}, "b", "c");
    const CheckReport r = std::move(b).finish();
    CHECK(r.status == CheckStatus::Fail);
    CHECK(r.instances == 2);
    REQUIRE(r.counterexamples.size() == 1);
    const json j = json::parse(report_to_json(r));
    CHECK(j["status"] == "Fail");
    CHECK(j["counterexamples"][0]["args"]["n"] == 2);
    CHECK_FALSE(j.contains("reason"));
  }
  SUBCASE("recorded counterexamples are capped, the tally is not") {
    ReportBuilder b("x", false);
    for (int i = 0; i < 100; ++i) b.expect(false, {{"n", i}}, "", "");
    const CheckReport r = std::move(b).finish();
    CHECK(r.counterexamples.size() == kMaxRecordedCounterexamples);
    CHECK(r.counterexample_count == 100);
  }
  SUBCASE("stop on first halts") {
    ReportBuilder b("x", true);
    CHECK_FALSE(b.halted());
    b.expect(false, {}, "", "");
    CHECK(b.halted());
  }
  SUBCASE("skipped points alone keep the status Skipped") {
    ReportBuilder b("x", false);
    b.skip_point({{"p", 19}}, "34295");
    const CheckReport r = std::move(b).finish();
    CHECK(r.status == CheckStatus::Skipped);
    CHECK(json::parse(report_to_json(r))["skipped_points"][0]["minimal_argument"] == "34295");
  }
}

TEST_CASE("Budget validation") {
  CHECK_NOTHROW(Budget{}.validate());
  CHECK_THROWS_AS((Budget{0, 23, 3}.validate()), Error);
  CHECK_THROWS_AS((Budget{100, 0, 3}.validate()), Error);
  CHECK_THROWS_AS((Budget{100, 23, 0}.validate()), Error);
}

TEST_CASE("registry") {
  std::set<std::string_view> ids;
  for (const auto& c : check_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(find_check("thm-main") != nullptr);
  CHECK(find_check("no-such") == nullptr);
  try {
    (void)run_check("no-such", Budget{});
    FAIL("expected UnknownCheck");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownCheck);
  }
}

TEST_CASE("every check corroborates at a small budget") {
  const Budget budget{800, 23, 3};
  for (const auto& c : check_registry()) {
    CAPTURE(c.id);
    const CheckReport r = run_check(c.id, budget);
    CHECK(r.status != CheckStatus::Fail);
    CHECK(r.counterexample_count == 0);
    if (r.status == CheckStatus::Pass) CHECK(r.instances > 0);
  }
  CHECK(run_check("thm-main", budget).status == CheckStatus::Pass);
  CHECK(run_check("family-5pow", budget).status == CheckStatus::Pass);  // pbar(125), pbar(500)
  // Every direct instance is out of reach at this size.
  const CheckReport direct = run_check("family-p-mod5", budget);
  CHECK(direct.status == CheckStatus::Skipped);
  CHECK_FALSE(direct.skipped_points.empty());
  CHECK(run_check("family-p-mod5-r3", budget).status == CheckStatus::Pass);
}

TEST_CASE("tiny budgets skip rather than pass vacuously") {
  const Budget tiny{2, 3, 1};
  CHECK(run_check("thm-main", tiny).status == CheckStatus::Skipped);
  CHECK(run_check("conj-40", tiny).status == CheckStatus::Skipped);
  CHECK(run_check("family-5pow", tiny).status == CheckStatus::Skipped);
}

TEST_CASE("shift by 4 on a small example") {
  const auto pbar = oracle::overpartitions(25);
  // pbar(20) == -pbar(5) (mod 5).
  CHECK((pbar[20] + pbar[5]) % 5 == 0);
  CHECK(run_check("shift-4-mod5", Budget{100, 23, 3}).status == CheckStatus::Pass);
}

TEST_CASE("per-check entry points") {
  const Budget budget{600, 13, 2};
  CHECK(check_thm_main(budget).status == CheckStatus::Pass);
  CHECK(check_thm_mod9(budget).status == CheckStatus::Pass);
  CHECK(check_conjecture_40(budget).status == CheckStatus::Pass);
  CHECK(check_mod8_criterion(budget).status == CheckStatus::Pass);
  CHECK(check_id_4n3(budget).status == CheckStatus::Pass);
  CHECK(check_final_step_thm1(budget).status == CheckStatus::Pass);
  for (const auto& r : check_families(budget)) CHECK(r.status != CheckStatus::Fail);
  const auto replays = replay_proof_steps(budget);
  CHECK(replays.size() == 3);
  for (const auto& r : replays) CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("run_checks stream shape and determinism") {
  const Budget budget{600, 23, 3};
  RunSummary one{}, four{};
  const auto serial = collect(budget, {}, {1, false}, &one);
  const auto parallel = collect(budget, {}, {4, false}, &four);
  REQUIRE(serial.size() == check_registry().size() + 2);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(without_timing(serial[i]) == without_timing(parallel[i]));

  const json manifest = json::parse(serial.front());
  CHECK(manifest["manifest"].size() == check_registry().size());
  CHECK(manifest["budget"]["max_argument"] == 600);
  for (std::size_t i = 0; i < check_registry().size(); ++i)
    CHECK(json::parse(serial[i + 1])["check_id"] == std::string(check_registry()[i].id));
  const json summary = json::parse(serial.back());
  CHECK(summary["summary"]["fail"] == 0);
  CHECK(one.fail == 0);
  CHECK(one.pass + one.skipped == static_cast<std::int64_t>(check_registry().size()));
  CHECK(one.pass == four.pass);

  const auto subset = collect(budget, {"r3-4pow", "thm-main"}, {2, false});
  REQUIRE(subset.size() == 4);
  CHECK(json::parse(subset[1])["check_id"] == "r3-4pow");
  CHECK(json::parse(subset[2])["check_id"] == "thm-main");

  CHECK_THROWS_AS(collect(budget, {"thm-main", "bogus"}, {1, false}), Error);
}

TEST_CASE("failing report carries a reproducible counterexample") {
  ReportBuilder b("thm-main", false);
  b.expect(false, {{"n", 3}}, "pbar(15) = 1 mod 5", "(-1)^3 r3(3) = 2 mod 5");
  const std::string line = report_to_json(std::move(b).finish());
  const json j = json::parse(line);
  CHECK(j["counterexamples"][0]["args"]["n"] == 3);
  CHECK(j["counterexamples"][0]["observed"] == "pbar(15) = 1 mod 5");
  CHECK(j["counterexamples"][0]["expected"] == "(-1)^3 r3(3) = 2 mod 5");
}
