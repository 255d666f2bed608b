#include "overpart/report.hpp"

#include <json.hpp>

namespace overpart {

namespace {

nlohmann::ordered_json params_json(const ParamList& params) {
  auto j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : params) j[name] = value;
  return j;
}

}  // namespace

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "Pass";
    case CheckStatus::Fail:
      return "Fail";
    case CheckStatus::Skipped:
      return "Skipped";
  }
  return "?";
}

std::string report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["status"] = status_name(r.status);
  j["parameters"] = params_json(r.parameters);
  j["range_tested"] = {r.range_low, r.range_high};
  j["instances"] = r.instances;
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back({{"args", params_json(c.args)}, {"observed", c.observed}, {"expected", c.expected}});
  j["counterexamples"] = std::move(cex);
  j["counterexample_count"] = r.counterexample_count;
  auto skipped = nlohmann::ordered_json::array();
  for (const auto& s : r.skipped_points)
    skipped.push_back({{"params", params_json(s.params)}, {"minimal_argument", s.minimal_argument}});
  j["skipped_points"] = std::move(skipped);
  if (r.status == CheckStatus::Skipped) j["reason"] = r.reason;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

ReportBuilder::ReportBuilder(std::string check_id, bool stop_on_first)
    : stop_on_first_(stop_on_first), start_(std::chrono::steady_clock::now()) {
  report_.check_id = std::move(check_id);
}

void ReportBuilder::param(std::string name, std::int64_t value) {
  report_.parameters.emplace_back(std::move(name), value);
}

void ReportBuilder::range(std::int64_t low, std::int64_t high) {
  report_.range_low = low;
  report_.range_high = high;
}

bool ReportBuilder::expect(bool ok, ParamList args, std::string observed, std::string expected) {
  ++report_.instances;
  if (ok) return true;
  ++report_.counterexample_count;
  if (report_.counterexamples.size() < kMaxRecordedCounterexamples)
    report_.counterexamples.push_back({std::move(args), std::move(observed), std::move(expected)});
  if (stop_on_first_) halted_ = true;
  return false;
}

void ReportBuilder::skip_point(ParamList params, std::string minimal_argument) {
  report_.skipped_points.push_back({std::move(params), std::move(minimal_argument)});
}

CheckReport ReportBuilder::finish(std::string skip_reason) && {
  if (report_.counterexample_count > 0) {
    report_.status = CheckStatus::Fail;
  } else if (report_.instances == 0) {
    report_.status = CheckStatus::Skipped;
    report_.reason = std::move(skip_reason);
  } else {
    report_.status = CheckStatus::Pass;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start_;
  report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return std::move(report_);
}

}  // namespace overpart
