#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace overpart {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus status);

// Ordered name -> integer map; order is preserved in the JSON output.
using ParamList = std::vector<std::pair<std::string, std::int64_t>>;

struct Counterexample {
  ParamList args;
  std::string observed;
  std::string expected;
};

// A grid point of an infinite family whose smallest argument exceeds the budget.
struct SkippedPoint {
  ParamList params;
  std::string minimal_argument;  // decimal; may exceed 64 bits
};

struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Skipped;
  ParamList parameters;
  std::int64_t range_low = 0;
  std::int64_t range_high = 0;
  std::int64_t instances = 0;
  // At most kMaxRecordedCounterexamples are kept; counterexample_count is the
  // full tally.
  std::vector<Counterexample> counterexamples;
  std::int64_t counterexample_count = 0;
  std::vector<SkippedPoint> skipped_points;
  std::string reason;  // set iff status == Skipped
  std::int64_t elapsed_ms = 0;
};

inline constexpr std::size_t kMaxRecordedCounterexamples = 32;

// One JSON object, no trailing newline.
std::string report_to_json(const CheckReport& report);

// Accumulates one check's outcome and settles its status.
class ReportBuilder {
 public:
  ReportBuilder(std::string check_id, bool stop_on_first);

  void param(std::string name, std::int64_t value);
  void range(std::int64_t low, std::int64_t high);

  // Records one tested grid point. Returns `ok`.
  bool expect(bool ok, ParamList args, std::string observed, std::string expected);
  void skip_point(ParamList params, std::string minimal_argument);

  // True once a counterexample was seen under stop-on-first.
  bool halted() const noexcept { return halted_; }

  // Fail iff any counterexample, Skipped iff nothing was tested, else Pass.
  CheckReport finish(std::string skip_reason = "no grid point fits within the budget") &&;

 private:
  CheckReport report_;
  bool stop_on_first_;
  bool halted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace overpart
