#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "overpart/report.hpp"
#include "overpart/series.hpp"

namespace overpart {

// Every checker derives its grid from these three numbers.
struct Budget {
  std::int64_t max_argument = 10000;  // largest index of pbar or r_k evaluated
  std::int64_t max_prime = 23;
  std::int64_t max_alpha = 3;

  void validate() const;
};

// Series shared by several checkers. Flags combine into a `needs` mask.
enum BaseSeries : unsigned {
  kGfMod5 = 1u << 0,
  kGfMod8 = 1u << 1,
  kGfMod9 = 1u << 2,
  kGfMod40 = 1u << 3,
  kGfExact = 1u << 4,
  kR3Mod5 = 1u << 5,   // r_3 through max_argument / 5
  kR5Mod9 = 1u << 6,   // r_5 through max_argument / 3
  kR3Exact = 1u << 7,  // r_3 through max_argument
  kR5Exact = 1u << 8,  // r_5 through max_argument
};

/// Precomputed base series for one budget. prepare() runs before checkers fan
/// out; afterwards the bank is only read, so checkers share it without locks.
class SeriesBank {
 public:
  explicit SeriesBank(Budget budget);

  void prepare(unsigned needs);
  const TruncatedSeries& get(BaseSeries which) const;
  const Budget& budget() const noexcept { return budget_; }

 private:
  Budget budget_;
  std::map<unsigned, TruncatedSeries> series_;
};

struct CheckContext {
  const Budget& budget;
  const SeriesBank& bank;
  bool stop_on_first = false;
};

struct CheckInfo {
  std::string_view id;
  // The congruence or identity the check exercises, as a statement.
  std::string_view anchor;
  unsigned needs;
  CheckReport (*run)(const CheckContext&);
};

std::span<const CheckInfo> check_registry();
const CheckInfo* find_check(std::string_view id);

// Runs a single registered check with a freshly prepared bank.
CheckReport run_check(std::string_view id, const Budget& budget, bool stop_on_first = false);

CheckReport check_thm_main(const Budget& budget);
CheckReport check_thm_mod9(const Budget& budget);
CheckReport check_conjecture_40(const Budget& budget);
CheckReport check_mod8_criterion(const Budget& budget);
CheckReport check_id_4n3(const Budget& budget);
// One report per infinite family, plus the r_3/r_5 divisibility reports that
// stand in for out-of-budget direct instances.
std::vector<CheckReport> check_families(const Budget& budget);
std::vector<CheckReport> replay_proof_steps(const Budget& budget);
CheckReport check_final_step_thm1(const Budget& budget);

struct RunOptions {
  unsigned jobs = 1;
  bool stop_on_first = false;
};

struct RunSummary {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skipped = 0;
};

/// Runs the named checks (all of them when `ids` is empty) and streams JSON
/// lines to `sink`: a manifest object, one report per check in request order,
/// and a terminating summary object. Unknown ids throw Error(UnknownCheck)
/// before any computation. With stop_on_first the stream ends after the first
/// failing report.
RunSummary run_checks(const Budget& budget, std::span<const std::string> ids, const RunOptions& options,
                      const std::function<void(std::string_view)>& sink);

}  // namespace overpart
