#include "overpart/lab.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include <json.hpp>

#include "overpart/error.hpp"
#include "overpart/squares.hpp"
#include "overpart/theta.hpp"

namespace overpart {

void Budget::validate() const {
  if (max_argument < 1 || max_prime < 1 || max_alpha < 1)
    fail(ErrorKind::InvalidArgument, "budget values must all be positive");
  // Keeps exact tables and modular convolutions at desk scale.
  if (max_argument > 1'000'000) fail(ErrorKind::InvalidArgument, "max_argument above 10^6 is not supported");
  if (max_prime > 1'000'000) fail(ErrorKind::InvalidArgument, "max_prime above 10^6 is not supported");
  if (max_alpha > 64) fail(ErrorKind::InvalidArgument, "max_alpha above 64 is not supported");
}

SeriesBank::SeriesBank(Budget budget) : budget_(budget) { budget_.validate(); }

void SeriesBank::prepare(unsigned needs) {
  const std::int64_t M = budget_.max_argument;
  auto ensure = [&](BaseSeries which, auto&& make) {
    if ((needs & which) && !series_.contains(which)) series_.emplace(which, make());
  };
  ensure(kGfMod5, [&] { return overpartition_gf(M, RingSpec::modular(5)); });
  ensure(kGfMod8, [&] { return overpartition_gf(M, RingSpec::modular(8)); });
  ensure(kGfMod9, [&] { return overpartition_gf(M, RingSpec::modular(9)); });
  ensure(kGfMod40, [&] { return overpartition_gf(M, RingSpec::modular(40)); });
  ensure(kGfExact, [&] { return overpartition_gf(M, RingSpec::exact()); });
  ensure(kR3Mod5, [&] { return rk_series(3, M / 5, RingSpec::modular(5)); });
  ensure(kR5Mod9, [&] { return rk_series(5, M / 3, RingSpec::modular(9)); });
  ensure(kR3Exact, [&] { return rk_series(3, M); });
  ensure(kR5Exact, [&] { return rk_series(5, M); });
}

const TruncatedSeries& SeriesBank::get(BaseSeries which) const {
  const auto it = series_.find(which);
  if (it == series_.end()) fail(ErrorKind::InvalidArgument, "series bank: requested series was not prepared");
  return it->second;
}

CheckReport run_check(std::string_view id, const Budget& budget, bool stop_on_first) {
  const CheckInfo* info = find_check(id);
  if (!info) fail(ErrorKind::UnknownCheck, "unknown check '" + std::string(id) + "'");
  SeriesBank bank(budget);
  bank.prepare(info->needs);
  return info->run(CheckContext{budget, bank, stop_on_first});
}

CheckReport check_thm_main(const Budget& budget) { return run_check("thm-main", budget); }
CheckReport check_thm_mod9(const Budget& budget) { return run_check("thm-mod9", budget); }
CheckReport check_conjecture_40(const Budget& budget) { return run_check("conj-40", budget); }
CheckReport check_mod8_criterion(const Budget& budget) { return run_check("mod8-criterion", budget); }
CheckReport check_id_4n3(const Budget& budget) { return run_check("id-4n3", budget); }
CheckReport check_final_step_thm1(const Budget& budget) { return run_check("final-step", budget); }

namespace {

std::vector<CheckReport> run_group(std::initializer_list<std::string_view> ids, const Budget& budget) {
  unsigned needs = 0;
  for (auto id : ids) needs |= find_check(id)->needs;
  SeriesBank bank(budget);
  bank.prepare(needs);
  std::vector<CheckReport> out;
  for (auto id : ids) out.push_back(find_check(id)->run(CheckContext{budget, bank, false}));
  return out;
}

}  // namespace

std::vector<CheckReport> check_families(const Budget& budget) {
  return run_group({"family-5pow", "family-5pow-r3", "family-p-mod5", "family-p-mod5-r3", "family-p-mod3",
                    "family-p-mod3-r5", "family-p-cubed", "family-p-cubed-r3", "vanish-mod5", "shift-4-mod5"},
                   budget);
}

std::vector<CheckReport> replay_proof_steps(const Budget& budget) {
  return run_group({"proof-phi5", "proof-phi9", "euler-power"}, budget);
}

RunSummary run_checks(const Budget& budget, std::span<const std::string> ids, const RunOptions& options,
                      const std::function<void(std::string_view)>& sink) {
  budget.validate();
  std::vector<const CheckInfo*> selected;
  if (ids.empty()) {
    for (const auto& c : check_registry()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) {
      const CheckInfo* info = find_check(id);
      if (!info) fail(ErrorKind::UnknownCheck, "unknown check '" + id + "'");
      selected.push_back(info);
    }
  }

  {
    nlohmann::ordered_json manifest;
    manifest["budget"] = {{"max_argument", budget.max_argument},
                          {"max_prime", budget.max_prime},
                          {"max_alpha", budget.max_alpha}};
    auto coverage = nlohmann::ordered_json::array();
    for (const auto& c : check_registry()) coverage.push_back({{"check_id", c.id}, {"anchor", c.anchor}});
    manifest["manifest"] = std::move(coverage);
    sink(manifest.dump());
  }

  unsigned needs = 0;
  for (const auto* c : selected) needs |= c->needs;
  SeriesBank bank(budget);
  bank.prepare(needs);

  const std::size_t count = selected.size();
  std::vector<std::optional<CheckReport>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<bool> done(count, false);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      std::optional<CheckReport> r;
      std::exception_ptr err;
      try {
        r = selected[i]->run(CheckContext{budget, bank, options.stop_on_first});
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        errors[i] = err;
        done[i] = true;
      }
      ready.notify_all();
    }
  };

  // Under stop-on-first a single worker keeps the cut-off point deterministic.
  const unsigned jobs = options.stop_on_first ? 1u : std::max(1u, options.jobs);
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(worker);

  RunSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return done[i]; });
    if (errors[i]) {
      stop.store(true);
      lock.unlock();
      pool.clear();
      std::rethrow_exception(errors[i]);
    }
    const CheckReport report = std::move(*results[i]);
    lock.unlock();
    switch (report.status) {
      case CheckStatus::Pass:
        ++summary.pass;
        break;
      case CheckStatus::Fail:
        ++summary.fail;
        break;
      case CheckStatus::Skipped:
        ++summary.skipped;
        break;
    }
    sink(report_to_json(report));
    if (report.status == CheckStatus::Fail && options.stop_on_first) break;
  }
  stop.store(true);
  pool.clear();

  nlohmann::ordered_json tail;
  tail["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"skipped", summary.skipped}};
  sink(tail.dump());
  return summary;
}

}  // namespace overpart
