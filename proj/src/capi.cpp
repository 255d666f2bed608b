#include "overpart/overpart.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "overpart/error.hpp"
#include "overpart/lab.hpp"
#include "overpart/squares.hpp"
#include "overpart/theta.hpp"

struct overpart_series {
  overpart::TruncatedSeries value;
};

struct overpart_lab {
  overpart::Budget budget;
};

namespace {

thread_local std::string g_last_error;

overpart_status set_error(overpart_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

overpart_status status_of(overpart::ErrorKind kind) {
  switch (kind) {
    case overpart::ErrorKind::InvalidArgument:
      return OVERPART_E_INVALID_ARGUMENT;
    case overpart::ErrorKind::NotInvertible:
      return OVERPART_E_NOT_INVERTIBLE;
    case overpart::ErrorKind::BudgetExceeded:
      return OVERPART_E_BUDGET_EXCEEDED;
    case overpart::ErrorKind::RouteMismatch:
      return OVERPART_E_ROUTE_MISMATCH;
    case overpart::ErrorKind::UnknownCheck:
      return OVERPART_E_UNKNOWN_CHECK;
  }
  return OVERPART_E_INTERNAL;
}

// Runs fn, translating exceptions into status codes at the C boundary.
template <class Fn>
overpart_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const overpart::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OVERPART_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OVERPART_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(OVERPART_E_INTERNAL, "unknown exception");
  }
}

overpart_status copy_out(const std::string& text, char* buf, size_t capacity, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (!buf || capacity < text.size() + 1)
    return set_error(OVERPART_E_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return OVERPART_OK;
}

overpart::RingSpec ring_for(uint64_t modulus) {
  return modulus == 0 ? overpart::RingSpec::exact() : overpart::RingSpec::modular(modulus);
}

overpart::SeriesTag tag_for(const char* name) {
  if (!name) overpart::fail(overpart::ErrorKind::InvalidArgument, "series name is null");
  const auto tag = overpart::parse_series_name(name);
  if (!tag) overpart::fail(overpart::ErrorKind::InvalidArgument, std::string("unknown series '") + name + "'");
  return *tag;
}

}  // namespace

extern "C" {

const char* overpart_last_error(void) { return g_last_error.c_str(); }

const char* overpart_status_string(overpart_status status) {
  switch (status) {
    case OVERPART_OK:
      return "ok";
    case OVERPART_E_INVALID_ARGUMENT:
      return "invalid argument";
    case OVERPART_E_NOT_INVERTIBLE:
      return "not invertible";
    case OVERPART_E_BUDGET_EXCEEDED:
      return "budget exceeded";
    case OVERPART_E_ROUTE_MISMATCH:
      return "route mismatch";
    case OVERPART_E_UNKNOWN_CHECK:
      return "unknown check";
    case OVERPART_E_BUFFER_TOO_SMALL:
      return "buffer too small";
    case OVERPART_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

overpart_status overpart_series_named(const char* name, int64_t order, uint64_t modulus, overpart_series** out) {
  return guarded([&] {
    if (!out) return set_error(OVERPART_E_INVALID_ARGUMENT, "out is null");
    *out = new overpart_series{overpart::build({tag_for(name), order, ring_for(modulus)})};
    return OVERPART_OK;
  });
}

overpart_status overpart_series_expand(const char* name, int64_t order, uint64_t modulus, int exact,
                                       overpart_series** out) {
  return guarded([&] {
    if (!out) return set_error(OVERPART_E_INVALID_ARGUMENT, "out is null");
    *out = new overpart_series{overpart::expand_spot_checked({tag_for(name), order, ring_for(modulus)}, exact != 0)};
    return OVERPART_OK;
  });
}

overpart_status overpart_series_from_json(const char* json, overpart_series** out) {
  return guarded([&] {
    if (!json || !out) return set_error(OVERPART_E_INVALID_ARGUMENT, "null argument");
    *out = new overpart_series{overpart::series_from_json(json)};
    return OVERPART_OK;
  });
}

void overpart_series_free(overpart_series* series) { delete series; }

int64_t overpart_series_order(const overpart_series* series) { return series ? series->value.order() : -1; }

uint64_t overpart_series_modulus(const overpart_series* series) {
  return series ? series->value.ring().modulus() : 0;
}

overpart_status overpart_series_coeff(const overpart_series* series, int64_t index, char* buf, size_t capacity,
                                      size_t* needed) {
  return guarded([&] {
    if (!series) return set_error(OVERPART_E_INVALID_ARGUMENT, "series is null");
    return copy_out(series->value.coeff_string(index), buf, capacity, needed);
  });
}

overpart_status overpart_series_to_json(const overpart_series* series, char* buf, size_t capacity, size_t* needed) {
  return guarded([&] {
    if (!series) return set_error(OVERPART_E_INVALID_ARGUMENT, "series is null");
    return copy_out(overpart::to_json(series->value), buf, capacity, needed);
  });
}

overpart_status overpart_rk(int k, int64_t n, const char* method, int cross_check, char* buf, size_t capacity,
                            size_t* needed) {
  return guarded([&] {
    if (!method) return set_error(OVERPART_E_INVALID_ARGUMENT, "method is null");
    const auto m = overpart::parse_rk_method(method);
    if (!m) return set_error(OVERPART_E_INVALID_ARGUMENT, std::string("unknown method '") + method + "'");
    const overpart::RkRequest request{k, n, *m};
    const mpz_class v = cross_check ? overpart::rk_cross_checked(request) : overpart::rk_value(request);
    return copy_out(v.get_str(), buf, capacity, needed);
  });
}

size_t overpart_check_count(void) { return overpart::check_registry().size(); }

const char* overpart_check_id(size_t index) {
  const auto reg = overpart::check_registry();
  return index < reg.size() ? reg[index].id.data() : nullptr;
}

const char* overpart_check_anchor(size_t index) {
  const auto reg = overpart::check_registry();
  return index < reg.size() ? reg[index].anchor.data() : nullptr;
}

overpart_budget overpart_budget_default(void) {
  const overpart::Budget b;
  return {b.max_argument, b.max_prime, b.max_alpha};
}

overpart_status overpart_lab_new(const overpart_budget* budget, overpart_lab** out) {
  return guarded([&] {
    if (!budget || !out) return set_error(OVERPART_E_INVALID_ARGUMENT, "null argument");
    const overpart::Budget b{budget->max_argument, budget->max_prime, budget->max_alpha};
    b.validate();
    *out = new overpart_lab{b};
    return OVERPART_OK;
  });
}

void overpart_lab_free(overpart_lab* lab) { delete lab; }

overpart_status overpart_lab_run(overpart_lab* lab, const char* const* check_ids, size_t count, unsigned jobs,
                                 int stop_on_first, overpart_line_sink sink, void* user, overpart_summary* summary) {
  return guarded([&] {
    if (!lab || !sink || (count > 0 && !check_ids)) return set_error(OVERPART_E_INVALID_ARGUMENT, "null argument");
    std::vector<std::string> ids;
    for (size_t i = 0; i < count; ++i) {
      if (!check_ids[i]) return set_error(OVERPART_E_INVALID_ARGUMENT, "null check id");
      ids.emplace_back(check_ids[i]);
    }
    const overpart::RunOptions options{jobs, stop_on_first != 0};
    const overpart::RunSummary s = overpart::run_checks(lab->budget, ids, options, [&](std::string_view line) {
      const std::string copy(line);
      sink(copy.c_str(), user);
    });
    if (summary) *summary = {s.pass, s.fail, s.skipped};
    return OVERPART_OK;
  });
}

}  // extern "C"
