#include "overpart/squares.hpp"

#include <array>
#include <string>
#include <utility>

#include "overpart/arith.hpp"
#include "overpart/error.hpp"
#include "overpart/theta.hpp"

namespace overpart {

namespace {

constexpr std::array<std::pair<std::string_view, RkMethod>, 4> kMethods{{
    {"series", RkMethod::Series},
    {"formula", RkMethod::Formula},
    {"recursion", RkMethod::Recursion},
    {"brute-force", RkMethod::BruteForce},
}};

void require_k(int k) {
  if (k < 1 || k > 8) fail(ErrorKind::InvalidArgument, "k must lie in [1, 8], got " + std::to_string(k));
}

void require_odd_prime(std::int64_t p, const char* op) {
  if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, std::string(op) + ": " + std::to_string(p) + " is not an odd prime");
}

const mpz_class& lookup(std::span<const mpz_class> table, std::int64_t index, const char* op) {
  if (index < 0 || static_cast<std::size_t>(index) >= table.size())
    fail(ErrorKind::BudgetExceeded, std::string(op) + ": base value at " + std::to_string(index) +
                                        " missing from table of size " + std::to_string(table.size()));
  return table[static_cast<std::size_t>(index)];
}

mpz_class ipow(std::int64_t base, std::int64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// Count of nonincreasing tuples x_1 >= ... >= x_k >= 0 with the given sum of
// squares, each weighted by its number of signed orderings.
class LatticeCounter {
 public:
  explicit LatticeCounter(int k) : k_(k), parts_(static_cast<std::size_t>(k)) {
    factorial_[0] = 1;
    for (int i = 1; i <= 8; ++i) factorial_[i] = factorial_[i - 1] * i;
  }

  std::int64_t count(std::int64_t n) {
    total_ = 0;
    descend(0, n, isqrt(n));
    return total_;
  }

 private:
  void descend(int depth, std::int64_t remaining, std::int64_t cap) {
    const int left = k_ - depth;
    if (left == 1) {
      const std::int64_t x = isqrt(remaining);
      if (x * x == remaining && x <= cap) {
        parts_[static_cast<std::size_t>(depth)] = x;
        total_ += weight();
      }
      return;
    }
    for (std::int64_t x = std::min(cap, isqrt(remaining)); x >= 0; --x) {
      // The remaining left-1 slots hold at most x^2 each.
      if (remaining - x * x > (left - 1) * x * x) break;
      parts_[static_cast<std::size_t>(depth)] = x;
      descend(depth + 1, remaining - x * x, x);
    }
  }

  std::int64_t weight() const {
    std::int64_t w = factorial_[k_];
    int run = 1;
    for (int i = 1; i <= k_; ++i) {
      if (i < k_ && parts_[static_cast<std::size_t>(i)] == parts_[static_cast<std::size_t>(i - 1)]) {
        ++run;
        continue;
      }
      w /= factorial_[run];
      run = 1;
    }
    for (std::int64_t x : parts_)
      if (x != 0) w *= 2;
    return w;
  }

  int k_;
  std::vector<std::int64_t> parts_;
  std::array<std::int64_t, 9> factorial_{};
  std::int64_t total_ = 0;
};

mpz_class series_value(int k, std::int64_t n) { return rk_series(k, n).coeff(n); }

mpz_class recursion_value(int k, std::int64_t n) {
  if (n == 0) return 1;
  std::int64_t core = n;
  if (k == 3)
    while (core % 4 == 0) core /= 4;

  // r(p^(2a) m) = c_p(m) r(m) for each odd prime p, with p^2 not dividing m.
  struct Step {
    std::int64_t p;
    int alpha;
    std::int64_t base;
  };
  std::vector<Step> steps;
  for (const auto& [p, e] : factor(core).entries) {
    if (p == 2 || e < 2) continue;
    const int alpha = e / 2;
    std::int64_t reduced = core;
    for (int i = 0; i < 2 * alpha; ++i) reduced /= p;
    steps.push_back({p, alpha, reduced});
    core = reduced;
  }

  const TruncatedSeries base = rk_series(k, core);
  mpz_class value = base.coeff(core);
  // Unwind from the innermost argument outward.
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::vector<mpz_class> local(static_cast<std::size_t>(it->base) + 1, mpz_class(0));
    local[static_cast<std::size_t>(it->base)] = value;
    value = (k == 3) ? r3_recursion(it->p, it->alpha, it->base, local) : r5_recursion(it->p, it->alpha, it->base, local);
  }
  return value;
}

}  // namespace

std::optional<RkMethod> parse_rk_method(std::string_view name) {
  for (const auto& [n, m] : kMethods)
    if (n == name) return m;
  return std::nullopt;
}

std::string_view rk_method_name(RkMethod method) {
  for (const auto& [n, m] : kMethods)
    if (m == method) return n;
  return "?";
}

bool method_valid(int k, RkMethod method) {
  if (k < 1 || k > 8) return false;
  switch (method) {
    case RkMethod::Series:
    case RkMethod::BruteForce:
      return true;
    case RkMethod::Formula:
      return k == 4 || k == 8;
    case RkMethod::Recursion:
      return k == 3 || k == 5;
  }
  return false;
}

std::vector<RkMethod> valid_methods(int k) {
  std::vector<RkMethod> out;
  for (const auto& [name, m] : kMethods)
    if (method_valid(k, m)) out.push_back(m);
  return out;
}

TruncatedSeries rk_series(int k, std::int64_t order, RingSpec ring) {
  require_k(k);
  return pow(phi(order, ring), k);
}

mpz_class r4_formula(std::int64_t n) {
  if (n <= 0) fail(ErrorKind::InvalidArgument, "r4_formula: n must be >= 1");
  mpz_class sum = 0;
  for (std::int64_t d : divisors_filtered(n, 4)) sum += static_cast<long>(d);
  return 8 * sum;
}

mpz_class r8_formula(std::int64_t n) {
  if (n <= 0) fail(ErrorKind::InvalidArgument, "r8_formula: n must be >= 1");
  mpz_class sum = 0;
  for (std::int64_t d : divisors_filtered(n, 0)) {
    const mpz_class cube = ipow(d, 3);
    if (d % 2 == 0) sum += cube;
    else sum -= cube;
  }
  return (n % 2 == 0) ? 16 * sum : -16 * sum;
}

mpz_class geometric_sum(const mpz_class& b, std::int64_t terms) {
  if (terms < 0) fail(ErrorKind::InvalidArgument, "geometric_sum: negative term count");
  mpz_class sum = 0, term = 1;
  for (std::int64_t i = 0; i < terms; ++i) {
    sum += term;
    term *= b;
  }
  return sum;
}

mpz_class r3_recursion(std::int64_t p, int alpha, std::int64_t n, std::span<const mpz_class> r3_table) {
  require_odd_prime(p, "r3_recursion");
  if (alpha < 0) fail(ErrorKind::InvalidArgument, "r3_recursion: alpha must be >= 0");
  if (n < 1) fail(ErrorKind::InvalidArgument, "r3_recursion: n must be >= 1");

  const mpz_class base = lookup(r3_table, n, "r3_recursion");
  const mpz_class pp(static_cast<long>(p));
  const mpz_class g_alpha = geometric_sum(pp, alpha);
  const mpz_class g_next = geometric_sum(pp, alpha + 1);
  mpz_class value = (g_next - legendre(-n, p) * g_alpha) * base;
  if (n % (p * p) == 0) value -= pp * g_alpha * lookup(r3_table, n / (p * p), "r3_recursion");
  return value;
}

mpz_class r5_recursion(std::int64_t p, int alpha, std::int64_t n, std::span<const mpz_class> r5_table) {
  require_odd_prime(p, "r5_recursion");
  if (alpha < 0) fail(ErrorKind::InvalidArgument, "r5_recursion: alpha must be >= 0");
  if (n < 1) fail(ErrorKind::InvalidArgument, "r5_recursion: n must be >= 1");
  if (n % (p * p) == 0)
    fail(ErrorKind::InvalidArgument, "r5_recursion: p^2 divides n (" + std::to_string(p) + "^2 | " + std::to_string(n) + ")");

  const mpz_class base = lookup(r5_table, n, "r5_recursion");
  const mpz_class pp(static_cast<long>(p));
  const mpz_class p3 = pp * pp * pp;
  return (geometric_sum(p3, alpha + 1) - pp * legendre(n, p) * geometric_sum(p3, alpha)) * base;
}

std::int64_t bruteforce_budget(int k) {
  require_k(k);
  return k <= 4 ? 10000 : 500;
}

mpz_class rk_bruteforce(int k, std::int64_t n) {
  require_k(k);
  if (n < 0) fail(ErrorKind::InvalidArgument, "rk_bruteforce: n must be >= 0");
  if (n > bruteforce_budget(k))
    fail(ErrorKind::BudgetExceeded, "rk_bruteforce: n = " + std::to_string(n) + " exceeds the enumeration budget " +
                                        std::to_string(bruteforce_budget(k)) + " for k = " + std::to_string(k));
  LatticeCounter counter(k);
  return mpz_class(static_cast<long>(counter.count(n)));
}

mpz_class rk_value(const RkRequest& request) {
  require_k(request.k);
  if (request.n < 0) fail(ErrorKind::InvalidArgument, "n must be >= 0");
  if (!method_valid(request.k, request.method))
    fail(ErrorKind::InvalidArgument, "method '" + std::string(rk_method_name(request.method)) +
                                         "' is not available for k = " + std::to_string(request.k));
  if (request.n == 0) return 1;
  switch (request.method) {
    case RkMethod::Series:
      return series_value(request.k, request.n);
    case RkMethod::Formula:
      return request.k == 4 ? r4_formula(request.n) : r8_formula(request.n);
    case RkMethod::Recursion:
      return recursion_value(request.k, request.n);
    case RkMethod::BruteForce:
      return rk_bruteforce(request.k, request.n);
  }
  fail(ErrorKind::InvalidArgument, "unknown method");
}

mpz_class rk_cross_checked(const RkRequest& request) {
  const mpz_class primary = rk_value(request);
  for (RkMethod other : valid_methods(request.k)) {
    if (other == request.method) continue;
    if (other == RkMethod::BruteForce && request.n > bruteforce_budget(request.k)) continue;
    const mpz_class v = rk_value({request.k, request.n, other});
    if (v != primary)
      fail(ErrorKind::RouteMismatch, "r" + std::to_string(request.k) + "(" + std::to_string(request.n) + "): " +
                                         std::string(rk_method_name(request.method)) + " = " + primary.get_str() +
                                         " but " + std::string(rk_method_name(other)) + " = " + v.get_str());
  }
  return primary;
}

}  // namespace overpart
