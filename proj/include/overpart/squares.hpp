#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "overpart/series.hpp"

namespace overpart {

// Routes for r_k(n), the number of ordered integer k-tuples whose squares sum
// to n.
enum class RkMethod { Series, Formula, Recursion, BruteForce };

std::optional<RkMethod> parse_rk_method(std::string_view name);
std::string_view rk_method_name(RkMethod method);

// Formula exists for k in {4, 8}, Recursion for k in {3, 5}; Series and
// BruteForce for every 1 <= k <= 8.
bool method_valid(int k, RkMethod method);
std::vector<RkMethod> valid_methods(int k);

struct RkRequest {
  int k;
  std::int64_t n;
  RkMethod method;
};

// phi(q)^k through q^order.
TruncatedSeries rk_series(int k, std::int64_t order, RingSpec ring = RingSpec::exact());

// 8 * sum of divisors of n not divisible by 4.
mpz_class r4_formula(std::int64_t n);
// 16 (-1)^n sum_{d | n} (-1)^d d^3.
mpz_class r8_formula(std::int64_t n);

// 1 + b + b^2 + ... + b^(terms-1), summed term by term.
mpz_class geometric_sum(const mpz_class& b, std::int64_t terms);

/// r_3(p^(2 alpha) n) from r_3(n) and r_3(n / p^2), which are read from
/// `r3_table` (index = argument). The n / p^2 term counts as zero unless p^2
/// divides n. Throws Error(BudgetExceeded) when a needed base value lies past
/// the end of the table.
mpz_class r3_recursion(std::int64_t p, int alpha, std::int64_t n, std::span<const mpz_class> r3_table);

/// r_5(p^(2 alpha) n) from r_5(n); requires p^2 not dividing n.
mpz_class r5_recursion(std::int64_t p, int alpha, std::int64_t n, std::span<const mpz_class> r5_table);

// Largest n the lattice enumerator accepts for a given k.
std::int64_t bruteforce_budget(int k);
mpz_class rk_bruteforce(int k, std::int64_t n);

/// Evaluate r_k(n) by the requested route. r_k(0) = 1 on every route.
/// The Recursion route peels 4-powers (k = 3) and odd prime squares off n with
/// the recursions above and evaluates the square-free-ish core by series.
mpz_class rk_value(const RkRequest& request);

// rk_value() plus every other valid route for k (the lattice route only when n
// is within its budget). Throws Error(RouteMismatch) on any disagreement.
mpz_class rk_cross_checked(const RkRequest& request);

}  // namespace overpart
