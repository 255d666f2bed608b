#pragma once

#include <cstdint>
#include <vector>

namespace overpart {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization, primes strictly increasing. factor(1) is empty.
struct FactorMap {
  std::vector<PrimePower> entries;

  std::int64_t value() const;
  // Number of divisors, from the exponents.
  std::int64_t divisor_count() const;
  int exponent_of(std::int64_t p) const;

  friend bool operator==(const FactorMap&, const FactorMap&) = default;
};

bool is_prime(std::int64_t n);

FactorMap factor(std::int64_t n);

/// Ascending divisors of n. A nonzero `exclude_multiples_of` (must be >= 2)
/// drops every divisor it divides; 0 keeps all of them.
std::vector<std::int64_t> divisors_filtered(std::int64_t n,
                                            std::int64_t exclude_multiples_of = 0);

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Legendre symbol (a/p) by Euler's criterion; 0 when p divides a.
int legendre(std::int64_t a, std::int64_t p);

std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);
bool is_twice_square(std::int64_t n);

int valuation(std::int64_t n, std::int64_t p);

/// Odd primes in [3, limit], ascending.
std::vector<std::int64_t> odd_primes_up_to(std::int64_t limit);

}  // namespace overpart
