#include "overpart/arith.hpp"

#include <algorithm>
#include <string>

#include "overpart/error.hpp"

namespace overpart {

namespace {

// Sieve limit for the trial-division table; covers complete factorization of
// every n <= 10^8 without falling back to odd trial divisors.
constexpr std::int64_t kSmallPrimeLimit = 10000;

const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> primes = [] {
    std::vector<bool> composite(kSmallPrimeLimit + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= kSmallPrimeLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::int64_t j = i * i; j <= kSmallPrimeLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) fail(ErrorKind::InvalidArgument, std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}

}  // namespace

std::int64_t FactorMap::value() const {
  std::int64_t v = 1;
  for (const auto& e : entries)
    for (int i = 0; i < e.exponent; ++i) v *= e.prime;
  return v;
}

std::int64_t FactorMap::divisor_count() const {
  std::int64_t tau = 1;
  for (const auto& e : entries) tau *= e.exponent + 1;
  return tau;
}

int FactorMap::exponent_of(std::int64_t p) const {
  for (const auto& e : entries)
    if (e.prime == p) return e.exponent;
  return 0;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : small_primes()) {
    if (p * p > n) return true;
    if (n % p == 0) return n == p;
  }
  for (std::int64_t d = kSmallPrimeLimit + 1; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FactorMap factor(std::int64_t n) {
  require_positive(n, "factor");
  FactorMap out;
  auto take = [&](std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.entries.push_back({p, e});
  };
  for (std::int64_t p : small_primes()) {
    if (p * p > n) break;
    take(p);
  }
  if (n > 1 && n > kSmallPrimeLimit * kSmallPrimeLimit) {
    for (std::int64_t d = kSmallPrimeLimit + 1; d * d <= n; d += 2) take(d);
  }
  if (n > 1) out.entries.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> divisors_filtered(std::int64_t n, std::int64_t exclude_multiples_of) {
  require_positive(n, "divisors_filtered");
  if (exclude_multiples_of < 0 || exclude_multiples_of == 1)
    fail(ErrorKind::InvalidArgument, "divisors_filtered: filter must be 0 or >= 2");

  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : factor(n).entries) {
    const std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  if (exclude_multiples_of != 0)
    std::erase_if(divs, [&](std::int64_t d) { return d % exclude_multiples_of == 0; });
  return divs;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod <= 0) fail(ErrorKind::InvalidArgument, "powmod: modulus must be positive");
  using u128 = unsigned __int128;
  std::int64_t b = base % mod;
  if (b < 0) b += mod;
  std::int64_t r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<std::int64_t>(static_cast<u128>(r) * b % mod);
    b = static_cast<std::int64_t>(static_cast<u128>(b) * b % mod);
    exp >>= 1;
  }
  return r;
}

int legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    fail(ErrorKind::InvalidArgument, "legendre: modulus must be an odd prime, got " + std::to_string(p));
  std::int64_t r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "isqrt: negative argument");
  // Newton iteration on integers, started above the root.
  if (n < 2) return n;
  std::uint64_t x = static_cast<std::uint64_t>(n);
  std::uint64_t y = (x + 1) >> 1;
  while (y < x) {
    x = y;
    y = (x + static_cast<std::uint64_t>(n) / x) >> 1;
  }
  return static_cast<std::int64_t>(x);
}

bool is_square(std::int64_t n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "is_square: negative argument");
  const std::int64_t r = isqrt(n);
  return r * r == n;
}

bool is_twice_square(std::int64_t n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "is_twice_square: negative argument");
  return n % 2 == 0 && is_square(n / 2);
}

int valuation(std::int64_t n, std::int64_t p) {
  require_positive(n, "valuation");
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "valuation: " + std::to_string(p) + " is not prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::vector<std::int64_t> odd_primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= limit; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace overpart
