// Independent test oracles. Nothing here touches the library: every value is
// recomputed by enumeration from definitions.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// pbar(n) for 0 <= n <= limit by walking every partition of n and counting
/// 2^(distinct part sizes) overlinings of each.
inline std::vector<std::uint64_t> overpartitions(int limit) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(limit) + 1, 0);
  for (int n = 0; n <= limit; ++n) {
    std::uint64_t total = 0;
    // parts are generated nonincreasing; `distinct` counts part-size changes.
    std::function<void(int, int, int, int)> walk = [&](int remaining, int max_part, int last, int distinct) {
      if (remaining == 0) {
        total += std::uint64_t{1} << distinct;
        return;
      }
      for (int part = std::min(remaining, max_part); part >= 1; --part)
        walk(remaining - part, part, part, distinct + (part != last ? 1 : 0));
    };
    walk(n, n, 0, 0);
    out[static_cast<std::size_t>(n)] = total;
  }
  return out;
}

// Partitions of n into distinct parts.
inline std::uint64_t distinct_partitions(int n) {
  std::function<std::uint64_t(int, int)> count = [&](int remaining, int max_part) -> std::uint64_t {
    if (remaining == 0) return 1;
    std::uint64_t c = 0;
    for (int part = std::min(remaining, max_part); part >= 1; --part) c += count(remaining - part, part - 1);
    return c;
  };
  return count(n, n);
}

/// r_k(n) by visiting every point of the cube [-sqrt n, sqrt n]^k.
inline std::int64_t lattice_count(int k, std::int64_t n) {
  std::int64_t b = 0;
  while ((b + 1) * (b + 1) <= n) ++b;
  std::int64_t count = 0;
  std::function<void(int, std::int64_t)> walk = [&](int depth, std::int64_t remaining) {
    if (depth == k) {
      if (remaining == 0) ++count;
      return;
    }
    for (std::int64_t x = -b; x <= b; ++x)
      if (x * x <= remaining) walk(depth + 1, remaining - x * x);
  };
  walk(0, n);
  return count;
}

inline std::map<std::int64_t, int> trial_division(std::int64_t n) {
  std::map<std::int64_t, int> f;
  for (std::int64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

// Quadratic residue table by squaring every residue.
inline int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  std::set<std::int64_t> squares;
  for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
  return squares.contains(r) ? 1 : -1;
}

}  // namespace oracle
