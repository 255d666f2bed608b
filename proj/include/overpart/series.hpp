#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace overpart {

// Coefficient domain: exact integers (modulus 0) or residues modulo m >= 2.
class RingSpec {
 public:
  static constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFull;

  static RingSpec exact() { return RingSpec(0); }
  static RingSpec modular(std::uint64_t modulus);

  bool is_exact() const noexcept { return modulus_ == 0; }
  // 0 for the exact ring.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string describe() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  explicit RingSpec(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// A power series in q known through q^order inclusive.
///
/// Exact series keep arbitrary-precision coefficients; modular series keep
/// canonical residues in [0, modulus). Values are immutable once built; every
/// operation below returns a fresh series.
class TruncatedSeries {
 public:
  static TruncatedSeries zero(RingSpec ring, std::int64_t order);
  static TruncatedSeries one(RingSpec ring, std::int64_t order);
  // coeffs[k] is the coefficient of q^k; order is coeffs.size() - 1. Reduced
  // into the ring when it is modular.
  static TruncatedSeries from_integers(RingSpec ring, std::span<const std::int64_t> coeffs);
  static TruncatedSeries from_exact(RingSpec ring, std::vector<mpz_class> coeffs);
  static TruncatedSeries from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues);

  const RingSpec& ring() const noexcept { return ring_; }
  std::int64_t order() const noexcept { return order_; }

  // Exact value, or the canonical residue for a modular series.
  mpz_class coeff(std::int64_t k) const;
  std::string coeff_string(std::int64_t k) const;
  bool coeff_is_zero(std::int64_t k) const;

  // Backing storage; only the one matching ring() is populated.
  const std::vector<mpz_class>& exact_coeffs() const noexcept { return exact_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

  TruncatedSeries truncated(std::int64_t order) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  TruncatedSeries(RingSpec ring, std::int64_t order) : ring_(ring), order_(order) {}

  RingSpec ring_;
  std::int64_t order_;
  std::vector<mpz_class> exact_;
  std::vector<std::uint64_t> residues_;
};

// Binary operations require identical rings and truncate to the shorter order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const mpz_class& factor);

// Cauchy product. The sparser operand drives the outer loop, so multiplying by
// theta series or Euler products costs O(order * nonzeros).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries pow(const TruncatedSeries& a, std::int64_t exponent);

// Requires a unit constant term: +-1 over the integers, coprime to the modulus
// otherwise. Throws Error(NotInvertible) when it is not.
TruncatedSeries inverse(const TruncatedSeries& a);
// a / b through the shorter order; same unit requirement on b's constant term.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

// q -> q^k.
TruncatedSeries substitute_power(const TruncatedSeries& a, std::int64_t k);
// q -> -q.
TruncatedSeries alternate_signs(const TruncatedSeries& a);
// b_j = a_{m j + r}.
TruncatedSeries extract_progression(const TruncatedSeries& a, std::int64_t m, std::int64_t r);

// Exact -> residues mod m. A modular series may also be reduced to a modulus
// dividing its own.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m);

// JSON object {ring, modulus?, order, coeffs:[decimal strings]}.
std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

}  // namespace overpart
