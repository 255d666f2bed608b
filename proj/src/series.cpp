#include "overpart/series.hpp"

#include <algorithm>
#include <utility>

#include "overpart/error.hpp"

namespace overpart {

namespace {

using u128 = unsigned __int128;

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.ring() != b.ring())
    fail(ErrorKind::InvalidArgument, std::string(op) + ": ring mismatch (" + a.ring().describe() + " vs " +
                                         b.ring().describe() + ")");
}

void require_order(std::int64_t order) {
  if (order < 0) fail(ErrorKind::InvalidArgument, "series order must be >= 0");
}

template <class Coeffs>
std::vector<std::size_t> nonzero_indices(const Coeffs& c, std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < limit; ++i)
    if (c[i] != 0) out.push_back(i);
  return out;
}

// Inverse of c modulo m, or 0 when gcd(c, m) != 1.
std::uint64_t inverse_mod(std::uint64_t c, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(c % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) return 0;
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

std::uint64_t neg_mod(std::uint64_t r, std::uint64_t m) { return r == 0 ? 0 : m - r; }

// Multiplicative inverse of a constant term, in the series' own ring.
mpz_class exact_unit_inverse(const mpz_class& c0, const char* op) {
  if (c0 == 1 || c0 == -1) return c0;
  fail(ErrorKind::NotInvertible, std::string(op) + ": constant term " + c0.get_str() + " is not a unit over the integers");
}

std::uint64_t modular_unit_inverse(std::uint64_t c0, std::uint64_t m, const char* op) {
  const std::uint64_t inv = inverse_mod(c0, m);
  if (inv == 0)
    fail(ErrorKind::NotInvertible, std::string(op) + ": constant term " + std::to_string(c0) +
                                       " is not invertible modulo " + std::to_string(m));
  return inv;
}

// out[k] = (numer[k] - sum_{j>=1} denom[j] out[k-j]) / denom[0]; numer == nullptr
// means the constant series 1.
TruncatedSeries sparse_quotient(const TruncatedSeries* numer, const TruncatedSeries& denom, std::int64_t order,
                                const char* op) {
  const auto n = static_cast<std::size_t>(order) + 1;
  const RingSpec ring = denom.ring();
  if (ring.is_exact()) {
    const auto& d = denom.exact_coeffs();
    const mpz_class inv = exact_unit_inverse(d[0], op);
    auto nz = nonzero_indices(d, n);
    std::vector<mpz_class> out(n);
    mpz_class acc;
    for (std::size_t k = 0; k < n; ++k) {
      if (numer) acc = numer->exact_coeffs()[k];
      else acc = (k == 0) ? 1 : 0;
      for (std::size_t j : nz) {
        if (j == 0) continue;
        if (j > k) break;
        mpz_submul(acc.get_mpz_t(), d[j].get_mpz_t(), out[k - j].get_mpz_t());
      }
      if (inv == 1) out[k] = std::move(acc);
      else out[k] = -acc;
    }
    return TruncatedSeries::from_exact(ring, std::move(out));
  }
  const std::uint64_t m = ring.modulus();
  const auto& d = denom.residues();
  const std::uint64_t inv = modular_unit_inverse(d[0], m, op);
  auto nz = nonzero_indices(d, n);
  std::vector<std::uint64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    u128 sub = 0;
    for (std::size_t j : nz) {
      if (j == 0) continue;
      if (j > k) break;
      sub += static_cast<u128>(d[j]) * out[k - j];
    }
    const std::uint64_t base = numer ? numer->residues()[k] : (k == 0 ? 1 % m : 0);
    const std::uint64_t diff = (base + m - static_cast<std::uint64_t>(sub % m)) % m;
    out[k] = static_cast<std::uint64_t>(static_cast<u128>(diff) * inv % m);
  }
  return TruncatedSeries::from_residues(m, std::move(out));
}

}  // namespace

RingSpec RingSpec::modular(std::uint64_t modulus) {
  if (modulus < 2 || modulus > kMaxModulus)
    fail(ErrorKind::InvalidArgument, "modulus must lie in [2, 2^32-1], got " + std::to_string(modulus));
  return RingSpec(modulus);
}

std::string RingSpec::describe() const {
  return is_exact() ? std::string("exact") : "mod " + std::to_string(modulus_);
}

TruncatedSeries TruncatedSeries::zero(RingSpec ring, std::int64_t order) {
  require_order(order);
  TruncatedSeries s(ring, order);
  if (ring.is_exact()) s.exact_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
  else s.residues_.assign(static_cast<std::size_t>(order) + 1, 0);
  return s;
}

TruncatedSeries TruncatedSeries::one(RingSpec ring, std::int64_t order) {
  TruncatedSeries s = zero(ring, order);
  if (ring.is_exact()) s.exact_[0] = 1;
  else s.residues_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(RingSpec ring, std::span<const std::int64_t> coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (std::int64_t c : coeffs) v.emplace_back(static_cast<long>(c));
  return from_exact(ring, std::move(v));
}

TruncatedSeries TruncatedSeries::from_exact(RingSpec ring, std::vector<mpz_class> coeffs) {
  if (coeffs.empty()) fail(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  TruncatedSeries s(ring, static_cast<std::int64_t>(coeffs.size()) - 1);
  if (ring.is_exact()) {
    s.exact_ = std::move(coeffs);
  } else {
    s.residues_.reserve(coeffs.size());
    for (const auto& c : coeffs) s.residues_.push_back(reduce_mpz(c, ring.modulus()));
  }
  return s;
}

TruncatedSeries TruncatedSeries::from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues) {
  const RingSpec ring = RingSpec::modular(modulus);
  if (residues.empty()) fail(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  for (auto& r : residues) r %= modulus;
  TruncatedSeries s(ring, static_cast<std::int64_t>(residues.size()) - 1);
  s.residues_ = std::move(residues);
  return s;
}

mpz_class TruncatedSeries::coeff(std::int64_t k) const {
  if (k < 0 || k > order_)
    fail(ErrorKind::InvalidArgument, "coefficient index " + std::to_string(k) + " outside [0, " + std::to_string(order_) + "]");
  const auto i = static_cast<std::size_t>(k);
  if (ring_.is_exact()) return exact_[i];
  return mpz_class(static_cast<unsigned long>(residues_[i]));
}

std::string TruncatedSeries::coeff_string(std::int64_t k) const { return coeff(k).get_str(); }

bool TruncatedSeries::coeff_is_zero(std::int64_t k) const {
  const auto i = static_cast<std::size_t>(k);
  return ring_.is_exact() ? exact_.at(i) == 0 : residues_.at(i) == 0;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t order) const {
  require_order(order);
  order = std::min(order, order_);
  const auto n = static_cast<std::size_t>(order) + 1;
  TruncatedSeries s(ring_, order);
  if (ring_.is_exact()) s.exact_.assign(exact_.begin(), exact_.begin() + n);
  else s.residues_.assign(residues_.begin(), residues_.begin() + n);
  return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.ring_ == b.ring_ && a.order_ == b.order_ && a.exact_ == b.exact_ && a.residues_ == b.residues_;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "add");
  const std::int64_t order = std::min(a.order(), b.order());
  const auto n = static_cast<std::size_t>(order) + 1;
  if (a.ring().is_exact()) {
    std::vector<mpz_class> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a.exact_coeffs()[k] + b.exact_coeffs()[k];
    return TruncatedSeries::from_exact(a.ring(), std::move(out));
  }
  const std::uint64_t m = a.ring().modulus();
  std::vector<std::uint64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = (a.residues()[k] + b.residues()[k]) % m;
  return TruncatedSeries::from_residues(m, std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "sub");
  return add(a, scale(b, -1));
}

TruncatedSeries scale(const TruncatedSeries& a, const mpz_class& factor) {
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  if (a.ring().is_exact()) {
    std::vector<mpz_class> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a.exact_coeffs()[k] * factor;
    return TruncatedSeries::from_exact(a.ring(), std::move(out));
  }
  const std::uint64_t m = a.ring().modulus();
  const std::uint64_t f = reduce_mpz(factor, m);
  std::vector<std::uint64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint64_t>(static_cast<u128>(a.residues()[k]) * f % m);
  return TruncatedSeries::from_residues(m, std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "mul");
  const std::int64_t order = std::min(a.order(), b.order());
  const auto n = static_cast<std::size_t>(order) + 1;

  if (a.ring().is_exact()) {
    auto nza = nonzero_indices(a.exact_coeffs(), n);
    auto nzb = nonzero_indices(b.exact_coeffs(), n);
    const bool a_outer = nza.size() <= nzb.size();
    const auto& outer = a_outer ? a.exact_coeffs() : b.exact_coeffs();
    const auto& inner = a_outer ? b.exact_coeffs() : a.exact_coeffs();
    const auto& outer_nz = a_outer ? nza : nzb;
    const auto& inner_nz = a_outer ? nzb : nza;
    std::vector<mpz_class> out(n);
    for (std::size_t i : outer_nz) {
      for (std::size_t j : inner_nz) {
        if (i + j >= n) break;
        mpz_addmul(out[i + j].get_mpz_t(), outer[i].get_mpz_t(), inner[j].get_mpz_t());
      }
    }
    return TruncatedSeries::from_exact(a.ring(), std::move(out));
  }

  const std::uint64_t m = a.ring().modulus();
  auto nza = nonzero_indices(a.residues(), n);
  auto nzb = nonzero_indices(b.residues(), n);
  const bool a_outer = nza.size() <= nzb.size();
  const auto& outer = a_outer ? a.residues() : b.residues();
  const auto& inner = a_outer ? b.residues() : a.residues();
  const auto& outer_nz = a_outer ? nza : nzb;
  // Residues are < 2^32, so each product is < 2^64 and the 128-bit
  // accumulators cannot overflow for any realistic order.
  std::vector<u128> acc(n, 0);
  for (std::size_t i : outer_nz) {
    const std::uint64_t c = outer[i];
    const std::size_t limit = n - i;
    u128* dst = acc.data() + i;
    const std::uint64_t* src = inner.data();
    for (std::size_t j = 0; j < limit; ++j) dst[j] += c * src[j];
  }
  std::vector<std::uint64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint64_t>(acc[k] % m);
  return TruncatedSeries::from_residues(m, std::move(out));
}

TruncatedSeries pow(const TruncatedSeries& a, std::int64_t exponent) {
  if (exponent < 0) fail(ErrorKind::InvalidArgument, "pow: negative exponent " + std::to_string(exponent));
  if (exponent == 0) return TruncatedSeries::one(a.ring(), a.order());
  // Left-to-right binary powering: squarings interleaved with products by
  // the (usually sparse) base.
  int top = 63;
  while (((exponent >> top) & 1) == 0) --top;
  TruncatedSeries result = a;
  for (int bit = top - 1; bit >= 0; --bit) {
    result = mul(result, result);
    if ((exponent >> bit) & 1) result = mul(result, a);
  }
  return result;
}

TruncatedSeries inverse(const TruncatedSeries& a) { return sparse_quotient(nullptr, a, a.order(), "inverse"); }

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "divide");
  return sparse_quotient(&a, b, std::min(a.order(), b.order()), "divide");
}

TruncatedSeries substitute_power(const TruncatedSeries& a, std::int64_t k) {
  if (k <= 0) fail(ErrorKind::InvalidArgument, "substitute_power: k must be >= 1, got " + std::to_string(k));
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  const auto step = static_cast<std::size_t>(k);
  if (a.ring().is_exact()) {
    std::vector<mpz_class> c(n);
    for (std::size_t j = 0; j * step < n; ++j) c[j * step] = a.exact_coeffs()[j];
    return TruncatedSeries::from_exact(a.ring(), std::move(c));
  }
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t j = 0; j * step < n; ++j) c[j * step] = a.residues()[j];
  return TruncatedSeries::from_residues(a.ring().modulus(), std::move(c));
}

TruncatedSeries alternate_signs(const TruncatedSeries& a) {
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  if (a.ring().is_exact()) {
    std::vector<mpz_class> c = a.exact_coeffs();
    for (std::size_t k = 1; k < n; k += 2) c[k] = -c[k];
    return TruncatedSeries::from_exact(a.ring(), std::move(c));
  }
  const std::uint64_t m = a.ring().modulus();
  std::vector<std::uint64_t> c = a.residues();
  for (std::size_t k = 1; k < n; k += 2) c[k] = neg_mod(c[k], m);
  return TruncatedSeries::from_residues(m, std::move(c));
}

TruncatedSeries extract_progression(const TruncatedSeries& a, std::int64_t m, std::int64_t r) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "extract_progression: modulus must be >= 1");
  if (r < 0 || r >= m) fail(ErrorKind::InvalidArgument, "extract_progression: residue outside [0, m)");
  if (r > a.order())
    fail(ErrorKind::InvalidArgument, "extract_progression: series of order " + std::to_string(a.order()) +
                                         " has no term q^" + std::to_string(r));
  const std::int64_t order = (a.order() - r) / m;
  if (a.ring().is_exact()) {
    std::vector<mpz_class> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (std::int64_t j = 0; j <= order; ++j) c.push_back(a.exact_coeffs()[static_cast<std::size_t>(m * j + r)]);
    return TruncatedSeries::from_exact(a.ring(), std::move(c));
  }
  std::vector<std::uint64_t> c;
  c.reserve(static_cast<std::size_t>(order) + 1);
  for (std::int64_t j = 0; j <= order; ++j) c.push_back(a.residues()[static_cast<std::size_t>(m * j + r)]);
  return TruncatedSeries::from_residues(a.ring().modulus(), std::move(c));
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
  const RingSpec target = RingSpec::modular(m);
  if (a.ring().is_exact()) {
    std::vector<std::uint64_t> c;
    c.reserve(a.exact_coeffs().size());
    for (const auto& v : a.exact_coeffs()) c.push_back(reduce_mpz(v, m));
    return TruncatedSeries::from_residues(target.modulus(), std::move(c));
  }
  if (a.ring().modulus() % m != 0)
    fail(ErrorKind::InvalidArgument, "reduce_mod: " + std::to_string(m) + " does not divide the modulus " +
                                         std::to_string(a.ring().modulus()));
  std::vector<std::uint64_t> c = a.residues();
  for (auto& v : c) v %= m;
  return TruncatedSeries::from_residues(m, std::move(c));
}

}  // namespace overpart
