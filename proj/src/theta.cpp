#include "overpart/theta.hpp"

#include <array>
#include <string>
#include <utility>

#include "overpart/error.hpp"

namespace overpart {

namespace {

constexpr std::array<std::pair<std::string_view, SeriesTag>, 5> kNames{{
    {"phi", SeriesTag::Phi},
    {"euler", SeriesTag::EulerProduct},
    {"neg-euler", SeriesTag::NegEulerProduct},
    {"overpartition", SeriesTag::OverpartitionGF},
    {"hs43-rhs", SeriesTag::HS43RightSide},
}};

void require_order(std::int64_t order) {
  if (order < 0) fail(ErrorKind::InvalidArgument, "series order must be >= 0, got " + std::to_string(order));
}

}  // namespace

std::optional<SeriesTag> parse_series_name(std::string_view name) {
  for (const auto& [n, tag] : kNames)
    if (n == name) return tag;
  return std::nullopt;
}

std::string_view series_name(SeriesTag tag) {
  for (const auto& [n, t] : kNames)
    if (t == tag) return n;
  return "?";
}

TruncatedSeries phi(std::int64_t order, RingSpec ring) {
  require_order(order);
  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (std::int64_t j = 1; j * j <= order; ++j) c[static_cast<std::size_t>(j * j)] = 2;
  return TruncatedSeries::from_integers(ring, c);
}

TruncatedSeries euler_product(std::int64_t order, RingSpec ring, EulerSign sign) {
  require_order(order);
  const auto n = static_cast<std::size_t>(order) + 1;
  const bool negate = sign == EulerSign::Standard;

  // Multiply in place by (1 -+ q^k) for k = 1..order, high indices first.
  if (ring.is_exact()) {
    std::vector<mpz_class> c(n, mpz_class(0));
    c[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = n - 1; i >= k; --i) {
        if (c[i - k] == 0) continue;
        if (negate) c[i] -= c[i - k];
        else c[i] += c[i - k];
      }
    }
    return TruncatedSeries::from_exact(ring, std::move(c));
  }
  const std::uint64_t m = ring.modulus();
  std::vector<std::uint64_t> c(n, 0);
  c[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      // Both operands are reduced, so one conditional correction suffices.
      const std::uint64_t v = c[i - k];
      if (v == 0) continue;
      if (negate) c[i] = c[i] >= v ? c[i] - v : c[i] + m - v;
      else c[i] = c[i] + v >= m ? c[i] + v - m : c[i] + v;
    }
  }
  return TruncatedSeries::from_residues(m, std::move(c));
}

TruncatedSeries overpartition_gf(std::int64_t order, RingSpec ring) {
  require_order(order);
  const TruncatedSeries product_form = divide(euler_product(order, ring, EulerSign::NegatedArgument),
                                              euler_product(order, ring, EulerSign::Standard));
  const TruncatedSeries theta_form = inverse(alternate_signs(phi(order, ring)));
  if (!(product_form == theta_form)) {
    for (std::int64_t k = 0; k <= order; ++k) {
      if (product_form.coeff(k) != theta_form.coeff(k))
        fail(ErrorKind::RouteMismatch, "overpartition_gf: product and theta routes disagree at q^" +
                                           std::to_string(k) + " (" + product_form.coeff_string(k) + " vs " +
                                           theta_form.coeff_string(k) + ", " + ring.describe() + ")");
    }
  }
  return theta_form;
}

TruncatedSeries hs_identity_rhs(std::int64_t order) {
  require_order(order);
  const RingSpec zz = RingSpec::exact();
  const TruncatedSeries euler = euler_product(order, zz, EulerSign::Standard);
  const TruncatedSeries euler4 = substitute_power(euler, 4);

  TruncatedSeries acc = scale(substitute_power(euler, 2), 8);
  for (int i = 0; i < 6; ++i) acc = mul(acc, euler4);
  for (int i = 0; i < 8; ++i) acc = divide(acc, euler);
  return acc;
}

TruncatedSeries build(const NamedSeries& spec) {
  switch (spec.tag) {
    case SeriesTag::Phi:
      return phi(spec.order, spec.ring);
    case SeriesTag::EulerProduct:
      return euler_product(spec.order, spec.ring, EulerSign::Standard);
    case SeriesTag::NegEulerProduct:
      return euler_product(spec.order, spec.ring, EulerSign::NegatedArgument);
    case SeriesTag::OverpartitionGF:
      return overpartition_gf(spec.order, spec.ring);
    case SeriesTag::HS43RightSide: {
      TruncatedSeries rhs = hs_identity_rhs(spec.order);
      return spec.ring.is_exact() ? rhs : reduce_mod(rhs, spec.ring.modulus());
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown series tag");
}

}  // namespace overpart
