#pragma once

#include <optional>
#include <string_view>

#include "overpart/series.hpp"

namespace overpart {

enum class SeriesTag { Phi, EulerProduct, NegEulerProduct, OverpartitionGF, HS43RightSide };

struct NamedSeries {
  SeriesTag tag;
  std::int64_t order;
  RingSpec ring;
};

// CLI names: phi, euler, neg-euler, overpartition, hs43-rhs.
std::optional<SeriesTag> parse_series_name(std::string_view name);
std::string_view series_name(SeriesTag tag);

enum class EulerSign {
  Standard,         // (q;q)_inf
  NegatedArgument,  // (-q;q)_inf
};

// Sum over all integers n of q^(n^2): 1 at q^0, 2 at every positive square.
TruncatedSeries phi(std::int64_t order, RingSpec ring);

TruncatedSeries euler_product(std::int64_t order, RingSpec ring, EulerSign sign);

/// Overpartition generating function, coefficient of q^n = pbar(n).
///
/// Built twice, once as (-q;q)/(q;q) and once as 1/phi(-q), and the two are
/// compared before returning. A disagreement throws Error(RouteMismatch).
TruncatedSeries overpartition_gf(std::int64_t order, RingSpec ring);

// 8 (q^2;q^2)(q^4;q^4)^6 / (q;q)^8 over the integers; its coefficients are
// pbar(4n+3).
TruncatedSeries hs_identity_rhs(std::int64_t order);

// Dispatches on the tag. HS43RightSide under a modulus is built exactly and
// then reduced.
TruncatedSeries build(const NamedSeries& spec);

/// Expansion used by the CLI. For a modular ring the series is built either
/// exactly then reduced (`exact_route`) or modularly from the start, and the
/// other construction is compared at 16 pseudo-random indices (fixed seed).
/// The modular-first path limits its exact comparison to q^1024. Throws
/// Error(RouteMismatch) on disagreement.
TruncatedSeries expand_spot_checked(const NamedSeries& spec, bool exact_route);

}  // namespace overpart
