#include <algorithm>
#include <random>
#include <string>

#include "overpart/error.hpp"
#include "overpart/theta.hpp"

namespace overpart {

namespace {

constexpr int kSpotChecks = 16;
constexpr std::int64_t kModularFirstExactLimit = 1024;

}  // namespace

TruncatedSeries expand_spot_checked(const NamedSeries& spec, bool exact_route) {
  if (spec.ring.is_exact()) return build(spec);
  const std::uint64_t m = spec.ring.modulus();

  TruncatedSeries result = exact_route ? reduce_mod(build({spec.tag, spec.order, RingSpec::exact()}), m) : build(spec);
  const std::int64_t reach = exact_route ? spec.order : std::min(spec.order, kModularFirstExactLimit);
  const TruncatedSeries other = exact_route ? build(spec)
                                            : reduce_mod(build({spec.tag, reach, RingSpec::exact()}), m);

  std::mt19937_64 rng(0x6f7665727061ull);
  std::uniform_int_distribution<std::int64_t> pick(0, reach);
  for (int i = 0; i < kSpotChecks; ++i) {
    const std::int64_t k = pick(rng);
    if (result.residues()[static_cast<std::size_t>(k)] != other.residues()[static_cast<std::size_t>(k)])
      fail(ErrorKind::RouteMismatch, std::string(series_name(spec.tag)) + ": exact and modular constructions differ at q^" +
                                         std::to_string(k) + " (mod " + std::to_string(m) + ")");
  }
  return result;
}

}  // namespace overpart
