#include <doctest.h>

#include <random>

#include "overpart/error.hpp"
#include "overpart/series.hpp"
#include "overpart/theta.hpp"

using namespace overpart;

namespace {

const RingSpec ZZ = RingSpec::exact();

TruncatedSeries ints(std::initializer_list<std::int64_t> c, RingSpec ring = ZZ) {
  return TruncatedSeries::from_integers(ring, std::vector<std::int64_t>(c));
}

TruncatedSeries random_series(std::mt19937_64& rng, std::int64_t order, bool unit_constant = false) {
  std::uniform_int_distribution<std::int64_t> coeff(-1000000, 1000000);
  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = coeff(rng);
  if (unit_constant) c[0] = (rng() & 1) ? 1 : -1;
  return TruncatedSeries::from_integers(ZZ, c);
}

}  // namespace

TEST_CASE("add") {
  CHECK(add(ints({1, 1}), ints({1, -1})) == ints({2, 0}));
  const auto S = ints({3, 1, 4, 1, 5});
  CHECK(add(TruncatedSeries::zero(ZZ, 2), S) == S.truncated(2));
  const RingSpec m5 = RingSpec::modular(5);
  CHECK(add(ints({3, 4}, m5), ints({4, 4}, m5)) == ints({2, 3}, m5));
  CHECK_THROWS_AS(add(ints({1}), ints({1}, m5)), Error);
}

TEST_CASE("mul") {
  CHECK(mul(ints({1, 1, 0}), ints({1, -1, 0})) == ints({1, 0, -1}));
  const auto S = ints({3, 1, 4, 1, 5});
  CHECK(mul(S, TruncatedSeries::one(ZZ, 4)) == S);
  CHECK(mul(ints({1, 1, 1}), ints({1, 1, 1})) == ints({1, 2, 3}));
  CHECK_THROWS_AS(mul(ints({1}, RingSpec::modular(8)), ints({1}, RingSpec::modular(5))), Error);
}

TEST_CASE("pow") {
  CHECK(pow(ints({1, 1, 0}), 2) == ints({1, 2, 1}));
  CHECK(pow(ints({7, 1, 2}), 0) == TruncatedSeries::one(ZZ, 2));
  // r4(4) = 24
  CHECK(pow(phi(8, ZZ), 4).coeff(4) == 24);
  CHECK_THROWS_AS(pow(ints({1}), -1), Error);
  const auto a = ints({2, -1, 3, 0, 5});
  TruncatedSeries repeated = TruncatedSeries::one(ZZ, 4);
  for (int e = 1; e <= 13; ++e) {
    repeated = mul(repeated, a);
    REQUIRE(pow(a, e) == repeated);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(ints({1, -1, 0, 0})) == ints({1, 1, 1, 1}));
  CHECK(inverse(ints({1})) == ints({1}));
  CHECK(inverse(alternate_signs(phi(4, ZZ))) == ints({1, 2, 4, 8, 14}));
  CHECK(inverse(ints({-1, 1})) == ints({-1, -1}));
  CHECK_THROWS_AS(inverse(ints({2, 1})), Error);

  const RingSpec m40 = RingSpec::modular(40);
  CHECK_THROWS_AS(inverse(ints({2, 1}, m40)), Error);
  const auto a = ints({3, 5, 7, 11}, m40);
  CHECK(mul(a, inverse(a)) == TruncatedSeries::one(m40, 3));
  try {
    (void)inverse(ints({4, 1}, m40));
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("divide") {
  const auto a = ints({1, 2, 3, 4, 5});
  const auto b = ints({1, -3, 0, 2, 7});
  CHECK(divide(mul(a, b), b) == a);
  CHECK(divide(a, TruncatedSeries::one(ZZ, 2)) == a.truncated(2));
  CHECK_THROWS_AS(divide(a, ints({0, 1})), Error);
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(ints({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), 5) == ints({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
  const auto S = ints({3, 1, 4, 1, 5});
  CHECK(substitute_power(S, 1) == S);
  CHECK_THROWS_AS(substitute_power(S, 0), Error);
  const RingSpec m5 = RingSpec::modular(5);
  CHECK(pow(phi(200, m5), 5) == substitute_power(phi(200, m5), 5));
}

TEST_CASE("alternate_signs") {
  CHECK(alternate_signs(ints({1, 1, 1})) == ints({1, -1, 1}));
  const auto S = ints({3, 1, 4, 1, 5});
  CHECK(alternate_signs(alternate_signs(S)) == S);
  const auto gf = overpartition_gf(3, ZZ);
  CHECK(alternate_signs(gf) == ints({1, -2, 4, -8}));
  const RingSpec m8 = RingSpec::modular(8);
  CHECK(alternate_signs(ints({1, 3, 3, 0}, m8)) == ints({1, 5, 3, 0}, m8));
}

TEST_CASE("extract_progression") {
  CHECK(extract_progression(ints({1, 2, 3, 4}), 2, 1) == ints({2, 4}));
  const auto S = ints({3, 1, 4, 1, 5});
  CHECK(extract_progression(S, 1, 0) == S);
  const auto cube = pow(phi(403, ZZ), 3);
  const auto sevens = extract_progression(cube, 8, 7);
  for (std::int64_t j = 0; j <= sevens.order(); ++j) REQUIRE(sevens.coeff_is_zero(j));
  CHECK_THROWS_AS(extract_progression(S, 2, 2), Error);
  CHECK_THROWS_AS(extract_progression(S, 2, -1), Error);
  CHECK_THROWS_AS(extract_progression(S, 0, 0), Error);
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(ints({1, 8}), 8) == ints({1, 0}, RingSpec::modular(8)));
  const auto phi2 = reduce_mod(phi(100, ZZ), 2);
  CHECK(phi2.coeff(0) == 1);
  for (std::int64_t k = 1; k <= 100; ++k) REQUIRE(phi2.coeff_is_zero(k));
  CHECK(reduce_mod(overpartition_gf(35, ZZ), 40).coeff(35) == 0);
  CHECK(reduce_mod(ints({-1, -7}), 5) == ints({4, 3}, RingSpec::modular(5)));
  CHECK(reduce_mod(ints({17, 39}, RingSpec::modular(40)), 8) == ints({1, 7}, RingSpec::modular(8)));
  CHECK_THROWS_AS(reduce_mod(ints({1}), 1), Error);
  CHECK_THROWS_AS(reduce_mod(ints({1}, RingSpec::modular(40)), 3), Error);
}

TEST_CASE("order-zero series degenerate to scalars") {
  CHECK(mul(ints({3}), ints({5})) == ints({15}));
  CHECK(pow(ints({-2}), 5) == ints({-32}));
  CHECK(inverse(ints({3}, RingSpec::modular(7))) == ints({5}, RingSpec::modular(7)));
  CHECK(extract_progression(ints({9}), 3, 0) == ints({9}));
}

TEST_CASE("modulus range") {
  CHECK_THROWS_AS(RingSpec::modular(1), Error);
  CHECK_THROWS_AS(RingSpec::modular(RingSpec::kMaxModulus + 1), Error);
  CHECK(RingSpec::modular(RingSpec::kMaxModulus).modulus() == RingSpec::kMaxModulus);
  const RingSpec big = RingSpec::modular(RingSpec::kMaxModulus);
  const auto a = ints({-1, -1, -1}, big);
  CHECK(mul(a, a) == ints({1, 2, 3}, big));
}

TEST_CASE("property: reduce_mod is a ring homomorphism") {
  std::mt19937_64 rng(20140420);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t order = static_cast<std::int64_t>(rng() % 65);
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, static_cast<std::int64_t>(rng() % 65));
    const std::int64_t e = static_cast<std::int64_t>(rng() % 7);
    for (std::uint64_t m : {5u, 8u, 9u, 40u}) {
      REQUIRE(reduce_mod(add(a, b), m) == add(reduce_mod(a, m), reduce_mod(b, m)));
      REQUIRE(reduce_mod(mul(a, b), m) == mul(reduce_mod(a, m), reduce_mod(b, m)));
      REQUIRE(reduce_mod(pow(a, e), m) == pow(reduce_mod(a, m), e));
    }
  }
}

TEST_CASE("property: mul is commutative and associative; inverse is an involution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, static_cast<std::int64_t>(rng() % 40), true);
    const auto b = random_series(rng, static_cast<std::int64_t>(rng() % 40));
    const auto c = random_series(rng, static_cast<std::int64_t>(rng() % 40));
    REQUIRE(mul(a, b) == mul(b, a));
    REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
    REQUIRE(inverse(inverse(a)) == a);
    const auto a9 = reduce_mod(a, 9);
    REQUIRE(inverse(inverse(a9)) == a9);
  }
}

TEST_CASE("property: progressions partition a series; truncation is stable") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t order = 10 + static_cast<std::int64_t>(rng() % 50);
    const auto a = random_series(rng, order);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 6);
    auto rebuilt = TruncatedSeries::zero(ZZ, order);
    for (std::int64_t r = 0; r < m; ++r) {
      // Re-expand b(q) to q^r b(q^m).
      const auto part = extract_progression(a, m, r);
      std::vector<std::int64_t> shift(static_cast<std::size_t>(order) + 1, 0);
      shift[static_cast<std::size_t>(r)] = 1;
      const auto qr = TruncatedSeries::from_integers(ZZ, shift);
      std::vector<mpz_class> padded(static_cast<std::size_t>(order) + 1);
      for (std::int64_t j = 0; j <= part.order(); ++j) padded[static_cast<std::size_t>(j)] = part.coeff(j);
      rebuilt = add(rebuilt, mul(qr, substitute_power(TruncatedSeries::from_exact(ZZ, padded), m)));
    }
    REQUIRE(rebuilt == a);

    const auto b = random_series(rng, order);
    const auto full = mul(a, b);
    const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(order + 1));
    const std::int64_t cut = k + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(order - k + 1));
    REQUIRE(mul(a.truncated(cut), b.truncated(cut)).coeff(k) == full.coeff(k));
  }
}

TEST_CASE("JSON serialization") {
  const auto gf = overpartition_gf(60, ZZ);
  const std::string text = to_json(gf);
  CHECK(text.rfind(R"({"ring":"exact","order":60,"coeffs":["1","2","4","8","14",)", 0) == 0);
  CHECK(series_from_json(text) == gf);

  const auto big = pow(gf, 9);
  CHECK(series_from_json(to_json(big)) == big);

  const auto m40 = reduce_mod(gf, 40);
  CHECK(to_json(m40).rfind(R"({"ring":"modular","modulus":40,"order":60,)", 0) == 0);
  CHECK(series_from_json(to_json(m40)) == m40);

  CHECK_THROWS_AS(series_from_json("{"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"ring":"exact","order":1,"coeffs":["1"]})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"ring":"exact","order":0,"coeffs":[1]})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"ring":"modular","modulus":5,"order":0,"coeffs":["7"]})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"ring":"modular","order":0,"coeffs":["1"]})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"ring":"exact","modulus":5,"order":0,"coeffs":["1"]})"), Error);
}
