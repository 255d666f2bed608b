// Congruence and identity checkers. Each one sweeps a grid derived from the
// Budget and reports every failing grid point with both observed residues.

#include <algorithm>
#include <array>
#include <string>

#include "overpart/arith.hpp"
#include "overpart/error.hpp"
#include "overpart/lab.hpp"
#include "overpart/squares.hpp"
#include "overpart/theta.hpp"

namespace overpart {

namespace {

using Index = std::int64_t;

std::uint64_t at(const TruncatedSeries& s, Index k) { return s.residues()[static_cast<std::size_t>(k)]; }

const mpz_class& exact_at(const TruncatedSeries& s, Index k) { return s.exact_coeffs()[static_cast<std::size_t>(k)]; }

// (-1)^n v as a canonical residue; -1 is represented as m - 1.
std::uint64_t signed_residue(Index n, std::uint64_t v, std::uint64_t m) {
  v %= m;
  if (n % 2 == 0 || v == 0) return v;
  return m - v;
}

std::string mod_text(const std::string& what, std::uint64_t v, std::uint64_t m) {
  return what + " = " + std::to_string(v) + " mod " + std::to_string(m);
}

std::string call(const char* f, Index arg) { return std::string(f) + "(" + std::to_string(arg) + ")"; }

mpz_class ipow(std::int64_t base, std::int64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// 4^alpha (40 n + 35) for every instance within max_argument.
template <class Fn>
void for_each_40n35(Index max_argument, Fn&& fn) {
  for (Index scale = 1, alpha = 0; 35 * scale <= max_argument; scale *= 4, ++alpha)
    for (Index n = 0; scale * (40 * n + 35) <= max_argument; ++n) fn(alpha, n, scale * (40 * n + 35));
}

bool fits(const mpz_class& value, Index max_argument) { return value <= mpz_class(static_cast<long>(max_argument)); }

// Base arguments for recursion-driven checks stay within the exact r_k table
// and at desk scale.
Index recursion_base_limit(const Budget& b) { return std::min<Index>(b.max_argument, 2000); }

// ---------------------------------------------------------------------------
// Theorems on pbar.

CheckReport thm_main(const CheckContext& ctx) {
  ReportBuilder b("thm-main", ctx.stop_on_first);
  const Index top = ctx.budget.max_argument / 5;
  b.param("modulus", 5);
  b.range(1, top);
  if (top >= 1) {
    const auto& gf = ctx.bank.get(kGfMod5);
    const auto& r3 = ctx.bank.get(kR3Mod5);
    for (Index n = 1; n <= top && !b.halted(); ++n) {
      const std::uint64_t lhs = at(gf, 5 * n);
      const std::uint64_t rhs = signed_residue(n, at(r3, n), 5);
      b.expect(lhs == rhs, {{"n", n}}, mod_text(call("pbar", 5 * n), lhs, 5),
               mod_text("(-1)^n " + call("r3", n), rhs, 5));
    }
  }
  return std::move(b).finish("max_argument < 5");
}

CheckReport thm_mod9(const CheckContext& ctx) {
  ReportBuilder b("thm-mod9", ctx.stop_on_first);
  const Index top = ctx.budget.max_argument / 3;
  b.param("modulus", 9);
  b.param("sanity_modulus", 3);
  b.range(1, top);
  if (top >= 1) {
    const auto& gf = ctx.bank.get(kGfMod9);
    const auto& r5 = ctx.bank.get(kR5Mod9);
    for (Index n = 1; n <= top && !b.halted(); ++n) {
      const std::uint64_t lhs = at(gf, 3 * n);
      const std::uint64_t rhs = signed_residue(n, at(r5, n), 9);
      b.expect(lhs == rhs, {{"n", n}, {"modulus", 9}}, mod_text(call("pbar", 3 * n), lhs, 9),
               mod_text("(-1)^n " + call("r5", n), rhs, 9));
      if (b.halted()) break;
      b.expect(lhs % 3 == rhs % 3, {{"n", n}, {"modulus", 3}}, mod_text(call("pbar", 3 * n), lhs % 3, 3),
               mod_text("(-1)^n " + call("r5", n), rhs % 3, 3));
    }
  }
  return std::move(b).finish("max_argument < 3");
}

CheckReport conj_40(const CheckContext& ctx) {
  ReportBuilder b("conj-40", ctx.stop_on_first);
  b.param("modulus", 40);
  b.range(35, ctx.budget.max_argument);
  if (ctx.budget.max_argument >= 35) {
    const auto& gf8 = ctx.bank.get(kGfMod8);
    const auto& gf5 = ctx.bank.get(kGfMod5);
    const auto& gf40 = ctx.bank.get(kGfMod40);
    Index alpha_max = 0;
    for_each_40n35(ctx.budget.max_argument, [&](Index alpha, Index n, Index arg) {
      if (b.halted()) return;
      alpha_max = std::max(alpha_max, alpha);
      const std::uint64_t r8 = at(gf8, arg), r5 = at(gf5, arg), r40 = at(gf40, arg);
      std::uint64_t crt = 0;
      while (crt % 8 != r8 || crt % 5 != r5) ++crt;
      // The mod-8 vanishing comes from the square/twice-square criterion, so
      // the argument must fall outside both classes.
      const bool exempt = is_square(arg) || is_twice_square(arg);
      const bool ok = r40 == 0 && crt == r40 && !exempt;
      b.expect(ok, {{"alpha", alpha}, {"n", n}},
               call("pbar", arg) + ": mod 8 = " + std::to_string(r8) + ", mod 5 = " + std::to_string(r5) +
                   ", mod 40 = " + std::to_string(r40) + ", crt(mod 8, mod 5) = " + std::to_string(crt) +
                   (exempt ? ", square or twice a square" : ""),
               "0 mod 40 on all three routes, argument neither a square nor twice a square");
    });
    b.param("alpha_max", alpha_max);
  }
  return std::move(b).finish("max_argument < 35");
}

CheckReport vanish_mod5(const CheckContext& ctx) {
  ReportBuilder b("vanish-mod5", ctx.stop_on_first);
  b.param("modulus", 5);
  b.range(35, ctx.budget.max_argument);
  if (ctx.budget.max_argument >= 35) {
    const auto& gf5 = ctx.bank.get(kGfMod5);
    for_each_40n35(ctx.budget.max_argument, [&](Index alpha, Index n, Index arg) {
      if (b.halted()) return;
      b.expect(at(gf5, arg) == 0, {{"alpha", alpha}, {"n", n}}, mod_text(call("pbar", arg), at(gf5, arg), 5), "0 mod 5");
    });
  }
  return std::move(b).finish("max_argument < 35");
}

CheckReport shift_4_mod5(const CheckContext& ctx) {
  ReportBuilder b("shift-4-mod5", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.param("modulus", 5);
  b.range(20, M);
  if (M >= 20) {
    const auto& gf5 = ctx.bank.get(kGfMod5);
    Index scale = 20;  // 5 * 4^(alpha+1)
    for (Index alpha = 0; alpha <= ctx.budget.max_alpha && scale <= M; ++alpha, scale *= 4) {
      for (Index n = 1; scale * n <= M && !b.halted(); ++n) {
        const std::uint64_t lhs = at(gf5, scale * n);
        const std::uint64_t rhs = signed_residue(n, at(gf5, 5 * n), 5);
        b.expect(lhs == rhs, {{"alpha", alpha}, {"n", n}}, mod_text(call("pbar", scale * n), lhs, 5),
                 mod_text("(-1)^n " + call("pbar", 5 * n), rhs, 5));
      }
    }
  }
  return std::move(b).finish("max_argument < 20");
}

CheckReport mod8_criterion(const CheckContext& ctx) {
  ReportBuilder b("mod8-criterion", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.param("modulus", 8);
  b.range(1, M);
  Index exempt = 0, exempt_nonzero = 0;
  const auto& gf8 = ctx.bank.get(kGfMod8);
  for (Index n = 1; n <= M && !b.halted(); ++n) {
    if (is_square(n) || is_twice_square(n)) {
      ++exempt;
      if (at(gf8, n) != 0) ++exempt_nonzero;
      continue;
    }
    b.expect(at(gf8, n) == 0, {{"n", n}}, mod_text(call("pbar", n), at(gf8, n), 8), "0 mod 8");
  }
  b.param("exempt", exempt);
  // Exempt arguments whose pbar is nonzero mod 8: the exemption is needed.
  b.param("exempt_nonzero", exempt_nonzero);
  return std::move(b).finish("max_argument < 1");
}

CheckReport id_4n3(const CheckContext& ctx) {
  ReportBuilder b("id-4n3", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  if (M >= 3) {
    const Index terms = (M - 3) / 4;
    b.param("terms", terms + 1);
    b.range(0, terms);
    const TruncatedSeries lhs = extract_progression(ctx.bank.get(kGfExact), 4, 3);
    const TruncatedSeries rhs = hs_identity_rhs(terms);
    for (Index j = 0; j <= terms && !b.halted(); ++j) {
      const mpz_class& l = exact_at(lhs, j);
      const mpz_class& r = exact_at(rhs, j);
      b.expect(l == r, {{"n", j}}, call("pbar", 4 * j + 3) + " = " + l.get_str(), "product side = " + r.get_str());
      if (b.halted()) break;
      const mpz_class rem = l % 8;
      b.expect(rem == 0, {{"n", j}, {"modulus", 8}}, call("pbar", 4 * j + 3) + " = " + rem.get_str() + " mod 8",
               "0 mod 8");
    }
  }
  return std::move(b).finish("max_argument < 3");
}

// ---------------------------------------------------------------------------
// Infinite families. Direct checks test pbar at every in-budget argument;
// the companion r_k checks evaluate the driving r_3/r_5 divisibility through
// the prime-power recursions, which reach exponents far past the budget.

CheckReport family_5pow(const CheckContext& ctx) {
  ReportBuilder b("family-5pow", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.param("modulus", 5);
  b.range(125, M);
  for (Index alpha = 1; alpha <= ctx.budget.max_alpha; ++alpha) {
    const mpz_class scale = ipow(5, 2 * alpha + 1);
    for (Index r : {1, 4}) {
      const mpz_class minimal = scale * static_cast<long>(r);
      if (!fits(minimal, M)) {
        b.skip_point({{"alpha", alpha}, {"r", r}}, minimal.get_str());
        continue;
      }
      const Index s = scale.get_si();
      const auto& gf5 = ctx.bank.get(kGfMod5);
      for (Index n = 0; s * (5 * n + r) <= M && !b.halted(); ++n) {
        const Index arg = s * (5 * n + r);
        b.expect(at(gf5, arg) == 0, {{"alpha", alpha}, {"r", r}, {"n", n}}, mod_text(call("pbar", arg), at(gf5, arg), 5),
                 "0 mod 5");
      }
    }
  }
  return std::move(b).finish("smallest argument 5^(2a+1) exceeds max_argument for every alpha");
}

CheckReport family_5pow_r3(const CheckContext& ctx) {
  ReportBuilder b("family-5pow-r3", ctx.stop_on_first);
  const Index base_limit = recursion_base_limit(ctx.budget);
  b.param("modulus", 5);
  b.range(1, base_limit);
  const auto& r3 = ctx.bank.get(kR3Exact).exact_coeffs();
  for (Index alpha = 1; alpha <= ctx.budget.max_alpha && !b.halted(); ++alpha) {
    for (Index n = 1; n <= base_limit && !b.halted(); ++n) {
      if (n % 5 != 1 && n % 5 != 4) continue;
      const mpz_class v = r3_recursion(5, static_cast<int>(alpha), n, r3);
      b.expect(v % 5 == 0, {{"alpha", alpha}, {"n", n}},
               "r3(5^" + std::to_string(2 * alpha) + " * " + std::to_string(n) + ") = " + v.get_str(), "0 mod 5");
    }
  }
  return std::move(b).finish("max_alpha < 1");
}

// Exponent families over primes p != q for the q-part theorems.
struct PrimeFamily {
  std::int64_t exponent_step;    // e = step * alpha + offset
  std::int64_t exponent_offset;
  std::uint64_t modulus;
};

std::vector<PrimeFamily> mod5_families(std::int64_t p) {
  if (p % 5 == 1) return {{10, 9, 5}};
  return {{8, 7, 5}};
}

std::vector<PrimeFamily> mod3_families(std::int64_t p) {
  if (p % 3 == 1) return {{6, 5, 3}, {18, 17, 9}};
  return {{4, 3, 9}};
}

// pbar(q p^e N) == 0 (mod m) at every in-budget argument, gcd(N, p) = 1.
CheckReport direct_prime_family(const CheckContext& ctx, std::string id, std::int64_t q, BaseSeries gf_id,
                                std::vector<PrimeFamily> (*families)(std::int64_t)) {
  ReportBuilder b(std::move(id), ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.param("multiplier", q);
  b.range(1, M);
  const TruncatedSeries* gf = nullptr;
  for (std::int64_t p : odd_primes_up_to(ctx.budget.max_prime)) {
    if (p == q) continue;
    for (const PrimeFamily& fam : families(p)) {
      for (Index alpha = 0; alpha <= ctx.budget.max_alpha; ++alpha) {
        const Index e = fam.exponent_step * alpha + fam.exponent_offset;
        const mpz_class scale = static_cast<long>(q) * ipow(p, e);
        if (!fits(scale, M)) {
          b.skip_point({{"p", p}, {"alpha", alpha}, {"exponent", e}, {"modulus", static_cast<Index>(fam.modulus)}},
                       scale.get_str());
          continue;
        }
        if (!gf) gf = &ctx.bank.get(gf_id);
        const Index s = scale.get_si();
        for (Index N = 1; s * N <= M && !b.halted(); ++N) {
          if (N % p == 0) continue;
          const std::uint64_t v = at(*gf, s * N) % fam.modulus;
          b.expect(v == 0, {{"p", p}, {"alpha", alpha}, {"N", N}, {"modulus", static_cast<Index>(fam.modulus)}},
                   mod_text(call("pbar", s * N), v, fam.modulus), "0 mod " + std::to_string(fam.modulus));
        }
      }
    }
  }
  return std::move(b).finish("every grid point's smallest argument exceeds max_argument");
}

// r_k(p^e N) == 0 (mod m) with e = 2 beta + 1, evaluated as r_k(p^(2 beta) (p N))
// by the recursion from the exact base r_k(p N).
CheckReport recursion_prime_family(const CheckContext& ctx, std::string id, int k, std::int64_t q,
                                   std::vector<PrimeFamily> (*families)(std::int64_t)) {
  ReportBuilder b(std::move(id), ctx.stop_on_first);
  const Index base_limit = recursion_base_limit(ctx.budget);
  b.param("k", k);
  b.range(1, base_limit);
  const auto& table = ctx.bank.get(k == 3 ? kR3Exact : kR5Exact).exact_coeffs();
  for (std::int64_t p : odd_primes_up_to(ctx.budget.max_prime)) {
    if (p == q) continue;
    for (const PrimeFamily& fam : families(p)) {
      for (Index alpha = 0; alpha <= ctx.budget.max_alpha && !b.halted(); ++alpha) {
        const Index e = fam.exponent_step * alpha + fam.exponent_offset;
        const int beta = static_cast<int>((e - 1) / 2);
        for (Index N = 1; p * N <= base_limit && !b.halted(); ++N) {
          if (N % p == 0) continue;
          const mpz_class v = k == 3 ? r3_recursion(p, beta, p * N, table) : r5_recursion(p, beta, p * N, table);
          const mpz_class rem = v % static_cast<unsigned long>(fam.modulus);
          b.expect(rem == 0, {{"p", p}, {"alpha", alpha}, {"N", N}, {"modulus", static_cast<Index>(fam.modulus)}},
                   "r" + std::to_string(k) + "(" + std::to_string(p) + "^" + std::to_string(e) + " * " +
                       std::to_string(N) + ") = " + rem.get_str() + " mod " + std::to_string(fam.modulus),
                   "0 mod " + std::to_string(fam.modulus));
        }
      }
    }
  }
  return std::move(b).finish("no prime in range");
}

CheckReport family_p_mod5(const CheckContext& ctx) {
  return direct_prime_family(ctx, "family-p-mod5", 5, kGfMod5, mod5_families);
}
CheckReport family_p_mod5_r3(const CheckContext& ctx) {
  return recursion_prime_family(ctx, "family-p-mod5-r3", 3, 5, mod5_families);
}
CheckReport family_p_mod3(const CheckContext& ctx) {
  return direct_prime_family(ctx, "family-p-mod3", 3, kGfMod9, mod3_families);
}
CheckReport family_p_mod3_r5(const CheckContext& ctx) {
  return recursion_prime_family(ctx, "family-p-mod3-r5", 5, 3, mod3_families);
}

std::vector<std::int64_t> primes_minus_one_mod5(std::int64_t max_prime) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : odd_primes_up_to(max_prime))
    if (p % 5 == 4) out.push_back(p);
  return out;
}

CheckReport family_p_cubed(const CheckContext& ctx) {
  ReportBuilder b("family-p-cubed", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.param("modulus", 5);
  b.range(1, M);
  for (std::int64_t p : primes_minus_one_mod5(ctx.budget.max_prime)) {
    const mpz_class scale = 5 * ipow(p, 3);
    if (!fits(scale, M)) {
      b.skip_point({{"p", p}}, scale.get_str());
      continue;
    }
    const auto& gf5 = ctx.bank.get(kGfMod5);
    const Index s = scale.get_si();
    for (Index n = 1; s * n <= M && !b.halted(); ++n) {
      if (n % p == 0) continue;
      b.expect(at(gf5, s * n) == 0, {{"p", p}, {"n", n}}, mod_text(call("pbar", s * n), at(gf5, s * n), 5), "0 mod 5");
    }
  }
  return std::move(b).finish("smallest argument 5 p^3 exceeds max_argument for every prime p == -1 (mod 5)");
}

CheckReport family_p_cubed_r3(const CheckContext& ctx) {
  ReportBuilder b("family-p-cubed-r3", ctx.stop_on_first);
  const Index base_limit = recursion_base_limit(ctx.budget);
  b.param("modulus", 5);
  b.range(1, base_limit);
  const auto& r3 = ctx.bank.get(kR3Exact).exact_coeffs();
  for (std::int64_t p : primes_minus_one_mod5(ctx.budget.max_prime)) {
    for (Index n = 1; p * n <= base_limit && !b.halted(); ++n) {
      if (n % p == 0) continue;
      const mpz_class v = r3_recursion(p, 1, p * n, r3);
      b.expect(v % 5 == 0, {{"p", p}, {"n", n}},
               "r3(" + std::to_string(p) + "^3 * " + std::to_string(n) + ") = " + v.get_str(), "0 mod 5");
    }
  }
  return std::move(b).finish("no prime p == -1 (mod 5) up to max_prime");
}

// ---------------------------------------------------------------------------
// Proof-step replays: series congruences compared coefficient-wise.

Index replay_order(const Budget& budget) { return std::min<Index>(budget.max_argument, 500); }

void compare_series(ReportBuilder& b, const TruncatedSeries& lhs, const TruncatedSeries& rhs, const ParamList& tag,
                    const std::string& lhs_name, const std::string& rhs_name) {
  const Index order = std::min(lhs.order(), rhs.order());
  const std::uint64_t m = lhs.ring().modulus();
  for (Index k = 0; k <= order && !b.halted(); ++k) {
    ParamList args = tag;
    args.emplace_back("k", k);
    b.expect(at(lhs, k) == at(rhs, k), std::move(args), mod_text(lhs_name + " [q^" + std::to_string(k) + "]", at(lhs, k), m),
             mod_text(rhs_name + " [q^" + std::to_string(k) + "]", at(rhs, k), m));
  }
}

CheckReport proof_phi5(const CheckContext& ctx) {
  ReportBuilder b("proof-phi5", ctx.stop_on_first);
  const Index T = replay_order(ctx.budget);
  b.param("modulus", 5);
  b.range(0, T);
  const TruncatedSeries ph = phi(T, RingSpec::modular(5));
  compare_series(b, pow(ph, 5), substitute_power(ph, 5), {}, "phi(q)^5", "phi(q^5)");
  return std::move(b).finish();
}

CheckReport proof_phi9(const CheckContext& ctx) {
  ReportBuilder b("proof-phi9", ctx.stop_on_first);
  const Index T = replay_order(ctx.budget);
  b.param("modulus", 9);
  b.range(0, T);
  const TruncatedSeries ph = phi(T, RingSpec::modular(9));
  compare_series(b, pow(ph, 9), pow(substitute_power(ph, 3), 3), {}, "phi(q)^9", "phi(q^3)^3");
  return std::move(b).finish();
}

CheckReport euler_power(const CheckContext& ctx) {
  ReportBuilder b("euler-power", ctx.stop_on_first);
  const Index T = replay_order(ctx.budget);
  constexpr std::array<std::pair<int, int>, 7> kPairs{{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}};
  b.param("pairs", static_cast<Index>(kPairs.size()));
  b.range(0, T);
  for (const auto& [p, alpha] : kPairs) {
    Index m = 1;
    for (int i = 0; i < alpha; ++i) m *= p;
    const TruncatedSeries e = euler_product(T, RingSpec::modular(static_cast<std::uint64_t>(m)), EulerSign::Standard);
    compare_series(b, pow(e, m), pow(substitute_power(e, p), m / p), {{"p", p}, {"alpha", alpha}},
                   "(q;q)^" + std::to_string(m), "(q^" + std::to_string(p) + ";q^" + std::to_string(p) + ")^" + std::to_string(m / p));
  }
  return std::move(b).finish();
}

CheckReport final_step(const CheckContext& ctx) {
  ReportBuilder b("final-step", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.range(0, M / 3);
  b.param("terms_mod5", M / 5 + 1);
  b.param("terms_mod9", M / 3 + 1);
  compare_series(b, alternate_signs(extract_progression(ctx.bank.get(kGfMod5), 5, 0)), ctx.bank.get(kR3Mod5),
                 {{"modulus", 5}}, "sum pbar(5n)(-q)^n", "phi(q)^3");
  compare_series(b, alternate_signs(extract_progression(ctx.bank.get(kGfMod9), 3, 0)), ctx.bank.get(kR5Mod9),
                 {{"modulus", 9}}, "sum pbar(3n)(-q)^n", "phi(q)^5");
  return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Sums of squares.

CheckReport rk_routes(const CheckContext& ctx) {
  ReportBuilder b("rk-routes", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  const Index formula_top = std::min<Index>(M, 2000);
  b.param("formula_limit", formula_top);
  b.range(1, formula_top);

  auto value_text = [](const char* route, int k, Index n, const mpz_class& v) {
    return std::string(route) + " r" + std::to_string(k) + "(" + std::to_string(n) + ") = " + v.get_str();
  };

  for (int k : {4, 8}) {
    const TruncatedSeries s = rk_series(k, formula_top);
    for (Index n = 1; n <= formula_top && !b.halted(); ++n) {
      const mpz_class f = k == 4 ? r4_formula(n) : r8_formula(n);
      b.expect(exact_at(s, n) == f, {{"k", k}, {"n", n}}, value_text("series", k, n, exact_at(s, n)),
               value_text("formula", k, n, f));
    }
  }

  constexpr std::array<std::pair<int, Index>, 4> kLattice{{{3, 300}, {4, 300}, {5, 100}, {8, 100}}};
  for (const auto& [k, cap] : kLattice) {
    const Index top = std::min(M, cap);
    const TruncatedSeries s = rk_series(k, top);
    for (Index n = 0; n <= top && !b.halted(); ++n) {
      const mpz_class brute = rk_bruteforce(k, n);
      b.expect(exact_at(s, n) == brute, {{"k", k}, {"n", n}}, value_text("series", k, n, exact_at(s, n)),
               value_text("lattice", k, n, brute));
    }
  }
  return std::move(b).finish();
}

CheckReport r_mod_p(const CheckContext& ctx) {
  ReportBuilder b("r-mod-p", ctx.stop_on_first);
  const Index top = std::min<Index>(ctx.budget.max_argument, 1000);
  b.range(1, top);
  for (std::int64_t p : odd_primes_up_to(ctx.budget.max_prime)) {
    const mpz_class p3 = ipow(p, 3);
    for (Index n = 1; n <= top && !b.halted(); ++n) {
      const mpz_class d4 = r4_formula(p * n) - r4_formula(n);
      b.expect(mpz_class(d4 % static_cast<unsigned long>(p)) == 0, {{"k", 4}, {"p", p}, {"n", n}},
               "r4(pn) - r4(n) = " + d4.get_str(), "0 mod " + std::to_string(p));
      if (b.halted()) break;
      const mpz_class d8 = r8_formula(p * n) - r8_formula(n);
      b.expect(mpz_class(d8 % p3) == 0, {{"k", 8}, {"p", p}, {"n", n}}, "r8(pn) - r8(n) = " + d8.get_str(),
               "0 mod " + p3.get_str());
    }
  }
  return std::move(b).finish("no odd prime up to max_prime");
}

CheckReport r3_4pow(const CheckContext& ctx) {
  ReportBuilder b("r3-4pow", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.range(1, M);
  const auto& r3 = ctx.bank.get(kR3Exact);
  Index scale = 1;
  for (Index alpha = 0; alpha <= ctx.budget.max_alpha && scale <= M; ++alpha, scale *= 4) {
    for (Index n = 0; scale * (8 * n + 7) <= M && !b.halted(); ++n) {
      const Index arg = scale * (8 * n + 7);
      b.expect(exact_at(r3, arg) == 0, {{"alpha", alpha}, {"n", n}, {"form", 7}},
               call("r3", arg) + " = " + exact_at(r3, arg).get_str(), "0");
    }
    if (alpha == 0) continue;
    for (Index n = 1; scale * n <= M && !b.halted(); ++n) {
      b.expect(exact_at(r3, scale * n) == exact_at(r3, n), {{"alpha", alpha}, {"n", n}, {"form", 4}},
               call("r3", scale * n) + " = " + exact_at(r3, scale * n).get_str(),
               call("r3", n) + " = " + exact_at(r3, n).get_str());
    }
  }
  return std::move(b).finish("max_argument < 7");
}

CheckReport r3_recursion_check(const CheckContext& ctx) {
  ReportBuilder b("r3-recursion", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.range(1, M);
  const auto& table = ctx.bank.get(kR3Exact).exact_coeffs();
  Index p_divides = 0, p_divides_fail = 0;
  for (std::int64_t p : odd_primes_up_to(ctx.budget.max_prime)) {
    Index scale = p * p;
    for (Index alpha = 1; alpha <= ctx.budget.max_alpha && scale <= M; ++alpha, scale *= p * p) {
      for (Index n = 1; scale * n <= M && !b.halted(); ++n) {
        const mpz_class v = r3_recursion(p, static_cast<int>(alpha), n, table);
        const bool ok = v == table[static_cast<std::size_t>(scale * n)];
        if (n % p == 0) {
          ++p_divides;
          if (!ok) ++p_divides_fail;
        }
        b.expect(ok, {{"p", p}, {"alpha", alpha}, {"n", n}, {"p_divides_n", n % p == 0}},
                 "recursion = " + v.get_str(), "series " + call("r3", scale * n) + " = " + table[static_cast<std::size_t>(scale * n)].get_str());
      }
    }
  }
  // Arguments divisible by p are tested too; these counters record how the
  // recursion behaves there.
  b.param("p_divides_n_instances", p_divides);
  b.param("p_divides_n_failures", p_divides_fail);
  return std::move(b).finish("no odd prime square within max_argument");
}

CheckReport r5_recursion_check(const CheckContext& ctx) {
  ReportBuilder b("r5-recursion", ctx.stop_on_first);
  const Index M = ctx.budget.max_argument;
  b.range(1, M);
  const auto& table = ctx.bank.get(kR5Exact).exact_coeffs();
  for (std::int64_t p : odd_primes_up_to(ctx.budget.max_prime)) {
    Index scale = p * p;
    for (Index alpha = 1; alpha <= ctx.budget.max_alpha && scale <= M; ++alpha, scale *= p * p) {
      for (Index n = 1; scale * n <= M && !b.halted(); ++n) {
        if (n % (p * p) == 0) continue;
        const mpz_class v = r5_recursion(p, static_cast<int>(alpha), n, table);
        b.expect(v == table[static_cast<std::size_t>(scale * n)], {{"p", p}, {"alpha", alpha}, {"n", n}},
                 "recursion = " + v.get_str(), "series " + call("r5", scale * n) + " = " + table[static_cast<std::size_t>(scale * n)].get_str());
      }
    }
  }
  return std::move(b).finish("no odd prime square within max_argument");
}

constexpr std::array kRegistry = {
    CheckInfo{"thm-main", "pbar(5n) == (-1)^n r3(n) (mod 5), n >= 1", kGfMod5 | kR3Mod5, thm_main},
    CheckInfo{"thm-mod9", "pbar(3n) == (-1)^n r5(n) (mod 9), n >= 1; the mod 3 form as a subset", kGfMod9 | kR5Mod9,
              thm_mod9},
    CheckInfo{"conj-40", "pbar(4^a (40n+35)) == 0 (mod 40), a, n >= 0; mod 8 x mod 5 routes agree with mod 40",
              kGfMod5 | kGfMod8 | kGfMod40, conj_40},
    CheckInfo{"vanish-mod5", "pbar(4^a (40n+35)) == 0 (mod 5), a, n >= 0", kGfMod5, vanish_mod5},
    CheckInfo{"shift-4-mod5", "pbar(5 4^(a+1) n) == (-1)^n pbar(5n) (mod 5), a >= 0", kGfMod5, shift_4_mod5},
    CheckInfo{"mod8-criterion", "n neither a square nor twice a square => pbar(n) == 0 (mod 8)", kGfMod8,
              mod8_criterion},
    CheckInfo{"id-4n3", "sum pbar(4n+3) q^n = 8 (q^2;q^2)(q^4;q^4)^6 / (q;q)^8, so pbar(4n+3) == 0 (mod 8)", kGfExact,
              id_4n3},
    CheckInfo{"family-5pow", "pbar(5^(2a+1) (5n+1)) == pbar(5^(2a+1) (5n+4)) == 0 (mod 5), a >= 1", kGfMod5,
              family_5pow},
    CheckInfo{"family-5pow-r3", "r3(5^(2a) (5n+r)) == 0 (mod 5), r in {1, 4}, a >= 1", kR3Exact, family_5pow_r3},
    CheckInfo{"family-p-mod5",
              "pbar(5 p^(10a+9) N) == 0 (mod 5) for p == 1 (mod 5); pbar(5 p^(8a+7) N) == 0 (mod 5) for p == 2, 3, 4 "
              "(mod 5); p >= 3 prime, gcd(N, p) = 1",
              kGfMod5, family_p_mod5},
    CheckInfo{"family-p-mod5-r3", "r3(p^(10a+9) N) == 0, r3(p^(8a+7) N) == 0 (mod 5) on the same prime classes",
              kR3Exact, family_p_mod5_r3},
    CheckInfo{"family-p-mod3",
              "pbar(3 p^(6a+5) N) == 0 (mod 3) and pbar(3 p^(18a+17) N) == 0 (mod 9) for p == 1 (mod 3); "
              "pbar(3 p^(4a+3) N) == 0 (mod 9) for p == 2 (mod 3); gcd(N, p) = 1",
              kGfMod9, family_p_mod3},
    CheckInfo{"family-p-mod3-r5", "r5(p^e N) == 0 (mod 3 or 9) for the same exponents and prime classes", kR5Exact,
              family_p_mod3_r5},
    CheckInfo{"family-p-cubed", "pbar(5 p^3 n) == 0 (mod 5) for primes p == -1 (mod 5), gcd(n, p) = 1", kGfMod5,
              family_p_cubed},
    CheckInfo{"family-p-cubed-r3", "r3(p^3 n) == 0 (mod 5) for primes p == -1 (mod 5), gcd(n, p) = 1", kR3Exact,
              family_p_cubed_r3},
    CheckInfo{"proof-phi5", "phi(q)^5 == phi(q^5) (mod 5)", 0, proof_phi5},
    CheckInfo{"proof-phi9", "phi(q)^9 == phi(q^3)^3 (mod 9)", 0, proof_phi9},
    CheckInfo{"euler-power", "(q;q)^(p^a) == (q^p;q^p)^(p^(a-1)) (mod p^a)", 0, euler_power},
    CheckInfo{"final-step", "sum pbar(5n) (-q)^n == phi(q)^3 (mod 5); sum pbar(3n) (-q)^n == phi(q)^5 (mod 9)",
              kGfMod5 | kGfMod9 | kR3Mod5 | kR5Mod9, final_step},
    CheckInfo{"rk-routes", "r4(n) = 8 sum_{d | n, 4 !| d} d; r8(n) = 16 (-1)^n sum_{d | n} (-1)^d d^3; phi^k = lattice count",
              0, rk_routes},
    CheckInfo{"r-mod-p", "r4(pn) == r4(n) (mod p), r8(pn) == r8(n) (mod p^3), p >= 3 prime", 0, r_mod_p},
    CheckInfo{"r3-4pow", "r3(4^a (8n+7)) = 0 and r3(4^a n) = r3(n)", kR3Exact, r3_4pow},
    CheckInfo{"r3-recursion",
              "r3(p^(2a) n) = ((p^(a+1)-1)/(p-1) - (-n/p) (p^a-1)/(p-1)) r3(n) - p (p^a-1)/(p-1) r3(n/p^2)", kR3Exact,
              r3_recursion_check},
    CheckInfo{"r5-recursion", "r5(p^(2a) n) = ((p^(3a+3)-1)/(p^3-1) - p (n/p) (p^(3a)-1)/(p^3-1)) r5(n), p^2 !| n",
              kR5Exact, r5_recursion_check},
};

}  // namespace

std::span<const CheckInfo> check_registry() { return kRegistry; }

const CheckInfo* find_check(std::string_view id) {
  for (const auto& c : kRegistry)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace overpart
