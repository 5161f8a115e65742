#include "doctest.h"
#include "oracles.hpp"
#include "ultrapic/picard.hpp"
#include "ultrapic/polygon.hpp"
#include "ultrapic/zeros.hpp"

using namespace ultrapic;
using Kind = SingularityClassification::Kind;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ultrapic::Error");
  return Errc::InvalidArgument;
}

const auto kZeroPos = TailCertificate::zero(TailDirection::Positive);

Integer power(unsigned long p, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TEST_CASE("check_zero_free examples") {
  const PrimeContext p2(2);
  CHECK(check_zero_free(polynomial(p2, {1}), RadiusVal{0}));
  CHECK_FALSE(check_zero_free(polynomial(p2, {2, 1}), RadiusVal{0}));
  CHECK(check_zero_free(polynomial(p2, {1, 2}), RadiusVal{0}));
  // The corner of 1 + 2z at s = -1 is inside the larger disc s >= -1.
  CHECK_FALSE(check_zero_free(polynomial(p2, {1, 2}), RadiusVal{-1}));
  // A zero far inside: z - 2^10 has its corner at s = 10.
  CHECK_FALSE(check_zero_free(polynomial(p2, {-1024, 1}), RadiusVal{0}));
}

TEST_CASE("classify_singularity") {
  const PrimeContext p2(2);
  CHECK(classify_singularity(polynomial(p2, {1, 1})) ==
        SingularityClassification::removable());
  CHECK(classify_singularity(build_series(p2, {{-2, 1}, {0, 1}})) ==
        SingularityClassification::pole(2));
  CHECK(classify_singularity(build_series(p2, {{0, 1}}, kZeroPos,
                                          TailCertificate::essential(0, 1)))
            .kind == Kind::EssentialDeclared);
  CHECK(to_string(Kind::Pole) == "Pole");
}

TEST_CASE("extend_across_puncture examples") {
  CHECK(extend_across_puncture(polynomial(PrimeContext(2), {1, 2}),
                               RadiusVal{0}) ==
        SingularityClassification::removable());
  const PrimeContext p3(3);
  CHECK(code_of([&] {
          extend_across_puncture(build_series(p3, {{-1, 1}, {0, 1}}),
                                 RadiusVal{0});
        }) == Errc::HypothesisViolated);
  CHECK(extend_across_puncture(build_series(p3, {{-1, 1}, {0, 3}}),
                               RadiusVal{0}) ==
        SingularityClassification::pole(1));
  // Zero-free in the window, yet declared essential.
  const auto ess = build_series(p3, {{0, 1}}, kZeroPos,
                                TailCertificate::essential(5, 1));
  CHECK(code_of([&] { extend_across_puncture(ess, RadiusVal{0}); }) ==
        Errc::ContradictionDetected);
}

TEST_CASE("extend_across_puncture never reports an essential singularity") {
  oracle::Random rng(71);
  int contradictions = 0;
  for (int i = 0; i < 400; ++i) {
    const PrimeContext ctx(rng.prime());
    auto f = rng.series(ctx, -4, 4, 3);
    if (rng.uniform(0, 1)) {
      std::vector<Term> terms;
      for (const auto& [n, c] : f.terms()) terms.push_back({n, c});
      f = build_series(ctx, terms, kZeroPos,
                       TailCertificate::essential(rng.uniform(4, 12), 1));
    }
    const RadiusVal s_r{rng.small_rational(2)};
    try {
      const auto cls = extend_across_puncture(f, s_r);
      REQUIRE(cls.kind != Kind::EssentialDeclared);
      REQUIRE(check_zero_free(f, s_r));
    } catch (const Error& e) {
      if (e.code() == Errc::ContradictionDetected) ++contradictions;
      REQUIRE((e.code() == Errc::HypothesisViolated ||
               e.code() == Errc::ContradictionDetected ||
               e.code() == Errc::WindowInsufficient));
    }
  }
  CHECK(contradictions > 0);
}

TEST_CASE("pole order is invariant under a unit factor") {
  oracle::Random rng(73);
  for (int i = 0; i < 200; ++i) {
    const PrimeContext ctx(rng.prime());
    const auto f = rng.series(ctx, -5, 3, 3);
    // u = a0 + sum a_n z^n with v(a_n) > v(a0): no corner at s >= 0.
    std::vector<Term> terms{{0, rng.unit(ctx.prime())}};
    for (long n = 1; n <= 3; ++n) {
      terms.push_back({n, rng.with_valuation(ctx.prime(), rng.uniform(1, 3))});
    }
    const auto u = build_series(ctx, terms);
    REQUIRE(check_zero_free(u, RadiusVal{0}));
    REQUIRE(classify_singularity(mul_series(f, u)) == classify_singularity(f));
  }
}

TEST_CASE("open_image_disc examples") {
  const PrimeContext p3(3);
  const auto f = polynomial(p3, {1, 3, 1});
  const auto d0 = open_image_disc(f, RadiusVal{0});
  CHECK(d0.lead_exponent == 1);
  CHECK(d0.delta_val == Valuation(0));
  CHECK(d0.center == 1);
  CHECK(open_image_disc(f, RadiusVal{1}).delta_val == Valuation(2));

  const auto g = polynomial(PrimeContext(5), {7, 0, 0, 1});
  CHECK(open_image_disc(g, RadiusVal{Rational(2, 3)}).delta_val ==
        Valuation(2));
  CHECK(open_image_disc(g, RadiusVal{Rational(2, 3)}).lead_exponent == 3);

  CHECK_FALSE(contains_value(f, RadiusVal{1}, 0));
  CHECK(contains_value(f, RadiusVal{1}, 1));
  CHECK(contains_value(f, RadiusVal{1}, 10));

  CHECK(code_of([&] { open_image_disc(polynomial(p3, {4}), RadiusVal{0}); }) ==
        Errc::ConstantFunction);
  CHECK(code_of([&] {
          open_image_disc(build_series(p3, {{-1, 1}, {1, 1}}), RadiusVal{0});
        }) == Errc::InvalidArgument);
  const auto tailed =
      build_series(p3, {{0, 1}, {1, 9}}, TailCertificate::linear(-1, 1));
  // The tail may reach valuation 1 at n = 2, below v(9) = 2.
  CHECK(code_of([&] { open_image_disc(tailed, RadiusVal{0}); }) ==
        Errc::WindowInsufficient);
  CHECK(open_image_disc(tailed, RadiusVal{1}).delta_val == Valuation(3));
}

TEST_CASE("image disc agrees with zero counts of f - w") {
  oracle::Random rng(79);
  for (int i = 0; i < 300; ++i) {
    const PrimeContext ctx(rng.prime());
    auto f = rng.series(ctx, 0, 5, 3);
    if (f.finite_support() && f.n_max() == 0) continue;
    const RadiusVal s_r{rng.small_rational(2)};
    const Rational w = rng.uniform(0, 1)
                           ? f.coefficient(0) +
                                 rng.with_valuation(ctx.prime(), rng.uniform(-3, 4))
                           : rng.small_rational(5);
    if (w == f.coefficient(0)) continue;
    const bool contains = contains_value(f, s_r, w);
    const long zeros =
        zero_count_annulus(sub_constant(f, w), Valuation::infinity(), s_r.s);
    REQUIRE(contains == (zeros >= 1));
  }
}

TEST_CASE("sampled points land in the image disc") {
  oracle::Random rng(83);
  for (int i = 0; i < 100; ++i) {
    const PrimeContext ctx(rng.prime());
    const auto f = rng.series(ctx, 0, 6, 3);
    if (f.n_max() == 0) continue;
    const RadiusVal s_r{rng.uniform(-2, 2)};
    const auto disc = open_image_disc(f, s_r);
    for (int k = 0; k < 30; ++k) {
      const long vz = s_r.s.get_num().get_si() + rng.uniform(0, 3);
      const Rational z = rng.with_valuation(ctx.prime(), vz);
      const Rational diff = oracle::horner(f, z) - disc.center;
      REQUIRE(padic_valuation(diff, ctx) >= disc.delta_val);
    }
  }
}

TEST_CASE("witness extraction through factorization and lifting") {
  oracle::Random rng(89);
  const long N = 30;
  int lifted = 0;
  for (int i = 0; i < 200 && lifted < 60; ++i) {
    const PrimeContext ctx(rng.prime());
    const unsigned long p = ctx.prime();
    std::vector<Rational> coeffs;
    for (int n = 0; n <= 4; ++n) coeffs.push_back(Rational(rng.unit(p, 30)));
    const auto f = polynomial(ctx, coeffs);
    const RadiusVal s_r{rng.uniform(0, 2)};
    const auto disc = open_image_disc(f, s_r);
    const long dv = ceil_of(disc.delta_val.value()).get_si();
    const Rational w =
        disc.center + Rational(rng.unit(p) * power(p, std::max(dv, 0L) + rng.uniform(0, 2)));
    REQUIRE(contains_value(f, s_r, w));

    const auto g = sub_constant(f, w);
    const auto fz = slope_factorization(g, N);
    const SlopeFactor* seg = nullptr;
    for (const auto& sf : fz.factors) {
      if (-sf.slope >= s_r.s) seg = &sf;
    }
    REQUIRE(seg != nullptr);
    if (seg->degree != 1) continue;  // ramified or repeated: not liftable here
    // Monic linear factor z + c0, so the root is -c0.
    REQUIRE(seg->coefficients[1].value == 1);
    const Integer modulus = power(p, N);
    Integer root = (modulus - seg->coefficients[0].value) % modulus;
    const IntPoly F = normalized_polynomial(g);
    const auto r =
        hensel_refine_root(F, ctx, PadicApprox{ctx, root % power(p, N / 2), N / 2}, N);
    REQUIRE(oracle::eval_mod(F, r.value, modulus) == 0);
    REQUIRE(r.value % power(p, s_r.s.get_num().get_si()) == 0);
    ++lifted;
  }
  CHECK(lifted >= 20);
}
