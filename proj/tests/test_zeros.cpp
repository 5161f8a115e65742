#include "doctest.h"
#include "oracles.hpp"
#include "ultrapic/polygon.hpp"
#include "ultrapic/zeros.hpp"

using namespace ultrapic;

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

Integer power(unsigned long p, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

// Valuation of the polynomial (coefficients from z^0) at a rational point.
Rational poly_at(const std::vector<Rational>& c, const Rational& z) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

TEST_CASE("hensel_refine_root examples") {
  const PrimeContext p5(5);
  const IntPoly z2m6{-6, 0, 1};
  const auto r = hensel_refine_root(z2m6, p5, {p5, 1, 1}, 2);
  CHECK(r.value == 16);
  CHECK(r.precision == 2);
  CHECK(Integer(16 * 16 - 6) % 25 == 0);  // 256 = 6 mod 25

  const auto deep = hensel_refine_root(z2m6, p5, {p5, 1, 1}, 20);
  CHECK(deep.precision == 20);
  CHECK(oracle::eval_mod(z2m6, deep.value, power(5, 20)) == 0);
  CHECK(deep.value % 25 == 16);

  const PrimeContext p7(7);
  const auto exact = hensel_refine_root({-3, 1}, p7, {p7, 3, 1}, 30);
  CHECK(exact.value == 3);

  CHECK(code_of([&] {
          hensel_refine_root({-5, 0, 1}, p5, {p5, 0, 1}, 10);
        }) == Errc::NotLiftable);
  // Not a root mod 5.
  CHECK(code_of([&] { hensel_refine_root(z2m6, p5, {p5, 2, 1}, 10); }) ==
        Errc::NotLiftable);
}

TEST_CASE("hensel lifting is sound on constructed roots") {
  oracle::Random rng(53);
  for (int i = 0; i < 200; ++i) {
    const unsigned long p = rng.prime();
    const PrimeContext ctx(p);
    // f = (z - a)(z - b) + p^k * c with a != b mod p keeps a simple root near a.
    const long a = rng.uniform(0, 40), b = a + rng.unit(p, 20).get_si();
    const long k = rng.uniform(1, 4);
    const Integer c = rng.unit(p) * power(p, k);
    const IntPoly f{Integer(a * b) + c, Integer(-(a + b)), 1};
    const long target = rng.uniform(1, 60);
    const auto r = hensel_refine_root(f, ctx, {ctx, Integer(a) % Integer(p), 1},
                                      target);
    REQUIRE(r.precision == target);
    REQUIRE(r.value >= 0);
    REQUIRE(r.value < power(p, target));
    REQUIRE(oracle::eval_mod(f, r.value, power(p, target)) == 0);
  }
}

TEST_CASE("slope_factorization examples") {
  const PrimeContext p2(2);
  const auto f = polynomial(p2, {2, 3, 1});
  const auto fz = slope_factorization(f, 10);
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].slope == -1);
  CHECK(fz.factors[0].degree == 1);
  CHECK(fz.factors[1].slope == 0);
  CHECK(fz.factors[1].degree == 1);
  CHECK(factorization_reproduces(f, fz));

  const auto g = polynomial(p2, {-2, 0, 1});
  const auto gz = slope_factorization(g, 10);
  REQUIRE(gz.factors.size() == 1);
  CHECK(gz.factors[0].slope == Rational(-1, 2));
  CHECK(gz.factors[0].degree == 2);
  CHECK(factorization_reproduces(g, gz));

  const auto unit = slope_factorization(polynomial(PrimeContext(3), {5}), 10);
  CHECK(unit.factors.empty());
  CHECK(unit.unit_valuation == 0);
  CHECK(unit.unit.value == 5);

  // Rational coefficients and a z^-2 shift.
  const auto h = build_series(p2, {{-2, Rational(1, 4)}, {-1, 3}, {0, 1}});
  const auto hz = slope_factorization(h, 12);
  CHECK(hz.shift == -2);
  CHECK(hz.denominator == 4);
  CHECK(factorization_reproduces(h, hz));

  CHECK(code_of([&] { slope_factorization(polynomial(p2, {}), 10); }) ==
        Errc::ZeroSeries);
  CHECK(code_of([&] {
          slope_factorization(
              build_series(p2, {{0, 1}}, TailCertificate::linear(0, 1)), 10);
        }) == Errc::UnsupportedTail);
  CHECK(code_of([&] {
          slope_factorization(polynomial(p2, {2, 3, 1}), 200, {20, 40});
        }) == Errc::PrecisionExhausted);
}

TEST_CASE("slope factorization is sound and conserves degree") {
  oracle::Random rng(59);
  for (int i = 0; i < 200; ++i) {
    const PrimeContext ctx(rng.prime());
    const auto f = rng.series(ctx, 0, 6, 3);
    const auto fz = slope_factorization(f, 20);
    REQUIRE(factorization_reproduces(f, fz));
    const auto np = newton_polygon(f);
    REQUIRE(fz.factors.size() == np.segments.size());
    long degree = 0;
    for (std::size_t k = 0; k < fz.factors.size(); ++k) {
      REQUIRE(fz.factors[k].slope == np.segments[k].slope);
      REQUIRE(fz.factors[k].degree == np.segments[k].length);
      degree += fz.factors[k].degree;
    }
    REQUIRE(degree ==
            static_cast<long>(normalized_polynomial(f).size()) - 1);
  }
}

TEST_CASE("known factors and the oracle count") {
  const PrimeContext p2(2);
  const std::vector<KnownFactor> fs{linear_factor(p2, -2),
                                    linear_factor(p2, -1),
                                    quadratic_factor(p2, 2)};
  CHECK(oracle_zero_count(fs, Rational(1, 2), 1) == 3);
  CHECK(oracle_zero_count(fs, 1, 0) == 0);
  const auto f = product_series(p2, fs);
  // (z+2)(z+1)(z^2-2) = z^4 + 3z^3 - 6z - 4
  CHECK(f == polynomial(p2, {-4, -6, 0, 3, 1}));

  const std::vector<KnownFactor> cube(3, linear_factor(p2, -1));
  CHECK(oracle_zero_count(cube, 0, 0) == 3);

  CHECK(poly_at(linear_factor(p2, 6).coefficients, 6) == 0);
  CHECK(linear_factor(p2, 6).root_valuations == std::vector<Rational>{1});
  CHECK(quadratic_factor(p2, 8).root_valuations ==
        std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
}

TEST_CASE("polygon counts agree with the construction") {
  oracle::Random rng(61);
  static const Rational kVals[] = {-2, -1, Rational(-1, 2), 0,
                                   Rational(1, 2), 1, 2};
  for (int i = 0; i < 100; ++i) {
    const PrimeContext ctx(rng.prime());
    std::vector<KnownFactor> fs;
    long degree = 0;
    const long target = rng.uniform(1, 8);
    while (degree < target) {
      const Rational& v = kVals[rng.uniform(0, 6)];
      if (v.get_den() == 2 && degree + 2 <= target) {
        fs.push_back(quadratic_factor(
            ctx, rng.with_valuation(ctx.prime(), v.get_num().get_si())));
        degree += 2;
      } else if (v.get_den() == 1) {
        fs.push_back(linear_factor(
            ctx, rng.with_valuation(ctx.prime(), v.get_num().get_si())));
        degree += 1;
      }
    }
    const auto f = product_series(ctx, fs);
    for (int k = 0; k < 20; ++k) {
      Rational a = rng.small_rational(3), b = rng.small_rational(3);
      if (b < a) std::swap(a, b);
      REQUIRE(zero_count_annulus(f, Valuation(b), a) ==
              oracle_zero_count(fs, a, b));
    }
  }
}

TEST_CASE("lifting policy reads the environment") {
  setenv("ULTRAPIC_MAX_PRECISION", "64", 1);
  CHECK(LiftingPolicy::from_environment().max_digits == 64);
  unsetenv("ULTRAPIC_MAX_PRECISION");
  CHECK(LiftingPolicy::from_environment().max_digits == 16384);
}
