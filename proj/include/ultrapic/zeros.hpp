#pragma once

#include <span>
#include <vector>

#include "ultrapic/series.hpp"

namespace ultrapic {

/// An element of Z_p known modulo p^precision; 0 <= value < p^precision.
struct PadicApprox {
  PrimeContext ctx;
  Integer value;
  long precision;

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;
};

/// Integer polynomial, coefficients from z^0 upward.
using IntPoly = std::vector<Integer>;

/// Working-precision schedule for lifting: start at initial_digits, double
/// on failure, give up past max_digits.
struct LiftingPolicy {
  long initial_digits = 20;
  long max_digits = 16384;

  /// Defaults, with max_digits overridden by ULTRAPIC_MAX_PRECISION if set.
  static LiftingPolicy from_environment();
};

/// Newton iteration for a root of f near seed. Requires
/// v(f(seed)) >= 2 v(f'(seed)) + 1 with f'(seed) != 0 (NotLiftable
/// otherwise). The result r satisfies f(r) = 0 mod p^target_precision and
/// agrees with the true root to that precision.
PadicApprox hensel_refine_root(const IntPoly& f, const PrimeContext& ctx,
                               const PadicApprox& seed, long target_precision,
                               const LiftingPolicy& policy = {});

/// The part of a polynomial whose roots all have valuation -slope. Fractional
/// slopes stay unsplit. Coefficients are primitive (some coefficient is a
/// unit) with leading coefficient a power of p.
struct SlopeFactor {
  Rational slope;
  long degree;
  std::vector<PadicApprox> coefficients;
};

/// denominator * f(z) = z^shift * p^unit_valuation * unit * prod(factors),
/// where the right-hand product holds modulo p^(precision + unit_valuation).
/// denominator is the lcm of the coefficient denominators.
struct SlopeFactorization {
  long precision;
  long shift;
  Integer denominator;
  long unit_valuation;
  PadicApprox unit;
  std::vector<SlopeFactor> factors;
};

/// One factor per Newton segment, split off leftmost (largest root
/// valuation) first. Requires finite support (UnsupportedTail) and a nonzero
/// series (ZeroSeries). Throws PrecisionExhausted when the policy cap is
/// reached before the factors verify.
SlopeFactorization slope_factorization(const LaurentSeries& f, long precision,
                                       const LiftingPolicy& policy = {});

/// The normalized integer polynomial that slope_factorization factors:
/// denominator * f / z^shift / p^unit_valuation.
IntPoly normalized_polynomial(const LaurentSeries& f);

/// Exact modular check of the factorization identity.
bool factorization_reproduces(const LaurentSeries& f,
                              const SlopeFactorization& fz);

/// A factor whose root valuations are known by construction. Used to build
/// test products with an answer that involves no polygon code.
struct KnownFactor {
  std::vector<Rational> coefficients;
  std::vector<Rational> root_valuations;
};

/// z - root.
KnownFactor linear_factor(const PrimeContext& ctx, const Rational& root);
/// z^2 - c; both roots have valuation v(c)/2.
KnownFactor quadratic_factor(const PrimeContext& ctx, const Rational& c);

LaurentSeries product_series(const PrimeContext& ctx,
                             std::span<const KnownFactor> factors);

/// Roots (with multiplicity) whose valuation lies in [lo, hi]; 0 when
/// lo > hi.
long oracle_zero_count(std::span<const KnownFactor> factors,
                       const Rational& lo, const Rational& hi);

}  // namespace ultrapic
