#pragma once

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "ultrapic/error.hpp"

namespace ultrapic {

using Integer = mpz_class;
using Rational = mpq_class;

/// The residue characteristic p. All valuations are normalized so v(p) = 1
/// and |x| = p^(-v(x)). Coefficients live in Q; valuations of zeros reported
/// elsewhere refer to roots in an algebraic closure of Q_p.
class PrimeContext {
 public:
  /// Throws Errc::NonPrime unless p is a prime >= 2.
  explicit PrimeContext(unsigned long p);

  unsigned long prime() const noexcept { return p_; }

  /// p^e for e >= 0.
  Integer power(unsigned long e) const;

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  unsigned long p_;
};

bool is_prime(unsigned long n) noexcept;

/// An exact rational valuation, or +infinity (the valuation of 0).
class Valuation {
 public:
  Valuation(Rational value) : value_(std::move(value)) { value_->canonicalize(); }
  Valuation(long value) : value_(Rational(value)) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Throws Errc::InvalidArgument when infinite.
  const Rational& value() const;

  /// "inf" or the canonical "num/den" form.
  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

Valuation val_min(const Valuation& a, const Valuation& b);
Valuation val_add(const Valuation& a, const Valuation& b);

inline Valuation operator+(const Valuation& a, const Valuation& b) {
  return val_add(a, b);
}

/// Exponent of p in x (numerator minus denominator); infinity iff x == 0.
Valuation padic_valuation(const Rational& x, const PrimeContext& ctx);

/// Exponent of p in a nonzero integer.
long padic_valuation(const Integer& x, const PrimeContext& ctx);

/// Exponent of p in a nonzero rational, as a plain integer.
long padic_order(const Rational& x, const PrimeContext& ctx);

// Small exact helpers shared across modules.
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
Rational rational_pow(const Rational& base, long exponent);
std::string to_string(const Rational& x);

}  // namespace ultrapic
