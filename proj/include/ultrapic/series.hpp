#pragma once

#include <map>
#include <vector>

#include "ultrapic/valuation.hpp"

namespace ultrapic {

enum class TailDirection { Positive, Negative };

/// Machine-checkable surrogate for the convergence of the part of a series
/// that lies outside its stored window.
///
///   ZeroBeyondWindow     every coefficient beyond the window is zero
///   LinearBound(A, B)    positive side only: v(a_n) >= A + B*n for n > n_max
///   EssentialQuadratic(A, C)
///                        negative side only: v(a_n) >= A + C*n^2 for
///                        n < n_min, and infinitely many of those a_n are
///                        nonzero. C > 0.
class TailCertificate {
 public:
  enum class Kind { ZeroBeyondWindow, LinearBound, EssentialQuadratic };

  /// Unvalidated; build_series rejects inconsistent combinations.
  TailCertificate(TailDirection direction, Kind kind, Rational a = 0,
                  Rational coefficient = 0)
      : direction_(direction),
        kind_(kind),
        a_(std::move(a)),
        coefficient_(std::move(coefficient)) {}

  static TailCertificate zero(TailDirection direction) {
    return TailCertificate(direction, Kind::ZeroBeyondWindow);
  }
  static TailCertificate linear(Rational a, Rational b) {
    return TailCertificate(TailDirection::Positive, Kind::LinearBound,
                           std::move(a), std::move(b));
  }
  static TailCertificate essential(Rational a, Rational c) {
    return TailCertificate(TailDirection::Negative, Kind::EssentialQuadratic,
                           std::move(a), std::move(c));
  }

  TailDirection direction() const noexcept { return direction_; }
  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::ZeroBeyondWindow; }

  /// A for both bound kinds.
  const Rational& offset() const noexcept { return a_; }
  /// B for LinearBound, C for EssentialQuadratic.
  const Rational& coefficient() const noexcept { return coefficient_; }

  friend bool operator==(const TailCertificate&,
                         const TailCertificate&) = default;

 private:
  TailDirection direction_;
  Kind kind_;
  Rational a_;
  Rational coefficient_;
};

struct Term {
  long exponent;
  Rational coefficient;
};

/// Disc radius p^(-s), identified by its exact valuation s. Larger s means a
/// smaller disc.
struct RadiusVal {
  Rational s;
};

/// Finite window of a Laurent series sum a_n z^n together with tail
/// certificates for both directions. Stored coefficients are never zero.
class LaurentSeries {
 public:
  const PrimeContext& context() const noexcept { return ctx_; }
  const std::map<long, Rational>& terms() const noexcept { return terms_; }
  const TailCertificate& tail_pos() const noexcept { return tail_pos_; }
  const TailCertificate& tail_neg() const noexcept { return tail_neg_; }

  bool empty() const noexcept { return terms_.empty(); }
  bool finite_support() const noexcept {
    return tail_pos_.is_zero() && tail_neg_.is_zero();
  }

  // Both throw Errc::ZeroSeries on an empty window.
  long n_min() const;
  long n_max() const;

  /// Coefficient inside the known range; zero for absent exponents. Throws
  /// Errc::WindowInsufficient when n falls under a nonzero tail certificate.
  Rational coefficient(long n) const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  friend LaurentSeries build_series(const PrimeContext&,
                                    const std::vector<Term>&,
                                    TailCertificate, TailCertificate);
  LaurentSeries(PrimeContext ctx, TailCertificate pos, TailCertificate neg)
      : ctx_(ctx), tail_pos_(std::move(pos)), tail_neg_(std::move(neg)) {}

  PrimeContext ctx_;
  std::map<long, Rational> terms_;
  TailCertificate tail_pos_;
  TailCertificate tail_neg_;
};

/// Drops zero coefficients. Throws DuplicateExponent for repeated exponents
/// and MalformedCertificate for a certificate in the wrong slot, of the wrong
/// kind for its direction, with C <= 0, or attached to an empty window.
LaurentSeries build_series(
    const PrimeContext& ctx, const std::vector<Term>& terms,
    TailCertificate tail_pos = TailCertificate::zero(TailDirection::Positive),
    TailCertificate tail_neg = TailCertificate::zero(TailDirection::Negative));

/// Finite-support series from coefficients a_0, a_1, ... (low to high).
LaurentSeries polynomial(const PrimeContext& ctx,
                         const std::vector<Rational>& coefficients);

/// True iff the certificates force v(a_n) + n*s -> infinity in both
/// directions for every s in [outer.s, inner]. inner may be infinite (the
/// punctured disc). Throws InvalidArgument when inner < outer.s.
bool converges_on(const LaurentSeries& f, const RadiusVal& outer,
                  const Valuation& inner);

/// Coefficientwise sum. Where a nonzero tail makes coefficients unknown, the
/// result window is cut there and the dropped terms are folded into a
/// weaker certificate. Two essential tails cannot be combined
/// (UnsupportedTail); mismatched primes throw ContextMismatch.
LaurentSeries add_series(const LaurentSeries& f, const LaurentSeries& g);

LaurentSeries negate_series(const LaurentSeries& f);

/// Exact convolution of two finite-support series; UnsupportedTail otherwise.
LaurentSeries mul_series(const LaurentSeries& f, const LaurentSeries& g);

/// Replaces a_0 by a_0 - w. Throws WindowInsufficient if a_0 is covered by a
/// nonzero tail.
LaurentSeries sub_constant(const LaurentSeries& f, const Rational& w);

struct EvalResult {
  Rational value;
  /// Lower bound on the valuation of every discarded term.
  Valuation discarded_bound;

  /// v(f(z)) when the window sum provably dominates the discarded part.
  std::optional<Valuation> certified_valuation(const PrimeContext& ctx) const;
};

/// Sums the window terms with |n| <= truncation exactly and bounds the rest
/// (window terms beyond the truncation plus both certified tails) at
/// s = v(z). Throws PoleAtOrigin for z = 0 with negative exponents, and
/// WindowInsufficient when a tail cannot be bounded at this s.
EvalResult eval_at(const LaurentSeries& f, const Rational& z,
                   long truncation);

}  // namespace ultrapic
