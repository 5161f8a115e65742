#pragma once

// Lower bounds on the valuations of the terms a_n z^n hidden behind tail
// certificates, as functions of s = v(z).

#include <span>

#include "ultrapic/series.hpp"

namespace ultrapic::detail {

/// argmin of c2*n^2 + c1*n over integers n <= n_hi, c2 > 0.
long argmin_quadratic_upto(const Rational& c2, const Rational& c1, long n_hi);

/// Bound on v(a_n) + n*s over the positive tail, or infinity for a zero tail.
/// Throws NonConvergent when the linear certificate does not force decay at s.
Valuation positive_tail_bound(const LaurentSeries& f, const Rational& s);

/// Bound on v(a_n) + n*s over the negative tail, or infinity for a zero tail.
Valuation negative_tail_bound(const LaurentSeries& f, const Rational& s);

inline Valuation tail_bound(const LaurentSeries& f, const Rational& s) {
  return val_min(positive_tail_bound(f, s), negative_tail_bound(f, s));
}

/// Concave piecewise-linear floor given by a finite set of lines
/// intercept + slope*s; the window part of the envelope.
struct Line {
  long slope;
  Rational intercept;
  Rational at(const Rational& s) const { return intercept + slope * s; }
};

Rational lower_envelope_at(std::span<const Line> lines, const Rational& s);

/// True iff every tail term stays strictly above the window envelope on
/// [lo, hi]. breakpoints must contain every corner of the window envelope in
/// the interval; the endpoints are added here. Throws NonConvergent if the
/// positive tail does not decay somewhere on the interval.
bool tails_strictly_above(const LaurentSeries& f, std::span<const Line> lines,
                          const Rational& lo, const Rational& hi,
                          std::span<const Rational> breakpoints);

std::vector<Line> window_lines(const LaurentSeries& f);

}  // namespace ultrapic::detail
