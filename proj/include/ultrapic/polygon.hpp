#pragma once

#include <vector>

#include "ultrapic/series.hpp"

namespace ultrapic {

struct HullVertex {
  long exponent;
  Rational valuation;
  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

/// A Newton segment of slope sigma and horizontal length l certifies exactly
/// l zeros (with multiplicity, in the algebraic closure) of valuation -sigma.
struct Segment {
  Rational slope;
  long length;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of {(n, v(a_n))}. Collinear interior points are not
/// vertices; slopes strictly increase along the segments.
struct NewtonPolygon {
  std::vector<HullVertex> vertices;
  std::vector<Segment> segments;
};

/// On [s_from, s_to] the envelope equals intercept + exponent * s.
struct EnvelopePiece {
  Rational s_from;
  Rational s_to;
  long exponent;
  Rational intercept;
};

/// A breakpoint of the envelope. n_left minimizes just below s0, n_right just
/// above; both attain the minimum at s0.
struct Corner {
  Rational s0;
  Rational value;
  long n_left;
  long n_right;

  long sharpness() const noexcept { return n_left - n_right; }
};

/// V_f(s) = min_n (v(a_n) + n*s) over a closed s-interval: the valuation form
/// of log|f|_t against log t, with t = p^(-s).
struct ValuationEnvelope {
  Rational s_lo;
  Rational s_hi;
  std::vector<EnvelopePiece> pieces;
  std::vector<Corner> corners;

  /// Throws InvalidArgument outside [s_lo, s_hi].
  Rational value_at(const Rational& s) const;
};

/// Monotone-chain lower hull over exact rationals. Throws ZeroSeries on an
/// empty window and WindowInsufficient when a tail certificate could reach
/// below the extension of the first or last segment.
NewtonPolygon newton_polygon(const LaurentSeries& f);

/// Exact lower envelope by a sweep over the window lines. Corners at either
/// endpoint are included. Throws ZeroSeries, NonConvergent when the
/// certificates do not give convergence on the annulus, and
/// WindowInsufficient when a tail term could touch the envelope.
ValuationEnvelope valuation_envelope(const LaurentSeries& f,
                                     const Rational& s_lo,
                                     const Rational& s_hi);

/// V_f(s); infinity for the zero series. Tail terms may tie with the window
/// minimum but not undercut it (WindowInsufficient).
Valuation envelope_value(const LaurentSeries& f, const Rational& s);

/// Every corner of the window envelope lies in [-bound, bound].
Rational corner_bound(const LaurentSeries& f);

/// Total multiplicity of zeros with valuation in the closed interval
/// [s_outer, s_inner]. s_inner may be infinite, meaning the whole disc of
/// radius p^(-s_outer); that needs a zero negative tail.
long zero_count_annulus(const LaurentSeries& f, const Valuation& s_inner,
                        const Rational& s_outer);

/// Zeros of every valuation, for finite-support f.
long zero_count_total(const LaurentSeries& f);

/// True iff the envelope corners in [s_lo, s_hi] and the Newton segments with
/// -slope in [s_lo, s_hi] correspond one to one (s0 = -slope, sharpness =
/// length).
bool duality_check(const LaurentSeries& f, const Rational& s_lo,
                   const Rational& s_hi);

}  // namespace ultrapic
