#include "ultrapic/polygon.hpp"

#include <algorithm>
#include <optional>

#include "tail_bounds.hpp"

namespace ultrapic {
namespace {

using detail::Line;

// (b - o) x (c - o) for points (n, v); <= 0 means o, b, c do not turn left.
Rational cross(const HullVertex& o, const HullVertex& b, const HullVertex& c) {
  return (b.exponent - o.exponent) * (c.valuation - o.valuation) -
         (b.valuation - o.valuation) * (c.exponent - o.exponent);
}

void check_polygon_tails(const LaurentSeries& f, const NewtonPolygon& poly) {
  if (poly.segments.empty()) return;  // nothing to certify
  if (const auto& t = f.tail_pos(); !t.is_zero()) {
    const Rational& slope = poly.segments.back().slope;
    const HullVertex& last = poly.vertices.back();
    const long next = last.exponent + 1;
    if (t.coefficient() < slope ||
        t.offset() + t.coefficient() * next <= last.valuation + slope) {
      throw Error(Errc::WindowInsufficient,
                  "positive tail could reach below the last Newton segment");
    }
  }
  if (const auto& t = f.tail_neg(); !t.is_zero()) {
    const Rational& slope = poly.segments.front().slope;
    const HullVertex& first = poly.vertices.front();
    // A + C n^2 - (v0 + slope (n - n0)) > 0 for every n < n0.
    const long n = detail::argmin_quadratic_upto(t.coefficient(), -slope,
                                                 first.exponent - 1);
    const Rational gap = t.offset() + t.coefficient() * n * n -
                         first.valuation - slope * (n - first.exponent);
    if (gap <= 0) {
      throw Error(Errc::WindowInsufficient,
                  "negative tail could reach below the first Newton segment");
    }
  }
}

struct Attaining {
  Rational value;
  std::size_t lowest;   // index of the smallest exponent attaining the min
  std::size_t highest;  // index of the largest one
};

Attaining attaining_at(const std::vector<Line>& lines, const Rational& s) {
  Attaining a{lines.front().at(s), 0, 0};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Rational v = lines[i].at(s);
    const int c = cmp(v, a.value);
    if (c < 0) {
      a = Attaining{std::move(v), i, i};
    } else if (c == 0) {
      a.highest = i;  // lines are sorted by exponent
    }
  }
  return a;
}

// Kinetic sweep from s_lo to s_hi. Independent of the hull construction;
// duality_check compares the two.
ValuationEnvelope sweep(const std::vector<Line>& lines, const Rational& s_lo,
                        const Rational& s_hi) {
  ValuationEnvelope env{s_lo, s_hi, {}, {}};
  Attaining start = attaining_at(lines, s_lo);
  if (start.highest != start.lowest) {
    env.corners.push_back(Corner{s_lo, start.value, lines[start.highest].slope,
                                 lines[start.lowest].slope});
  }
  std::size_t cur = start.lowest;
  Rational s_cur = s_lo;
  for (;;) {
    std::optional<Rational> next;
    for (std::size_t k = 0; k < cur; ++k) {
      Rational s = (lines[k].intercept - lines[cur].intercept) /
                   (lines[cur].slope - lines[k].slope);
      if (s > s_cur && (!next || s < *next)) next = std::move(s);
    }
    if (!next || *next > s_hi) {
      env.pieces.push_back(EnvelopePiece{s_cur, s_hi, lines[cur].slope,
                                         lines[cur].intercept});
      break;
    }
    env.pieces.push_back(EnvelopePiece{s_cur, *next, lines[cur].slope,
                                       lines[cur].intercept});
    Attaining at = attaining_at(lines, *next);
    env.corners.push_back(
        Corner{*next, at.value, lines[cur].slope, lines[at.lowest].slope});
    if (*next == s_hi) break;
    cur = at.lowest;
    s_cur = *next;
  }
  return env;
}

}  // namespace

Rational ValuationEnvelope::value_at(const Rational& s) const {
  for (const auto& piece : pieces) {
    if (s >= piece.s_from && s <= piece.s_to) {
      return piece.intercept + piece.exponent * s;
    }
  }
  throw Error(Errc::InvalidArgument,
              "s = " + to_string(s) + " is outside the envelope domain");
}

NewtonPolygon newton_polygon(const LaurentSeries& f) {
  if (f.empty()) throw Error(Errc::ZeroSeries, "Newton polygon of zero");
  std::vector<HullVertex> hull;
  for (const auto& [n, c] : f.terms()) {
    HullVertex p{n, padic_valuation(c, f.context()).value()};
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(std::move(p));
  }
  NewtonPolygon poly;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long length = hull[i].exponent - hull[i - 1].exponent;
    poly.segments.push_back(Segment{
        Rational((hull[i].valuation - hull[i - 1].valuation) / length),
        length});
  }
  poly.vertices = std::move(hull);
  check_polygon_tails(f, poly);
  return poly;
}

ValuationEnvelope valuation_envelope(const LaurentSeries& f,
                                     const Rational& s_lo,
                                     const Rational& s_hi) {
  if (s_hi < s_lo) {
    throw Error(Errc::InvalidArgument, "empty s-range");
  }
  if (f.empty()) throw Error(Errc::ZeroSeries, "envelope of zero");
  if (!converges_on(f, RadiusVal{s_lo}, Valuation(s_hi))) {
    throw Error(Errc::NonConvergent,
                "certificates do not give convergence on the annulus");
  }
  const auto lines = detail::window_lines(f);
  ValuationEnvelope env = sweep(lines, s_lo, s_hi);
  if (!f.finite_support()) {
    std::vector<Rational> breakpoints;
    for (const auto& c : env.corners) breakpoints.push_back(c.s0);
    if (!detail::tails_strictly_above(f, lines, s_lo, s_hi, breakpoints)) {
      throw Error(Errc::WindowInsufficient,
                  "a tail term could touch the envelope on [" +
                      to_string(s_lo) + ", " + to_string(s_hi) + "]");
    }
  }
  return env;
}

Valuation envelope_value(const LaurentSeries& f, const Rational& s) {
  if (f.empty()) return Valuation::infinity();
  const auto lines = detail::window_lines(f);
  Valuation window(detail::lower_envelope_at(lines, s));
  Valuation tail = Valuation::infinity();
  try {
    tail = detail::tail_bound(f, s);
  } catch (const Error& e) {
    if (e.code() != Errc::NonConvergent) throw;
    throw Error(Errc::WindowInsufficient, e.what());
  }
  if (tail < window) {
    throw Error(Errc::WindowInsufficient,
                "tail certificate could undercut the window at s = " +
                    to_string(s));
  }
  return window;
}

Rational corner_bound(const LaurentSeries& f) {
  if (f.empty()) return Rational(0);
  std::optional<Rational> lo, hi;
  for (const auto& line : detail::window_lines(f)) {
    if (!lo || line.intercept < *lo) lo = line.intercept;
    if (!hi || line.intercept > *hi) hi = line.intercept;
  }
  // Distinct exponents differ by at least one, so corners satisfy
  // |s0| = |dv / dn| <= max v - min v.
  return *hi - *lo;
}

long zero_count_annulus(const LaurentSeries& f, const Valuation& s_inner,
                        const Rational& s_outer) {
  if (s_inner < Valuation(s_outer)) {
    throw Error(Errc::InvalidArgument,
                "zero count needs s_outer <= s_inner");
  }
  if (f.empty()) throw Error(Errc::ZeroSeries, "zero count of zero");
  Rational hi;
  if (s_inner.is_infinite()) {
    if (!f.tail_neg().is_zero()) {
      throw Error(Errc::WindowInsufficient,
                  "essential tail has corners accumulating at the puncture");
    }
    hi = std::max(s_outer, corner_bound(f));
  } else {
    hi = s_inner.value();
  }
  long count = 0;
  for (const auto& c : valuation_envelope(f, s_outer, hi).corners) {
    count += c.sharpness();
  }
  return count;
}

long zero_count_total(const LaurentSeries& f) {
  if (!f.finite_support()) {
    throw Error(Errc::WindowInsufficient,
                "total zero count needs finite support");
  }
  const Rational bound = corner_bound(f);
  return zero_count_annulus(f, Valuation(bound), Rational(-bound));
}

bool duality_check(const LaurentSeries& f, const Rational& s_lo,
                   const Rational& s_hi) {
  const NewtonPolygon poly = newton_polygon(f);
  const ValuationEnvelope env = valuation_envelope(f, s_lo, s_hi);

  std::vector<std::pair<Rational, long>> from_segments;
  for (auto it = poly.segments.rbegin(); it != poly.segments.rend(); ++it) {
    Rational s0 = -it->slope;
    if (s0 >= s_lo && s0 <= s_hi) from_segments.emplace_back(s0, it->length);
  }
  std::vector<std::pair<Rational, long>> from_corners;
  for (const auto& c : env.corners) {
    from_corners.emplace_back(c.s0, c.sharpness());
  }
  return from_segments == from_corners;
}

}  // namespace ultrapic
