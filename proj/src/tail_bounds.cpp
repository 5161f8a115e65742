#include "tail_bounds.hpp"

#include <algorithm>

namespace ultrapic::detail {
namespace {

constexpr long kMaxTailLines = 1'000'000;

Rational quadratic(const Rational& c2, const Rational& c1, long n) {
  return c2 * n * n + c1 * n;
}

}  // namespace

long argmin_quadratic_upto(const Rational& c2, const Rational& c1, long n_hi) {
  const Rational vertex = -c1 / (2 * c2);
  const Integer lo = floor_of(vertex);
  if (lo >= n_hi) return n_hi;
  const long a = lo.get_si();
  const long b = std::min(a + 1, n_hi);
  return quadratic(c2, c1, b) < quadratic(c2, c1, a) ? b : a;
}

Valuation positive_tail_bound(const LaurentSeries& f, const Rational& s) {
  const auto& tail = f.tail_pos();
  if (tail.is_zero()) return Valuation::infinity();
  const Rational rate = tail.coefficient() + s;
  if (rate <= 0) {
    throw Error(Errc::NonConvergent,
                "positive tail certificate does not force decay at s = " +
                    to_string(s));
  }
  const long first = f.n_max() + 1;
  return Valuation(Rational(tail.offset() + rate * first));
}

Valuation negative_tail_bound(const LaurentSeries& f, const Rational& s) {
  const auto& tail = f.tail_neg();
  if (tail.is_zero()) return Valuation::infinity();
  const long n = argmin_quadratic_upto(tail.coefficient(), s, f.n_min() - 1);
  return Valuation(Rational(tail.offset() + quadratic(tail.coefficient(), s, n)));
}

Rational lower_envelope_at(std::span<const Line> lines, const Rational& s) {
  Rational best = lines.front().at(s);
  for (const auto& line : lines.subspan(1)) {
    Rational v = line.at(s);
    if (v < best) best = std::move(v);
  }
  return best;
}

bool tails_strictly_above(const LaurentSeries& f, std::span<const Line> lines,
                          const Rational& lo, const Rational& hi,
                          std::span<const Rational> breakpoints) {
  std::vector<Rational> points{lo, hi};
  for (const auto& b : breakpoints) {
    if (b >= lo && b <= hi) points.push_back(b);
  }
  std::vector<Rational> floor;
  floor.reserve(points.size());
  for (const auto& s : points) floor.push_back(lower_envelope_at(lines, s));

  // Each tail family is a set of lines in s; a line minus the concave window
  // envelope is convex, so checking the envelope breakpoints is exact.
  std::vector<Line> tail_lines;
  if (!f.tail_pos().is_zero()) {
    const auto& t = f.tail_pos();
    if (t.coefficient() + lo <= 0) {
      throw Error(Errc::NonConvergent,
                  "positive tail certificate does not force decay at s = " +
                      to_string(lo));
    }
    const long first = f.n_max() + 1;
    tail_lines.push_back(Line{first, t.offset() + t.coefficient() * first});
  }
  if (!f.tail_neg().is_zero()) {
    const auto& t = f.tail_neg();
    const long n_hi = f.n_min() - 1;
    const long from = argmin_quadratic_upto(t.coefficient(), hi, n_hi);
    const long to = argmin_quadratic_upto(t.coefficient(), lo, n_hi);
    if (to - from > kMaxTailLines) {
      throw Error(Errc::WindowInsufficient,
                  "essential tail too flat to certify over the requested range");
    }
    for (long n = from; n <= to; ++n) {
      tail_lines.push_back(
          Line{n, t.offset() + t.coefficient() * n * n});
    }
  }
  for (const auto& line : tail_lines) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (line.at(points[i]) <= floor[i]) return false;
    }
  }
  return true;
}

std::vector<Line> window_lines(const LaurentSeries& f) {
  std::vector<Line> lines;
  lines.reserve(f.terms().size());
  for (const auto& [n, c] : f.terms()) {
    lines.push_back(Line{n, padic_valuation(c, f.context()).value()});
  }
  return lines;
}

}  // namespace ultrapic::detail
