#include "ultrapic/series.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "tail_bounds.hpp"

namespace ultrapic {
namespace {

using Kind = TailCertificate::Kind;

void check_certificate(const TailCertificate& t, TailDirection slot) {
  if (t.direction() != slot) {
    throw Error(Errc::MalformedCertificate,
                "certificate attached to the wrong tail direction");
  }
  if (t.kind() == Kind::LinearBound && slot != TailDirection::Positive) {
    throw Error(Errc::MalformedCertificate,
                "linear bound is only valid on the positive tail");
  }
  if (t.kind() == Kind::EssentialQuadratic) {
    if (slot != TailDirection::Negative) {
      throw Error(Errc::MalformedCertificate,
                  "essential quadratic bound is only valid on the negative tail");
    }
    if (t.coefficient() <= 0) {
      throw Error(Errc::MalformedCertificate,
                  "essential quadratic bound needs C > 0");
    }
  }
}

void check_same_context(const LaurentSeries& f, const LaurentSeries& g) {
  if (!(f.context() == g.context())) {
    throw Error(Errc::ContextMismatch,
                "series over p = " + std::to_string(f.context().prime()) +
                    " and p = " + std::to_string(g.context().prime()));
  }
}

// Known exponent range: unbounded on a side whose tail is zero.
std::optional<long> known_hi(const LaurentSeries& f) {
  if (f.tail_pos().is_zero()) return std::nullopt;
  return f.n_max();
}
std::optional<long> known_lo(const LaurentSeries& f) {
  if (f.tail_neg().is_zero()) return std::nullopt;
  return f.n_min();
}

std::vector<Term> to_terms(const std::map<long, Rational>& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (const auto& [n, c] : m) out.push_back(Term{n, c});
  return out;
}

}  // namespace

long LaurentSeries::n_min() const {
  if (terms_.empty()) throw Error(Errc::ZeroSeries, "series has no terms");
  return terms_.begin()->first;
}

long LaurentSeries::n_max() const {
  if (terms_.empty()) throw Error(Errc::ZeroSeries, "series has no terms");
  return terms_.rbegin()->first;
}

Rational LaurentSeries::coefficient(long n) const {
  if ((!tail_pos_.is_zero() && n > n_max()) ||
      (!tail_neg_.is_zero() && n < n_min())) {
    throw Error(Errc::WindowInsufficient,
                "coefficient " + std::to_string(n) + " lies under a tail");
  }
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSeries build_series(const PrimeContext& ctx,
                           const std::vector<Term>& terms,
                           TailCertificate tail_pos, TailCertificate tail_neg) {
  check_certificate(tail_pos, TailDirection::Positive);
  check_certificate(tail_neg, TailDirection::Negative);
  LaurentSeries f(ctx, std::move(tail_pos), std::move(tail_neg));
  std::map<long, Rational> seen;
  for (const auto& t : terms) {
    Rational c(t.coefficient);
    c.canonicalize();
    if (!seen.emplace(t.exponent, c).second) {
      throw Error(Errc::DuplicateExponent,
                  "exponent " + std::to_string(t.exponent) + " given twice");
    }
    if (c != 0) f.terms_.emplace(t.exponent, std::move(c));
  }
  if (f.terms_.empty() && !f.finite_support()) {
    throw Error(Errc::MalformedCertificate,
                "a nonzero tail needs a nonempty window to anchor it");
  }
  return f;
}

LaurentSeries polynomial(const PrimeContext& ctx,
                         const std::vector<Rational>& coefficients) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    terms.push_back(Term{static_cast<long>(i), coefficients[i]});
  }
  return build_series(ctx, terms);
}

bool converges_on(const LaurentSeries& f, const RadiusVal& outer,
                  const Valuation& inner) {
  if (inner < Valuation(outer.s)) {
    throw Error(Errc::InvalidArgument,
                "annulus needs outer radius >= inner radius (s1 <= s2)");
  }
  const auto& pos = f.tail_pos();
  if (!pos.is_zero() && pos.coefficient() + outer.s <= 0) return false;
  // Quadratic growth on the negative side beats n*s for every finite s.
  return true;
}

LaurentSeries add_series(const LaurentSeries& f, const LaurentSeries& g) {
  check_same_context(f, g);
  if (!f.tail_neg().is_zero() && !g.tail_neg().is_zero()) {
    throw Error(Errc::UnsupportedTail,
                "cannot certify the sum of two essential tails");
  }

  std::optional<long> hi_cut;
  for (const auto* s : {&f, &g}) {
    if (auto h = known_hi(*s)) hi_cut = hi_cut ? std::min(*hi_cut, *h) : *h;
  }
  std::optional<long> lo_cut;
  for (const auto* s : {&f, &g}) {
    if (auto l = known_lo(*s)) lo_cut = l;
  }
  auto inside = [&](long n) {
    return (!hi_cut || n <= *hi_cut) && (!lo_cut || n >= *lo_cut);
  };

  std::map<long, Rational> sum;
  std::vector<Term> dropped_hi, dropped_lo;
  for (const auto* s : {&f, &g}) {
    for (const auto& [n, c] : s->terms()) {
      if (inside(n)) {
        sum[n] += c;
      } else if (hi_cut && n > *hi_cut) {
        dropped_hi.push_back(Term{n, c});
      } else {
        dropped_lo.push_back(Term{n, c});
      }
    }
  }

  const PrimeContext& ctx = f.context();
  auto pos = TailCertificate::zero(TailDirection::Positive);
  if (hi_cut) {
    // Weakest slope, then the largest offset under every constituent bound.
    std::optional<Rational> slope;
    for (const auto* s : {&f, &g}) {
      if (!s->tail_pos().is_zero()) {
        const Rational& b = s->tail_pos().coefficient();
        if (!slope || b < *slope) slope = b;
      }
    }
    std::optional<Rational> offset;
    auto lower = [&](Rational candidate) {
      if (!offset || candidate < *offset) offset = std::move(candidate);
    };
    for (const auto* s : {&f, &g}) {
      const auto& t = s->tail_pos();
      if (t.is_zero()) continue;
      lower(t.offset() + (t.coefficient() - *slope) * (s->n_max() + 1));
    }
    for (const auto& d : dropped_hi) {
      lower(padic_valuation(d.coefficient, ctx).value() - *slope * d.exponent);
    }
    pos = TailCertificate::linear(*offset, *slope);
  }

  auto neg = TailCertificate::zero(TailDirection::Negative);
  if (lo_cut) {
    const auto& t = f.tail_neg().is_zero() ? g.tail_neg() : f.tail_neg();
    Rational offset = t.offset();
    for (const auto& d : dropped_lo) {
      Rational bound = padic_valuation(d.coefficient, ctx).value() -
                       t.coefficient() * d.exponent * d.exponent;
      if (bound < offset) offset = bound;
    }
    neg = TailCertificate::essential(offset, t.coefficient());
  }

  std::vector<Term> terms;
  for (auto& [n, c] : sum) {
    if (c != 0) terms.push_back(Term{n, c});
  }
  if (terms.empty() && !(pos.is_zero() && neg.is_zero())) {
    throw Error(Errc::WindowInsufficient,
                "sum cancels the whole certified window");
  }
  return build_series(ctx, terms, pos, neg);
}

LaurentSeries negate_series(const LaurentSeries& f) {
  std::vector<Term> terms;
  for (const auto& [n, c] : f.terms()) terms.push_back(Term{n, -c});
  return build_series(f.context(), terms, f.tail_pos(), f.tail_neg());
}

LaurentSeries mul_series(const LaurentSeries& f, const LaurentSeries& g) {
  check_same_context(f, g);
  if (!f.finite_support() || !g.finite_support()) {
    throw Error(Errc::UnsupportedTail,
                "windowed multiplication needs finite support on both sides");
  }
  std::map<long, Rational> product;
  for (const auto& [i, a] : f.terms()) {
    for (const auto& [j, b] : g.terms()) product[i + j] += a * b;
  }
  std::vector<Term> terms;
  for (auto& [n, c] : product) {
    if (c != 0) terms.push_back(Term{n, c});
  }
  return build_series(f.context(), terms);
}

LaurentSeries sub_constant(const LaurentSeries& f, const Rational& w) {
  const auto hi = f.empty() ? std::nullopt : known_hi(f);
  const auto lo = f.empty() ? std::nullopt : known_lo(f);
  if ((hi && *hi < 0) || (lo && *lo > 0)) {
    throw Error(Errc::WindowInsufficient,
                "constant term lies under a tail certificate");
  }
  auto m = f.terms();
  m[0] -= w;
  if (m[0] == 0) m.erase(0);
  if (m.empty() && !f.finite_support()) {
    throw Error(Errc::WindowInsufficient,
                "subtraction cancels the whole certified window");
  }
  return build_series(f.context(), to_terms(m), f.tail_pos(), f.tail_neg());
}

std::optional<Valuation> EvalResult::certified_valuation(
    const PrimeContext& ctx) const {
  Valuation v = padic_valuation(value, ctx);
  if (v < discarded_bound) return v;
  return std::nullopt;
}

EvalResult eval_at(const LaurentSeries& f, const Rational& z, long truncation) {
  if (truncation < 0) {
    throw Error(Errc::InvalidArgument, "truncation must be non-negative");
  }
  const PrimeContext& ctx = f.context();
  if (z == 0) {
    if (!f.tail_neg().is_zero() || (!f.empty() && f.n_min() < 0)) {
      throw Error(Errc::PoleAtOrigin, "series has negative exponents at z = 0");
    }
    // Positive powers of zero vanish exactly, tail included.
    return EvalResult{f.empty() ? Rational(0) : f.coefficient(0),
                      Valuation::infinity()};
  }

  if (f.empty()) return EvalResult{Rational(0), Valuation::infinity()};
  const Rational s = padic_valuation(z, ctx).value();
  Valuation bound = Valuation::infinity();
  try {
    bound = detail::tail_bound(f, s);
  } catch (const Error& e) {
    if (e.code() != Errc::NonConvergent) throw;
    throw Error(Errc::WindowInsufficient, e.what());
  }

  Rational value = 0;
  for (const auto& [n, c] : f.terms()) {
    if (n > truncation || n < -truncation) {
      bound = val_min(bound, Valuation(Rational(
                                 padic_valuation(c, ctx).value() + n * s)));
      continue;
    }
    value += c * rational_pow(z, n);
  }
  value.canonicalize();
  return EvalResult{std::move(value), std::move(bound)};
}

}  // namespace ultrapic
