#include "ultrapic/picard.hpp"

#include <algorithm>
#include <optional>

#include "tail_bounds.hpp"
#include "ultrapic/polygon.hpp"

namespace ultrapic {

std::string to_string(SingularityClassification::Kind kind) {
  switch (kind) {
    case SingularityClassification::Kind::RemovableAnalytic:
      return "RemovableAnalytic";
    case SingularityClassification::Kind::Pole:
      return "Pole";
    case SingularityClassification::Kind::EssentialDeclared:
      return "EssentialDeclared";
  }
  return "Unknown";
}

bool check_zero_free(const LaurentSeries& f, const RadiusVal& s_r) {
  if (!converges_on(f, s_r, Valuation::infinity())) {
    throw Error(Errc::NonConvergent,
                "certificates do not give convergence on the punctured disc");
  }
  if (f.empty()) return false;
  // Past corner_bound the window envelope is a single line of slope n_min; a
  // positive tail only moves further above it there.
  const Rational hi = std::max(s_r.s, corner_bound(f));
  return valuation_envelope(f, s_r.s, hi).corners.empty();
}

SingularityClassification classify_singularity(const LaurentSeries& f) {
  if (!f.tail_neg().is_zero()) return SingularityClassification::essential();
  if (!f.empty() && f.n_min() < 0) {
    return SingularityClassification::pole(-f.n_min());
  }
  return SingularityClassification::removable();
}

SingularityClassification extend_across_puncture(const LaurentSeries& f,
                                                 const RadiusVal& s_r) {
  if (!check_zero_free(f, s_r)) {
    throw Error(Errc::HypothesisViolated,
                "f has a zero in the punctured disc of radius valuation " +
                    ultrapic::to_string(s_r.s));
  }
  const auto cls = classify_singularity(f);
  if (cls.kind == SingularityClassification::Kind::EssentialDeclared) {
    throw Error(Errc::ContradictionDetected,
                "zero-free on the punctured disc yet declared essential: an "
                "essential singularity forces infinitely many envelope corners");
  }
  return cls;
}

ImageDisc open_image_disc(const LaurentSeries& f, const RadiusVal& s_r) {
  if (!f.tail_neg().is_zero() || (!f.empty() && f.n_min() < 0)) {
    throw Error(Errc::InvalidArgument,
                "image disc needs a series analytic at the origin");
  }
  const PrimeContext& ctx = f.context();
  std::optional<long> lead;
  std::optional<Rational> delta;
  for (const auto& [n, c] : f.terms()) {
    if (n < 1) continue;
    if (!lead) lead = n;
    Rational v = padic_valuation(c, ctx).value() + n * s_r.s;
    if (!delta || v < *delta) delta = std::move(v);
  }
  if (!lead) {
    if (f.tail_pos().is_zero()) {
      throw Error(Errc::ConstantFunction, "f is constant");
    }
    throw Error(Errc::WindowInsufficient,
                "no nonconstant term in the window; the tail decides m");
  }
  Valuation tail = Valuation::infinity();
  try {
    tail = detail::positive_tail_bound(f, s_r.s);
  } catch (const Error& e) {
    if (e.code() != Errc::NonConvergent) throw;
    throw Error(Errc::WindowInsufficient, e.what());
  }
  if (tail < Valuation(*delta)) {
    throw Error(Errc::WindowInsufficient,
                "positive tail could undercut the window at s = " +
                    ultrapic::to_string(s_r.s));
  }
  return ImageDisc{f.empty() ? Rational(0) : f.coefficient(0),
                   Valuation(*delta), *lead};
}

bool contains_value(const LaurentSeries& f, const RadiusVal& s_r,
                    const Rational& w) {
  const ImageDisc disc = open_image_disc(f, s_r);
  return padic_valuation(Rational(disc.center - w), f.context()) >=
         disc.delta_val;
}

}  // namespace ultrapic
