#pragma once

#include <string>

#include "ultrapic/series.hpp"

namespace ultrapic {

/// How a series behaves at the puncture z = 0.
struct SingularityClassification {
  enum class Kind { RemovableAnalytic, Pole, EssentialDeclared };

  Kind kind;
  long pole_order = 0;  // m >= 1 when kind == Pole

  static SingularityClassification removable() {
    return {Kind::RemovableAnalytic, 0};
  }
  static SingularityClassification pole(long order) {
    return {Kind::Pole, order};
  }
  static SingularityClassification essential() {
    return {Kind::EssentialDeclared, 0};
  }

  friend bool operator==(const SingularityClassification&,
                         const SingularityClassification&) = default;
};

std::string to_string(SingularityClassification::Kind kind);

/// The image of the closed disc of radius p^(-s_r) is the disc around f(0) of
/// radius p^(-delta_val).
struct ImageDisc {
  Rational center;
  Valuation delta_val;
  long lead_exponent;  // least n >= 1 with a_n != 0
};

/// True iff no envelope corner (hence no zero) lies at s >= s_r within the
/// range the window can certify: [s_r, max(s_r, corner_bound(f))]. An
/// essential tail is judged only on that range. Throws NonConvergent if the
/// certificates do not give convergence on the punctured disc and
/// WindowInsufficient if a tail could create a corner there.
bool check_zero_free(const LaurentSeries& f, const RadiusVal& s_r);

/// RemovableAnalytic, Pole(m) with m = -n_min, or EssentialDeclared.
SingularityClassification classify_singularity(const LaurentSeries& f);

/// Extension across the puncture for a series that omits 0 (and, being a
/// series, infinity). Throws HypothesisViolated when f has a zero in the
/// punctured disc and ContradictionDetected when a zero-free f declares an
/// essential singularity; never returns EssentialDeclared.
SingularityClassification extend_across_puncture(const LaurentSeries& f,
                                                 const RadiusVal& s_r);

/// delta_val = min over n >= m of v(a_n) + n*s_r. Needs n_min >= 0 and a
/// zero negative tail (InvalidArgument), a non-constant f (ConstantFunction),
/// and a positive tail that cannot undercut the window minimum
/// (WindowInsufficient).
ImageDisc open_image_disc(const LaurentSeries& f, const RadiusVal& s_r);

/// Whether w is attained on the disc: v(f(0) - w) >= delta_val.
bool contains_value(const LaurentSeries& f, const RadiusVal& s_r,
                    const Rational& w);

}  // namespace ultrapic
