#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ultrapic/series.hpp"

namespace ultrapic {

/// The parsed contents of a series file, before any analysis. Zero
/// coefficients are kept here and only dropped by to_series.
///
/// Format (UTF-8, one directive per line, '#' starts a comment):
///
///   prime: <integer>                    required, first directive
///   term: <exponent> <rational>         repeatable
///   tail+: zero | linear <A> <B>        default zero
///   tail-: zero | essential <A> <C>     default zero
///
/// Rationals are integers or num/den.
struct SeriesDocument {
  unsigned long prime = 0;
  std::vector<Term> terms;
  TailCertificate tail_pos = TailCertificate::zero(TailDirection::Positive);
  TailCertificate tail_neg = TailCertificate::zero(TailDirection::Negative);

  friend bool operator==(const SeriesDocument& a, const SeriesDocument& b);
};

/// Throws Error with code ParseError, NonPrime, DuplicateExponent or
/// MalformedCertificate; the message starts with "line L, column C:".
SeriesDocument parse_series_file(std::string_view text);

/// Canonical text; parse_series_file(serialize_series(d)) == d.
std::string serialize_series(const SeriesDocument& doc);

LaurentSeries to_series(const SeriesDocument& doc);
SeriesDocument to_document(const LaurentSeries& f);

/// Strict rational syntax: [+-]digits or [+-]digits/digits, nonzero
/// denominator. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace ultrapic
