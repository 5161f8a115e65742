#pragma once

#include <string>

#include "ultrapic/picard.hpp"
#include "ultrapic/polygon.hpp"
#include "ultrapic/zeros.hpp"

namespace ultrapic {

enum class OutputFormat { Tsv, Json };

// Machine output: exact "num/den" rationals only, one record per line for
// TSV, a single object for JSON. Both end with a newline.
std::string emit_polygon(const NewtonPolygon& polygon,
                         const ValuationEnvelope& envelope, OutputFormat fmt);
std::string emit_zero_count(long count, OutputFormat fmt);
std::string emit_classification(const SingularityClassification& cls,
                                OutputFormat fmt);
std::string emit_image_disc(const ImageDisc& disc, OutputFormat fmt);
std::string emit_contains(bool contained, OutputFormat fmt);
std::string emit_factorization(const SlopeFactorization& fz, OutputFormat fmt);

/// Deterministic 800x600 drawing: the envelope on top (pieces, slope labels,
/// one marker per corner), the Newton polygon below (segments labeled with
/// exact slopes and lengths). Coordinates are the only decimals, printed
/// with three places.
std::string emit_polygon_svg(const ValuationEnvelope& envelope,
                             const NewtonPolygon& polygon);

}  // namespace ultrapic
