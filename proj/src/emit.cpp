#include "ultrapic/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace ultrapic {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_residues(const std::vector<PadicApprox>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += coeffs[i].value.get_str();
  }
  return out;
}

// ---- SVG ----------------------------------------------------------------

constexpr double kLeft = 60.0;
constexpr double kRight = 740.0;
constexpr double kEnvTop = 50.0;
constexpr double kEnvBottom = 260.0;
constexpr double kPolyTop = 350.0;
constexpr double kPolyBottom = 560.0;

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x + 0.0);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// Linear map of x in [a0, a1] onto [p0, p1]; the midpoint when a0 == a1.
double place(const Rational& x, const Rational& a0, const Rational& a1,
             double p0, double p1) {
  if (a0 == a1) return (p0 + p1) / 2.0;
  const Rational t = (x - a0) / (a1 - a0);
  return p0 + t.get_d() * (p1 - p0);
}

class SvgWriter {
 public:
  void line(const char* cls, double x1, double y1, double x2, double y2) {
    out_ << "<line class=\"" << cls << "\" x1=\"" << fixed3(x1) << "\" y1=\""
         << fixed3(y1) << "\" x2=\"" << fixed3(x2) << "\" y2=\"" << fixed3(y2)
         << "\"/>\n";
  }
  void circle(const char* cls, double cx, double cy, int r) {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << fixed3(cx)
         << "\" cy=\"" << fixed3(cy) << "\" r=\"" << r << "\"/>\n";
  }
  void text(const char* cls, double x, double y, const std::string& body) {
    out_ << "<text class=\"" << cls << "\" x=\"" << fixed3(x) << "\" y=\""
         << fixed3(y) << "\">" << body << "</text>\n";
  }
  void raw(const std::string& s) { out_ << s; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace

std::string emit_polygon(const NewtonPolygon& polygon,
                         const ValuationEnvelope& envelope, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j;
    j["range"] = {to_string(envelope.s_lo), to_string(envelope.s_hi)};
    j["vertices"] = Json::array();
    for (const auto& v : polygon.vertices) {
      j["vertices"].push_back({{"n", v.exponent}, {"v", to_string(v.valuation)}});
    }
    j["segments"] = Json::array();
    for (const auto& s : polygon.segments) {
      j["segments"].push_back(
          {{"slope", to_string(s.slope)}, {"length", s.length}});
    }
    j["pieces"] = Json::array();
    for (const auto& p : envelope.pieces) {
      j["pieces"].push_back({{"from", to_string(p.s_from)},
                             {"to", to_string(p.s_to)},
                             {"n", p.exponent},
                             {"intercept", to_string(p.intercept)}});
    }
    j["corners"] = Json::array();
    for (const auto& c : envelope.corners) {
      j["corners"].push_back({{"s0", to_string(c.s0)},
                              {"value", to_string(c.value)},
                              {"n_left", c.n_left},
                              {"n_right", c.n_right},
                              {"sharpness", c.sharpness()}});
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "range\t" << to_string(envelope.s_lo) << '\t'
      << to_string(envelope.s_hi) << '\n';
  for (const auto& v : polygon.vertices) {
    out << "vertex\t" << v.exponent << '\t' << to_string(v.valuation) << '\n';
  }
  for (const auto& s : polygon.segments) {
    out << "segment\t" << to_string(s.slope) << '\t' << s.length << '\n';
  }
  for (const auto& p : envelope.pieces) {
    out << "piece\t" << to_string(p.s_from) << '\t' << to_string(p.s_to)
        << '\t' << p.exponent << '\t' << to_string(p.intercept) << '\n';
  }
  for (const auto& c : envelope.corners) {
    out << "corner\t" << to_string(c.s0) << '\t' << to_string(c.value) << '\t'
        << c.n_left << '\t' << c.n_right << '\t' << c.sharpness() << '\n';
  }
  return out.str();
}

std::string emit_zero_count(long count, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return dump(Json{{"count", count}});
  return "count\t" + std::to_string(count) + "\n";
}

std::string emit_classification(const SingularityClassification& cls,
                                OutputFormat fmt) {
  const bool pole = cls.kind == SingularityClassification::Kind::Pole;
  if (fmt == OutputFormat::Json) {
    Json j{{"kind", to_string(cls.kind)}};
    if (pole) j["order"] = cls.pole_order;
    return dump(j);
  }
  std::string out = "kind\t" + to_string(cls.kind) + "\n";
  if (pole) out += "order\t" + std::to_string(cls.pole_order) + "\n";
  return out;
}

std::string emit_image_disc(const ImageDisc& disc, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    return dump(Json{{"center", to_string(disc.center)},
                     {"m", disc.lead_exponent},
                     {"delta_val", disc.delta_val.to_string()}});
  }
  return "m\t" + std::to_string(disc.lead_exponent) + "\ndelta_val\t" +
         disc.delta_val.to_string() + "\n";
}

std::string emit_contains(bool contained, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return dump(Json{{"contains", contained}});
  return std::string("contains\t") + (contained ? "true" : "false") + "\n";
}

std::string emit_factorization(const SlopeFactorization& fz, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j{{"precision", fz.precision},
           {"shift", fz.shift},
           {"denominator", fz.denominator.get_str()},
           {"unit_valuation", fz.unit_valuation},
           {"unit", fz.unit.value.get_str()}};
    j["factors"] = Json::array();
    for (const auto& f : fz.factors) {
      Json coeffs = Json::array();
      for (const auto& c : f.coefficients) coeffs.push_back(c.value.get_str());
      j["factors"].push_back({{"slope", to_string(f.slope)},
                              {"degree", f.degree},
                              {"coefficients", coeffs}});
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "precision\t" << fz.precision << '\n'
      << "shift\t" << fz.shift << '\n'
      << "denominator\t" << fz.denominator.get_str() << '\n'
      << "unit_valuation\t" << fz.unit_valuation << '\n'
      << "unit\t" << fz.unit.value.get_str() << '\n';
  for (const auto& f : fz.factors) {
    out << "factor\t" << to_string(f.slope) << '\t' << f.degree << '\t'
        << join_residues(f.coefficients) << '\n';
  }
  return out.str();
}

std::string emit_polygon_svg(const ValuationEnvelope& envelope,
                             const NewtonPolygon& polygon) {
  SvgWriter svg;
  svg.raw(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
      "height=\"600\" viewBox=\"0 0 800 600\">\n"
      "<style>line{stroke-width:2}.piece{stroke:#1f4e9c}"
      ".segment{stroke:#9c1f3a}.axis{stroke:#999;stroke-width:1}"
      ".corner{fill:#d62728}.vertex{fill:#333}"
      "text{font-family:monospace;font-size:12px}</style>\n"
      "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n");

  // Envelope panel.
  const Rational& s_lo = envelope.s_lo;
  const Rational& s_hi = envelope.s_hi;
  Rational v_lo = envelope.value_at(s_lo), v_hi = v_lo;
  for (const auto& p : envelope.pieces) {
    for (const Rational* s : {&p.s_from, &p.s_to}) {
      const Rational v = p.intercept + p.exponent * *s;
      v_lo = std::min(v_lo, v);
      v_hi = std::max(v_hi, v);
    }
  }
  auto env_x = [&](const Rational& s) { return place(s, s_lo, s_hi, kLeft, kRight); };
  auto env_y = [&](const Rational& v) {
    return place(v, v_lo, v_hi, kEnvBottom, kEnvTop);
  };
  svg.text("title", kLeft, 30.0,
           "valuation envelope on [" + to_string(s_lo) + ", " +
               to_string(s_hi) + "]");
  svg.line("axis", kLeft, kEnvBottom, kRight, kEnvBottom);
  for (const auto& p : envelope.pieces) {
    const Rational v0 = p.intercept + p.exponent * p.s_from;
    const Rational v1 = p.intercept + p.exponent * p.s_to;
    svg.line("piece", env_x(p.s_from), env_y(v0), env_x(p.s_to), env_y(v1));
    const Rational mid_s = (p.s_from + p.s_to) / 2;
    const Rational mid_v = (v0 + v1) / 2;
    svg.text("slope-label", env_x(mid_s), env_y(mid_v) - 8.0,
             "n=" + std::to_string(p.exponent));
  }
  for (const auto& c : envelope.corners) {
    svg.circle("corner", env_x(c.s0), env_y(c.value), 5);
    svg.text("corner-label", env_x(c.s0) + 8.0, env_y(c.value) + 16.0,
             "s0=" + to_string(c.s0) + " m=" + std::to_string(c.sharpness()));
  }

  // Newton polygon panel.
  const auto& vs = polygon.vertices;
  svg.text("title", kLeft, 330.0, "Newton polygon");
  svg.line("axis", kLeft, kPolyBottom, kRight, kPolyBottom);
  if (!vs.empty()) {
    const Rational n_lo(vs.front().exponent), n_hi(vs.back().exponent);
    Rational w_lo = vs.front().valuation, w_hi = w_lo;
    for (const auto& v : vs) {
      w_lo = std::min(w_lo, v.valuation);
      w_hi = std::max(w_hi, v.valuation);
    }
    auto px = [&](long n) { return place(Rational(n), n_lo, n_hi, kLeft, kRight); };
    auto py = [&](const Rational& w) {
      return place(w, w_lo, w_hi, kPolyBottom, kPolyTop);
    };
    for (std::size_t i = 0; i < polygon.segments.size(); ++i) {
      const auto& a = vs[i];
      const auto& b = vs[i + 1];
      svg.line("segment", px(a.exponent), py(a.valuation), px(b.exponent),
               py(b.valuation));
      svg.text("segment-label", (px(a.exponent) + px(b.exponent)) / 2.0,
               (py(a.valuation) + py(b.valuation)) / 2.0 - 8.0,
               "slope " + to_string(polygon.segments[i].slope) + " length " +
                   std::to_string(polygon.segments[i].length));
    }
    for (const auto& v : vs) {
      svg.circle("vertex", px(v.exponent), py(v.valuation), 4);
    }
  }
  svg.raw("</svg>\n");
  return svg.str();
}

}  // namespace ultrapic
