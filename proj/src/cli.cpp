#include "ultrapic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ultrapic/emit.hpp"
#include "ultrapic/series_io.hpp"

namespace ultrapic {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string out_path;
  std::string format = "tsv";
  std::vector<std::string> range;
  bool svg = false;
  std::string from, to;
  std::string radius_val;
  std::string value;
  long precision = 20;
};

Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

LaurentSeries load_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return to_series(parse_series_file(buf.str()));
  } catch (const Error& e) {
    throw UsageError(path + ": " + std::string(errc_name(e.code())) + ": " +
                     e.what());
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "series file")->required();
  sub->add_option("--out", o.out_path, "write output to PATH");
  sub->add_option("--format", o.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
}

std::string run_polygon(const LaurentSeries& f, const Options& o,
                        OutputFormat fmt) {
  Rational lo, hi;
  if (o.range.empty()) {
    const Rational d = corner_bound(f);
    lo = -d - 1;
    hi = d + 1;
  } else {
    lo = flag_rational("--range", o.range[0]);
    hi = flag_rational("--range", o.range[1]);
    if (hi < lo) throw UsageError("--range needs S1 <= S2");
  }
  const NewtonPolygon poly = newton_polygon(f);
  const ValuationEnvelope env = valuation_envelope(f, lo, hi);
  if (o.svg) return emit_polygon_svg(env, poly);
  return emit_polygon(poly, env, fmt);
}

std::string run_zeros(const LaurentSeries& f, const Options& o,
                      OutputFormat fmt) {
  const Rational outer = flag_rational("--from", o.from);
  const Valuation inner = o.to == "inf" ? Valuation::infinity()
                                        : Valuation(flag_rational("--to", o.to));
  if (inner < Valuation(outer)) throw UsageError("--from must not exceed --to");
  return emit_zero_count(zero_count_annulus(f, inner, outer), fmt);
}

std::string run_classify(const LaurentSeries& f, const Options& o,
                         OutputFormat fmt) {
  const RadiusVal r{flag_rational("--radius-val", o.radius_val)};
  if (!converges_on(f, r, Valuation::infinity())) {
    throw Error(Errc::NonConvergent,
                "certificates do not give convergence on the punctured disc");
  }
  return emit_classification(classify_singularity(f), fmt);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact Newton-polygon analysis of Laurent series over Q_p",
               "ultrapic"};
  app.require_subcommand(1);
  Options o;

  using Handler =
      std::function<std::string(const LaurentSeries&, const Options&, OutputFormat)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  auto* polygon = app.add_subcommand("polygon", "envelope and Newton polygon");
  add_common(polygon, o);
  polygon->add_option("--range", o.range, "s-range S1 S2")->expected(2);
  polygon->add_flag("--svg", o.svg, "emit an SVG drawing");
  handlers.emplace_back(polygon, run_polygon);

  auto* zeros = app.add_subcommand("zeros", "count zeros by valuation");
  add_common(zeros, o);
  zeros->add_option("--from", o.from, "smallest zero valuation")->required();
  zeros->add_option("--to", o.to, "largest zero valuation, or inf")->required();
  handlers.emplace_back(zeros, run_zeros);

  auto* classify = app.add_subcommand("classify", "singularity at z = 0");
  add_common(classify, o);
  classify->add_option("--radius-val", o.radius_val, "disc radius valuation")
      ->required();
  handlers.emplace_back(classify, run_classify);

  auto* extend = app.add_subcommand("extend", "extension across the puncture");
  add_common(extend, o);
  extend->add_option("--radius-val", o.radius_val, "disc radius valuation")
      ->required();
  handlers.emplace_back(extend, [](const LaurentSeries& f, const Options& opt,
                                   OutputFormat fmt) {
    const RadiusVal r{flag_rational("--radius-val", opt.radius_val)};
    return emit_classification(extend_across_puncture(f, r), fmt);
  });

  auto* image = app.add_subcommand("image", "image disc of a closed disc");
  add_common(image, o);
  image->add_option("--radius-val", o.radius_val, "disc radius valuation")
      ->required();
  handlers.emplace_back(image, [](const LaurentSeries& f, const Options& opt,
                                  OutputFormat fmt) {
    const RadiusVal r{flag_rational("--radius-val", opt.radius_val)};
    return emit_image_disc(open_image_disc(f, r), fmt);
  });

  auto* contains = app.add_subcommand("contains", "is W attained on the disc");
  add_common(contains, o);
  contains->add_option("--radius-val", o.radius_val, "disc radius valuation")
      ->required();
  contains->add_option("--value", o.value, "target value W")->required();
  handlers.emplace_back(contains, [](const LaurentSeries& f,
                                     const Options& opt, OutputFormat fmt) {
    const RadiusVal r{flag_rational("--radius-val", opt.radius_val)};
    return emit_contains(
        contains_value(f, r, flag_rational("--value", opt.value)), fmt);
  });

  auto* factor = app.add_subcommand("factor", "slope factorization");
  add_common(factor, o);
  factor->add_option("--precision", o.precision, "p-adic digits")
      ->check(CLI::PositiveNumber);
  handlers.emplace_back(factor, [](const LaurentSeries& f, const Options& opt,
                                   OutputFormat fmt) {
    return emit_factorization(
        slope_factorization(f, opt.precision, LiftingPolicy::from_environment()),
        fmt);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);  // --help
      return kExitOk;
    }
    err << "ultrapic: error: " << e.what() << "\n"
        << "run 'ultrapic --help' for usage\n";
    return kExitUsage;
  }

  const auto it = std::find_if(handlers.begin(), handlers.end(),
                               [](const auto& h) { return h.first->parsed(); });
  const OutputFormat fmt =
      o.format == "json" ? OutputFormat::Json : OutputFormat::Tsv;
  std::string result;
  try {
    const LaurentSeries f = load_series(o.file);
    result = it->second(f, o, fmt);
  } catch (const UsageError& e) {
    err << "ultrapic: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "ultrapic: error: " << errc_name(e.code()) << ": " << e.what()
        << '\n';
    return kExitAnalysis;
  }

  if (o.out_path.empty()) {
    out << result;
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!(file << result)) {
    err << "ultrapic: error: cannot write '" << o.out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ultrapic
