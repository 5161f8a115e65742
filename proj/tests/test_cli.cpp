#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ultrapic/cli.hpp"
#include "ultrapic/series_io.hpp"

using namespace ultrapic;
namespace fs = std::filesystem;

namespace {

Errc parse_error(std::string_view text, std::string* message = nullptr) {
  try {
    parse_series_file(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("document accepted");
  return Errc::InvalidArgument;
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("ultrapic_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("parse_series_file") {
  const auto doc = parse_series_file(
      "prime: 2\nterm: 0 1\nterm: 1 1/2\ntail+: zero\ntail-: zero");
  CHECK(doc.prime == 2);
  REQUIRE(doc.terms.size() == 2);
  CHECK(doc.terms[1].exponent == 1);
  CHECK(doc.terms[1].coefficient == Rational(1, 2));
  CHECK(doc.tail_pos.is_zero());

  const auto commented = parse_series_file(
      "# header\n\nprime: 3   # p\r\nterm: -2 -4/6\ntail-: essential 1 1/2\n");
  CHECK(commented.terms[0].coefficient == Rational(-2, 3));
  CHECK(commented.tail_neg.kind() == TailCertificate::Kind::EssentialQuadratic);
  CHECK(commented.tail_neg.coefficient() == Rational(1, 2));

  CHECK(parse_error("prime: 4\nterm: 0 1\n") == Errc::NonPrime);
  std::string msg;
  CHECK(parse_error("prime: 2\nterm: 0 1\nterm: 0 2\n", &msg) ==
        Errc::DuplicateExponent);
  CHECK(msg.rfind("line 3, column 7:", 0) == 0);
  CHECK(parse_error("term: 0 1\nprime: 2\n") == Errc::ParseError);
  CHECK(parse_error("prime: 2\ncolour: red\n") == Errc::ParseError);
  CHECK(parse_error("prime: 2\nterm: 0 1/0\n") == Errc::ParseError);
  CHECK(parse_error("prime: 2\nterm: 0 1.5\n") == Errc::ParseError);
  CHECK(parse_error("prime: 2\nterm: x 1\n") == Errc::ParseError);
  CHECK(parse_error("prime: 2\ntail+: essential 0 1\n") == Errc::ParseError);
  CHECK(parse_error("prime: 2\ntail-: essential 0 0\n") ==
        Errc::MalformedCertificate);
  CHECK(parse_error("") == Errc::ParseError);
}

TEST_CASE("series documents round-trip") {
  oracle::Random rng(97);
  for (int i = 0; i < 300; ++i) {
    SeriesDocument doc;
    doc.prime = rng.prime();
    for (long n = -4; n <= 4; ++n) {
      if (rng.uniform(0, 2) == 0) continue;
      doc.terms.push_back({n, rng.uniform(0, 5) ? rng.small_rational(20)
                                                : Rational(0)});
    }
    if (rng.uniform(0, 1)) {
      doc.tail_pos =
          TailCertificate::linear(rng.small_rational(3), rng.small_rational(3));
    }
    if (rng.uniform(0, 1)) {
      Rational c(rng.uniform(1, 5), 2);
      c.canonicalize();
      doc.tail_neg = TailCertificate::essential(rng.small_rational(3), c);
    }
    const std::string text = serialize_series(doc);
    INFO(text);
    REQUIRE(parse_series_file(text) == doc);
    REQUIRE(serialize_series(parse_series_file(text)) == text);
  }
}

TEST_CASE("run_command exit codes and output") {
  const auto f = write_temp("cubic.series",
                            "prime: 2\nterm: 0 2\nterm: 1 1\nterm: 3 4\n");
  auto r = run({"zeros", f, "--from", "1/2", "--to", "3/2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "count\t1\n");

  const auto g = write_temp("image.series",
                            "prime: 3\nterm: 0 1\nterm: 1 3\nterm: 2 1\n");
  r = run({"image", g, "--radius-val", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "m\t1\ndelta_val\t2\n");

  r = run({"contains", g, "--radius-val", "1", "--value", "10"});
  CHECK(r.out == "contains\ttrue\n");

  r = run({"polygon", f, "--range", "-2", "2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("corner\t-1\t-1\t3\t1\t2\n") != std::string::npos);

  // Determinism.
  CHECK(run({"polygon", f, "--svg"}).out == run({"polygon", f, "--svg"}).out);

  r = run({"image", write_temp("const.series", "prime: 3\nterm: 0 5\n"),
           "--radius-val", "0"});
  CHECK(r.status == kExitAnalysis);
  CHECK(r.err.find("ConstantFunction") != std::string::npos);

  r = run({"zeros", write_temp("bad.series", "prime: 4\n"), "--from", "0",
           "--to", "1"});
  CHECK(r.status == kExitUsage);

  CHECK(run({"zeros", f, "--from", "0"}).status == kExitUsage);
  CHECK(run({"frobnicate", f}).status == kExitUsage);
  CHECK(run({"zeros", "/nonexistent/x.series", "--from", "0", "--to", "1"})
            .status == kExitUsage);
  CHECK(run({"zeros", f, "--from", "2", "--to", "1"}).status == kExitUsage);
  CHECK(run({"image", write_temp("pole.series", "prime: 2\nterm: -1 1\n"),
             "--radius-val", "0"})
            .status == kExitAnalysis);

  const auto out_path =
      (fs::temp_directory_path() / "ultrapic_test_out.tsv").string();
  fs::remove(out_path);
  r = run({"zeros", f, "--from", "1/2", "--to", "3/2", "--out", out_path});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream written;
  written << in.rdbuf();
  CHECK(written.str() == "count\t1\n");
}
