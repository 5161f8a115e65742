#include "ultrapic/series_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace ultrapic {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

[[noreturn]] void fail(Errc code, std::size_t line, std::size_t column,
                       const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view s, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      out.push_back(Token{s.substr(start, i - start), base_column + start});
    }
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<long> parse_long(std::string_view s) {
  long v = 0;
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  const std::string_view digits =
      !body.empty() && body.front() == '-' ? body.substr(1) : body;
  if (!all_digits(digits)) return std::nullopt;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    return std::nullopt;
  }
  return v;
}

std::string tail_text(const TailCertificate& t) {
  switch (t.kind()) {
    case TailCertificate::Kind::ZeroBeyondWindow:
      return "zero";
    case TailCertificate::Kind::LinearBound:
      return "linear " + to_string(t.offset()) + " " +
             to_string(t.coefficient());
    case TailCertificate::Kind::EssentialQuadratic:
      return "essential " + to_string(t.offset()) + " " +
             to_string(t.coefficient());
  }
  return "zero";
}

}  // namespace

bool operator==(const SeriesDocument& a, const SeriesDocument& b) {
  if (a.prime != b.prime || a.terms.size() != b.terms.size() ||
      !(a.tail_pos == b.tail_pos) || !(a.tail_neg == b.tail_neg)) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].exponent != b.terms[i].exponent ||
        a.terms[i].coefficient != b.terms[i].coefficient) {
      return false;
    }
  }
  return true;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  std::string_view sign;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    sign = s.substr(0, 1);
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::ParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw Error(Errc::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (sign == "-") n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SeriesDocument parse_series_file(std::string_view text) {
  SeriesDocument doc;
  bool have_prime = false;
  bool have_pos = false;
  bool have_neg = false;
  std::set<long> exponents;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens_all = tokenize(line, 1);
    if (tokens_all.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      fail(Errc::ParseError, line_no, tokens_all.front().column,
           "expected 'key: value'");
    }
    const auto key_tokens = tokenize(line.substr(0, colon), 1);
    if (key_tokens.size() != 1) {
      fail(Errc::ParseError, line_no, 1, "expected a single key before ':'");
    }
    const std::string_view key = key_tokens.front().text;
    const std::size_t key_col = key_tokens.front().column;
    const auto args = tokenize(line.substr(colon + 1), colon + 2);
    auto want = [&](std::size_t n) {
      if (args.size() != n) {
        fail(Errc::ParseError, line_no,
             args.size() > n ? args[n].column : line.size() + 1,
             "'" + std::string(key) + "' takes " + std::to_string(n) +
                 " value(s)");
      }
    };
    auto rational_at = [&](const Token& t) {
      try {
        return parse_rational(t.text);
      } catch (const Error& e) {
        fail(Errc::ParseError, line_no, t.column, e.what());
      }
    };

    if (!have_prime && key != "prime") {
      fail(Errc::ParseError, line_no, key_col,
           "'prime:' must be the first directive");
    }
    if (key == "prime") {
      if (have_prime) fail(Errc::ParseError, line_no, key_col, "duplicate prime");
      want(1);
      const auto p = parse_long(args[0].text);
      if (!p || *p < 0) {
        fail(Errc::ParseError, line_no, args[0].column, "malformed prime");
      }
      if (!is_prime(static_cast<unsigned long>(*p))) {
        fail(Errc::NonPrime, line_no, args[0].column,
             std::to_string(*p) + " is not prime");
      }
      doc.prime = static_cast<unsigned long>(*p);
      have_prime = true;
    } else if (key == "term") {
      want(2);
      const auto n = parse_long(args[0].text);
      if (!n) fail(Errc::ParseError, line_no, args[0].column, "malformed exponent");
      if (!exponents.insert(*n).second) {
        fail(Errc::DuplicateExponent, line_no, args[0].column,
             "exponent " + std::to_string(*n) + " given twice");
      }
      doc.terms.push_back(Term{*n, rational_at(args[1])});
    } else if (key == "tail+" || key == "tail-") {
      const bool positive = key == "tail+";
      bool& seen = positive ? have_pos : have_neg;
      if (seen) fail(Errc::ParseError, line_no, key_col, "duplicate " + std::string(key));
      seen = true;
      if (args.empty()) fail(Errc::ParseError, line_no, line.size() + 1, "missing tail kind");
      const std::string_view kind = args[0].text;
      const auto dir = positive ? TailDirection::Positive : TailDirection::Negative;
      if (kind == "zero") {
        want(1);
        (positive ? doc.tail_pos : doc.tail_neg) = TailCertificate::zero(dir);
      } else if (positive && kind == "linear") {
        want(3);
        doc.tail_pos = TailCertificate::linear(rational_at(args[1]),
                                               rational_at(args[2]));
      } else if (!positive && kind == "essential") {
        want(3);
        const Rational c = rational_at(args[2]);
        if (c <= 0) {
          fail(Errc::MalformedCertificate, line_no, args[2].column,
               "essential bound needs C > 0");
        }
        doc.tail_neg = TailCertificate::essential(rational_at(args[1]), c);
      } else {
        fail(Errc::ParseError, line_no, args[0].column,
             "unknown tail kind '" + std::string(kind) + "' for " +
                 std::string(key));
      }
    } else {
      fail(Errc::ParseError, line_no, key_col,
           "unknown key '" + std::string(key) + "'");
    }
    if (eol == text.size()) break;
  }
  if (!have_prime) fail(Errc::ParseError, line_no, 1, "missing 'prime:'");
  return doc;
}

std::string serialize_series(const SeriesDocument& doc) {
  std::string out = "prime: " + std::to_string(doc.prime) + "\n";
  for (const auto& t : doc.terms) {
    out += "term: " + std::to_string(t.exponent) + " " +
           to_string(t.coefficient) + "\n";
  }
  out += "tail+: " + tail_text(doc.tail_pos) + "\n";
  out += "tail-: " + tail_text(doc.tail_neg) + "\n";
  return out;
}

LaurentSeries to_series(const SeriesDocument& doc) {
  return build_series(PrimeContext(doc.prime), doc.terms, doc.tail_pos,
                      doc.tail_neg);
}

SeriesDocument to_document(const LaurentSeries& f) {
  SeriesDocument doc;
  doc.prime = f.context().prime();
  for (const auto& [n, c] : f.terms()) doc.terms.push_back(Term{n, c});
  doc.tail_pos = f.tail_pos();
  doc.tail_neg = f.tail_neg();
  return doc;
}

}  // namespace ultrapic
