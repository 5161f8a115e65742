#include "ultrapic/valuation.hpp"


namespace ultrapic {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateExponent: return "DuplicateExponent";
    case Errc::MalformedCertificate: return "MalformedCertificate";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::UnsupportedTail: return "UnsupportedTail";
    case Errc::PoleAtOrigin: return "PoleAtOrigin";
    case Errc::WindowInsufficient: return "WindowInsufficient";
    case Errc::ZeroSeries: return "ZeroSeries";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::NotLiftable: return "NotLiftable";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::ConstantFunction: return "ConstantFunction";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ContradictionDetected: return "ContradictionDetected";
    case Errc::NonPrime: return "NonPrime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(unsigned long n) noexcept {
  if (n < 2) return false;
  for (unsigned long d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeContext::PrimeContext(unsigned long p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  }
}

Integer PrimeContext::power(unsigned long e) const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, e);
  return r;
}

const Rational& Valuation::value() const {
  if (!value_) {
    throw Error(Errc::InvalidArgument, "infinite valuation has no value");
  }
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? ultrapic::to_string(*value_) : std::string("inf");
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() == b.is_infinite();
  }
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Valuation val_min(const Valuation& a, const Valuation& b) {
  return b < a ? b : a;
}

Valuation val_add(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(Rational(a.value() + b.value()));
}

long padic_valuation(const Integer& x, const PrimeContext& ctx) {
  if (x == 0) {
    throw Error(Errc::InvalidArgument, "valuation of zero is not finite");
  }
  Integer rest;
  Integer p(ctx.prime());
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long padic_order(const Rational& x, const PrimeContext& ctx) {
  return padic_valuation(Integer(x.get_num()), ctx) -
         padic_valuation(Integer(x.get_den()), ctx);
}

Valuation padic_valuation(const Rational& x, const PrimeContext& ctx) {
  Rational c(x);
  c.canonicalize();
  if (c == 0) return Valuation::infinity();
  return Valuation(padic_order(c, ctx));
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) {
      throw Error(Errc::InvalidArgument, "zero raised to a negative power");
    }
    return Rational(0);
  }
  const unsigned long e =
      static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  return c.get_str();
}

}  // namespace ultrapic
