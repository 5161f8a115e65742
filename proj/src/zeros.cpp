#include "ultrapic/zeros.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "ultrapic/polygon.hpp"

namespace ultrapic {
namespace {

// Polynomials over Z[1/p], low degree first. Every coefficient produced by the
// lifting loops is kept as a p-adic representative of fixed absolute
// precision, so sizes stay bounded.
using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(Errc::InvalidArgument, "not invertible modulo p^N");
  }
  return r;
}

// Strips p from x: x = p^k * rest with p not dividing rest.
long split_p(const Integer& x, const PrimeContext& ctx, Integer& rest) {
  const Integer p(ctx.prime());
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// y in Z[1/p] with v(x - y) >= w.
Rational reduce(const Rational& x, long w, const PrimeContext& ctx) {
  if (x == 0 || padic_order(x, ctx) >= w) return Rational(0);
  Integer rest;
  const long k = split_p(Integer(x.get_den()), ctx, rest);
  const Integer modulus = ctx.power(static_cast<unsigned long>(w + k));
  const Integer y =
      mod_nonneg(Integer(x.get_num()) * inverse_mod(rest, modulus), modulus);
  Rational r(y, ctx.power(static_cast<unsigned long>(k)));
  r.canonicalize();
  return r;
}

void reduce_all(Poly& a, long w, const PrimeContext& ctx) {
  for (auto& c : a) c = reduce(c, w, ctx);
  trim(a);
}

// x with v(x) >= 0, as an integer modulo p^n.
Integer integral_residue(const Rational& x, long n, const PrimeContext& ctx) {
  const Integer modulus = ctx.power(static_cast<unsigned long>(n));
  return mod_nonneg(Integer(x.get_num()) *
                        inverse_mod(Integer(x.get_den()), modulus),
                    modulus);
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Division by a monic g: a = q g + r, deg r < deg g.
void divmod_monic(const Poly& a, const Poly& g, Poly& q, Poly& r) {
  const std::size_t m = g.size() - 1;
  r = a;
  if (r.size() <= m) {
    q.clear();
    return;
  }
  q.assign(r.size() - m, Rational(0));
  for (std::size_t i = r.size(); i-- > m;) {
    const Rational c = r[i];
    if (c == 0) continue;
    q[i - m] = c;
    for (std::size_t j = 0; j <= m; ++j) r[i - m + j] -= c * g[j];
  }
  r.resize(m);
  trim(q);
  trim(r);
}

Poly mod_monic(const Poly& a, const Poly& g) {
  Poly q, r;
  divmod_monic(a, g, q, r);
  return r;
}

struct Split {
  Poly g;  // monic, the roots of valuation above the split point
  Poly h;  // the rest
};

// Factor F = g h where g is monic of degree m and carries exactly the roots
// of valuation > s for some s at which z^m is the unique dominant term of F.
// Newton iteration on the factor, with the inverse of h mod g refined
// alongside; all quantities are truncated to absolute precision p^w.
std::optional<Split> split_dominant(const Poly& f, std::size_t m, long w,
                                    const PrimeContext& ctx) {
  Poly g(m + 1, Rational(0));
  g[m] = 1;
  Poly h, r;
  divmod_monic(f, g, h, r);

  // 1/h mod z^m, which is 1/h mod g for the starting g = z^m.
  Poly inv(m, Rational(0));
  const Rational h0_inv = 1 / h[0];
  for (std::size_t k = 0; k < m; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && j < h.size(); ++j) acc -= h[j] * inv[k - j];
    inv[k] = reduce(acc * h0_inv, w, ctx);
  }
  trim(inv);

  long rounds = 8;
  for (long x = w; x > 0; x /= 2) rounds += 2;
  for (long round = 0; round < rounds; ++round) {
    divmod_monic(f, g, h, r);
    reduce_all(h, w, ctx);
    reduce_all(r, w, ctx);
    if (r.empty()) return Split{std::move(g), std::move(h)};

    Poly delta = mod_monic(mul(r, inv), g);
    reduce_all(delta, w, ctx);
    for (std::size_t i = 0; i < delta.size(); ++i) g[i] += delta[i];
    reduce_all(g, w, ctx);
    g.resize(m + 1, Rational(0));
    g[m] = 1;

    divmod_monic(f, g, h, r);
    reduce_all(h, w, ctx);
    Poly e = mod_monic(mul(h, inv), g);
    for (auto& c : e) c = -c;
    if (e.empty()) e.push_back(Rational(0));
    e[0] += 2;
    inv = mod_monic(mul(inv, e), g);
    reduce_all(inv, w, ctx);
  }
  divmod_monic(f, g, h, r);
  reduce_all(h, w, ctx);
  return Split{std::move(g), std::move(h)};
}

struct Normalized {
  long shift;
  Integer denominator;
  long content;  // valuation of the content of denominator * f / z^shift
  IntPoly poly;
};

Normalized normalize(const LaurentSeries& f) {
  if (!f.finite_support()) {
    throw Error(Errc::UnsupportedTail,
                "factorization needs a finite-support series");
  }
  if (f.empty()) throw Error(Errc::ZeroSeries, "factorization of zero");
  Normalized out{f.n_min(), Integer(1), 0, {}};
  for (const auto& [n, c] : f.terms()) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
            c.get_den_mpz_t());
  }
  const long degree = f.n_max() - f.n_min();
  IntPoly poly(static_cast<std::size_t>(degree + 1), Integer(0));
  std::optional<long> content;
  for (const auto& [n, c] : f.terms()) {
    Integer v = Integer(c.get_num()) * (out.denominator / c.get_den());
    const long e = padic_valuation(v, f.context());
    if (!content || e < *content) content = e;
    poly[static_cast<std::size_t>(n - out.shift)] = std::move(v);
  }
  out.content = *content;
  const Integer scale = f.context().power(static_cast<unsigned long>(*content));
  for (auto& c : poly) c /= scale;
  out.poly = std::move(poly);
  return out;
}

bool product_matches(const IntPoly& target, const Integer& unit,
                     const std::vector<SlopeFactor>& factors,
                     long precision, const PrimeContext& ctx) {
  const Integer modulus = ctx.power(static_cast<unsigned long>(precision));
  IntPoly prod{mod_nonneg(unit, modulus)};
  for (const auto& fac : factors) {
    IntPoly next(prod.size() + fac.coefficients.size() - 1, Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < fac.coefficients.size(); ++j) {
        next[i + j] += prod[i] * fac.coefficients[j].value;
      }
    }
    for (auto& c : next) c = mod_nonneg(c, modulus);
    prod = std::move(next);
  }
  const std::size_t n = std::max(prod.size(), target.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Integer a = i < prod.size() ? prod[i] : Integer(0);
    const Integer b = i < target.size() ? mod_nonneg(target[i], modulus)
                                        : Integer(0);
    if (a != b) return false;
  }
  return true;
}

// The stored factor must itself have a one-segment Newton polygon of the
// recorded slope and length, as far as precision p^N can see.
bool single_segment(const SlopeFactor& fac, const PrimeContext& ctx) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < fac.coefficients.size(); ++i) {
    terms.push_back(Term{static_cast<long>(i),
                         Rational(fac.coefficients[i].value)});
  }
  const LaurentSeries s = build_series(ctx, terms);
  if (s.empty() || s.n_min() != 0 || s.n_max() != fac.degree) return false;
  const NewtonPolygon poly = newton_polygon(s);
  return poly.segments.size() == 1 && poly.segments[0].slope == fac.slope &&
         poly.segments[0].length == fac.degree;
}

std::optional<SlopeFactorization> attempt(const Normalized& norm,
                                          const NewtonPolygon& polygon,
                                          long precision, long w,
                                          const PrimeContext& ctx) {
  Poly cur(norm.poly.begin(), norm.poly.end());
  std::vector<Poly> parts;
  const auto& segs = polygon.segments;
  for (std::size_t j = 0; j + 1 < segs.size(); ++j) {
    auto sp = split_dominant(cur, static_cast<std::size_t>(segs[j].length), w,
                             ctx);
    if (!sp) return std::nullopt;
    parts.push_back(std::move(sp->g));
    cur = std::move(sp->h);
  }
  parts.push_back(std::move(cur));

  const Integer modulus = ctx.power(static_cast<unsigned long>(precision));
  SlopeFactorization out{precision, norm.shift,  norm.denominator,
                         norm.content, PadicApprox{ctx, Integer(1), precision},
                         {}};
  Integer unit(1);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Poly& part = parts[j];
    trim(part);
    if (part.size() != static_cast<std::size_t>(segs[j].length) + 1) {
      return std::nullopt;
    }
    std::optional<long> mu;
    for (const auto& c : part) {
      if (c == 0) continue;
      const long v = padic_order(c, ctx);
      if (!mu || v < *mu) mu = v;
    }
    const Rational shift =
        *mu >= 0 ? Rational(ctx.power(static_cast<unsigned long>(*mu)))
                 : Rational(1, ctx.power(static_cast<unsigned long>(-*mu)));
    for (auto& c : part) c /= shift;
    const long lead_val = padic_order(part.back(), ctx);
    if (lead_val >= precision) return std::nullopt;
    const Rational lead_unit =
        part.back() / ctx.power(static_cast<unsigned long>(lead_val));
    const Integer w_res = integral_residue(lead_unit, precision, ctx);
    const Integer w_inv = inverse_mod(w_res, modulus);
    unit = mod_nonneg(unit * w_res, modulus);

    SlopeFactor fac{segs[j].slope, segs[j].length, {}};
    for (const auto& c : part) {
      fac.coefficients.push_back(PadicApprox{
          ctx, mod_nonneg(integral_residue(c, precision, ctx) * w_inv, modulus),
          precision});
    }
    if (!single_segment(fac, ctx)) return std::nullopt;
    out.factors.push_back(std::move(fac));
  }
  out.unit.value = unit;
  if (!product_matches(norm.poly, unit, out.factors, precision, ctx)) {
    return std::nullopt;
  }
  return out;
}

Integer eval_poly(const IntPoly& f, const Integer& x) {
  Integer acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) {
    d.push_back(f[i] * static_cast<unsigned long>(i));
  }
  return d;
}

void check_precision(long precision, const LiftingPolicy& policy) {
  if (precision < 1) {
    throw Error(Errc::InvalidArgument, "precision must be positive");
  }
  if (precision > policy.max_digits) {
    throw Error(Errc::PrecisionExhausted,
                "requested precision " + std::to_string(precision) +
                    " exceeds the cap of " +
                    std::to_string(policy.max_digits) + " digits");
  }
}

}  // namespace

LiftingPolicy LiftingPolicy::from_environment() {
  LiftingPolicy policy;
  if (const char* env = std::getenv("ULTRAPIC_MAX_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) policy.max_digits = v;
  }
  return policy;
}

PadicApprox hensel_refine_root(const IntPoly& f, const PrimeContext& ctx,
                               const PadicApprox& seed, long target_precision,
                               const LiftingPolicy& policy) {
  check_precision(target_precision, policy);
  const IntPoly df = derivative(f);
  Integer a = seed.value;
  const Integer fa = eval_poly(f, a);
  const Integer dfa = eval_poly(df, a);
  if (dfa == 0) {
    throw Error(Errc::NotLiftable, "derivative vanishes at the seed");
  }
  const long d = padic_valuation(dfa, ctx);
  const Integer target = ctx.power(static_cast<unsigned long>(target_precision));
  if (fa == 0) return PadicApprox{ctx, mod_nonneg(a, target), target_precision};
  if (padic_valuation(fa, ctx) < 2 * d + 1) {
    throw Error(Errc::NotLiftable,
                "seed does not satisfy v(f(a)) > 2 v(f'(a))");
  }

  // f(a) is determined modulo p^(w + d) by a mod p^w; stop once
  // v(f(a)) >= N + d, which pins the root to N digits.
  const long w = target_precision + 2 * d + 1;
  const Integer modulus = ctx.power(static_cast<unsigned long>(w));
  const Integer done = ctx.power(static_cast<unsigned long>(target_precision + d));
  const Integer pd = ctx.power(static_cast<unsigned long>(d));
  for (int iter = 0; iter < 128; ++iter) {
    const Integer value = eval_poly(f, a);
    if (mod_nonneg(value, done) == 0) {
      return PadicApprox{ctx, mod_nonneg(a, target), target_precision};
    }
    const Integer slope_unit = eval_poly(df, a) / pd;
    const Integer step = mod_nonneg(
        (value / pd) * inverse_mod(mod_nonneg(slope_unit, modulus), modulus),
        modulus);
    a = mod_nonneg(a - step, modulus);
  }
  throw Error(Errc::PrecisionExhausted, "Newton iteration did not settle");
}

IntPoly normalized_polynomial(const LaurentSeries& f) {
  return normalize(f).poly;
}

SlopeFactorization slope_factorization(const LaurentSeries& f, long precision,
                                       const LiftingPolicy& policy) {
  check_precision(precision, policy);
  const PrimeContext& ctx = f.context();
  const Normalized norm = normalize(f);
  const Integer modulus = ctx.power(static_cast<unsigned long>(precision));

  if (norm.poly.size() == 1) {
    return SlopeFactorization{
        precision, norm.shift, norm.denominator, norm.content,
        PadicApprox{ctx, mod_nonneg(norm.poly[0], modulus), precision}, {}};
  }

  std::vector<Rational> coeffs(norm.poly.begin(), norm.poly.end());
  const NewtonPolygon polygon = newton_polygon(polynomial(ctx, coeffs));

  long spread = 0;
  for (const auto& v : polygon.vertices) {
    spread = std::max(spread, ceil_of(v.valuation).get_si());
  }
  const long degree = static_cast<long>(norm.poly.size()) - 1;
  const long guard = spread + 2 * degree + 4;
  for (long w = std::max(policy.initial_digits, precision) + guard;;
       w *= 2) {
    w = std::min(w, policy.max_digits);
    if (auto out = attempt(norm, polygon, precision, w, ctx)) return *out;
    if (w == policy.max_digits) break;
  }
  throw Error(Errc::PrecisionExhausted,
              "factors did not verify within " +
                  std::to_string(policy.max_digits) + " digits");
}

bool factorization_reproduces(const LaurentSeries& f,
                              const SlopeFactorization& fz) {
  const Normalized norm = normalize(f);
  if (norm.shift != fz.shift || norm.denominator != fz.denominator ||
      norm.content != fz.unit_valuation) {
    return false;
  }
  long degree = 0;
  for (const auto& fac : fz.factors) degree += fac.degree;
  if (degree + 1 != static_cast<long>(norm.poly.size())) return false;
  return product_matches(norm.poly, fz.unit.value, fz.factors, fz.precision,
                         f.context());
}

KnownFactor linear_factor(const PrimeContext& ctx, const Rational& root) {
  if (root == 0) {
    throw Error(Errc::InvalidArgument, "root must be nonzero");
  }
  return KnownFactor{{-root, Rational(1)},
                     {padic_valuation(root, ctx).value()}};
}

KnownFactor quadratic_factor(const PrimeContext& ctx, const Rational& c) {
  if (c == 0) {
    throw Error(Errc::InvalidArgument, "constant must be nonzero");
  }
  const Rational half = padic_valuation(c, ctx).value() / 2;
  return KnownFactor{{-c, Rational(0), Rational(1)}, {half, half}};
}

LaurentSeries product_series(const PrimeContext& ctx,
                             std::span<const KnownFactor> factors) {
  LaurentSeries prod = polynomial(ctx, {Rational(1)});
  for (const auto& fac : factors) {
    prod = mul_series(prod, polynomial(ctx, fac.coefficients));
  }
  return prod;
}

long oracle_zero_count(std::span<const KnownFactor> factors,
                       const Rational& lo, const Rational& hi) {
  long count = 0;
  for (const auto& fac : factors) {
    for (const auto& v : fac.root_valuations) {
      if (v >= lo && v <= hi) ++count;
    }
  }
  return count;
}

}  // namespace ultrapic
