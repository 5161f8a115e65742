#include "ultrapic/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ultrapic::batch {
namespace {

// Runs body(i) for i in [0, n) across threads. Exceptions cannot cross an
// OpenMP region, so each slot records its own and the lowest index wins.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Valuation> envelope_values_serial(const LaurentSeries& f,
                                              std::span<const Rational> s) {
  std::vector<Valuation> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(envelope_value(f, x));
  return out;
}

std::vector<Valuation> envelope_values_parallel(const LaurentSeries& f,
                                                std::span<const Rational> s) {
  std::vector<Valuation> out(s.size(), Valuation::infinity());
  parallel_for(s.size(), [&](std::size_t i) { out[i] = envelope_value(f, s[i]); });
  return out;
}

std::vector<long> zero_counts_serial(const LaurentSeries& f,
                                     std::span<const Interval> intervals) {
  std::vector<long> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) {
    out.push_back(zero_count_annulus(f, Valuation(iv.inner), iv.outer));
  }
  return out;
}

std::vector<long> zero_counts_parallel(const LaurentSeries& f,
                                       std::span<const Interval> intervals) {
  std::vector<long> out(intervals.size(), 0);
  parallel_for(intervals.size(), [&](std::size_t i) {
    out[i] = zero_count_annulus(f, Valuation(intervals[i].inner),
                                intervals[i].outer);
  });
  return out;
}

std::vector<char> duality_checks_serial(std::span<const LaurentSeries> fs,
                                        const Rational& s_lo,
                                        const Rational& s_hi) {
  std::vector<char> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(duality_check(f, s_lo, s_hi) ? 1 : 0);
  return out;
}

std::vector<char> duality_checks_parallel(std::span<const LaurentSeries> fs,
                                          const Rational& s_lo,
                                          const Rational& s_hi) {
  std::vector<char> out(fs.size(), 0);
  parallel_for(fs.size(), [&](std::size_t i) {
    out[i] = duality_check(fs[i], s_lo, s_hi) ? 1 : 0;
  });
  return out;
}

}  // namespace ultrapic::batch
