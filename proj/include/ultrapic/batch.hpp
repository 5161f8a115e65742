#pragma once

// Many independent queries against one or many series. Each kernel has a
// serial reference and an OpenMP version; they must agree element for
// element. An exception thrown by any element is rethrown from the caller's
// thread after the loop (the first one by index).

#include <span>
#include <vector>

#include "ultrapic/polygon.hpp"

namespace ultrapic::batch {

struct Interval {
  Rational outer;  // s_outer
  Rational inner;  // s_inner >= s_outer
};

std::vector<Valuation> envelope_values_serial(const LaurentSeries& f,
                                              std::span<const Rational> s);
std::vector<Valuation> envelope_values_parallel(const LaurentSeries& f,
                                                std::span<const Rational> s);

std::vector<long> zero_counts_serial(const LaurentSeries& f,
                                     std::span<const Interval> intervals);
std::vector<long> zero_counts_parallel(const LaurentSeries& f,
                                       std::span<const Interval> intervals);

/// duality_check over a family of series on a common range; 1 = consistent.
std::vector<char> duality_checks_serial(std::span<const LaurentSeries> fs,
                                        const Rational& s_lo,
                                        const Rational& s_hi);
std::vector<char> duality_checks_parallel(std::span<const LaurentSeries> fs,
                                          const Rational& s_lo,
                                          const Rational& s_hi);

/// Number of threads the parallel kernels will use.
int thread_count();

}  // namespace ultrapic::batch
