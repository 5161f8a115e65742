// Serial reference vs OpenMP batch kernels on the same inputs. Prints wall
// time for each and checks that the results agree.
//
//   ultrapic_bench [queries]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "oracles.hpp"
#include "ultrapic/batch.hpp"

using namespace ultrapic;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

template <class T>
void report(const char* name, const T& serial, const T& parallel,
            double t_serial, double t_parallel) {
  std::printf("%-16s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n",
              name, t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0,
              serial == parallel ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const long queries = argc > 1 ? std::atol(argv[1]) : 20000;
  std::printf("threads: %d, queries: %ld\n", batch::thread_count(), queries);

  oracle::Random rng(2024);
  const PrimeContext p3(3);
  const auto f = rng.series(p3, -40, 40, 12, 0.9);

  std::vector<Rational> s;
  std::vector<batch::Interval> iv;
  for (long i = 0; i < queries; ++i) {
    s.push_back(rng.small_rational(8));
    Rational a = rng.small_rational(8), b = rng.small_rational(8);
    if (b < a) std::swap(a, b);
    iv.push_back({a, b});
  }
  std::vector<LaurentSeries> family;
  for (long i = 0; i < queries / 10; ++i) {
    family.push_back(rng.series(p3, -12, 12, 6));
  }

  std::vector<Valuation> ev_s, ev_p;
  const double t1 = seconds([&] { ev_s = batch::envelope_values_serial(f, s); });
  const double t2 = seconds([&] { ev_p = batch::envelope_values_parallel(f, s); });
  report("envelope_values", ev_s, ev_p, t1, t2);

  std::vector<long> zc_s, zc_p;
  const double t3 = seconds([&] { zc_s = batch::zero_counts_serial(f, iv); });
  const double t4 = seconds([&] { zc_p = batch::zero_counts_parallel(f, iv); });
  report("zero_counts", zc_s, zc_p, t3, t4);

  std::vector<char> dc_s, dc_p;
  const double t5 =
      seconds([&] { dc_s = batch::duality_checks_serial(family, -4, 4); });
  const double t6 =
      seconds([&] { dc_p = batch::duality_checks_parallel(family, -4, 4); });
  report("duality_checks", dc_s, dc_p, t5, t6);

  const bool ok = ev_s == ev_p && zc_s == zc_p && dc_s == dc_p;
  return ok ? 0 : 1;
}
