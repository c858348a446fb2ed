// Wall-time comparison of the serial reference kernels against the OpenMP
// kernels, with a report-equality check on every row.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
namespace {
inline int omp_get_max_threads() { return 1; }
}  // namespace
#endif

#include "looplink/scan.hpp"

using namespace looplink;
using Clock = std::chrono::steady_clock;

namespace {

bool same_report(const SuiteReport& a, const SuiteReport& b) {
  return a.items == b.items && a.checks == b.checks && a.failures == b.failures &&
         a.first_failure.has_value() == b.first_failure.has_value();
}

template <class F>
double seconds(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, std::uint64_t items, std::uint64_t checks,
         double t_serial, double t_parallel, bool equal, bool passed) {
  std::printf("%-28s %10llu %12llu %9.3f %9.3f %7.2fx   %s%s\n", name,
              static_cast<unsigned long long>(items),
              static_cast<unsigned long long>(checks), t_serial, t_parallel,
              t_serial / t_parallel, equal ? "equal" : "MISMATCH",
              passed ? "" : " FAILED");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %12s %9s %9s %8s\n", "suite", "items", "checks",
              "serial/s", "omp/s", "speedup");

  {
    OracleScanConfig cfg;
    cfg.genus = 2;
    cfg.letters = {Letter::make('a', 1, false), Letter::make('a', 1, true),
                   Letter::make('b', 1, false), Letter::make('b', 1, true),
                   Letter::make('a', 2, false), Letter::make('a', 2, true)};
    cfg.max_len = quick ? 6 : 8;
    cfg.random_words = quick ? 1000 : 10000;
    cfg.seed = 1;
    SuiteReport s, p;
    const double ts = seconds([&] { s = oracle_scan(cfg, Execution::Serial); });
    const double tp = seconds([&] { p = oracle_scan(cfg, Execution::Parallel); });
    row("oracle sweep", s.items, s.checks, ts, tp, same_report(s, p), s.passed());
  }

  {
    InvarianceScanConfig cfg;
    cfg.iterations = quick ? 1000 : 10000;
    cfg.seed = 2;
    SuiteReport s, p;
    const double ts = seconds([&] { s = invariance_scan(cfg, Execution::Serial); });
    const double tp =
        seconds([&] { p = invariance_scan(cfg, Execution::Parallel); });
    row("invariance fuzz", s.items, s.checks, ts, tp, same_report(s, p),
        s.passed());
  }

  {
    IdentityScanConfig cfg;
    cfg.genus = 1;
    cfg.pool_max_len = quick ? 2 : 3;
    cfg.jacobi_exhaustive = true;
    cfg.random_triples = quick ? 100 : 1000;
    cfg.random_max_len = 5;
    cfg.seed = 3;
    IdentityReport s, p;
    const double ts = seconds([&] { s = identity_scan(cfg, Execution::Serial); });
    const double tp = seconds([&] { p = identity_scan(cfg, Execution::Parallel); });
    const bool equal = same_report(s.antisymmetry, p.antisymmetry) &&
                       same_report(s.jacobi, p.jacobi) &&
                       same_report(s.cojacobi, p.cojacobi) &&
                       same_report(s.compatibility, p.compatibility) &&
                       same_report(s.random_triples, p.random_triples);
    const std::uint64_t items = s.antisymmetry.items + s.jacobi.items +
                                s.cojacobi.items + s.compatibility.items +
                                s.random_triples.items;
    row("bialgebra identities", items, s.total_checks(), ts, tp, equal,
        s.passed());
  }

  return 0;
}
