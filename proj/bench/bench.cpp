// Wall-clock comparison of the OpenMP kernels against their serial
// references on a Hahn lattice. Usage: mvop_bench [n] [N] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "mvop/operators.hpp"
#include "mvop/parallel.hpp"
#include "mvop/polynomials.hpp"
#include "mvop/verify.hpp"

namespace {

using namespace mvop;
using Clock = std::chrono::steady_clock;

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial_s, double parallel_s, bool same) {
  std::printf("%-22s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, serial_s, parallel_s,
              serial_s / parallel_s, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 3;
  const int N = argc > 2 ? std::atoi(argv[2]) : 8;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  if (n < 2 || N < 1 || repeats < 1) {
    std::fprintf(stderr, "usage: mvop_bench [n >= 2] [N >= 1] [repeats >= 1]\n");
    return 2;
  }

  std::mt19937_64 rng(20240601);
  const FamilyParams p = random_hahn(rng, n, N);
  const LatticePtr lattice = domain_lattice(p);
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  m[0] = N / 2;
  m[static_cast<std::size_t>(n - 1)] = N - N / 2;
  const auto fn = [&](const LatticePoint& x) { return eigenpolynomial(m, x, p); };

  std::printf("hahn n=%d N=%d points=%zu threads=%d\n", n, N, lattice->size(), worker_count());

  LatticeFunction ts = serial::tabulate(lattice, fn);
  LatticeFunction tp = ts;
  const double tab_s = best_of(repeats, [&] { ts = serial::tabulate(lattice, fn); });
  const double tab_p = best_of(repeats, [&] { tp = LatticeFunction::tabulate(lattice, fn); });
  row("tabulate P_m", tab_s, tab_p, ts.values() == tp.values());

  const OperatorSpec op = OperatorSpec::total(p);
  LatticeFunction as = reference::apply_operator(op, ts);
  LatticeFunction ap = as;
  const double app_s = best_of(repeats, [&] { as = reference::apply_operator(op, ts); });
  const double app_p = best_of(repeats, [&] { ap = apply_operator(op, ts); });
  row("apply H_T", app_s, app_p, as.values() == ap.values());

  const SparseMatrix a = operator_matrix(op, lattice);
  const SparseMatrix b = operator_matrix(OperatorSpec::partial(p, 1), lattice);
  SparseMatrix ms = serial::multiply(a, b);
  SparseMatrix mp = ms;
  const double mul_s = best_of(repeats, [&] { ms = serial::multiply(a, b); });
  const double mul_p = best_of(repeats, [&] { mp = a.multiply(b); });
  bool same = ms.size() == mp.size();
  for (std::size_t i = 0; same && i < ms.size(); ++i) {
    same = ms.row(i) == mp.row(i);
  }
  row("multiply H_T * H_1", mul_s, mul_p, same);
  return 0;
}
