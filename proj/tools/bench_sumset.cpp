// Serial reference vs OpenMP kernel for the bit-vector sumset.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "sumdens/integer_set.hpp"
#include "sumdens/random_sets.hpp"
#include "sumdens/sumset_kernels.hpp"

using namespace sumdens;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t horizon = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;

  SamplerConfig cfg;
  cfg.horizon = horizon;
  cfg.seed = 1;
  FiniteIntegerSet a = restrict_to_T(sample_pseudo_powers(cfg), cfg.k, cfg.theta);

  FiniteIntegerSet serial, parallel;
  double ts = best_of(reps, [&] { serial = sumset(a, a, KernelMode::Serial); });
  double tp = best_of(reps, [&] { parallel = sumset(a, a, KernelMode::Parallel); });

  std::printf("horizon %llu  |A| %llu  threads %d\n", static_cast<unsigned long long>(horizon),
              static_cast<unsigned long long>(a.size()), kernels::max_threads());
  std::printf("serial    %.4f s\n", ts);
  std::printf("parallel  %.4f s  speedup %.2fx\n", tp, ts / tp);
  std::printf("identical %s\n", serial == parallel ? "yes" : "NO");
  return serial == parallel ? 0 : 1;
}
