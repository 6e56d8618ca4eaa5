// Times the exchange-phase sweep serial vs parallel and checks that the two
// paths produce bit-identical statistics.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "spinpair/verify.hpp"

using namespace spinpair;

namespace {

double run_ms(bool parallel, int trials, SweepStats& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = run_labeled_phase_sweep(HalfSpin::from_twice(3), trials, 99, parallel);
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool identical(const SweepStats& a, const SweepStats& b) {
  return a.trials == b.trials && a.expected == b.expected &&
         a.mean_dev == b.mean_dev && a.max_dev == b.max_dev &&
         a.mean_ratio_dev == b.mean_ratio_dev &&
         a.max_ratio_dev == b.max_ratio_dev;
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 2000;
  if (trials < 1) {
    std::cerr << "usage: sweep_bench [trials]\n";
    return 2;
  }
  SweepStats serial, parallel;
  const double warm = run_ms(true, trials, parallel);
  (void)warm;
  const double par_ms = run_ms(true, trials, parallel);
  const double ser_ms = run_ms(false, trials, serial);
  std::cout << "trials          " << trials << "\n";
  std::cout << "serial          " << ser_ms << " ms\n";
  std::cout << "parallel        " << par_ms << " ms\n";
  std::cout << "speedup         " << ser_ms / par_ms << "x\n";
  std::cout << "max phase dev   " << serial.max_dev << "\n";
  if (!identical(serial, parallel)) {
    std::cout << "MISMATCH: parallel statistics differ from serial\n";
    return 1;
  }
  std::cout << "parallel statistics match serial bit for bit\n";
  return 0;
}
