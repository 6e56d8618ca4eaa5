#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinpair/twoparticle.hpp"

namespace spinpair {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/**
 * Aggregate deviations over a randomized sweep of exchange phases. expected is
 * the phase the construction should produce on every trial; ratio devs compare
 * the pair phase against the product of the two single-particle phase changes.
 */
struct SweepStats {
  int trials = 0;
  Complex expected;
  double mean_dev = 0.0;
  double max_dev = 0.0;
  double mean_ratio_dev = 0.0;
  double max_ratio_dev = 0.0;
};

/**
 * Random geometries, components, common frames, and relating-rotor signs for
 * the order-anchored construction at spin s; expected phase (-1)^{2s}.
 * Trials are independent; with parallel = true they run under OpenMP and the
 * aggregation order is fixed, so results are bit-identical to the serial path.
 */
SweepStats run_labeled_phase_sweep(HalfSpin s, int trials, std::uint64_t seed,
                                   bool parallel);

// Same sweep for the content-anchored construction; expected phase +1.
SweepStats run_symmetric_phase_sweep(HalfSpin s, int trials, std::uint64_t seed,
                                     bool parallel);

// Every library invariant as a named pass/fail check. Small and fast; the
// heavy statistical sweeps live in the acceptance tests.
std::vector<CheckResult> run_verify(std::uint64_t seed);

}  // namespace spinpair
