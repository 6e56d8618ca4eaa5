#pragma once

#include "spinpair/twoparticle.hpp"

namespace spinpair {

struct CGQuery {
  HalfSpin j1, m1, j2, m2, J, M;
};

/**
 * Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
 * convention (all coefficients real; the highest-m1 component of each |J J>
 * positive). Zero when M != m1 + m2; a domain error when the triangle rule
 * fails or a spin exceeds the supported cap.
 *
 * Under swapping the two constituents,
 *   <j2 m2; j1 m1 | J M> = (-1)^(j1 + j2 - J) <j1 m1; j2 m2 | J M>.
 */
double cg(const CGQuery& q);
double cg(HalfSpin j1, HalfSpin m1, HalfSpin j2, HalfSpin m2, HalfSpin J,
          HalfSpin M);

/**
 * Total-spin state of a pair with equal spins s: the Clebsch-Gordan sum over
 * (m1, m2) of common-frame chain states, symmetrized and normalized at the
 * family level.
 *
 * The spin quantum numbers inside the two specs are ignored; the specs supply
 * intrinsic labels, momenta, and spin magnitude. Both specs must use the
 * canonical basis (a spin sum needs one quantization frame).
 *
 * For indistinguishable content at coincident momenta the construction has a
 * two-fold ambiguity: the azimuth hint and its negation describe the same
 * physical limit, so the state is the average of the two descriptions. The
 * averaging is where exclusion lives: odd-S amplitudes cancel identically and
 * the returned state has norm ~1e-15, while even-S states come out with norm 1
 * (at M with the parity of S; opposite-parity M components vanish inside each
 * description separately). Distinct momenta give norm 1 for every S.
 */
TwoParticleState couple_total_spin(const ParticleSpec& a, const ParticleSpec& b,
                                   const Rotor& common_frame, int sign,
                                   HalfSpin S, HalfSpin M,
                                   const std::optional<Vec3>& hint = std::nullopt);

struct ExclusionRow {
  HalfSpin S;
  double norm_value;
  bool allowed;
};

/**
 * Occupation table for a pair of identical particles (labels Q, common
 * momentum p, spin s): for each total spin S in 0..2s, the norm of the coupled
 * state at M = S and whether the state survives. Odd S is excluded for every
 * s, integer or half-integer; symmetry of the construction does the selecting,
 * with no statistics assumption anywhere.
 *
 * M = S is used because opposite-parity M components vanish for a reason that
 * is an artifact of the coincident-momentum azimuth convention, not exclusion;
 * the M = S column shows exactly the physical effect.
 */
std::vector<ExclusionRow> exclusion_report(const QLabels& q, const Vec3& p,
                                           HalfSpin s,
                                           const Rotor& common_frame = identity_rotor(),
                                           int sign = 1);

}  // namespace spinpair
