#pragma once

#include <optional>
#include <variant>

#include "spinpair/frames.hpp"
#include "spinpair/states.hpp"

namespace spinpair {

enum class Basis { canonical, helicity };

/**
 * Everything needed to describe one particle of a pair: intrinsic labels,
 * momentum, spin magnitude, and the spin quantum number (m in the canonical
 * basis, lambda in the helicity basis).
 */
struct ParticleSpec {
  QLabels q;
  Vec3 p{0.0, 0.0, 0.0};
  HalfSpin s;
  HalfSpin spin_quantum;
  Basis basis = Basis::canonical;
};

void validate_spec(const ParticleSpec& spec);

// True when the two specs describe the same kind of particle in the same
// momentum state (Q exact, momentum within tolerance, same spin magnitude).
bool indistinguishable_content(const ParticleSpec& a, const ParticleSpec& b);

/**
 * How a two-particle state was put together.
 *
 * order_anchored = true: the listing order is load-bearing; the first-listed
 * particle got the plainly lifted bisecting frame and the second got the frame
 * chained through the fixed relating rotor. Exchanging the particles' roles
 * genuinely rebuilds the state and can produce a phase.
 *
 * order_anchored = false: frames were attached to particle content, so
 * exchanging roles merely re-lists the same kets; exchange acts as permutation.
 */
struct PairLabeling {
  ParticleSpec first, second;
  Rotor common_frame;
  int sign = 1;
  std::optional<Vec3> hint;
  bool order_anchored = true;
};

/**
 * Amplitude map over ordered pairs of canonical kets, with optional labeling
 * metadata. Symmetrized states satisfy term(k1,k2) = term(k2,k1) exactly at
 * the term-map level; they have norm 1 unless an exclusion cancellation has
 * made them identically zero.
 */
class TwoParticleState {
public:
  using Key = std::pair<KetLabel, KetLabel>;

  void add_term(const Key& key, Complex amp);
  // Inserts amp at (k1,k2) and (k2,k1) with identical floating arithmetic, so
  // the stored map is permutation-symmetric exactly, not just within rounding.
  void add_symmetric_term(const KetLabel& k1, const KetLabel& k2, Complex amp);

  const std::vector<std::pair<Key, Complex>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  TwoParticleState scaled(Complex c) const;
  friend TwoParticleState operator+(const TwoParticleState& a,
                                    const TwoParticleState& b);

  std::variant<std::monostate, PairLabeling> meta;

private:
  std::vector<std::pair<Key, Complex>> terms_;
};

double norm(const TwoParticleState& t);
Complex inner_product(const TwoParticleState& u, const TwoParticleState& v);
Complex phase_ratio(const TwoParticleState& u, const TwoParticleState& v);

// alpha (u (x) v + v (x) u) with alpha chosen so the norm is 1:
// 1/sqrt(2) for orthogonal rays, 1/2 for identical rays, smoothly in between.
TwoParticleState symmetrize(const StateVector& u, const StateVector& v);

// Swaps the ordered pair in every term. An involution; the identity on every
// symmetrized state.
TwoParticleState permute(const TwoParticleState& t);

/**
 * The two single-particle kets of the common-frame chain: the first-listed
 * particle in its bisecting frame lifted to rotor A1 and carried to the common
 * frame F, the second described through the fixed relating rotor R_co:
 *   ket1 = |spec1 in frame F * A1>,  ket2 = |spec2 in frame F * R_co * A1>.
 * The second frame is chained through R_co rather than independently lifted;
 * that chaining is where a 2pi (and hence a sign) can hide.
 *
 * For coincident momenta the azimuth hint gives the limiting direction of
 * p1-hat x p2-hat; without it, coincident momenta are a degenerate-geometry
 * error. Helicity-basis specs get the extra local rotation taking each
 * bisecting frame's z-axis onto that particle's momentum.
 */
struct ChainKets {
  StateVector ket1, ket2;
};
ChainKets labeled_chain_kets(const ParticleSpec& spec1, const ParticleSpec& spec2,
                             const Rotor& common_frame, int sign,
                             const std::optional<Vec3>& hint = std::nullopt);

/**
 * Symmetrized two-particle state from the common-frame chain, with the chain
 * anchored to listing order. Permutation-symmetric with norm 1; exchanging the
 * two particles' roles rebuilds the chain and yields the phase (-1)^{2s} for
 * equal spins.
 */
TwoParticleState labeled_common_frame_state(const ParticleSpec& spec1,
                                            const ParticleSpec& spec2,
                                            const Rotor& common_frame, int sign,
                                            const std::optional<Vec3>& hint = std::nullopt);

/**
 * The same ket values as labeled_common_frame_state, but with the frame
 * assignment anchored to particle content instead of listing order. Exchange
 * then reduces to permutation and the exchange phase is exactly +1, in any
 * common frame and for any spins.
 */
TwoParticleState symmetric_common_frame_state(const ParticleSpec& a,
                                              const ParticleSpec& b,
                                              const Rotor& common_frame, int sign,
                                              const std::optional<Vec3>& hint = std::nullopt);

/**
 * Each particle described in its own independent bisecting frame (no common
 * frame, no chaining). Content-anchored, hence exchange symmetric with phase
 * +1 for any spins.
 */
TwoParticleState bisecting_pair_state(const ParticleSpec& a, const ParticleSpec& b,
                                      const std::optional<Vec3>& hint = std::nullopt);

/**
 * Swaps which particle plays which role while keeping the label semantics
 * (fixed relating-rotor sign, fixed common frame). Order-anchored states are
 * rebuilt with the specs interchanged (and the coincident-limit hint negated,
 * since the hint is the limit of p1-hat x p2-hat); content-anchored and
 * unlabeled states are simply permuted.
 */
TwoParticleState exchange(const TwoParticleState& t);

/**
 * The unimodular ratio exchange(t) / t. Also verifies, for order-anchored
 * states, that the ratio equals the product of the two single-particle phase
 * changes read off the rebuilt chain kets, within 1e-10.
 */
Complex exchange_phase(const TwoParticleState& t);

/**
 * All multisets of size num_entities over an alphabet of states_per_entity
 * symbols, as occupancy vectors; the count is C(n+k-1, n). Two entities with
 * two states give 3 collections, not 4: order-free notation has no (1,2) vs
 * (2,1) distinction.
 */
struct OrderFreeEnumeration {
  unsigned long long count;
  std::vector<std::vector<int>> occupancies;
};
OrderFreeEnumeration enumerate_order_free(int num_entities, int states_per_entity);

}  // namespace spinpair
