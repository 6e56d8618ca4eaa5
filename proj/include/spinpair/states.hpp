#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinpair/wigner.hpp"

namespace spinpair {

// Two state vectors compared as rays are not proportional: the two
// descriptions do not refer to the same physical state.
struct NotARayError : std::domain_error {
  using std::domain_error::domain_error;
};

// Amplitudes smaller than this are dropped from term maps.
inline constexpr double kAmplitudeFloor = 1e-14;
// Momentum labels within this distance (max-norm) refer to the same momentum.
inline constexpr double kMomentumTol = 1e-10;
// Relative residual above which two vectors are declared not proportional.
inline constexpr double kRayResidual = 1e-8;

using QLabels = std::vector<std::pair<std::string, std::string>>;

/**
 * Canonical single-particle ket label (Q, p, s, m). The spin frame rotor of a
 * stored ket is always the null rotation: any ket described in a rotated spin
 * frame is expanded over canonical kets before storage, which is what makes
 * state vectors unique and equality decidable.
 */
struct KetLabel {
  QLabels q;
  Vec3 p{0.0, 0.0, 0.0};
  HalfSpin s;
  HalfSpin m;
};

bool same_ket(const KetLabel& a, const KetLabel& b);

/**
 * Finite complex-amplitude map over canonical kets. Terms with matching labels
 * (Q exact, momentum within tolerance, same s and m) are merged by amplitude
 * addition; negligible amplitudes are dropped. Immutable in spirit: all
 * operations return new values.
 */
class StateVector {
public:
  StateVector() = default;

  void add_term(const KetLabel& label, Complex amp);
  const std::vector<std::pair<KetLabel, Complex>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  StateVector scaled(Complex c) const;
  friend StateVector operator+(const StateVector& a, const StateVector& b);

private:
  std::vector<std::pair<KetLabel, Complex>> terms_;
};

/**
 * The ket |Q, p, s, m> whose spin frame is reached from the lab frame by
 * frame_rotor, expanded over canonical kets: sum_m' D^s_{m'm}(frame_rotor)
 * |Q, p, s, m'(N)>. A 2pi frame rotor therefore flips the sign for
 * half-integer s even though it is "the same" 3D frame.
 */
StateVector make_ket(const QLabels& q, const Vec3& p, HalfSpin s, HalfSpin m,
                     const Rotor& frame_rotor);

// make_ket with the identity (null) frame rotor.
StateVector canonical_ket(const QLabels& q, const Vec3& p, HalfSpin s, HalfSpin m);

// The minimal rotation taking the lab z-axis onto the direction of p:
// about z x p-hat by the polar angle. For p-hat = z it is the identity; for
// p-hat = -z the rotation about y by pi, by convention.
Rotor standard_rotation_to(const Vec3& p);

// Spin quantized along the momentum: make_ket with standard_rotation_to(p).
StateVector helicity_ket(const QLabels& q, const Vec3& p, HalfSpin s, HalfSpin lambda);

// U(r): rotates momentum labels and mixes spin components with D^s(r).
StateVector apply_rotation(const Rotor& r, const StateVector& v);

// Relabels the momentum of a single-momentum state; amplitudes unchanged.
// Boosts carry no phase here: they are pure momentum relabelings.
StateVector boost(const Vec3& p_new, const StateVector& v);

// Conjugate-linear in the first argument.
Complex inner_product(const StateVector& u, const StateVector& v);

double norm(const StateVector& v);

/**
 * The unimodular c with u = c * v. Throws NotARayError when the relative
 * residual ||u - c v|| / ||u|| exceeds 1e-8, i.e. when the two descriptions
 * are not the same physical state.
 */
Complex phase_ratio(const StateVector& u, const StateVector& v);

}  // namespace spinpair
