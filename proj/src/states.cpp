#include "spinpair/states.hpp"

#include <cmath>

namespace spinpair {

bool same_ket(const KetLabel& a, const KetLabel& b) {
  if (a.s != b.s || a.m != b.m || a.q != b.q) return false;
  return std::abs(a.p[0] - b.p[0]) <= kMomentumTol &&
         std::abs(a.p[1] - b.p[1]) <= kMomentumTol &&
         std::abs(a.p[2] - b.p[2]) <= kMomentumTol;
}

void StateVector::add_term(const KetLabel& label, Complex amp) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (same_ket(terms_[i].first, label)) {
      terms_[i].second += amp;
      if (std::abs(terms_[i].second) < kAmplitudeFloor)
        terms_.erase(terms_.begin() + long(i));
      return;
    }
  }
  if (std::abs(amp) >= kAmplitudeFloor) terms_.emplace_back(label, amp);
}

StateVector StateVector::scaled(Complex c) const {
  StateVector out;
  for (const auto& [k, a] : terms_) out.add_term(k, c * a);
  return out;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  StateVector out = a;
  for (const auto& [k, amp] : b.terms_) out.add_term(k, amp);
  return out;
}

StateVector make_ket(const QLabels& q, const Vec3& p, HalfSpin s, HalfSpin m,
                     const Rotor& frame_rotor) {
  if (!m.is_component_of(s))
    throw std::domain_error("m = " + m.str() + " is not a component of s = " + s.str());
  for (double c : p)
    if (!std::isfinite(c)) throw std::domain_error("momentum must be finite");
  const DMatrix d = dmatrix(s, frame_rotor);
  StateVector v;
  for (int mpt = s.twice(); mpt >= -s.twice(); mpt -= 2) {
    const HalfSpin mp = HalfSpin::from_twice(mpt);
    const Complex amp = d.entries(d.index_of(mp), d.index_of(m));
    v.add_term(KetLabel{q, p, s, mp}, amp);
  }
  return v;
}

StateVector canonical_ket(const QLabels& q, const Vec3& p, HalfSpin s, HalfSpin m) {
  return make_ket(q, p, s, m, identity_rotor());
}

Rotor standard_rotation_to(const Vec3& p) {
  const double n = norm(p);
  if (n == 0.0) throw std::domain_error("direction undefined for zero momentum");
  const Vec3 ph = scale(p, 1.0 / n);
  const Vec3 c = cross(Vec3{0.0, 0.0, 1.0}, ph);
  const double cn = norm(c);
  if (cn <= 1e-12) {
    if (ph[2] > 0.0) return identity_rotor();
    return from_axis_angle(Vec3{0.0, 1.0, 0.0}, kPi);
  }
  const double polar = std::acos(std::clamp(ph[2], -1.0, 1.0));
  return from_axis_angle(scale(c, 1.0 / cn), polar);
}

StateVector helicity_ket(const QLabels& q, const Vec3& p, HalfSpin s, HalfSpin lambda) {
  return make_ket(q, p, s, lambda, standard_rotation_to(p));
}

StateVector apply_rotation(const Rotor& r, const StateVector& v) {
  StateVector out;
  for (const auto& [k, amp] : v.terms()) {
    const DMatrix d = dmatrix(k.s, r);
    const Vec3 p_rot = rotate_vector(r, k.p);
    for (int mpt = k.s.twice(); mpt >= -k.s.twice(); mpt -= 2) {
      const HalfSpin mp = HalfSpin::from_twice(mpt);
      const Complex c = d.entries(d.index_of(mp), d.index_of(k.m));
      out.add_term(KetLabel{k.q, p_rot, k.s, mp}, amp * c);
    }
  }
  return out;
}

StateVector boost(const Vec3& p_new, const StateVector& v) {
  if (v.empty()) throw std::domain_error("cannot boost an empty state");
  const Vec3& p0 = v.terms().front().first.p;
  for (const auto& [k, amp] : v.terms()) {
    (void)amp;
    if (std::abs(k.p[0] - p0[0]) > kMomentumTol ||
        std::abs(k.p[1] - p0[1]) > kMomentumTol ||
        std::abs(k.p[2] - p0[2]) > kMomentumTol)
      throw std::domain_error("boost requires a single momentum label");
  }
  StateVector out;
  for (const auto& [k, amp] : v.terms())
    out.add_term(KetLabel{k.q, p_new, k.s, k.m}, amp);
  return out;
}

Complex inner_product(const StateVector& u, const StateVector& v) {
  Complex acc(0.0, 0.0);
  for (const auto& [ku, au] : u.terms())
    for (const auto& [kv, av] : v.terms())
      if (same_ket(ku, kv)) acc += std::conj(au) * av;
  return acc;
}

double norm(const StateVector& v) {
  double acc = 0.0;
  for (const auto& [k, a] : v.terms()) {
    (void)k;
    acc += std::norm(a);
  }
  return std::sqrt(acc);
}

Complex phase_ratio(const StateVector& u, const StateVector& v) {
  const double nu = norm(u), nv = norm(v);
  if (nu == 0.0 || nv == 0.0)
    throw NotARayError("phase ratio undefined for a zero state");
  const Complex c = inner_product(v, u) / (nv * nv);
  const StateVector diff = u + v.scaled(-c);
  if (norm(diff) > kRayResidual * nu)
    throw NotARayError("states are not proportional: no common ray");
  return c;
}

}  // namespace spinpair
