#include "spinpair/twoparticle.hpp"

#include <cmath>
#include <stdexcept>

namespace spinpair {

namespace {

constexpr double kZeroNorm = 1e-14;

Vec3 direction(const Vec3& p) {
  if (norm(p) == 0.0) {
    throw std::domain_error("zero momentum has no direction");
  }
  return normalize(p);
}

struct ChainGeometry {
  Frame frame1;      // bisecting frame of the first-listed particle
  Vec3 axis;         // bisector, the shared z-axis and relating-rotor axis
  double theta;      // half the opening angle between the momenta
  bool coincident;
};

ChainGeometry chain_geometry(const Vec3& p1, const Vec3& p2,
                             const std::optional<Vec3>& hint) {
  Vec3 v1 = direction(p1);
  Vec3 v2 = direction(p2);
  if (norm(cross(v1, v2)) > kDegenerateCross) {
    PairGeometry g = pair_geometry(v1, v2);
    return {bisecting_frames(v1, v2).first, g.k, g.theta, false};
  }
  if (dot(v1, v2) < 0.0) {
    throw DegenerateGeometryError("antiparallel momenta have no bisecting frame");
  }
  if (!hint) {
    throw DegenerateGeometryError("coincident momenta need an azimuth hint");
  }
  return {limit_frames(v1, *hint).first, v1, 0.0, true};
}

Rotor helicity_local_rotor(double theta) {
  // Both bisecting frames see their own momentum at polar angle theta in the
  // x-z plane with negative x-component, so the same local rotation applies.
  if (theta == 0.0) {
    return identity_rotor();
  }
  return from_axis_angle(Vec3{0.0, -1.0, 0.0}, theta);
}

StateVector spec_ket(const ParticleSpec& spec, const Rotor& frame_rotor,
                     double theta) {
  Rotor r = frame_rotor;
  if (spec.basis == Basis::helicity) {
    r = compose(r, helicity_local_rotor(theta));
  }
  return make_ket(spec.q, spec.p, spec.s, spec.spin_quantum, r);
}

bool same_key(const TwoParticleState::Key& a, const TwoParticleState::Key& b) {
  return same_ket(a.first, b.first) && same_ket(a.second, b.second);
}

void append_occupancies(int remaining, int symbols_left, std::vector<int>& prefix,
                        std::vector<std::vector<int>>& out) {
  if (symbols_left == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    prefix.push_back(c);
    append_occupancies(remaining - c, symbols_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

void validate_spec(const ParticleSpec& spec) {
  if (!spec.spin_quantum.is_component_of(spec.s)) {
    throw std::domain_error("spin quantum number " + spec.spin_quantum.str() +
                            " is not a component of spin " + spec.s.str());
  }
  if (spec.basis == Basis::helicity && norm(spec.p) == 0.0) {
    throw std::domain_error("helicity basis needs a nonzero momentum");
  }
}

bool indistinguishable_content(const ParticleSpec& a, const ParticleSpec& b) {
  if (a.q != b.q || a.s != b.s) {
    return false;
  }
  for (int i = 0; i < 3; ++i) {
    if (std::abs(a.p[i] - b.p[i]) > kMomentumTol) {
      return false;
    }
  }
  return true;
}

void TwoParticleState::add_term(const Key& key, Complex amp) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (same_key(terms_[i].first, key)) {
      terms_[i].second += amp;
      if (std::abs(terms_[i].second) < kAmplitudeFloor) {
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
      }
      return;
    }
  }
  if (std::abs(amp) >= kAmplitudeFloor) {
    terms_.emplace_back(key, amp);
  }
}

void TwoParticleState::add_symmetric_term(const KetLabel& k1, const KetLabel& k2,
                                          Complex amp) {
  add_term({k1, k2}, amp);
  add_term({k2, k1}, amp);
}

TwoParticleState TwoParticleState::scaled(Complex c) const {
  TwoParticleState out;
  out.meta = meta;
  for (const auto& [key, amp] : terms_) {
    out.add_term(key, amp * c);
  }
  return out;
}

TwoParticleState operator+(const TwoParticleState& a, const TwoParticleState& b) {
  TwoParticleState out;
  out.meta = a.meta;
  for (const auto& [key, amp] : a.terms_) {
    out.add_term(key, amp);
  }
  for (const auto& [key, amp] : b.terms_) {
    out.add_term(key, amp);
  }
  return out;
}

double norm(const TwoParticleState& t) {
  double sum = 0.0;
  for (const auto& [key, amp] : t.terms()) {
    sum += std::norm(amp);
  }
  return std::sqrt(sum);
}

Complex inner_product(const TwoParticleState& u, const TwoParticleState& v) {
  Complex sum = 0.0;
  for (const auto& [ku, au] : u.terms()) {
    for (const auto& [kv, av] : v.terms()) {
      if (same_key(ku, kv)) {
        sum += std::conj(au) * av;
      }
    }
  }
  return sum;
}

Complex phase_ratio(const TwoParticleState& u, const TwoParticleState& v) {
  double nu = norm(u);
  double nv = norm(v);
  if (nu < kZeroNorm || nv < kZeroNorm) {
    throw NotARayError("phase ratio of a zero state");
  }
  Complex c = inner_product(v, u) / (nv * nv);
  double residual = 0.0;
  for (const auto& [kv, av] : v.terms()) {
    Complex du = -c * av;
    for (const auto& [ku, au] : u.terms()) {
      if (same_key(ku, kv)) {
        du += au;
      }
    }
    residual += std::norm(du);
  }
  for (const auto& [ku, au] : u.terms()) {
    bool matched = false;
    for (const auto& [kv, av] : v.terms()) {
      matched = matched || same_key(ku, kv);
    }
    if (!matched) {
      residual += std::norm(au);
    }
  }
  if (std::sqrt(residual) > kRayResidual * nu) {
    throw NotARayError("states are not proportional");
  }
  return c;
}

TwoParticleState symmetrize(const StateVector& u, const StateVector& v) {
  if (norm(u) < kZeroNorm || norm(v) < kZeroNorm) {
    throw std::domain_error("cannot symmetrize a zero state");
  }
  TwoParticleState out;
  for (const auto& [ku, au] : u.terms()) {
    for (const auto& [kv, av] : v.terms()) {
      out.add_symmetric_term(ku, kv, au * av);
    }
  }
  double n = norm(out);
  if (n < kZeroNorm) {
    throw std::domain_error("symmetrized state vanished");
  }
  return out.scaled(1.0 / n);
}

TwoParticleState permute(const TwoParticleState& t) {
  TwoParticleState out;
  out.meta = t.meta;
  for (const auto& [key, amp] : t.terms()) {
    out.add_term({key.second, key.first}, amp);
  }
  return out;
}

ChainKets labeled_chain_kets(const ParticleSpec& spec1, const ParticleSpec& spec2,
                             const Rotor& common_frame, int sign,
                             const std::optional<Vec3>& hint) {
  validate_spec(spec1);
  validate_spec(spec2);
  if (sign != 1 && sign != -1) {
    throw std::domain_error("relating-rotor sign must be +1 or -1");
  }
  ChainGeometry g = chain_geometry(spec1.p, spec2.p, hint);
  Rotor a1 = frame_to_rotor(g.frame1);
  Rotor r_co = half_turn_rotor(g.axis, sign);
  Rotor w1 = compose(common_frame, a1);
  Rotor w2 = compose(common_frame, compose(r_co, a1));
  return {spec_ket(spec1, w1, g.theta), spec_ket(spec2, w2, g.theta)};
}

TwoParticleState labeled_common_frame_state(const ParticleSpec& spec1,
                                            const ParticleSpec& spec2,
                                            const Rotor& common_frame, int sign,
                                            const std::optional<Vec3>& hint) {
  ChainKets kets = labeled_chain_kets(spec1, spec2, common_frame, sign, hint);
  TwoParticleState out = symmetrize(kets.ket1, kets.ket2);
  out.meta = PairLabeling{spec1, spec2, common_frame, sign, hint, true};
  return out;
}

TwoParticleState symmetric_common_frame_state(const ParticleSpec& a,
                                              const ParticleSpec& b,
                                              const Rotor& common_frame, int sign,
                                              const std::optional<Vec3>& hint) {
  ChainKets kets = labeled_chain_kets(a, b, common_frame, sign, hint);
  TwoParticleState out = symmetrize(kets.ket1, kets.ket2);
  out.meta = PairLabeling{a, b, common_frame, sign, hint, false};
  return out;
}

TwoParticleState bisecting_pair_state(const ParticleSpec& a, const ParticleSpec& b,
                                      const std::optional<Vec3>& hint) {
  validate_spec(a);
  validate_spec(b);
  Vec3 va = direction(a.p);
  Vec3 vb = direction(b.p);
  Frame fa, fb;
  double theta = 0.0;
  if (norm(cross(va, vb)) > kDegenerateCross) {
    auto frames = bisecting_frames(va, vb);
    fa = frames.first;
    fb = frames.second;
    theta = pair_geometry(va, vb).theta;
  } else if (dot(va, vb) < 0.0) {
    throw DegenerateGeometryError("antiparallel momenta have no bisecting frame");
  } else if (!hint) {
    throw DegenerateGeometryError("coincident momenta need an azimuth hint");
  } else {
    auto frames = limit_frames(va, *hint);
    fa = frames.first;
    fb = frames.second;
  }
  StateVector ka = spec_ket(a, frame_to_rotor(fa), theta);
  StateVector kb = spec_ket(b, frame_to_rotor(fb), theta);
  return symmetrize(ka, kb);
}

TwoParticleState exchange(const TwoParticleState& t) {
  const auto* lab = std::get_if<PairLabeling>(&t.meta);
  if (lab == nullptr || !lab->order_anchored) {
    return permute(t);
  }
  std::optional<Vec3> swapped_hint;
  if (lab->hint) {
    swapped_hint = negate(*lab->hint);
  }
  return labeled_common_frame_state(lab->second, lab->first, lab->common_frame,
                                    lab->sign, swapped_hint);
}

Complex exchange_phase(const TwoParticleState& t) {
  TwoParticleState swapped = exchange(t);
  Complex phi = phase_ratio(swapped, t);
  const auto* lab = std::get_if<PairLabeling>(&t.meta);
  if (lab != nullptr && lab->order_anchored) {
    std::optional<Vec3> swapped_hint;
    if (lab->hint) {
      swapped_hint = negate(*lab->hint);
    }
    ChainKets orig = labeled_chain_kets(lab->first, lab->second,
                                        lab->common_frame, lab->sign, lab->hint);
    ChainKets ex = labeled_chain_kets(lab->second, lab->first,
                                      lab->common_frame, lab->sign, swapped_hint);
    // After the roles swap, the first-listed particle's ket is rebuilt on the
    // chained frame and vice versa; the pair phase must be the product of the
    // two single-particle phase changes.
    Complex f_first = phase_ratio(ex.ket2, orig.ket1);
    Complex f_second = phase_ratio(ex.ket1, orig.ket2);
    if (std::abs(phi - f_first * f_second) > 1e-10) {
      throw std::runtime_error(
          "exchange phase disagrees with the single-particle factor product");
    }
  }
  return phi;
}

OrderFreeEnumeration enumerate_order_free(int num_entities, int states_per_entity) {
  if (num_entities < 1 || states_per_entity < 1) {
    throw std::domain_error("order-free enumeration needs positive counts");
  }
  OrderFreeEnumeration out;
  std::vector<int> prefix;
  append_occupancies(num_entities, states_per_entity, prefix, out.occupancies);
  out.count = out.occupancies.size();
  return out;
}

}  // namespace spinpair
