#include "spinpair/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "spinpair/wigner.hpp"

namespace spinpair {

namespace {

// Factorial of a twice-value known to be even; negative means the caller's
// bookkeeping is broken.
double fact2(int twice) {
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error("factorial of a non-integer or negative value");
  }
  return factorial(twice / 2);
}

constexpr double kRoot2Inv = 0.70710678118654752440084436210485;

}  // namespace

double cg(const CGQuery& q) {
  const int j1 = q.j1.twice(), j2 = q.j2.twice(), J = q.J.twice();
  const int m1 = q.m1.twice(), m2 = q.m2.twice(), M = q.M.twice();
  if (j1 > kMaxTwiceSpin || j2 > kMaxTwiceSpin || J > 2 * kMaxTwiceSpin) {
    throw std::domain_error("spin exceeds the supported cap");
  }
  if (!q.m1.is_component_of(q.j1) || !q.m2.is_component_of(q.j2) ||
      !q.M.is_component_of(q.J)) {
    throw std::domain_error("invalid spin component in coupling coefficient");
  }
  if (J < std::abs(j1 - j2) || J > j1 + j2 || (j1 + j2 + J) % 2 != 0) {
    throw std::domain_error("coupling triangle rule violated");
  }
  if (m1 + m2 != M) {
    return 0.0;
  }
  const double pre = (J + 1) *
      fact2(j1 + j2 - J) * fact2(j1 - j2 + J) * fact2(-j1 + j2 + J) /
      fact2(j1 + j2 + J + 2) *
      fact2(J + M) * fact2(J - M) *
      fact2(j1 - m1) * fact2(j1 + m1) * fact2(j2 - m2) * fact2(j2 + m2);
  const int k_lo = std::max(0, std::max((j2 - J - m1) / 2, (j1 + m2 - J) / 2));
  const int k_hi = std::min((j1 + j2 - J) / 2,
                            std::min((j1 - m1) / 2, (j2 + m2) / 2));
  double sum = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double denom = factorial(k) * fact2(j1 + j2 - J - 2 * k) *
                         fact2(j1 - m1 - 2 * k) * fact2(j2 + m2 - 2 * k) *
                         fact2(J - j2 + m1 + 2 * k) * fact2(J - j1 - m2 + 2 * k);
    sum += (k % 2 == 0 ? 1.0 : -1.0) / denom;
  }
  return std::sqrt(pre) * sum;
}

double cg(HalfSpin j1, HalfSpin m1, HalfSpin j2, HalfSpin m2, HalfSpin J,
          HalfSpin M) {
  return cg(CGQuery{j1, m1, j2, m2, J, M});
}

TwoParticleState couple_total_spin(const ParticleSpec& a, const ParticleSpec& b,
                                   const Rotor& common_frame, int sign,
                                   HalfSpin S, HalfSpin M,
                                   const std::optional<Vec3>& hint) {
  if (a.basis != Basis::canonical || b.basis != Basis::canonical) {
    throw std::domain_error("coupling needs canonical-basis constituents");
  }
  if (a.s != b.s) {
    throw std::domain_error("coupling is defined here for equal spins");
  }
  const HalfSpin s = a.s;
  if (S.twice() % 2 != 0 || S.twice() < 0 || S.twice() > 2 * s.twice()) {
    throw std::domain_error("total spin outside 0..2s");
  }
  if (!M.is_component_of(S)) {
    throw std::domain_error("M is not a component of S");
  }

  const Vec3 va = normalize(a.p);
  const Vec3 vb = normalize(b.p);
  const bool coincident =
      norm(cross(va, vb)) <= kDegenerateCross && dot(va, vb) > 0.0;
  const bool orbit_average = coincident && indistinguishable_content(a, b);
  std::optional<Vec3> base_hint;
  if (coincident) {
    base_hint = hint ? *hint : default_azimuth_hint(va);
  }

  std::vector<std::optional<Vec3>> branches;
  branches.push_back(base_hint);
  if (orbit_average) {
    branches.push_back(negate(*base_hint));
  }
  const double family_alpha = orbit_average ? 0.5 : kRoot2Inv;
  const double branch_weight = family_alpha / static_cast<double>(branches.size());

  TwoParticleState out;
  for (const auto& branch_hint : branches) {
    for (int m1t = s.twice(); m1t >= -s.twice(); m1t -= 2) {
      const int m2t = M.twice() - m1t;
      if (std::abs(m2t) > s.twice()) {
        continue;
      }
      const HalfSpin m1 = HalfSpin::from_twice(m1t);
      const HalfSpin m2 = HalfSpin::from_twice(m2t);
      const double c = cg(s, m1, s, m2, S, M);
      if (c == 0.0) {
        continue;
      }
      ParticleSpec sa = a;
      sa.spin_quantum = m1;
      ParticleSpec sb = b;
      sb.spin_quantum = m2;
      ChainKets kets = labeled_chain_kets(sa, sb, common_frame, sign, branch_hint);
      for (const auto& [k1, a1] : kets.ket1.terms()) {
        for (const auto& [k2, a2] : kets.ket2.terms()) {
          out.add_symmetric_term(k1, k2, branch_weight * c * a1 * a2);
        }
      }
    }
  }
  return out;
}

std::vector<ExclusionRow> exclusion_report(const QLabels& q, const Vec3& p,
                                           HalfSpin s, const Rotor& common_frame,
                                           int sign) {
  ParticleSpec spec{q, p, s, s, Basis::canonical};
  std::vector<ExclusionRow> rows;
  for (int St = 0; St <= 2 * s.twice(); St += 2) {
    const HalfSpin S = HalfSpin::from_twice(St);
    TwoParticleState coupled =
        couple_total_spin(spec, spec, common_frame, sign, S, S);
    const double n = norm(coupled);
    rows.push_back(ExclusionRow{S, n, n >= 1e-10});
  }
  return rows;
}

}  // namespace spinpair
