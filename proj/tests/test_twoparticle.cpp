#include <doctest.h>

#include <cmath>

#include "spinpair/rng.hpp"
#include "spinpair/twoparticle.hpp"

using namespace spinpair;

namespace {

const QLabels kQ{{"kind", "x"}};

ParticleSpec spec_of(const Vec3& p, int twice_s, int twice_m,
                     Basis basis = Basis::canonical) {
  return ParticleSpec{kQ, p, HalfSpin::from_twice(twice_s),
                      HalfSpin::from_twice(twice_m), basis};
}

bool exact_term_match(const TwoParticleState& a, const TwoParticleState& b) {
  if (a.terms().size() != b.terms().size()) {
    return false;
  }
  for (const auto& [ka, ca] : a.terms()) {
    bool found = false;
    for (const auto& [kb, cb] : b.terms()) {
      if (same_ket(ka.first, kb.first) && same_ket(ka.second, kb.second)) {
        found = ca == cb;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("specs are validated") {
  CHECK_NOTHROW(validate_spec(spec_of({0.0, 0.0, 1.0}, 3, 1)));
  CHECK_THROWS_AS(validate_spec(spec_of({0.0, 0.0, 1.0}, 3, 2)), std::domain_error);
  CHECK_THROWS_AS(validate_spec(spec_of({0.0, 0.0, 0.0}, 1, 1, Basis::helicity)),
                  std::domain_error);
}

TEST_CASE("indistinguishable content tolerates tiny momentum differences") {
  const ParticleSpec a = spec_of({0.3, 0.0, 1.0}, 1, 1);
  ParticleSpec b = a;
  b.spin_quantum = HalfSpin::from_twice(-1);
  CHECK(indistinguishable_content(a, b));
  b.p[0] += 1e-13;
  CHECK(indistinguishable_content(a, b));
  b.p[0] += 1e-3;
  CHECK(!indistinguishable_content(a, b));
  b = a;
  b.q = QLabels{{"kind", "y"}};
  CHECK(!indistinguishable_content(a, b));
}

TEST_CASE("symmetrize normalizes orthogonal and identical rays") {
  const HalfSpin half = HalfSpin::from_twice(1);
  const StateVector u = canonical_ket(kQ, {0.0, 0.0, 1.0}, half, half);
  const StateVector v = canonical_ket(kQ, {0.0, 0.0, 1.0}, half, -half);

  const TwoParticleState ortho = symmetrize(u, v);
  REQUIRE(ortho.terms().size() == 2);
  for (const auto& [key, amp] : ortho.terms()) {
    CHECK(std::abs(amp - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  }
  CHECK(norm(ortho) == doctest::Approx(1.0).epsilon(1e-14));

  const TwoParticleState same = symmetrize(u, u);
  REQUIRE(same.terms().size() == 1);
  CHECK(std::abs(same.terms()[0].second - Complex(1.0, 0.0)) < 1e-15);

  CHECK_THROWS_AS(symmetrize(StateVector{}, u), std::domain_error);
}

TEST_CASE("permute is an involution and fixes symmetrized states exactly") {
  TrialRng rng(5);
  const StateVector u = make_ket(kQ, rng.unit_vector(), HalfSpin::from_twice(2),
                                 HalfSpin::from_twice(0), rng.random_rotor());
  const StateVector v = make_ket(kQ, rng.unit_vector(), HalfSpin::from_twice(2),
                                 HalfSpin::from_twice(2), rng.random_rotor());
  const TwoParticleState t = symmetrize(u, v);
  CHECK(exact_term_match(permute(t), t));
  CHECK(exact_term_match(permute(permute(t)), t));

  TwoParticleState raw;
  raw.add_term({u.terms()[0].first, v.terms()[0].first}, Complex(0.8, 0.1));
  CHECK(!exact_term_match(permute(raw), raw));
  CHECK(exact_term_match(permute(permute(raw)), raw));
}

TEST_CASE("labeled pair states carry their labeling and have unit norm") {
  const ParticleSpec a = spec_of({0.3, -0.2, 0.9}, 3, 1);
  const ParticleSpec b = spec_of({-0.5, 0.1, 0.8}, 3, -3);
  const Rotor f = from_axis_angle(normalize(Vec3{1.0, 2.0, 0.5}), 0.9);
  const TwoParticleState t = labeled_common_frame_state(a, b, f, -1);
  CHECK(norm(t) == doctest::Approx(1.0).epsilon(1e-12));
  const auto* lab = std::get_if<PairLabeling>(&t.meta);
  REQUIRE(lab != nullptr);
  CHECK(lab->order_anchored);
  CHECK(lab->sign == -1);
  CHECK(lab->first.spin_quantum == a.spin_quantum);
  CHECK(exact_term_match(permute(t), t));
}

TEST_CASE("exchanging a labeled pair gives the spin parity for every spin") {
  const Vec3 pa{0.4, -0.3, 0.8}, pb{-0.6, 0.2, 0.5};
  const Rotor f = from_axis_angle(normalize(Vec3{0.2, -1.0, 0.4}), 1.7);
  for (int st = 0; st <= 5; ++st) {
    for (int sign : {1, -1}) {
      const ParticleSpec a = spec_of(pa, st, st);
      const ParticleSpec b = spec_of(pb, st, -(st % 2 == 0 ? st : st - 2));
      const TwoParticleState t = labeled_common_frame_state(a, b, f, sign);
      const Complex phi = exchange_phase(t);
      CHECK(std::abs(phi - Complex(parity_2s(a.s), 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("coincident momenta with a hint work and keep the spin parity") {
  // Two identical specs forced apart only by the azimuth hint.
  const Vec3 p{0.0, 0.0, 1.3};
  const Vec3 hint{1.0, 0.0, 0.0};
  for (int st : {1, 2, 3}) {
    const ParticleSpec a = spec_of(p, st, st);
    const TwoParticleState t =
        labeled_common_frame_state(a, a, identity_rotor(), 1, hint);
    CHECK(norm(t) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(exchange_phase(t) - Complex(parity_2s(a.s), 0.0)) < 1e-12);
  }
  const ParticleSpec a = spec_of(p, 1, 1);
  CHECK_THROWS_AS(labeled_common_frame_state(a, a, identity_rotor(), 1),
                  DegenerateGeometryError);
}

TEST_CASE("exchange is an involution on the ray") {
  TrialRng rng(11);
  const ParticleSpec a = spec_of(rng.unit_vector(), 3, 3);
  const ParticleSpec b = spec_of(rng.unit_vector(), 3, 1);
  const TwoParticleState t =
      labeled_common_frame_state(a, b, rng.random_rotor(), rng.random_sign());
  const TwoParticleState back = exchange(exchange(t));
  CHECK(std::abs(phase_ratio(back, t) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("content-anchored states share the labeled kets but exchange trivially") {
  TrialRng rng(17);
  const ParticleSpec a = spec_of(rng.unit_vector(), 1, 1);
  const ParticleSpec b = spec_of(rng.unit_vector(), 1, -1);
  const Rotor f = rng.random_rotor();
  const TwoParticleState lab = labeled_common_frame_state(a, b, f, 1);
  const TwoParticleState sym = symmetric_common_frame_state(a, b, f, 1);
  CHECK(exact_term_match(lab, sym));
  CHECK(std::abs(phase_ratio(sym, lab) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(exchange_phase(sym) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(exact_term_match(exchange(sym), permute(sym)));
}

TEST_CASE("independent bisecting frames make exchange a plain permutation") {
  const ParticleSpec a = spec_of({0.7, 0.1, 0.3}, 1, 1);
  const ParticleSpec b = spec_of({-0.2, 0.8, 0.4}, 1, -1);
  const TwoParticleState t = bisecting_pair_state(a, b);
  CHECK(norm(t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::holds_alternative<std::monostate>(t.meta));
  CHECK(std::abs(exchange_phase(t) - Complex(1.0, 0.0)) < 1e-12);
  CHECK_THROWS_AS(bisecting_pair_state(a, a), DegenerateGeometryError);
  CHECK_NOTHROW(bisecting_pair_state(a, a, default_azimuth_hint(a.p)));
}

TEST_CASE("a bare symmetrized state also exchanges trivially") {
  const HalfSpin half = HalfSpin::from_twice(1);
  const StateVector u = canonical_ket(kQ, {0.1, 0.2, 0.9}, half, half);
  const StateVector v = canonical_ket(kQ, {0.5, -0.3, 0.7}, half, -half);
  const TwoParticleState t = symmetrize(u, v);
  CHECK(std::abs(exchange_phase(t) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("helicity-basis pairs keep the same exchange parity") {
  const ParticleSpec a = spec_of({0.4, 0.2, 0.8}, 1, 1, Basis::helicity);
  const ParticleSpec b = spec_of({-0.3, 0.6, 0.6}, 1, -1, Basis::helicity);
  const TwoParticleState t = labeled_common_frame_state(a, b, identity_rotor(), 1);
  CHECK(norm(t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(exchange_phase(t) - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("state arithmetic behaves linearly") {
  const HalfSpin half = HalfSpin::from_twice(1);
  const StateVector u = canonical_ket(kQ, {0.0, 0.0, 1.0}, half, half);
  const StateVector v = canonical_ket(kQ, {0.0, 0.0, 1.0}, half, -half);
  const TwoParticleState t = symmetrize(u, v);
  const Complex c(0.3, -0.4);
  CHECK(norm(t.scaled(c)) == doctest::Approx(0.5).epsilon(1e-12));
  const TwoParticleState sum = t + t.scaled(Complex(-1.0, 0.0));
  CHECK(sum.empty());
  CHECK(std::abs(phase_ratio(t.scaled(c), t) - c) < 1e-14);
  CHECK_THROWS_AS(phase_ratio(sum, t), NotARayError);
}

TEST_CASE("order-free enumeration counts multisets") {
  const OrderFreeEnumeration two = enumerate_order_free(2, 2);
  CHECK(two.count == 3);
  REQUIRE(two.occupancies.size() == 3);
  CHECK(two.occupancies[0] == std::vector<int>{2, 0});
  CHECK(two.occupancies[1] == std::vector<int>{1, 1});
  CHECK(two.occupancies[2] == std::vector<int>{0, 2});

  CHECK(enumerate_order_free(3, 2).count == 4);
  CHECK(enumerate_order_free(1, 5).count == 5);
  CHECK(enumerate_order_free(2, 3).count == 6);
  CHECK_THROWS_AS(enumerate_order_free(0, 2), std::domain_error);
  CHECK_THROWS_AS(enumerate_order_free(2, 0), std::domain_error);
}
