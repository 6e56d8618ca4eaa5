#include "spinpair/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "spinpair/coupling.hpp"
#include "spinpair/rng.hpp"
#include "spinpair/wigner.hpp"

namespace spinpair {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct TrialDevs {
  double dev = kInf;
  double ratio_dev = kInf;
};

struct RandomPairSetup {
  ParticleSpec spec1, spec2;
  Rotor frame;
  int sign;
};

HalfSpin random_component(TrialRng& rng, HalfSpin s) {
  return HalfSpin::from_twice(s.twice() - 2 * rng.uniform_int(s.twice() + 1));
}

RandomPairSetup random_pair_setup(TrialRng& rng, HalfSpin s, Basis basis) {
  Vec3 va, vb;
  do {
    va = rng.unit_vector();
    vb = rng.unit_vector();
  } while (norm(cross(va, vb)) < 1e-6);
  QLabels q{{"kind", "x"}};
  ParticleSpec s1{q, scale(va, rng.uniform(0.5, 1.5)), s, random_component(rng, s),
                  basis};
  ParticleSpec s2{q, scale(vb, rng.uniform(0.5, 1.5)), s, random_component(rng, s),
                  basis};
  return {s1, s2, rng.random_rotor(), rng.random_sign()};
}

TrialDevs labeled_trial(HalfSpin s, std::uint64_t seed, int trial) {
  TrialDevs out;
  try {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    RandomPairSetup g = random_pair_setup(rng, s, Basis::canonical);
    TwoParticleState t = labeled_common_frame_state(g.spec1, g.spec2, g.frame,
                                                    g.sign);
    const Complex phi = exchange_phase(t);
    out.dev = std::abs(phi - Complex(parity_2s(s), 0.0));

    ChainKets orig = labeled_chain_kets(g.spec1, g.spec2, g.frame, g.sign);
    ChainKets swap = labeled_chain_kets(g.spec2, g.spec1, g.frame, g.sign);
    const Complex f_product =
        phase_ratio(swap.ket2, orig.ket1) * phase_ratio(swap.ket1, orig.ket2);
    out.ratio_dev = std::abs(phi - f_product);
  } catch (const std::exception&) {
    // devs stay infinite; the aggregate makes the failure loud
  }
  return out;
}

TrialDevs symmetric_trial(HalfSpin s, std::uint64_t seed, int trial) {
  TrialDevs out;
  try {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    RandomPairSetup g = random_pair_setup(rng, s, Basis::canonical);
    TwoParticleState t = symmetric_common_frame_state(g.spec1, g.spec2, g.frame,
                                                      g.sign);
    out.dev = std::abs(exchange_phase(t) - Complex(1.0, 0.0));
    out.ratio_dev = 0.0;
  } catch (const std::exception&) {
  }
  return out;
}

SweepStats aggregate(const std::vector<TrialDevs>& devs, Complex expected) {
  SweepStats st;
  st.trials = static_cast<int>(devs.size());
  st.expected = expected;
  double sum = 0.0, rsum = 0.0;
  for (const TrialDevs& d : devs) {
    sum += d.dev;
    rsum += d.ratio_dev;
    st.max_dev = std::max(st.max_dev, d.dev);
    st.max_ratio_dev = std::max(st.max_ratio_dev, d.ratio_dev);
  }
  if (!devs.empty()) {
    st.mean_dev = sum / st.trials;
    st.mean_ratio_dev = rsum / st.trials;
  }
  return st;
}

using TrialFn = TrialDevs (*)(HalfSpin, std::uint64_t, int);

SweepStats run_sweep(TrialFn fn, HalfSpin s, int trials, std::uint64_t seed,
                     bool parallel, Complex expected) {
  std::vector<TrialDevs> devs(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(static) if (parallel)
  for (int t = 0; t < trials; ++t) {
    devs[static_cast<std::size_t>(t)] = fn(s, seed, t);
  }
  return aggregate(devs, expected);
}

}  // namespace

SweepStats run_labeled_phase_sweep(HalfSpin s, int trials, std::uint64_t seed,
                                   bool parallel) {
  return run_sweep(&labeled_trial, s, trials, seed, parallel,
                   Complex(parity_2s(s), 0.0));
}

SweepStats run_symmetric_phase_sweep(HalfSpin s, int trials, std::uint64_t seed,
                                     bool parallel) {
  return run_sweep(&symmetric_trial, s, trials, seed, parallel, Complex(1.0, 0.0));
}

namespace {

using Body = std::function<std::pair<bool, std::string>()>;

void check(std::vector<CheckResult>& out, const std::string& name, const Body& body) {
  try {
    auto [ok, detail] = body();
    out.push_back({name, ok, detail});
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("unexpected exception: ") + e.what()});
  }
}

double max_entry_diff(const MatrixXc& a, const MatrixXc& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

MatrixXc unit_matrix(int n) { return MatrixXc::Identity(n, n); }

bool vec_close(const Vec3& a, const Vec3& b, double tol) {
  return std::abs(a[0] - b[0]) <= tol && std::abs(a[1] - b[1]) <= tol &&
         std::abs(a[2] - b[2]) <= tol;
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

ParticleSpec simple_spec(const Vec3& p, HalfSpin s, HalfSpin m,
                         Basis basis = Basis::canonical) {
  return ParticleSpec{QLabels{{"kind", "x"}}, p, s, m, basis};
}

}  // namespace

std::vector<CheckResult> run_verify(std::uint64_t seed) {
  std::vector<CheckResult> out;
  TrialRng rng(seed);

  check(out, "rotor_two_pi_is_minus_identity", [&] {
    const Vec3 n = rng.unit_vector();
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    bool ok = approx_equal(from_axis_angle(n, 2.0 * kPi), minus_identity_rotor(),
                           1e-12);
    ok = ok && approx_equal(from_axis_angle(n, theta + 2.0 * kPi),
                            negate(from_axis_angle(n, theta)), 1e-12);
    ok = ok && approx_equal(from_axis_angle(n, theta + 4.0 * kPi),
                            from_axis_angle(n, theta), 1e-12);
    return std::pair{ok, std::string("angles live on the real line, not mod 2pi")};
  });

  check(out, "half_turn_square_is_minus_identity_exact", [&] {
    bool ok = true;
    for (int i = 0; i < 8; ++i) {
      const Vec3 n = rng.unit_vector();
      const int sign = rng.random_sign();
      const Rotor r = half_turn_rotor(n, sign);
      ok = ok && (compose(r, r) == minus_identity_rotor());
    }
    return std::pair{ok, std::string("bitwise equality, not a tolerance")};
  });

  check(out, "rotation_action_is_sign_blind", [&] {
    const Rotor r = rng.random_rotor();
    const Vec3 v = rng.unit_vector();
    bool ok = vec_close(rotate_vector(r, v), rotate_vector(negate(r), v), 1e-14);
    const Vec3 round = rotate_vector(inverse(r), rotate_vector(r, v));
    ok = ok && vec_close(round, v, 1e-12);
    return std::pair{ok, std::string()};
  });

  check(out, "dmatrix_double_cover", [&] {
    double worst = 0.0;
    const Vec3 n = rng.unit_vector();
    for (int st = 0; st <= 5; ++st) {
      const HalfSpin s = HalfSpin::from_twice(st);
      const DMatrix d = dmatrix(s, from_axis_angle(n, 2.0 * kPi));
      worst = std::max(worst,
                       max_entry_diff(d.entries,
                                      parity_2s(s) * unit_matrix(d.dim())));
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "dmatrix_representation_property", [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Rotor a = rng.random_rotor();
      const Rotor b = rng.random_rotor();
      const HalfSpin s = HalfSpin::from_twice(rng.uniform_int(6));
      const MatrixXc lhs = dmatrix(s, compose(a, b)).entries;
      const MatrixXc rhs = dmatrix(s, a).entries * dmatrix(s, b).entries;
      worst = std::max(worst, max_entry_diff(lhs, rhs));
    }
    return std::pair{worst < 1e-10, "max deviation " + fmt(worst)};
  });

  check(out, "dmatrix_unitary", [&] {
    const DMatrix d = dmatrix(HalfSpin::from_twice(4), rng.random_rotor());
    const double dev = max_entry_diff(d.entries.adjoint() * d.entries,
                                      unit_matrix(d.dim()));
    return std::pair{dev < 1e-12, "max deviation " + fmt(dev)};
  });

  check(out, "dmatrix_minus_rotor_parity", [&] {
    double worst = 0.0;
    const Rotor r = rng.random_rotor();
    for (int st = 1; st <= 5; ++st) {
      const HalfSpin s = HalfSpin::from_twice(st);
      worst = std::max(worst,
                       max_entry_diff(dmatrix(s, negate(r)).entries,
                                      parity_2s(s) * dmatrix(s, r).entries));
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "little_d_oracle_agreement", [&] {
    double worst = 0.0;
    for (int st = 1; st <= 5; ++st) {
      const HalfSpin s = HalfSpin::from_twice(st);
      const double beta = rng.uniform(0.0, kPi);
      const DMatrix d = dmatrix(s, from_axis_angle(Vec3{0.0, 1.0, 0.0}, beta));
      for (int mp = s.twice(); mp >= -s.twice(); mp -= 2) {
        for (int m = s.twice(); m >= -s.twice(); m -= 2) {
          const Complex entry =
              d.entries(d.index_of(HalfSpin::from_twice(mp)),
                        d.index_of(HalfSpin::from_twice(m)));
          const double ref = little_d(s, HalfSpin::from_twice(mp),
                                      HalfSpin::from_twice(m), beta);
          worst = std::max(worst, std::abs(entry - Complex(ref, 0.0)));
        }
      }
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "z_rotation_phases", [&] {
    const HalfSpin s = HalfSpin::from_twice(3);
    const double phi = rng.uniform(0.0, 4.0 * kPi);
    const DMatrix d = dmatrix(s, from_axis_angle(Vec3{0.0, 0.0, 1.0}, phi));
    double worst = 0.0;
    for (int mt = 3; mt >= -3; mt -= 2) {
      const int i = d.index_of(HalfSpin::from_twice(mt));
      const Complex want = std::exp(Complex(0.0, -0.5 * mt * phi));
      worst = std::max(worst, std::abs(d.entries(i, i) - want));
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "bisecting_frames_oppose_y", [&] {
    double worst_y = 0.0, worst_hand = 0.0, worst_z = 0.0;
    for (int i = 0; i < 50; ++i) {
      Vec3 va = rng.unit_vector(), vb = rng.unit_vector();
      if (norm(cross(va, vb)) < 1e-6) {
        continue;
      }
      const PairGeometry g = pair_geometry(va, vb);
      const auto [fa, fb] = bisecting_frames(va, vb);
      worst_y = std::max(worst_y, std::abs(dot(fa.y, fb.y) + 1.0));
      worst_z = std::max(worst_z, std::abs(dot(fa.z, g.k) - 1.0));
      worst_z = std::max(worst_z, std::abs(dot(fb.z, g.k) - 1.0));
      worst_hand = std::max(worst_hand,
                            std::abs(dot(cross(fa.x, fa.y), fa.z) - 1.0));
      worst_hand = std::max(worst_hand,
                            std::abs(dot(cross(fb.x, fb.y), fb.z) - 1.0));
    }
    const bool ok = worst_y < 1e-12 && worst_z < 1e-12 && worst_hand < 1e-12;
    return std::pair{ok, "y opposition " + fmt(worst_y)};
  });

  check(out, "parallel_frames_keep_own_z", [&] {
    const Vec3 va = rng.unit_vector();
    Vec3 vb = rng.unit_vector();
    while (norm(cross(va, vb)) < 1e-6) {
      vb = rng.unit_vector();
    }
    const auto [fa, fb] = parallel_frames(va, vb);
    bool ok = vec_close(fa.z, va, 1e-12) && vec_close(fb.z, vb, 1e-12);
    ok = ok && std::abs(dot(fa.y, fb.y) + 1.0) < 1e-12;
    return std::pair{ok, std::string()};
  });

  check(out, "limit_frames_match_small_angle", [&] {
    const Vec3 v = rng.unit_vector();
    const Vec3 hint = default_azimuth_hint(v);
    const Vec3 vb = rotate_vector(from_axis_angle(hint, 1e-6), v);
    const auto [la, lb] = limit_frames(v, hint);
    const auto [ba, bb] = bisecting_frames(v, vb);
    const double tol = 1e-5;
    bool ok = vec_close(la.y, ba.y, tol) && vec_close(lb.y, bb.y, tol) &&
              vec_close(la.z, ba.z, tol) && vec_close(lb.z, bb.z, tol);
    return std::pair{ok, std::string("limit agrees with 1e-6 separation")};
  });

  check(out, "relating_rotor_carries_a_to_b", [&] {
    Vec3 va = rng.unit_vector(), vb = rng.unit_vector();
    while (norm(cross(va, vb)) < 1e-6) {
      vb = rng.unit_vector();
    }
    const PairGeometry g = pair_geometry(va, vb);
    const auto [fa, fb] = bisecting_frames(va, vb);
    bool ok = true;
    for (int sign : {1, -1}) {
      const Rotor r = relating_rotor(g, sign);
      ok = ok && vec_close(rotate_vector(r, va), vb, 1e-12);
      ok = ok && vec_close(rotate_vector(r, fa.x), fb.x, 1e-12);
      ok = ok && vec_close(rotate_vector(r, fa.y), fb.y, 1e-12);
      ok = ok && vec_close(rotate_vector(r, fa.z), fb.z, 1e-12);
    }
    return std::pair{ok, std::string("both signs project onto the same map")};
  });

  check(out, "frame_lift_round_trip", [&] {
    Vec3 va = rng.unit_vector(), vb = rng.unit_vector();
    while (norm(cross(va, vb)) < 1e-6) {
      vb = rng.unit_vector();
    }
    const auto [fa, fb] = bisecting_frames(va, vb);
    const Rotor q = frame_to_rotor(fa);
    bool ok = vec_close(rotate_vector(q, Vec3{1.0, 0.0, 0.0}), fa.x, 1e-12) &&
              vec_close(rotate_vector(q, Vec3{0.0, 1.0, 0.0}), fa.y, 1e-12) &&
              vec_close(rotate_vector(q, Vec3{0.0, 0.0, 1.0}), fa.z, 1e-12);
    return std::pair{ok, std::string()};
  });

  check(out, "ket_expansion_unitary", [&] {
    const HalfSpin s = HalfSpin::from_twice(3);
    const StateVector v = make_ket(QLabels{{"kind", "x"}}, rng.unit_vector(), s,
                                   HalfSpin::from_twice(1), rng.random_rotor());
    const double dev = std::abs(norm(v) - 1.0);
    return std::pair{dev < 1e-12, "norm deviation " + fmt(dev)};
  });

  check(out, "canonical_z_rotation_phase", [&] {
    const HalfSpin s = HalfSpin::from_twice(2);
    const HalfSpin m = HalfSpin::from_twice(-2);
    const double alpha = rng.uniform(0.0, 4.0 * kPi);
    const QLabels q{{"kind", "x"}};
    const Vec3 p{0.2, -0.1, 0.7};
    const StateVector rotated =
        make_ket(q, p, s, m, from_axis_angle(Vec3{0.0, 0.0, 1.0}, alpha));
    const Complex ratio = phase_ratio(rotated, canonical_ket(q, p, s, m));
    const Complex want = std::exp(Complex(0.0, -m.value() * alpha));
    const double dev = std::abs(ratio - want);
    return std::pair{dev < 1e-12, "phase deviation " + fmt(dev)};
  });

  check(out, "ket_two_pi_frame_sign", [&] {
    double worst = 0.0;
    const QLabels q{{"kind", "x"}};
    const Vec3 p{0.0, 0.3, 0.5};
    const Vec3 axis = rng.unit_vector();
    for (int st = 1; st <= 5; ++st) {
      const HalfSpin s = HalfSpin::from_twice(st);
      const HalfSpin m = random_component(rng, s);
      const StateVector turned =
          make_ket(q, p, s, m, from_axis_angle(axis, 2.0 * kPi));
      const Complex ratio = phase_ratio(turned, canonical_ket(q, p, s, m));
      worst = std::max(worst, std::abs(ratio - Complex(parity_2s(s), 0.0)));
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "helicity_reduces_on_axis", [&] {
    const QLabels q{{"kind", "x"}};
    const HalfSpin s = HalfSpin::from_twice(1);
    const HalfSpin m = HalfSpin::from_twice(-1);
    const StateVector up = helicity_ket(q, Vec3{0.0, 0.0, 2.0}, s, m);
    const Complex r_up = phase_ratio(up, canonical_ket(q, Vec3{0.0, 0.0, 2.0}, s, m));
    const StateVector down = helicity_ket(q, Vec3{0.0, 0.0, -1.5}, s, m);
    const StateVector want = make_ket(q, Vec3{0.0, 0.0, -1.5}, s, m,
                                      from_axis_angle(Vec3{0.0, 1.0, 0.0}, kPi));
    const double dev = std::abs(r_up - 1.0) + std::abs(phase_ratio(down, want) - 1.0);
    return std::pair{dev < 1e-12, std::string()};
  });

  check(out, "apply_rotation_homomorphism", [&] {
    const QLabels q{{"kind", "x"}};
    const HalfSpin s = HalfSpin::from_twice(3);
    const StateVector v = make_ket(q, rng.unit_vector(), s,
                                   HalfSpin::from_twice(-1), rng.random_rotor());
    const Rotor a = rng.random_rotor();
    const Rotor b = rng.random_rotor();
    const StateVector lhs = apply_rotation(a, apply_rotation(b, v));
    const StateVector rhs = apply_rotation(compose(a, b), v);
    const double dev = std::abs(phase_ratio(lhs, rhs) - 1.0) +
                       std::abs(norm(lhs) - 1.0);
    return std::pair{dev < 1e-10, "deviation " + fmt(dev)};
  });

  check(out, "boost_is_pure_relabel", [&] {
    const QLabels q{{"kind", "x"}};
    const HalfSpin s = HalfSpin::from_twice(1);
    const StateVector v = make_ket(q, Vec3{0.1, 0.2, 0.3}, s,
                                   HalfSpin::from_twice(1), rng.random_rotor());
    const Vec3 pn{-0.4, 0.0, 1.1};
    const StateVector b = boost(pn, v);
    bool ok = b.terms().size() == v.terms().size();
    for (std::size_t i = 0; ok && i < b.terms().size(); ++i) {
      ok = b.terms()[i].second == v.terms()[i].second &&
           vec_close(b.terms()[i].first.p, pn, 0.0);
    }
    return std::pair{ok, std::string("amplitudes bitwise unchanged")};
  });

  check(out, "phase_ratio_semantics", [&] {
    const QLabels q{{"kind", "x"}};
    const HalfSpin s = HalfSpin::from_twice(1);
    const StateVector v = make_ket(q, Vec3{0.0, 0.0, 1.0}, s,
                                   HalfSpin::from_twice(1), rng.random_rotor());
    const Complex c = std::exp(Complex(0.0, rng.uniform(0.0, 2.0 * kPi)));
    const double dev = std::abs(phase_ratio(v.scaled(c), v) - c);
    bool threw = false;
    try {
      phase_ratio(canonical_ket(q, Vec3{0.0, 0.0, 1.0}, s, HalfSpin::from_twice(1)),
                  canonical_ket(q, Vec3{0.0, 0.0, 1.0}, s, HalfSpin::from_twice(-1)));
    } catch (const NotARayError&) {
      threw = true;
    }
    return std::pair{dev < 1e-12 && threw, "recovers the scalar, rejects non-rays"};
  });

  check(out, "symmetrize_normalizes", [&] {
    const QLabels q{{"kind", "x"}};
    const HalfSpin s = HalfSpin::from_twice(1);
    const StateVector u = canonical_ket(q, Vec3{0.0, 0.0, 1.0}, s,
                                        HalfSpin::from_twice(1));
    const StateVector w = canonical_ket(q, Vec3{0.0, 0.0, 1.0}, s,
                                        HalfSpin::from_twice(-1));
    const double orth = std::abs(norm(symmetrize(u, w)) - 1.0);
    const double same = std::abs(norm(symmetrize(u, u)) - 1.0);
    bool threw = false;
    try {
      symmetrize(StateVector{}, u);
    } catch (const std::domain_error&) {
      threw = true;
    }
    return std::pair{orth < 1e-12 && same < 1e-12 && threw, std::string()};
  });

  check(out, "labeled_exchange_phase_all_spins", [&] {
    double worst = 0.0, worst_ratio = 0.0;
    for (int st = 0; st <= 5; ++st) {
      const SweepStats stats =
          run_labeled_phase_sweep(HalfSpin::from_twice(st), 10, seed + st, false);
      worst = std::max(worst, stats.max_dev);
      worst_ratio = std::max(worst_ratio, stats.max_ratio_dev);
    }
    const bool ok = worst < 1e-10 && worst_ratio < 1e-10;
    return std::pair{ok, "max dev " + fmt(worst) + ", ratio dev " + fmt(worst_ratio)};
  });

  check(out, "labeled_exchange_phase_helicity_basis", [&] {
    double worst = 0.0;
    for (int st = 1; st <= 3; ++st) {
      const HalfSpin s = HalfSpin::from_twice(st);
      TrialRng local(seed, 977 + static_cast<std::uint64_t>(st));
      RandomPairSetup g = random_pair_setup(local, s, Basis::helicity);
      const TwoParticleState t =
          labeled_common_frame_state(g.spec1, g.spec2, g.frame, g.sign);
      worst = std::max(worst, std::abs(exchange_phase(t) -
                                       Complex(parity_2s(s), 0.0)));
    }
    return std::pair{worst < 1e-10, "max deviation " + fmt(worst)};
  });

  check(out, "symmetric_exchange_phase_is_plus_one", [&] {
    double worst = 0.0;
    for (int st = 0; st <= 5; ++st) {
      const SweepStats stats =
          run_symmetric_phase_sweep(HalfSpin::from_twice(st), 10, seed + st, false);
      worst = std::max(worst, stats.max_dev);
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "bisecting_pair_exchange_is_permutation", [&] {
    TrialRng local(seed, 1234);
    RandomPairSetup g = random_pair_setup(local, HalfSpin::from_twice(3),
                                          Basis::canonical);
    const TwoParticleState t = bisecting_pair_state(g.spec1, g.spec2);
    bool ok = exact_term_match(exchange(t), permute(t));
    ok = ok && std::abs(exchange_phase(t) - Complex(1.0, 0.0)) < 1e-12;
    ParticleSpec c1 = g.spec1, c2 = g.spec1;
    c2.spin_quantum = HalfSpin::from_twice(-3);
    const Vec3 hint = default_azimuth_hint(c1.p);
    const TwoParticleState tc = bisecting_pair_state(c1, c2, hint);
    ok = ok && std::abs(exchange_phase(tc) - Complex(1.0, 0.0)) < 1e-12;
    return std::pair{ok, std::string()};
  });

  check(out, "permutation_eigenvalue_exact", [&] {
    TrialRng local(seed, 555);
    RandomPairSetup g = random_pair_setup(local, HalfSpin::from_twice(2),
                                          Basis::canonical);
    const TwoParticleState a =
        labeled_common_frame_state(g.spec1, g.spec2, g.frame, g.sign);
    const TwoParticleState b =
        symmetric_common_frame_state(g.spec1, g.spec2, g.frame, g.sign);
    const TwoParticleState c = couple_total_spin(
        g.spec1, g.spec2, g.frame, g.sign, HalfSpin::from_twice(4),
        HalfSpin::from_twice(2));
    const bool ok = exact_term_match(permute(a), a) &&
                    exact_term_match(permute(b), b) &&
                    exact_term_match(permute(c), c);
    return std::pair{ok, std::string("bitwise term-map equality")};
  });

  check(out, "exchange_is_involution", [&] {
    TrialRng local(seed, 808);
    RandomPairSetup g = random_pair_setup(local, HalfSpin::from_twice(3),
                                          Basis::canonical);
    const TwoParticleState t =
        labeled_common_frame_state(g.spec1, g.spec2, g.frame, g.sign);
    const double dev = std::abs(phase_ratio(exchange(exchange(t)), t) - 1.0);
    return std::pair{dev < 1e-12, "deviation " + fmt(dev)};
  });

  check(out, "symmetric_equals_labeled_as_ray", [&] {
    TrialRng local(seed, 4242);
    RandomPairSetup g = random_pair_setup(local, HalfSpin::from_twice(1),
                                          Basis::canonical);
    const TwoParticleState a =
        labeled_common_frame_state(g.spec1, g.spec2, g.frame, g.sign);
    const TwoParticleState b =
        symmetric_common_frame_state(g.spec1, g.spec2, g.frame, g.sign);
    const double dev = std::abs(phase_ratio(b, a) - 1.0);
    return std::pair{dev < 1e-12, "same ket values, different bookkeeping"};
  });

  check(out, "cg_convention_and_symmetry", [&] {
    const HalfSpin half = HalfSpin::from_twice(1);
    const double singlet = cg(half, half, half, -half, HalfSpin(), HalfSpin());
    double worst = std::abs(singlet - std::sqrt(0.5));
    const HalfSpin s = HalfSpin::from_twice(3);
    for (int St = 0; St <= 6; St += 2) {
      const HalfSpin S = HalfSpin::from_twice(St);
      const int swap_parity = (St / 2 - s.twice()) % 2 == 0 ? 1 : -1;
      for (int m1 = -3; m1 <= 3; m1 += 2) {
        for (int m2 = -3; m2 <= 3; m2 += 2) {
          if (std::abs(m1 + m2) > St) {
            continue;
          }
          const HalfSpin M = HalfSpin::from_twice(m1 + m2);
          const double a = cg(s, HalfSpin::from_twice(m1), s,
                              HalfSpin::from_twice(m2), S, M);
          const double b = cg(s, HalfSpin::from_twice(m2), s,
                              HalfSpin::from_twice(m1), S, M);
          worst = std::max(worst, std::abs(b - swap_parity * a));
        }
      }
      const double stretched = cg(s, s, s, S - s, S, S);
      if (St > 0 && stretched <= 0.0) {
        worst = std::max(worst, 1.0);
      }
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "cg_orthogonality", [&] {
    const HalfSpin s = HalfSpin::from_twice(3);
    double worst = 0.0;
    for (int St = 0; St <= 6; St += 2) {
      for (int Su = 0; Su <= 6; Su += 2) {
        for (int Mt = -std::min(St, Su); Mt <= std::min(St, Su); Mt += 2) {
          double sum = 0.0;
          for (int m1 = -3; m1 <= 3; m1 += 2) {
            const int m2 = Mt - m1;
            if (std::abs(m2) > 3) {
              continue;
            }
            sum += cg(s, HalfSpin::from_twice(m1), s, HalfSpin::from_twice(m2),
                      HalfSpin::from_twice(St), HalfSpin::from_twice(Mt)) *
                   cg(s, HalfSpin::from_twice(m1), s, HalfSpin::from_twice(m2),
                      HalfSpin::from_twice(Su), HalfSpin::from_twice(Mt));
          }
          const double want = (St == Su) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(sum - want));
        }
      }
    }
    return std::pair{worst < 1e-12, "max deviation " + fmt(worst)};
  });

  check(out, "coupled_distinct_momenta_norms", [&] {
    TrialRng local(seed, 31);
    RandomPairSetup g = random_pair_setup(local, HalfSpin::from_twice(2),
                                          Basis::canonical);
    double worst = 0.0;
    for (int St = 0; St <= 4; St += 2) {
      const TwoParticleState x = couple_total_spin(
          g.spec1, g.spec2, g.frame, g.sign, HalfSpin::from_twice(St),
          HalfSpin::from_twice(St));
      worst = std::max(worst, std::abs(norm(x) - 1.0));
    }
    return std::pair{worst < 1e-12, "max norm deviation " + fmt(worst)};
  });

  check(out, "coupled_stretched_equals_labeled", [&] {
    TrialRng local(seed, 77);
    RandomPairSetup g = random_pair_setup(local, HalfSpin::from_twice(1),
                                          Basis::canonical);
    ParticleSpec a = g.spec1, b = g.spec2;
    a.spin_quantum = a.s;
    b.spin_quantum = b.s;
    const TwoParticleState coupled = couple_total_spin(
        a, b, g.frame, g.sign, HalfSpin::from_twice(2), HalfSpin::from_twice(2));
    const TwoParticleState labeled =
        labeled_common_frame_state(a, b, g.frame, g.sign);
    const double dev = std::abs(phase_ratio(coupled, labeled) - 1.0);
    return std::pair{dev < 1e-10, "deviation " + fmt(dev)};
  });

  check(out, "exclusion_rules_small_spins", [&] {
    const QLabels q{{"kind", "x"}};
    const Vec3 p{0.3, -0.2, 0.8};
    bool ok = true;
    std::string note;
    for (int st : {1, 2, 3}) {
      const auto rows = exclusion_report(q, p, HalfSpin::from_twice(st));
      for (const ExclusionRow& row : rows) {
        const bool even = (row.S.twice() / 2) % 2 == 0;
        ok = ok && row.allowed == even;
        if (even) {
          ok = ok && std::abs(row.norm_value - 1.0) < 1e-10;
        } else {
          ok = ok && row.norm_value < 1e-10;
        }
      }
    }
    return std::pair{ok, std::string("odd total spin cancels, even survives")};
  });

  check(out, "order_free_counting", [&] {
    const OrderFreeEnumeration two_two = enumerate_order_free(2, 2);
    const OrderFreeEnumeration three_two = enumerate_order_free(3, 2);
    const OrderFreeEnumeration one_five = enumerate_order_free(1, 5);
    bool ok = two_two.count == 3 && three_two.count == 4 && one_five.count == 5;
    for (const auto& occ : two_two.occupancies) {
      int sum = 0;
      for (int c : occ) {
        sum += c;
      }
      ok = ok && sum == 2;
    }
    return std::pair{ok, std::string("(2,2) -> 3, (3,2) -> 4, (1,5) -> 5")};
  });

  check(out, "degenerate_geometry_errors", [&] {
    const Vec3 v{0.0, 0.0, 1.0};
    int caught = 0;
    try {
      pair_geometry(v, negate(v));
    } catch (const DegenerateGeometryError&) {
      ++caught;
    }
    try {
      labeled_common_frame_state(simple_spec(v, HalfSpin::from_twice(1),
                                             HalfSpin::from_twice(1)),
                                 simple_spec(v, HalfSpin::from_twice(1),
                                             HalfSpin::from_twice(-1)),
                                 identity_rotor(), 1);
    } catch (const DegenerateGeometryError&) {
      ++caught;
    }
    try {
      limit_frames(v, Vec3{0.0, 0.1, 1.0});
    } catch (const std::domain_error&) {
      ++caught;
    }
    try {
      labeled_common_frame_state(simple_spec(v, HalfSpin::from_twice(1),
                                             HalfSpin::from_twice(1)),
                                 simple_spec(Vec3{1.0, 0.0, 0.0},
                                             HalfSpin::from_twice(1),
                                             HalfSpin::from_twice(1)),
                                 identity_rotor(), 2);
    } catch (const std::domain_error&) {
      ++caught;
    }
    return std::pair{caught == 4, std::string("all four misuse paths throw")};
  });

  check(out, "parallel_sweep_matches_serial", [&] {
    const HalfSpin s = HalfSpin::from_twice(1);
    const SweepStats a = run_labeled_phase_sweep(s, 48, seed, true);
    const SweepStats b = run_labeled_phase_sweep(s, 48, seed, false);
    const bool ok = a.trials == b.trials && a.expected == b.expected &&
                    a.mean_dev == b.mean_dev && a.max_dev == b.max_dev &&
                    a.mean_ratio_dev == b.mean_ratio_dev &&
                    a.max_ratio_dev == b.max_ratio_dev;
    return std::pair{ok, std::string("bitwise identical aggregates")};
  });

  return out;
}

}  // namespace spinpair
