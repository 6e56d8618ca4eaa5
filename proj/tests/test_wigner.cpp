#include <doctest.h>

#include <cmath>

#include "spinpair/rng.hpp"
#include "spinpair/wigner.hpp"

using namespace spinpair;

namespace {

double max_entry_diff(const MatrixXc& a, const MatrixXc& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

const HalfSpin kHalf = HalfSpin::from_twice(1);
const HalfSpin kOne = HalfSpin::from_twice(2);

}  // namespace

TEST_CASE("spin one half about y is the real rotation by beta/2") {
  const double beta = 0.7;
  const DMatrix d = dmatrix(kHalf, from_axis_angle(Vec3{0.0, 1.0, 0.0}, beta));
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  CHECK(std::abs(d.entries(0, 0) - Complex(c, 0.0)) < 1e-14);
  CHECK(std::abs(d.entries(0, 1) - Complex(-s, 0.0)) < 1e-14);
  CHECK(std::abs(d.entries(1, 0) - Complex(s, 0.0)) < 1e-14);
  CHECK(std::abs(d.entries(1, 1) - Complex(c, 0.0)) < 1e-14);
}

TEST_CASE("spin one about z by pi gives diag(-1, 1, -1)") {
  const DMatrix d = dmatrix(kOne, from_axis_angle(Vec3{0.0, 0.0, 1.0}, kPi));
  MatrixXc want = MatrixXc::Zero(3, 3);
  want(0, 0) = Complex(-1.0, 0.0);
  want(1, 1) = Complex(1.0, 0.0);
  want(2, 2) = Complex(-1.0, 0.0);
  CHECK(max_entry_diff(d.entries, want) < 1e-14);
}

TEST_CASE("z-rotation phases are e^{-i m phi} in descending-m order") {
  const HalfSpin s = HalfSpin::from_twice(3);
  const double phi = 1.234;
  const DMatrix d = dmatrix(s, from_axis_angle(Vec3{0.0, 0.0, 1.0}, phi));
  for (int mt = 3; mt >= -3; mt -= 2) {
    const int i = d.index_of(HalfSpin::from_twice(mt));
    const Complex want = std::exp(Complex(0.0, -0.5 * mt * phi));
    CHECK(std::abs(d.entries(i, i) - want) < 1e-13);
    for (int j = 0; j < d.dim(); ++j) {
      if (j != i) {
        CHECK(std::abs(d.entries(i, j)) < 1e-14);
      }
    }
  }
}

TEST_CASE("fundamental matrix convention") {
  const double phi = 0.8;
  const Eigen::Matrix2cd u =
      fundamental_matrix(from_axis_angle(Vec3{0.0, 0.0, 1.0}, phi));
  CHECK(std::abs(u(0, 0) - std::exp(Complex(0.0, -phi / 2))) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::exp(Complex(0.0, phi / 2))) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-14);
  CHECK(std::abs(u(1, 0)) < 1e-14);

  // U = w I - i (x sx + y sy + z sz) on a generic rotor.
  const Rotor r{0.5, 0.5, -0.5, 0.5};
  const Eigen::Matrix2cd v = fundamental_matrix(r);
  CHECK(std::abs(v(0, 0) - Complex(0.5, -0.5)) < 1e-14);
  CHECK(std::abs(v(0, 1) - Complex(0.5, -0.5)) < 1e-14);
  CHECK(std::abs(v(1, 0) - Complex(-0.5, -0.5)) < 1e-14);
  CHECK(std::abs(v(1, 1) - Complex(0.5, 0.5)) < 1e-14);
}

TEST_CASE("two pi rotor represents as (-1)^{2s} identity") {
  TrialRng rng(3);
  const Vec3 n = rng.unit_vector();
  for (int st = 0; st <= 5; ++st) {
    const HalfSpin s = HalfSpin::from_twice(st);
    const DMatrix d = dmatrix(s, from_axis_angle(n, 2.0 * kPi));
    const MatrixXc want =
        double(parity_2s(s)) * MatrixXc::Identity(d.dim(), d.dim());
    CHECK(max_entry_diff(d.entries, want) < 1e-12);
  }
}

TEST_CASE("representation property and unitarity") {
  TrialRng rng(9);
  for (int st = 0; st <= 5; ++st) {
    const HalfSpin s = HalfSpin::from_twice(st);
    for (int i = 0; i < 25; ++i) {
      const Rotor a = rng.random_rotor();
      const Rotor b = rng.random_rotor();
      const MatrixXc lhs = dmatrix(s, compose(a, b)).entries;
      const MatrixXc rhs = dmatrix(s, a).entries * dmatrix(s, b).entries;
      CHECK(max_entry_diff(lhs, rhs) < 1e-10);
    }
    const DMatrix d = dmatrix(s, rng.random_rotor());
    CHECK(max_entry_diff(d.entries.adjoint() * d.entries,
                         MatrixXc::Identity(d.dim(), d.dim())) < 1e-12);
    const Rotor r = rng.random_rotor();
    CHECK(max_entry_diff(dmatrix(s, negate(r)).entries,
                         double(parity_2s(s)) * dmatrix(s, r).entries) < 1e-12);
  }
}

TEST_CASE("little_d closed forms") {
  const double beta = 1.1;
  CHECK(little_d(kOne, HalfSpin::from_twice(0), HalfSpin::from_twice(0), beta) ==
        doctest::Approx(std::cos(beta)).epsilon(1e-13));
  CHECK(little_d(kHalf, kHalf, kHalf, beta) ==
        doctest::Approx(std::cos(beta / 2)).epsilon(1e-13));
  CHECK(little_d(kHalf, kHalf, -kHalf, beta) ==
        doctest::Approx(-std::sin(beta / 2)).epsilon(1e-13));
  CHECK(little_d(kHalf, -kHalf, kHalf, beta) ==
        doctest::Approx(std::sin(beta / 2)).epsilon(1e-13));
  // d^1_{1,1} = (1 + cos beta)/2, d^1_{1,-1} = (1 - cos beta)/2.
  CHECK(little_d(kOne, kOne, kOne, beta) ==
        doctest::Approx(0.5 * (1 + std::cos(beta))).epsilon(1e-13));
  CHECK(little_d(kOne, kOne, -kOne, beta) ==
        doctest::Approx(0.5 * (1 - std::cos(beta))).epsilon(1e-13));
}

TEST_CASE("little_d agrees with dmatrix about y for all supported spins") {
  TrialRng rng(21);
  for (int st = 0; st <= 5; ++st) {
    const HalfSpin s = HalfSpin::from_twice(st);
    const double beta = rng.uniform(0.0, kPi);
    const DMatrix d = dmatrix(s, from_axis_angle(Vec3{0.0, 1.0, 0.0}, beta));
    for (int mp = st; mp >= -st; mp -= 2) {
      for (int m = st; m >= -st; m -= 2) {
        const Complex entry = d.entries(d.index_of(HalfSpin::from_twice(mp)),
                                        d.index_of(HalfSpin::from_twice(m)));
        const double want =
            little_d(s, HalfSpin::from_twice(mp), HalfSpin::from_twice(m), beta);
        CHECK(std::abs(entry - Complex(want, 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("small rotations expose the generator J_z = diag(m)") {
  const HalfSpin s = HalfSpin::from_twice(4);
  const double eps = 1e-7;
  const DMatrix d = dmatrix(s, from_axis_angle(Vec3{0.0, 0.0, 1.0}, eps));
  for (int mt = 4; mt >= -4; mt -= 2) {
    const int i = d.index_of(HalfSpin::from_twice(mt));
    const Complex want = Complex(1.0, -0.5 * mt * eps);
    CHECK(std::abs(d.entries(i, i) - want) < 1e-13);
  }
}

TEST_CASE("spin cap and domain errors") {
  CHECK_THROWS_AS(dmatrix(HalfSpin::from_twice(12), identity_rotor()),
                  std::domain_error);
  CHECK_THROWS_AS(dmatrix(HalfSpin::from_twice(-1), identity_rotor()),
                  std::domain_error);
  CHECK_NOTHROW(dmatrix(HalfSpin::from_twice(10), identity_rotor()));
}
