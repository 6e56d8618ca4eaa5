#include <doctest.h>

#include "spinpair/halfspin.hpp"
#include "spinpair/rng.hpp"
#include "spinpair/rotor.hpp"

using namespace spinpair;

TEST_CASE("halfspin parses and prints the boundary forms") {
  CHECK(HalfSpin::parse("2").twice() == 4);
  CHECK(HalfSpin::parse("1/2").twice() == 1);
  CHECK(HalfSpin::parse("-3/2").twice() == -3);
  CHECK(HalfSpin::parse("0").twice() == 0);
  CHECK(HalfSpin::parse("2").str() == "2");
  CHECK(HalfSpin::parse("1/2").str() == "1/2");
  CHECK(HalfSpin::parse("-3/2").str() == "-3/2");
  CHECK_THROWS_AS(HalfSpin::parse("1/3"), std::domain_error);
  CHECK_THROWS_AS(HalfSpin::parse("x"), std::domain_error);
  CHECK_THROWS_AS(HalfSpin::parse("1.5"), std::domain_error);
  CHECK_THROWS_AS(HalfSpin::parse(""), std::domain_error);
}

TEST_CASE("halfspin component and parity bookkeeping") {
  const HalfSpin s = HalfSpin::from_twice(3);
  CHECK(HalfSpin::from_twice(1).is_component_of(s));
  CHECK(HalfSpin::from_twice(-3).is_component_of(s));
  CHECK_FALSE(HalfSpin::from_twice(0).is_component_of(s));
  CHECK_FALSE(HalfSpin::from_twice(5).is_component_of(s));
  CHECK(parity_2s(HalfSpin::from_twice(0)) == 1);
  CHECK(parity_2s(HalfSpin::from_twice(1)) == -1);
  CHECK(parity_2s(HalfSpin::from_twice(2)) == 1);
  CHECK(parity_2s(HalfSpin::from_twice(5)) == -1);
}

TEST_CASE("two pi is the minus-identity rotor, not the identity") {
  const Vec3 n{0.0, 0.0, 1.0};
  const Rotor full = from_axis_angle(n, 2.0 * kPi);
  CHECK(approx_equal(full, minus_identity_rotor(), 1e-12));
  CHECK_FALSE(approx_equal(full, identity_rotor(), 1e-12));

  // Angles live on the real line: adding 2 pi negates, adding 4 pi restores.
  const double theta = 0.9;
  CHECK(approx_equal(from_axis_angle(n, theta + 2.0 * kPi),
                     negate(from_axis_angle(n, theta)), 1e-12));
  CHECK(approx_equal(from_axis_angle(n, theta + 4.0 * kPi),
                     from_axis_angle(n, theta), 1e-12));
}

TEST_CASE("from_axis_angle requires a unit axis") {
  CHECK_THROWS_AS(from_axis_angle(Vec3{0.0, 0.0, 2.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(from_axis_angle(Vec3{0.0, 0.0, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("composition follows the quaternion product") {
  const Rotor rz = from_axis_angle(Vec3{0.0, 0.0, 1.0}, kPi / 2);
  const Rotor rx = from_axis_angle(Vec3{1.0, 0.0, 0.0}, kPi / 2);
  // Apply the right factor first.
  const Vec3 image = rotate_vector(compose(rz, rx), Vec3{0.0, 1.0, 0.0});
  CHECK(image[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(image[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(image[2] == doctest::Approx(1.0).epsilon(1e-12));

  TrialRng rng(5);
  const Rotor a = rng.random_rotor(), b = rng.random_rotor(), c = rng.random_rotor();
  CHECK(approx_equal(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-12));
  CHECK(approx_equal(compose(a, inverse(a)), identity_rotor(), 1e-12));
  CHECK(rotor_norm(compose(a, b)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rotation action is double-cover blind") {
  TrialRng rng(17);
  const Rotor r = rng.random_rotor();
  const Vec3 v = rng.unit_vector();
  const Vec3 a = rotate_vector(r, v);
  const Vec3 b = rotate_vector(negate(r), v);
  for (int i = 0; i < 3; ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
  }
  const Vec3 back = rotate_vector(inverse(r), a);
  for (int i = 0; i < 3; ++i) {
    CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-12));
  }
}

TEST_CASE("known rotation images") {
  const Rotor rz = from_axis_angle(Vec3{0.0, 0.0, 1.0}, kPi / 2);
  const Vec3 img = rotate_vector(rz, Vec3{1.0, 0.0, 0.0});
  CHECK(img[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(img[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(img[2] == doctest::Approx(0.0).epsilon(1e-12));
}
