#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace spinpair {

using Vec3 = std::array<double, 3>;

constexpr double kPi = 3.14159265358979323846264338327950288;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 scale(const Vec3& a, double c) {
  return {c * a[0], c * a[1], c * a[2]};
}
inline Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 negate(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
Vec3 normalize(const Vec3& a);

/**
 * Element of SU(2) as a unit quaternion (w, x, y, z).
 *
 * The full group is kept: Rotor(-w,-x,-y,-z) and Rotor(w,x,y,z) are distinct
 * values even though they project to the same 3D rotation. A rotation by 2pi
 * is the rotor (-1,0,0,0), not the identity; the entire artifact depends on
 * preserving that distinction.
 */
struct Rotor {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  friend bool operator==(const Rotor&, const Rotor&) = default;
};

inline Rotor identity_rotor() { return Rotor{1.0, 0.0, 0.0, 0.0}; }
inline Rotor minus_identity_rotor() { return Rotor{-1.0, 0.0, 0.0, 0.0}; }
inline Rotor negate(const Rotor& r) { return Rotor{-r.w, -r.x, -r.y, -r.z}; }

// axis must be unit length within 1e-12. The angle is a real-line value and is
// never reduced mod 2pi: from_axis_angle(n, theta + 2pi) = -from_axis_angle(n, theta).
Rotor from_axis_angle(const Vec3& axis, double angle);

// Quaternion product a*b (apply b first, then a), renormalized.
Rotor compose(const Rotor& a, const Rotor& b);

Rotor inverse(const Rotor& r);

// SO(3) action v -> q v q^-1; identical for r and -r.
Vec3 rotate_vector(const Rotor& r, const Vec3& v);

double rotor_norm(const Rotor& r);

inline bool approx_equal(const Rotor& a, const Rotor& b, double tol) {
  return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
         std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

}  // namespace spinpair
