#include "spinpair/rotor.hpp"
#include "spinpair/halfspin.hpp"

#include <cctype>
#include <cstdlib>

namespace spinpair {

HalfSpin HalfSpin::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      int whole = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return HalfSpin(2 * whole);
    }
    std::size_t used = 0;
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    int n = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    int d = std::stoi(den, &used);
    if (used != den.size() || d != 2) throw std::invalid_argument(text);
    return HalfSpin(n);
  } catch (const std::exception&) {
    throw std::domain_error("cannot parse half-integer spin '" + text +
                            "' (expected forms: \"2\", \"1/2\", \"-3/2\")");
  }
}

std::string HalfSpin::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Vec3 normalize(const Vec3& a) {
  double n = norm(a);
  if (n == 0.0) throw std::domain_error("cannot normalize a zero vector");
  return scale(a, 1.0 / n);
}

Rotor from_axis_angle(const Vec3& axis, double angle) {
  if (std::abs(norm(axis) - 1.0) > 1e-12)
    throw std::domain_error("rotation axis must be a unit vector");
  const double h = 0.5 * angle;
  const double c = std::cos(h), s = std::sin(h);
  return Rotor{c, s * axis[0], s * axis[1], s * axis[2]};
}

double rotor_norm(const Rotor& r) {
  return std::sqrt(r.w * r.w + r.x * r.x + r.y * r.y + r.z * r.z);
}

Rotor compose(const Rotor& a, const Rotor& b) {
  Rotor p{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  const double n = rotor_norm(p);
  p.w /= n;
  p.x /= n;
  p.y /= n;
  p.z /= n;
  return p;
}

Rotor inverse(const Rotor& r) { return Rotor{r.w, -r.x, -r.y, -r.z}; }

Vec3 rotate_vector(const Rotor& r, const Vec3& v) {
  // v' = v + 2 u x (u x v + w v) with u the vector part.
  const Vec3 u{r.x, r.y, r.z};
  const Vec3 t = cross(u, add(cross(u, v), scale(v, r.w)));
  return add(v, scale(t, 2.0));
}

}  // namespace spinpair
