#include "spinpair/frames.hpp"

#include <algorithm>
#include <cmath>

namespace spinpair {

static void require_unit(const Vec3& v, const char* what) {
  if (std::abs(norm(v) - 1.0) > 1e-12)
    throw std::domain_error(std::string(what) + " must be a unit vector");
}

PairGeometry pair_geometry(const Vec3& v_a, const Vec3& v_b) {
  require_unit(v_a, "v_a");
  require_unit(v_b, "v_b");
  const double d = dot(v_a, v_b);
  if (d <= -1.0 + 1e-10)
    throw DegenerateGeometryError(
        "antiparallel directions: the bisector is undefined");
  const Vec3 k = normalize(add(v_a, v_b));
  const double theta = 0.5 * std::acos(std::clamp(d, -1.0, 1.0));
  return PairGeometry{v_a, v_b, k, theta};
}

static Frame frame_from_zy(const Vec3& z, const Vec3& y) {
  return Frame{cross(y, z), y, z};
}

std::pair<Frame, Frame> parallel_frames(const Vec3& v_a, const Vec3& v_b) {
  require_unit(v_a, "v_a");
  require_unit(v_b, "v_b");
  const Vec3 c = cross(v_a, v_b);
  if (norm(c) <= kDegenerateCross)
    throw DegenerateGeometryError(
        "coincident or antiparallel directions: supply an azimuth hint via "
        "limit_frames");
  const Vec3 y_a = normalize(c);
  return {frame_from_zy(v_a, y_a), frame_from_zy(v_b, negate(y_a))};
}

std::pair<Frame, Frame> bisecting_frames(const Vec3& v_a, const Vec3& v_b) {
  const PairGeometry g = pair_geometry(v_a, v_b);
  const Vec3 c = cross(v_a, v_b);
  if (norm(c) <= kDegenerateCross)
    throw DegenerateGeometryError(
        "coincident or antiparallel directions: supply an azimuth hint via "
        "limit_frames");
  const Vec3 y_a = normalize(c);
  return {frame_from_zy(g.k, y_a), frame_from_zy(g.k, negate(y_a))};
}

std::pair<Frame, Frame> limit_frames(const Vec3& v, const Vec3& azimuth_hint) {
  require_unit(v, "v");
  require_unit(azimuth_hint, "azimuth_hint");
  if (std::abs(dot(v, azimuth_hint)) > 1e-10)
    throw std::domain_error("azimuth hint must be perpendicular to the direction");
  return {frame_from_zy(v, azimuth_hint), frame_from_zy(v, negate(azimuth_hint))};
}

Rotor half_turn_rotor(const Vec3& axis, int sign) {
  if (sign != 1 && sign != -1)
    throw std::domain_error("half-turn sign must be +1 or -1");
  const Vec3 n = normalize(axis);
  // cos(pi/2) = 0 and sin(pi/2) = 1 exactly; going through trig on the
  // rounded half-angle would smear ~1e-16 into the scalar part and break the
  // exact square-to-minus-identity property.
  const double s = static_cast<double>(sign);
  return Rotor{0.0, s * n[0], s * n[1], s * n[2]};
}

Rotor relating_rotor(const PairGeometry& g, int sign) {
  return half_turn_rotor(g.k, sign);
}

Rotor frame_to_rotor(const Frame& f) {
  // Columns of the rotation matrix are the images of the lab axes.
  const double m00 = f.x[0], m01 = f.y[0], m02 = f.z[0];
  const double m10 = f.x[1], m11 = f.y[1], m12 = f.z[1];
  const double m20 = f.x[2], m21 = f.y[2], m22 = f.z[2];
  const double tr = m00 + m11 + m22;
  double w, x, y, z;
  // Shepperd's method: branch on the largest diagonal quantity for stability.
  if (tr >= m00 && tr >= m11 && tr >= m22) {
    const double r = std::sqrt(1.0 + tr);
    w = 0.5 * r;
    x = 0.5 * (m21 - m12) / r;
    y = 0.5 * (m02 - m20) / r;
    z = 0.5 * (m10 - m01) / r;
  } else if (m00 >= m11 && m00 >= m22) {
    const double r = std::sqrt(1.0 + m00 - m11 - m22);
    x = 0.5 * r;
    w = 0.5 * (m21 - m12) / r;
    y = 0.5 * (m01 + m10) / r;
    z = 0.5 * (m02 + m20) / r;
  } else if (m11 >= m22) {
    const double r = std::sqrt(1.0 - m00 + m11 - m22);
    y = 0.5 * r;
    w = 0.5 * (m02 - m20) / r;
    x = 0.5 * (m01 + m10) / r;
    z = 0.5 * (m12 + m21) / r;
  } else {
    const double r = std::sqrt(1.0 - m00 - m11 + m22);
    z = 0.5 * r;
    w = 0.5 * (m10 - m01) / r;
    x = 0.5 * (m02 + m20) / r;
    y = 0.5 * (m12 + m21) / r;
  }
  Rotor q{w, x, y, z};
  const double n = rotor_norm(q);
  q.w /= n;
  q.x /= n;
  q.y /= n;
  q.z /= n;
  for (double comp : {q.w, q.x, q.y, q.z}) {
    if (std::abs(comp) > 1e-12) {
      if (comp < 0.0) q = negate(q);
      break;
    }
  }
  return q;
}

Vec3 default_azimuth_hint(const Vec3& v) {
  Vec3 u = normalize(v);
  Vec3 axis{1.0, 0.0, 0.0};
  double best = std::abs(u[0]);
  if (std::abs(u[1]) < best) {
    axis = Vec3{0.0, 1.0, 0.0};
    best = std::abs(u[1]);
  }
  if (std::abs(u[2]) < best) {
    axis = Vec3{0.0, 0.0, 1.0};
  }
  return normalize(sub(axis, scale(u, dot(axis, u))));
}

}  // namespace spinpair
