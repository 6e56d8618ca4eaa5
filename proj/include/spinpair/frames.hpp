#pragma once

#include <utility>

#include "spinpair/rotor.hpp"

namespace spinpair {

// Bisector undefined, or coincident directions without an azimuth hint.
struct DegenerateGeometryError : std::domain_error {
  using std::domain_error::domain_error;
};

/**
 * Right-handed orthonormal triad attached to a particle.
 */
struct Frame {
  Vec3 x, y, z;
};

/**
 * Shared geometry of a direction pair: the bisector k and the half-angle
 * theta, with cos(2 theta) = v_a . v_b and theta in [0, pi/2).
 */
struct PairGeometry {
  Vec3 v_a, v_b;
  Vec3 k;
  double theta;
};

// Directions below this cross-product magnitude count as coincident (or
// antiparallel) and need the limit-frame path with an explicit azimuth hint.
inline constexpr double kDegenerateCross = 1e-10;

// pre: unit inputs, not antiparallel (v_a . v_b > -1 + 1e-10).
PairGeometry pair_geometry(const Vec3& v_a, const Vec3& v_b);

/**
 * Per-particle frames with z along each particle's own direction and
 * y_c = (v_c x v_other) normalized. The two y-axes always come out opposite:
 * the cross product is antisymmetric, so no choice of common frame can treat
 * both particles the same way.
 */
std::pair<Frame, Frame> parallel_frames(const Vec3& v_a, const Vec3& v_b);

// Same y-axes as parallel_frames, but z_a = z_b = k (the bisector).
std::pair<Frame, Frame> bisecting_frames(const Vec3& v_a, const Vec3& v_b);

/**
 * Bisecting frames in the coincident limit v_a = v_b = v. The azimuth hint is
 * the limiting direction of (v_a x v_b) normalized and must be supplied by the
 * caller: y_a = hint, y_b = -hint. The asymmetry survives the limit; the
 * orientation information is physical, not a convention to invent silently.
 */
std::pair<Frame, Frame> limit_frames(const Vec3& v, const Vec3& azimuth_hint);

/**
 * The rotor R_k(sign*pi) about the bisector. Its 3D projection takes v_a to
 * v_b and frame B_a onto frame B_b; the two sign choices are distinct rotors
 * with the same projection, and composing either with itself gives the
 * -identity rotor (a 2pi rotation), not the identity.
 */
Rotor relating_rotor(const PairGeometry& g, int sign);

// The exact half-turn rotor (0, sign * axis-hat): relating_rotor for callers
// that have only the axis. Squares to the -identity rotor exactly.
Rotor half_turn_rotor(const Vec3& axis, int sign);

// Deterministic SU(2) lift of a frame: the rotor taking the lab triad onto
// (x, y, z), with the sign fixed so the first component of (w, x, y, z) whose
// magnitude exceeds 1e-12 is positive.
Rotor frame_to_rotor(const Frame& f);

// A fixed unit vector perpendicular to v (machine precision): the coordinate
// axis least aligned with v, Gram-Schmidt orthogonalized. For callers that
// need some valid azimuth hint and say so explicitly.
Vec3 default_azimuth_hint(const Vec3& v);

}  // namespace spinpair
