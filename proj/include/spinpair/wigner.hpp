#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinpair/halfspin.hpp"
#include "spinpair/rotor.hpp"

namespace spinpair {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;

/**
 * Spin-s irreducible representation matrix D^s(r), single-valued on SU(2).
 *
 * Rows and columns are indexed by m', m running s, s-1, ..., -s. Because the
 * matrix is built from the SU(2) element itself (not from Euler angles of its
 * 3D projection), D^s(-r) = (-1)^{2s} D^s(r) holds automatically and a 2pi
 * rotor yields (-1)^{2s} times the identity.
 */
struct DMatrix {
  HalfSpin s;
  MatrixXc entries;

  int dim() const { return s.twice() + 1; }
  // Row/column index of component m (m = s corresponds to index 0).
  int index_of(HalfSpin m) const { return (s.twice() - m.twice()) / 2; }
};

// Largest supported 2s for representation matrices and coupling coefficients.
// Factorials are evaluated in double precision; this cap keeps them exact.
inline constexpr int kMaxTwiceSpin = 10;

// The fundamental 2x2 matrix of a rotor: U = w*I - i(x sx + y sy + z sz).
Eigen::Matrix2cd fundamental_matrix(const Rotor& r);

/**
 * D^s(r) via the action of the fundamental matrix on the basis of degree-2s
 * homogeneous monomials u^{s+m} v^{s-m} / sqrt((s+m)!(s-m)!). This tensor-power
 * route has no branch cuts, so the double-valued structure of SU(2) is
 * represented faithfully.
 */
DMatrix dmatrix(HalfSpin s, const Rotor& r);

// Wigner small-d value d^s_{m'm}(beta) from the factorial sum formula.
// Serves as an independent oracle for dmatrix on rotations about y.
double little_d(HalfSpin s, HalfSpin m_prime, HalfSpin m, double beta);

double factorial(int n);

}  // namespace spinpair
