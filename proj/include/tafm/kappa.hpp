#pragma once

#include "tafm/spinor.hpp"

// The boson factor kappa of the spin-polaron pair-operator transformation:
// exact spinor contractions on one- and two-site spaces and the square-lattice
// series expansion. Site 0 is the slow index of a two-site space.

namespace tafm {

/// beta_bra^dagger . beta_ket, the scalar product of two operator spinors.
inline OperatorMatrix spinor_dot(const HpSpinor& bra, const HpSpinor& ket) {
  if (!(bra.upper.space() == ket.upper.space()))
    throw std::invalid_argument("spinor_dot: spinors live on different spaces");
  return {bra.upper.space(),
          bra.upper.matrix().adjoint() * ket.upper.matrix() +
              bra.lower.matrix().adjoint() * ket.lower.matrix()};
}

/// kappa_ij = beta_i^dagger(frame_i) beta_j(frame_j) with i = site 0, j = site 1.
inline OperatorMatrix kappa_exact(const FockSpace& space, Frame frame_i, Frame frame_j) {
  if (space.n_sites() != 2)
    throw std::invalid_argument("kappa_exact: requires a two-site space");
  return spinor_dot(hp_spinor(space, 0, frame_i), hp_spinor(space, 1, frame_j));
}

/// Same-site kappa_ii = beta^dagger beta, the factor whose unit value on the
/// physical subspace carries the single-occupancy constraint.
inline OperatorMatrix kappa_onsite(const FockSpace& space, Frame frame) {
  if (space.n_sites() != 1)
    throw std::invalid_argument("kappa_onsite: requires a single-site space");
  const HpSpinor b = hp_spinor(space, 0, frame);
  return spinor_dot(b, b);
}

/// Boson-series expansion of the square-lattice up/down kappa:
///   order 0 -> 0 (the constant term vanishes),
///   order 1 -> (a_i^+ + a_j) / sqrt(2S),
///   order 2 adds -(1/4S)(a_i^+ a_i a_j + a_i^+ a_j^+ a_j) / sqrt(2S).
inline OperatorMatrix kappa_series(const FockSpace& space, Frame frame_i, Frame frame_j,
                                   int order) {
  if (space.n_sites() != 2)
    throw std::invalid_argument("kappa_series: requires a two-site space");
  if (frame_i != Frame::SquareUp || frame_j != Frame::SquareDown)
    throw std::invalid_argument(
        "kappa_series: series coefficients are defined for the square up/down frame pair");
  if (order < 0 || order > 2)
    throw std::invalid_argument("kappa_series: order must be 0, 1 or 2");
  OperatorMatrix out = OperatorMatrix::zero(space);
  if (order >= 1) {
    const double norm = 1.0 / std::sqrt(2.0 * space.spin());
    out = out + norm * (creator(space, 0) + annihilator(space, 1));
  }
  if (order >= 2) {
    const double c = 1.0 / (4.0 * space.spin() * std::sqrt(2.0 * space.spin()));
    out = out - c * (number_op(space, 0) * annihilator(space, 1) +
                     creator(space, 0) * number_op(space, 1));
  }
  return out;
}

/// Permutation exchanging the two sites: |n0 n1> -> |n1 n0>.
inline OperatorMatrix site_swap(const FockSpace& space) {
  if (space.n_sites() != 2)
    throw std::invalid_argument("site_swap: requires a two-site space");
  const int d = space.dim();
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim());
  for (int n0 = 0; n0 < d; ++n0)
    for (int n1 = 0; n1 < d; ++n1) x(n1 * d + n0, n0 * d + n1) = 1.0;
  return {space, std::move(x)};
}

}  // namespace tafm
