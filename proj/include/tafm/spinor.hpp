#pragma once

#include <array>
#include <string>

#include "tafm/fock.hpp"

// Operator-valued HP spinors, the sublattice rotation matrices and the
// Pauli-sandwich spin components built from them.

namespace tafm {

/// Local quantization frame of an HP spinor. Old is the unrotated frame
/// (identical to SquareUp and to the triangular A frame); A, B, C are the
/// three triangular sublattice frames, SquareUp/SquareDown the square-lattice
/// pair.
enum class Frame { Old, A, B, C, SquareUp, SquareDown };

inline const std::array<Frame, 6>& all_frames() {
  static const std::array<Frame, 6> frames = {Frame::Old,      Frame::A, Frame::B,
                                              Frame::C,        Frame::SquareUp,
                                              Frame::SquareDown};
  return frames;
}

inline std::string frame_name(Frame f) {
  switch (f) {
    case Frame::Old: return "old";
    case Frame::A: return "A";
    case Frame::B: return "B";
    case Frame::C: return "C";
    case Frame::SquareUp: return "square-up";
    default: return "square-down";
  }
}

inline const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}
inline const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}
inline const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}

enum class RotationLabel { Square, A, B, C };

inline const std::array<RotationLabel, 4>& all_rotation_labels() {
  static const std::array<RotationLabel, 4> labels = {RotationLabel::Square, RotationLabel::A,
                                                      RotationLabel::B, RotationLabel::C};
  return labels;
}

inline std::string rotation_label_name(RotationLabel l) {
  switch (l) {
    case RotationLabel::Square: return "square";
    case RotationLabel::A: return "A";
    case RotationLabel::B: return "B";
    default: return "C";
  }
}

struct RotationSO3 {
  Eigen::Matrix3d m;
  RotationLabel label;
};

struct RotationU2 {
  Eigen::Matrix2cd m;
  RotationLabel label;
};

/// The SO(3) matrix attached to a sublattice frame: diag(1,-1,-1) for the
/// square lattice, and the three triangular-sublattice matrices whose
/// transposes carry old-frame spin components into the local frames.
inline RotationSO3 rotation_so3(RotationLabel label) {
  const double q = std::sqrt(3.0) / 2.0;
  Eigen::Matrix3d m;
  switch (label) {
    case RotationLabel::Square:
      m << 1, 0, 0, 0, -1, 0, 0, 0, -1;
      break;
    case RotationLabel::A:
      m << 0, 0, 1, 1, 0, 0, 0, 1, 0;
      break;
    case RotationLabel::B:
      m << -q, 0, -0.5, -0.5, 0, q, 0, 1, 0;
      break;
    case RotationLabel::C:
      m << q, 0, -0.5, -0.5, 0, -q, 0, 1, 0;
      break;
  }
  return {m, label};
}

/// The unitary spinor rotation of a frame: the antidiagonal swap for the
/// square lattice, a planar rotation by 0, 2pi/3, -2pi/3 for A, B, C.
inline RotationU2 rotation_u2(RotationLabel label) {
  const double q = std::sqrt(3.0) / 2.0;
  Eigen::Matrix2cd m;
  switch (label) {
    case RotationLabel::Square:
      m << 0, 1, 1, 0;
      break;
    case RotationLabel::A:
      m << 1, 0, 0, 1;
      break;
    case RotationLabel::B:
      m << -0.5, -q, q, -0.5;
      break;
    case RotationLabel::C:
      m << -0.5, q, -q, -0.5;
      break;
  }
  return {m, label};
}

/// Component-mixing matrix M realized by conjugation with the spinor rotation:
/// the label frame's spin components expressed through the reference frame's,
/// S_label,a = sum_b M_ab S_ref,b. The reference frame is the one whose
/// spinor is unrotated: the A frame for the triangular labels (M = R_label^T R_A)
/// and the spin-up frame for the square label (M = R, self-inverse).
inline Eigen::Matrix3d frame_mixing_matrix(RotationLabel label) {
  if (label == RotationLabel::Square) return rotation_so3(label).m;
  return rotation_so3(label).m.transpose() * rotation_so3(RotationLabel::A).m;
}

/// Two-component operator spinor (1/sqrt(2S)) (sqrt(2S - n); a), possibly
/// rotated into a sublattice frame. beta^dagger beta equals the identity on
/// the physical subspace in every frame.
struct HpSpinor {
  OperatorMatrix upper;
  OperatorMatrix lower;
  Frame frame;
};

inline HpSpinor hp_spinor(const FockSpace& space, int site, Frame frame) {
  const double norm = 1.0 / std::sqrt(2.0 * space.spin());
  const OperatorMatrix root = norm * hp_root(space, site);
  const OperatorMatrix a = norm * annihilator(space, site);
  switch (frame) {
    case Frame::Old:
    case Frame::SquareUp:
    case Frame::A:  // u is the identity at angle 0
      return {root, a, frame};
    case Frame::SquareDown:  // u is the antidiagonal swap
      return {a, root, frame};
    default: {
      const double c = -0.5;
      const double s = (frame == Frame::B ? 1.0 : -1.0) * (std::sqrt(3.0) / 2.0);
      return {c * root - s * a, s * root + c * a, frame};
    }
  }
}

/// beta^dagger sigma beta with the spinor components contracted and the
/// operator products multiplied out (no S prefactor).
inline OperatorMatrix spinor_sandwich(const HpSpinor& b, const Eigen::Matrix2cd& sigma) {
  const Eigen::MatrixXcd& u = b.upper.matrix();
  const Eigen::MatrixXcd& l = b.lower.matrix();
  Eigen::MatrixXcd m = sigma(0, 0) * (u.adjoint() * u) + sigma(0, 1) * (u.adjoint() * l) +
                       sigma(1, 0) * (l.adjoint() * u) + sigma(1, 1) * (l.adjoint() * l);
  return {b.upper.space(), std::move(m)};
}

/// The three spin components of a frame.
struct SpinTriple {
  OperatorMatrix sx;
  OperatorMatrix sy;
  OperatorMatrix sz;
};

/// s_a = S beta^dagger sigma_a beta. In the Old frame this reproduces the
/// textbook HP components: sz = S - n on the physical subspace.
inline SpinTriple spin_operators(const HpSpinor& b) {
  const double S = b.upper.space().spin();
  return {S * spinor_sandwich(b, pauli_x()), S * spinor_sandwich(b, pauli_y()),
          S * spinor_sandwich(b, pauli_z())};
}

}  // namespace tafm
