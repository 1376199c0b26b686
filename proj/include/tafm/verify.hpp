#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tafm/kappa.hpp"

// Numerical verification of the operator identities behind the symmetric HP
// transformation and the spin-polaron technique, on truncated Fock spaces.
// Every check restricts to the physical subspace where the identities are
// exact; deviations are max-abs-entry norms.

namespace tafm {

/// Max-abs-entry tolerance for the finite operator identities.
inline constexpr double kIdentityTol = 1e-12;

struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = kIdentityTol;
  std::map<std::string, std::string> parameters;
};

namespace detail {

inline std::string num_str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline VerificationReport make_report(std::string name, double dev, double tol,
                                      std::map<std::string, std::string> params) {
  return {std::move(name), dev <= tol, dev, tol, std::move(params)};
}

inline void require_buffered_dim(double spin, int dim, const char* what) {
  if (dim < static_cast<int>(std::llround(2.0 * spin)) + 2)
    throw std::invalid_argument(std::string(what) + ": needs dim >= 2S + 2");
}

inline std::string spin_list_str(const std::vector<double>& spins) {
  std::string s;
  for (double v : spins) {
    if (!s.empty()) s += ",";
    s += num_str(v);
  }
  return s;
}

}  // namespace detail

/// SU(2) commutators, Casimir S(S+1) and Hermiticity of the spin components
/// of one frame, restricted to the physical subspace n <= 2S.
inline VerificationReport verify_su2(double spin, int dim, Frame frame) {
  detail::require_buffered_dim(spin, dim, "verify_su2");
  const FockSpace space(spin, dim, 1);
  const SpinTriple s = spin_operators(hp_spinor(space, 0, frame));
  const Complex im(0.0, 1.0);
  auto comm = [](const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; };
  double dev = 0.0;
  dev = std::max(dev, physical_deviation(comm(s.sx, s.sy), im * s.sz));
  dev = std::max(dev, physical_deviation(comm(s.sy, s.sz), im * s.sx));
  dev = std::max(dev, physical_deviation(comm(s.sz, s.sx), im * s.sy));
  const OperatorMatrix casimir = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
  const Eigen::MatrixXcd cblk = physical_block(casimir);
  dev = std::max(dev, max_abs(cblk - spin * (spin + 1.0) *
                                          Eigen::MatrixXcd::Identity(cblk.rows(), cblk.cols())));
  for (const OperatorMatrix* c : {&s.sx, &s.sy, &s.sz}) {
    const Eigen::MatrixXcd blk = physical_block(*c);
    dev = std::max(dev, max_abs(blk - blk.adjoint().eval()));
  }
  return detail::make_report("su2", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)},
                              {"D", std::to_string(dim)},
                              {"frame", frame_name(frame)}});
}

/// verify_su2 over all six frames; reports the worst deviation.
inline VerificationReport verify_su2_all_frames(double spin, int dim) {
  double dev = 0.0;
  for (Frame f : all_frames()) dev = std::max(dev, verify_su2(spin, dim, f).max_deviation);
  return detail::make_report("su2", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)},
                              {"D", std::to_string(dim)},
                              {"frames", "old,A,B,C,square-up,square-down"}});
}

/// Operator-level consistency of a sublattice frame: the spin components built
/// from the rotated spinor must equal the frame-mixing matrix applied to the
/// reference-frame components.
inline VerificationReport verify_frame_consistency(RotationLabel label, double spin, int dim) {
  detail::require_buffered_dim(spin, dim, "verify_frame_consistency");
  const FockSpace space(spin, dim, 1);
  const SpinTriple ref = spin_operators(hp_spinor(space, 0, Frame::Old));
  Frame rotated = Frame::SquareDown;
  switch (label) {
    case RotationLabel::Square: rotated = Frame::SquareDown; break;
    case RotationLabel::A: rotated = Frame::A; break;
    case RotationLabel::B: rotated = Frame::B; break;
    case RotationLabel::C: rotated = Frame::C; break;
  }
  const SpinTriple rot = spin_operators(hp_spinor(space, 0, rotated));
  const Eigen::Matrix3d m = frame_mixing_matrix(label);
  const OperatorMatrix* refc[3] = {&ref.sx, &ref.sy, &ref.sz};
  const OperatorMatrix* rotc[3] = {&rot.sx, &rot.sy, &rot.sz};
  double dev = 0.0;
  for (int a = 0; a < 3; ++a) {
    const OperatorMatrix rhs =
        m(a, 0) * *refc[0] + m(a, 1) * *refc[1] + m(a, 2) * *refc[2];
    dev = std::max(dev, physical_deviation(*rotc[a], rhs));
  }
  return detail::make_report("frame", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)},
                              {"D", std::to_string(dim)},
                              {"label", rotation_label_name(label)}});
}

/// verify_frame_consistency over all four labels; reports the worst deviation.
inline VerificationReport verify_frame_consistency_all(double spin, int dim) {
  double dev = 0.0;
  for (RotationLabel l : all_rotation_labels())
    dev = std::max(dev, verify_frame_consistency(l, spin, dim).max_deviation);
  return detail::make_report("frame", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)},
                              {"D", std::to_string(dim)},
                              {"labels", "square,A,B,C"}});
}

/// Orthogonality and determinant of the SO(3) matrices and unitarity of the
/// spinor rotations. The determinant values are recorded in the parameters.
inline VerificationReport verify_rotation_matrices() {
  double dev = 0.0;
  std::map<std::string, std::string> params;
  for (RotationLabel l : all_rotation_labels()) {
    const Eigen::Matrix3d r = rotation_so3(l).m;
    dev = std::max(dev, (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
    const double det = r.determinant();
    params["det_" + rotation_label_name(l)] = detail::num_str(det);
    dev = std::max(dev, std::abs(det - 1.0));
    const Eigen::Matrix2cd u = rotation_u2(l).m;
    dev = std::max(dev, max_abs(Eigen::MatrixXcd(u.adjoint() * u -
                                                 Eigen::Matrix2cd::Identity())));
  }
  return detail::make_report("rotation", dev, kIdentityTol, std::move(params));
}

/// kappa_ii = 1 on the physical subspace for every frame. The diagonal entry
/// of the first unphysical state (n/(2S) under the clamp) is recorded but
/// excluded from the pass criterion.
inline VerificationReport verify_constraint(double spin, int dim) {
  detail::require_buffered_dim(spin, dim, "verify_constraint");
  const FockSpace space(spin, dim, 1);
  double dev = 0.0;
  for (Frame f : all_frames())
    dev = std::max(dev, physical_identity_deviation(kappa_onsite(space, f)));
  std::map<std::string, std::string> params = {{"S", detail::num_str(spin)},
                                               {"D", std::to_string(dim)},
                                               {"frames", "old,A,B,C,square-up,square-down"}};
  const int n_unphys = space.two_s() + 1;
  if (n_unphys < dim) {
    const Complex entry = kappa_onsite(space, Frame::Old)(n_unphys, n_unphys);
    params["unphysical_diagonal"] = detail::num_str(entry.real());
  }
  return detail::make_report("constraint", dev, kIdentityTol, std::move(params));
}

/// Leading vertex structure of the NN hopping channel: the constant term of
/// kappa_AB and kappa_AC is -1/2 and the linear boson coefficients follow the
/// (a_i^+ - a_j) pattern, magnitude sqrt(3)/(2 sqrt(2S)), with opposite signs
/// for the B and C sublattices.
inline VerificationReport ht_vertex_check(double spin, int dim) {
  detail::require_buffered_dim(spin, dim, "ht_vertex_check");
  const FockSpace space(spin, dim, 2);
  const OperatorMatrix kab = kappa_exact(space, Frame::A, Frame::B);
  const OperatorMatrix kac = kappa_exact(space, Frame::A, Frame::C);
  const int d = space.dim();
  const int vac = 0;
  const int exc_i = d;  // |1 0>
  const int exc_j = 1;  // |0 1>
  const Complex c_ab = kab(vac, vac), c_ac = kac(vac, vac);
  const Complex li_ab = kab(exc_i, vac), lj_ab = kab(vac, exc_j);
  const Complex li_ac = kac(exc_i, vac), lj_ac = kac(vac, exc_j);
  const double lin = std::sqrt(3.0) / (2.0 * std::sqrt(2.0 * spin));
  double dev = 0.0;
  dev = std::max(dev, std::abs(c_ab - Complex(-0.5)));
  dev = std::max(dev, std::abs(c_ac - Complex(-0.5)));
  dev = std::max(dev, std::abs(li_ab - Complex(lin)));
  dev = std::max(dev, std::abs(lj_ab - Complex(-lin)));
  dev = std::max(dev, std::abs(li_ac + li_ab));  // B/C sign flip
  dev = std::max(dev, std::abs(lj_ac + lj_ab));
  dev = std::max(dev, std::abs(li_ac - Complex(-lin)));
  dev = std::max(dev, std::abs(lj_ac - Complex(lin)));
  // the magnitude is sqrt(3/(4S)) up to the 1/sqrt(2) spinor normalization
  dev = std::max(dev, std::abs(std::abs(li_ab) - std::sqrt(3.0 / (4.0 * spin)) / std::sqrt(2.0)));
  return detail::make_report("vertex", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)},
                              {"D", std::to_string(dim)},
                              {"constant", detail::num_str(c_ab.real())},
                              {"linear", detail::num_str(li_ab.real())}});
}

/// Series structure of the square-lattice kappa: the constant term vanishes
/// and the linear matrix element <10|kappa|00> equals 1/sqrt(2S), both for the
/// series and for the exact operator.
inline VerificationReport kappa_series_check(double spin, int dim) {
  detail::require_buffered_dim(spin, dim, "kappa_series_check");
  const FockSpace space(spin, dim, 2);
  const OperatorMatrix ke = kappa_exact(space, Frame::SquareUp, Frame::SquareDown);
  const OperatorMatrix k0 = kappa_series(space, Frame::SquareUp, Frame::SquareDown, 0);
  const OperatorMatrix k1 = kappa_series(space, Frame::SquareUp, Frame::SquareDown, 1);
  const double a1 = 1.0 / std::sqrt(2.0 * spin);
  const int d = space.dim();
  double dev = 0.0;
  dev = std::max(dev, max_abs(k0));                      // constant term vanishes
  dev = std::max(dev, std::abs(ke(0, 0)));               // exact vacuum element
  dev = std::max(dev, std::abs(k1(d, 0) - Complex(a1)));
  dev = std::max(dev, std::abs(ke(d, 0) - Complex(a1)));
  return detail::make_report("kappa-series", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)},
                              {"D", std::to_string(dim)},
                              {"A1", detail::num_str(a1)}});
}

/// Truncation error of the order-2 series against the exact operator on the
/// total-occupation <= 2 subspace, for S = 2, 4, 8. Each doubling of S must
/// shrink the error by at least a factor 1/0.6; max_deviation is the worst
/// step ratio.
inline VerificationReport kappa_convergence_check() {
  std::vector<double> errs;
  std::map<std::string, std::string> params;
  for (double spin : {2.0, 4.0, 8.0}) {
    const int dim = static_cast<int>(std::llround(2.0 * spin)) + 2;
    const FockSpace space(spin, dim, 2);
    const OperatorMatrix diff =
        kappa_exact(space, Frame::SquareUp, Frame::SquareDown) -
        kappa_series(space, Frame::SquareUp, Frame::SquareDown, 2);
    std::vector<int> idx;
    for (int i = 0; i < space.total_dim(); ++i)
      if (space.occupation(i, 0) + space.occupation(i, 1) <= 2) idx.push_back(i);
    double err = 0.0;
    for (int i : idx)
      for (int j : idx) err = std::max(err, std::abs(diff(i, j)));
    errs.push_back(err);
    params["error_S" + detail::num_str(spin)] = detail::num_str(err);
  }
  const double ratio = std::max(errs[1] / errs[0], errs[2] / errs[1]);
  return detail::make_report("kappa-convergence", ratio, 0.6, std::move(params));
}

/// kappa(frame_i, frame_j)^dagger equals kappa(frame_j, frame_i) with the two
/// sites exchanged, for every frame pair (checked on the full truncated space).
inline VerificationReport kappa_pairing_check(double spin, int dim) {
  const FockSpace space(spin, dim, 2);
  const OperatorMatrix x = site_swap(space);
  double dev = 0.0;
  for (Frame fi : all_frames())
    for (Frame fj : all_frames()) {
      const OperatorMatrix k1 = kappa_exact(space, fi, fj);
      const OperatorMatrix k2 = kappa_exact(space, fj, fi);
      dev = std::max(dev, max_abs(k1.adjoint().matrix() - (x * k2 * x).matrix()));
    }
  return detail::make_report("pairing", dev, kIdentityTol,
                             {{"S", detail::num_str(spin)}, {"D", std::to_string(dim)}});
}

inline const std::vector<std::string>& verification_check_names() {
  static const std::vector<std::string> names = {
      "su2", "frame", "rotation", "constraint", "vertex",
      "kappa-series", "kappa-convergence", "pairing"};
  return names;
}

struct SweepOptions {
  std::vector<double> spins = {0.5, 1.0, 1.5, 2.0};
  std::string check;  ///< empty = run every check family
};

/// The full verification sweep: every check family at every requested spin,
/// with dim = 2S + 2.
inline std::vector<VerificationReport> run_verification_sweep(const SweepOptions& opt = {}) {
  if (!opt.check.empty()) {
    const auto& names = verification_check_names();
    if (std::find(names.begin(), names.end(), opt.check) == names.end()) {
      std::string valid;
      for (const std::string& n : names) valid += (valid.empty() ? "" : ", ") + n;
      throw std::invalid_argument("unknown check '" + opt.check + "' (valid: " + valid + ")");
    }
  }
  auto want = [&](const char* family) { return opt.check.empty() || opt.check == family; };
  std::vector<VerificationReport> out;
  for (double spin : opt.spins) {
    const int dim = static_cast<int>(std::llround(2.0 * spin)) + 2;
    if (want("su2")) out.push_back(verify_su2_all_frames(spin, dim));
    if (want("frame")) out.push_back(verify_frame_consistency_all(spin, dim));
    if (want("constraint")) out.push_back(verify_constraint(spin, dim));
    if (want("vertex")) out.push_back(ht_vertex_check(spin, dim));
    if (want("kappa-series")) out.push_back(kappa_series_check(spin, dim));
    if (want("pairing")) out.push_back(kappa_pairing_check(spin, dim));
  }
  if (want("rotation")) out.push_back(verify_rotation_matrices());
  if (want("kappa-convergence")) out.push_back(kappa_convergence_check());
  return out;
}

}  // namespace tafm
