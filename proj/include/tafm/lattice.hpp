#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Triangular-lattice geometry: neighbor shells, sublattice labels,
// reciprocal space and the neighbor structure factors gamma_k.
// The lattice constant is 1; momenta are in radians per lattice constant.

namespace tafm {

inline const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

/// Real-space vector in units of the lattice constant.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("Vec2: components must be finite");
  }

  Vec2 operator-() const { return {-x, -y}; }
  double squared_norm() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

/// Momentum-space vector.
struct KVector {
  double kx = 0.0;
  double ky = 0.0;

  KVector() = default;
  KVector(double kx_, double ky_) : kx(kx_), ky(ky_) {
    if (!std::isfinite(kx) || !std::isfinite(ky))
      throw std::invalid_argument("KVector: components must be finite");
  }

  KVector operator-() const { return {-kx, -ky}; }
  double norm() const { return std::hypot(kx, ky); }
};

inline KVector operator+(const KVector& a, const KVector& b) { return {a.kx + b.kx, a.ky + b.ky}; }
inline KVector operator-(const KVector& a, const KVector& b) { return {a.kx - b.kx, a.ky - b.ky}; }
inline KVector operator*(double s, const KVector& k) { return {s * k.kx, s * k.ky}; }

inline double dot(const KVector& k, const Vec2& r) { return k.kx * r.x + k.ky * r.y; }

/// A shell of neighbor vectors; shell_index 1 = nearest, 2 = next-nearest.
struct NeighborShell {
  std::vector<Vec2> vectors;
  int shell_index = 1;
};

/// The six nearest neighbors of the triangular lattice (unit bond length).
inline const NeighborShell& nn_vectors() {
  static const NeighborShell shell{{{1.0, 0.0},
                                    {-1.0, 0.0},
                                    {-0.5, kHalfSqrt3},
                                    {0.5, -kHalfSqrt3},
                                    {-0.5, -kHalfSqrt3},
                                    {0.5, kHalfSqrt3}},
                                   1};
  return shell;
}

/// The six next-nearest neighbors, length sqrt(3): the NN shell scaled by
/// sqrt(3) and rotated by 30 degrees.
inline const NeighborShell& nnn_vectors() {
  static const NeighborShell shell{{{0.0, 2.0 * kHalfSqrt3},
                                    {0.0, -2.0 * kHalfSqrt3},
                                    {1.5, kHalfSqrt3},
                                    {-1.5, -kHalfSqrt3},
                                    {1.5, -kHalfSqrt3},
                                    {-1.5, kHalfSqrt3}},
                                   2};
  return shell;
}

enum class Sublattice { A, B, C };
enum class SquareSublattice { Up, Down };

inline std::string sublattice_name(Sublattice s) {
  switch (s) {
    case Sublattice::A: return "A";
    case Sublattice::B: return "B";
    default: return "C";
  }
}

/// Position of the site n1*a1 + n2*a2 with a1 = (1,0), a2 = (1/2, sqrt(3)/2).
inline Vec2 site_position(int n1, int n2) {
  return {n1 + 0.5 * n2, kHalfSqrt3 * n2};
}

/// Three-sublattice label by (n1 - n2) mod 3; a proper 3-coloring of the
/// triangular lattice.
inline Sublattice sublattice_of(int n1, int n2) {
  const int r = ((n1 - n2) % 3 + 3) % 3;
  return r == 0 ? Sublattice::A : (r == 1 ? Sublattice::B : Sublattice::C);
}

/// Two-sublattice label by (n1 + n2) parity (square-lattice variant).
inline SquareSublattice square_sublattice_of(int n1, int n2) {
  return ((n1 + n2) % 2 + 2) % 2 == 0 ? SquareSublattice::Up : SquareSublattice::Down;
}

/// Reciprocal basis b1, b2 with b_i . a_j = 2 pi delta_ij.
inline std::pair<KVector, KVector> reciprocal_basis() {
  const double pi = std::numbers::pi;
  return {KVector(2.0 * pi, -2.0 * pi / std::sqrt(3.0)),
          KVector(0.0, 4.0 * pi / std::sqrt(3.0))};
}

/// High-symmetry points of the triangular-lattice Brillouin zone.
/// K2 is the inequivalent zone corner K'.
inline const std::map<std::string, KVector>& high_symmetry_points() {
  const double pi = std::numbers::pi;
  static const std::map<std::string, KVector> points = {
      {"G", KVector(0.0, 0.0)},
      {"K", KVector(4.0 * pi / 3.0, 0.0)},
      {"K2", KVector(2.0 * pi / 3.0, 2.0 * pi / std::sqrt(3.0))},
      {"M", KVector(pi, -pi / std::sqrt(3.0))},
  };
  return points;
}

/// (1/z) sum_delta exp(i k.delta) over a neighbor shell. The shells here are
/// inversion symmetric, so the sum is real; a non-negligible imaginary part
/// signals a corrupted shell.
inline double structure_factor(const NeighborShell& shell, const KVector& k) {
  std::complex<double> sum = 0.0;
  for (const Vec2& d : shell.vectors)
    sum += std::exp(std::complex<double>(0.0, dot(k, d)));
  sum /= static_cast<double>(shell.vectors.size());
  if (std::abs(sum.imag()) >= 1e-12)
    throw std::runtime_error(
        "structure_factor: imaginary part exceeds 1e-12 (corrupted neighbor shell)");
  return sum.real();
}

/// NN structure factor, in [-1/2, 1] with max at Gamma and min at the K points.
inline double gamma1(const KVector& k) { return structure_factor(nn_vectors(), k); }

/// NNN structure factor, same range.
inline double gamma2(const KVector& k) { return structure_factor(nnn_vectors(), k); }

/// Piecewise-linear path through named waypoints in reciprocal space.
struct KPath {
  std::vector<std::pair<std::string, KVector>> waypoints;
  int samples_per_segment = 100;
};

struct PathPoint {
  double arclength = 0.0;
  KVector k;
};

/// Samples a KPath: the first waypoint plus samples_per_segment points per
/// segment, waypoints reproduced exactly at segment boundaries. Arclength is
/// the cumulative distance along the sampled polyline, starting at 0.
inline std::vector<PathPoint> sample_path(const KPath& path) {
  if (path.samples_per_segment < 1)
    throw std::invalid_argument("sample_path: samples_per_segment must be a positive integer");
  if (path.waypoints.size() < 2)
    throw std::invalid_argument("sample_path: a path needs at least 2 waypoints");
  std::vector<PathPoint> points;
  points.reserve(1 + (path.waypoints.size() - 1) * path.samples_per_segment);
  KVector prev = path.waypoints.front().second;
  double s = 0.0;
  points.push_back({s, prev});
  for (std::size_t w = 1; w < path.waypoints.size(); ++w) {
    const KVector a = path.waypoints[w - 1].second;
    const KVector b = path.waypoints[w].second;
    for (int j = 1; j <= path.samples_per_segment; ++j) {
      const double t = static_cast<double>(j) / path.samples_per_segment;
      const KVector k = (j == path.samples_per_segment)
                            ? b
                            : KVector(a.kx + t * (b.kx - a.kx), a.ky + t * (b.ky - a.ky));
      s += (k - prev).norm();
      points.push_back({s, k});
      prev = k;
    }
  }
  return points;
}

}  // namespace tafm
