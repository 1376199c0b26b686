#pragma once

#include <array>
#include <limits>
#include <utility>

#include "tafm/lattice.hpp"

// Closed-form spinon and holon bands of the extended t-J model on the
// triangular lattice, plus grid/refinement extrema search over the zone.

namespace tafm {

/// NN Heisenberg exchange parameters of the spinon band.
struct SpinonParams {
  double J = 1.0;  ///< NN exchange
  double S = 0.5;  ///< spin magnitude
  static constexpr int z = 6;  // NN coordination, fixed for the triangular lattice
};

/// Hopping parameters of the holon band.
struct HolonParams {
  double t = 1.0;        ///< NN hopping
  double t_prime = 0.0;  ///< NNN hopping
  double mu = 0.0;       ///< chemical potential
};

/// (1 + 2 gamma)(1 - gamma), clamped to 0 when rounding pushes it slightly
/// negative. A radicand below -1e-12 means the structure factor left its
/// [-1/2, 1] range and is reported as an error.
inline double spinon_radicand(double gamma) {
  const double r = (1.0 + 2.0 * gamma) * (1.0 - gamma);
  if (r < -1e-12)
    throw std::domain_error("spinon dispersion: radicand below -1e-12 (structure factor out of range)");
  return r < 0.0 ? 0.0 : r;
}

/// Spin-wave energy (1/2) J S z sqrt[(1 + 2 gamma1)(1 - gamma1)].
/// Vanishes at Gamma and at the zone corners (Goldstone modes).
inline double spinon_energy(const KVector& k, const SpinonParams& p) {
  return 0.5 * p.J * p.S * SpinonParams::z * std::sqrt(spinon_radicand(gamma1(k)));
}

/// Holon energy -(1/2)[t gamma1 - 2 t' gamma2] - mu.
inline double holon_energy(const KVector& k, const HolonParams& p) {
  return -0.5 * (p.t * gamma1(k) - 2.0 * p.t_prime * gamma2(k)) - p.mu;
}

struct BandSample {
  double arclength = 0.0;
  KVector k;
  double value = 0.0;
};

inline std::vector<BandSample> sample_band(const KPath& path, const SpinonParams& p) {
  std::vector<BandSample> out;
  for (const PathPoint& pt : sample_path(path))
    out.push_back({pt.arclength, pt.k, spinon_energy(pt.k, p)});
  return out;
}

inline std::vector<BandSample> sample_band(const KPath& path, const HolonParams& p) {
  std::vector<BandSample> out;
  for (const PathPoint& pt : sample_path(path))
    out.push_back({pt.arclength, pt.k, holon_energy(pt.k, p)});
  return out;
}

struct BandSummary {
  double min_value = 0.0;
  double max_value = 0.0;
  KVector argmin_k;
  KVector argmax_k;
  double bandwidth = 0.0;
};

namespace detail {
inline bool lex_less(const KVector& a, const KVector& b) {
  return a.kx < b.kx || (a.kx == b.kx && a.ky < b.ky);
}
}  // namespace detail

/// Derivative-free local minimization: golden-section line searches along the
/// reciprocal cell axes and diagonals with a shrinking trust radius, keeping
/// the best sample ever seen. Ties in value resolve to the lexicographically
/// smaller (kx, ky). A final micro-scan settles values that sit on the
/// floating-point plateau of a degenerate minimum.
template <class F>
std::pair<KVector, double> refine_minimum(F&& f, const KVector& start, double radius) {
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  KVector best_k = start;
  double best_v = f(start);
  auto consider = [&](const KVector& k, double v) {
    if (v < best_v || (v == best_v && detail::lex_less(k, best_k))) {
      best_v = v;
      best_k = k;
    }
  };
  const auto [g1, g2] = reciprocal_basis();
  const KVector diag_p = g1 + g2;
  const KVector diag_m = g1 - g2;
  const std::array<KVector, 4> dirs = {
      (1.0 / g1.norm()) * g1, (1.0 / g2.norm()) * g2,
      (1.0 / diag_p.norm()) * diag_p, (1.0 / diag_m.norm()) * diag_m};
  for (double r = radius; r > 1e-11; r *= 0.5) {
    for (const KVector& dir : dirs) {
      const KVector center = best_k;
      auto eval = [&](double t) {
        const KVector k = center + t * dir;
        const double v = f(k);
        consider(k, v);
        return v;
      };
      double lo = -r, hi = r;
      double c = hi - golden * (hi - lo);
      double d = lo + golden * (hi - lo);
      double fc = eval(c), fd = eval(d);
      while (hi - lo > 1e-12 + 1e-6 * r) {
        if (fc < fd) {
          hi = d; d = c; fd = fc;
          c = hi - golden * (hi - lo);
          fc = eval(c);
        } else {
          lo = c; c = d; fc = fd;
          d = lo + golden * (hi - lo);
          fd = eval(d);
        }
      }
    }
  }
  for (double s : {1e-9, 1e-10, 1e-11, 1e-12}) {
    const KVector center = best_k;
    for (const KVector& dir : dirs) {
      consider(center + s * dir, f(center + s * dir));
      consider(center - s * dir, f(center - s * dir));
    }
  }
  return {best_k, best_v};
}

/// Extrema of f over the Brillouin zone: a grid_resolution^2 scan of the
/// reciprocal primitive cell followed by local refinement of both extrema.
template <class F>
BandSummary summarize_band(F&& f, int grid_resolution) {
  if (grid_resolution < 8)
    throw std::invalid_argument("band_summary: grid_resolution must be at least 8");
  const auto [g1, g2] = reciprocal_basis();
  const int n = grid_resolution;
  KVector kmin, kmax;
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -std::numeric_limits<double>::infinity();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const KVector k = (static_cast<double>(u) / n) * g1 + (static_cast<double>(v) / n) * g2;
      const double val = f(k);
      if (val < vmin || (val == vmin && detail::lex_less(k, kmin))) {
        vmin = val;
        kmin = k;
      }
      if (val > vmax || (val == vmax && detail::lex_less(k, kmax))) {
        vmax = val;
        kmax = k;
      }
    }
  }
  const double cell = 1.5 * std::max(g1.norm(), g2.norm()) / n;
  auto [rkmin, rvmin] = refine_minimum(f, kmin, cell);
  auto neg = [&](const KVector& k) { return -f(k); };
  auto [rkmax, neg_vmax] = refine_minimum(neg, kmax, cell);
  BandSummary s;
  s.min_value = rvmin;
  s.argmin_k = rkmin;
  s.max_value = -neg_vmax;
  s.argmax_k = rkmax;
  s.bandwidth = s.max_value - s.min_value;
  return s;
}

inline BandSummary band_summary(const SpinonParams& p, int grid_resolution) {
  return summarize_band([&](const KVector& k) { return spinon_energy(k, p); }, grid_resolution);
}

inline BandSummary band_summary(const HolonParams& p, int grid_resolution) {
  return summarize_band([&](const KVector& k) { return holon_energy(k, p); }, grid_resolution);
}

}  // namespace tafm
