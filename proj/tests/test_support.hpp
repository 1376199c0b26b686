#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "tafm/lattice.hpp"

// Shared helpers for the test suites.

extern std::string g_cli_path;

namespace testutil {

// Independent 6-term phase sums over literal neighbor lists; the oracle for
// every frozen gamma value.
inline const tafm::Vec2 kNnList[6] = {
    {1.0, 0.0},  {-1.0, 0.0},
    {-0.5, std::sqrt(3.0) / 2.0},  {0.5, -std::sqrt(3.0) / 2.0},
    {-0.5, -std::sqrt(3.0) / 2.0}, {0.5, std::sqrt(3.0) / 2.0}};

inline const tafm::Vec2 kNnnList[6] = {
    {0.0, std::sqrt(3.0)},  {0.0, -std::sqrt(3.0)},
    {1.5, std::sqrt(3.0) / 2.0},  {-1.5, -std::sqrt(3.0) / 2.0},
    {1.5, -std::sqrt(3.0) / 2.0}, {-1.5, std::sqrt(3.0) / 2.0}};

inline double phase_sum(const tafm::Vec2* shell, const tafm::KVector& k) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < 6; ++i)
    s += std::exp(std::complex<double>(0.0, k.kx * shell[i].x + k.ky * shell[i].y));
  return s.real() / 6.0;
}

inline tafm::KVector random_k(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  return {d(rng), d(rng)};
}

inline tafm::KVector rotate60(const tafm::KVector& k) {
  const double c = 0.5, s = std::sqrt(3.0) / 2.0;
  return {c * k.kx - s * k.ky, s * k.kx + c * k.ky};
}

inline tafm::Vec2 rotate60(const tafm::Vec2& v) {
  const double c = 0.5, s = std::sqrt(3.0) / 2.0;
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline bool contains_vec(const std::vector<tafm::Vec2>& vs, const tafm::Vec2& v,
                         double tol = 1e-12) {
  for (const tafm::Vec2& w : vs)
    if (std::abs(w.x - v.x) <= tol && std::abs(w.y - v.y) <= tol) return true;
  return false;
}

}  // namespace testutil
