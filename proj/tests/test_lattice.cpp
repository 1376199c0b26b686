#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "tafm/dispersion.hpp"
#include "tafm/lattice.hpp"
#include "test_support.hpp"

using namespace tafm;
using testutil::contains_vec;
using testutil::phase_sum;

TEST_CASE("nearest-neighbor shell") {
  const NeighborShell& shell = nn_vectors();
  REQUIRE(shell.shell_index == 1);
  REQUIRE(shell.vectors.size() == 6);
  CHECK(contains_vec(shell.vectors, {1.0, 0.0}));
  CHECK(contains_vec(shell.vectors, {-1.0, 0.0}));
  Vec2 sum;
  for (const Vec2& v : shell.vectors) {
    CHECK(std::abs(v.squared_norm() - 1.0) < 1e-12);
    CHECK(contains_vec(shell.vectors, -v));
    sum = sum + v;
  }
  CHECK(sum.norm() < 1e-12);
  for (const Vec2& v : testutil::kNnList) CHECK(contains_vec(shell.vectors, v));
}

TEST_CASE("next-nearest-neighbor shell") {
  const NeighborShell& shell = nnn_vectors();
  REQUIRE(shell.shell_index == 2);
  REQUIRE(shell.vectors.size() == 6);
  Vec2 sum;
  for (const Vec2& v : shell.vectors) {
    CHECK(std::abs(v.squared_norm() - 3.0) < 1e-12);
    CHECK(contains_vec(shell.vectors, -v));
    CHECK(contains_vec(shell.vectors, testutil::rotate60(v)));
    sum = sum + v;
  }
  CHECK(sum.norm() < 1e-12);
  // NN and NNN sets are disjoint (different lengths)
  for (const Vec2& v : shell.vectors) CHECK(!contains_vec(nn_vectors().vectors, v));
}

TEST_CASE("sublattice labels") {
  CHECK(sublattice_of(0, 0) == Sublattice::A);
  CHECK(sublattice_of(1, 0) == Sublattice::B);
  CHECK(sublattice_of(0, 1) == Sublattice::C);
  CHECK(sublattice_of(3, 0) == Sublattice::A);
  CHECK(sublattice_of(-1, 0) == Sublattice::C);

  // the six NN index steps of the triangular lattice
  const int steps[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  // index steps really are the geometric NN shell
  for (const auto& st : steps) {
    const Vec2 d = site_position(st[0], st[1]);
    CHECK(contains_vec(nn_vectors().vectors, d));
  }
  // proper 3-coloring over a 12x12 patch, exhaustive
  for (int n1 = 0; n1 < 12; ++n1)
    for (int n2 = 0; n2 < 12; ++n2)
      for (const auto& st : steps)
        CHECK(sublattice_of(n1, n2) != sublattice_of(n1 + st[0], n2 + st[1]));
  // square 2-coloring over the same patch
  const int sq_steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int n1 = 0; n1 < 12; ++n1)
    for (int n2 = 0; n2 < 12; ++n2)
      for (const auto& st : sq_steps)
        CHECK(square_sublattice_of(n1, n2) != square_sublattice_of(n1 + st[0], n2 + st[1]));
}

TEST_CASE("high-symmetry points") {
  const auto& pts = high_symmetry_points();
  const double pi = std::numbers::pi;
  CHECK(pts.at("G").kx == 0.0);
  CHECK(pts.at("G").ky == 0.0);
  CHECK(std::abs(pts.at("K").kx - 4.0 * pi / 3.0) < 1e-15);
  CHECK(pts.at("K").ky == 0.0);
  CHECK(std::abs(pts.at("M").kx - pi) < 1e-15);
  CHECK(std::abs(pts.at("M").ky + pi / std::sqrt(3.0)) < 1e-15);

  // oracle: direct 6-term phase sums at the named points
  CHECK(std::abs(phase_sum(testutil::kNnList, pts.at("K")) + 0.5) < 1e-12);
  CHECK(std::abs(phase_sum(testutil::kNnList, pts.at("M")) + 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(phase_sum(testutil::kNnList, pts.at("K2")) + 0.5) < 1e-12);

  CHECK(std::abs(gamma1(pts.at("K")) + 0.5) < 1e-12);
  CHECK(std::abs(gamma1(pts.at("M")) + 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(gamma1(pts.at("K2")) + 0.5) < 1e-12);
}

TEST_CASE("structure factors at the zone center and corners") {
  CHECK(gamma1(KVector(0.0, 0.0)) == 1.0);
  CHECK(gamma2(KVector(0.0, 0.0)) == 1.0);
  // every NNN phase at K is a multiple of 2 pi
  CHECK(std::abs(gamma2(high_symmetry_points().at("K")) - 1.0) < 1e-12);
  CHECK(std::abs(phase_sum(testutil::kNnnList, high_symmetry_points().at("K")) - 1.0) < 1e-12);
}

TEST_CASE("structure factor symmetries") {
  std::mt19937 rng(42);
  const auto [b1, b2] = reciprocal_basis();
  for (int i = 0; i < 200; ++i) {
    const KVector k = testutil::random_k(rng);
    const double g1 = gamma1(k), g2 = gamma2(k);
    CHECK(g1 >= -0.5 - 1e-12);
    CHECK(g1 <= 1.0 + 1e-12);
    CHECK(g2 >= -0.5 - 1e-12);
    CHECK(g2 <= 1.0 + 1e-12);
    CHECK(std::abs(gamma1(-k) - g1) < 1e-12);
    CHECK(std::abs(gamma2(-k) - g2) < 1e-12);
    CHECK(std::abs(gamma1(testutil::rotate60(k)) - g1) < 1e-12);
    CHECK(std::abs(gamma2(testutil::rotate60(k)) - g2) < 1e-12);
    CHECK(std::abs(gamma1(k + b1) - g1) < 1e-12);
    CHECK(std::abs(gamma1(k + b2) - g1) < 1e-12);
    CHECK(std::abs(gamma2(k + b1) - g2) < 1e-12);
    CHECK(std::abs(gamma2(k + b2) - g2) < 1e-12);
  }
}

TEST_CASE("NNN factor is the NN factor of the scaled rotated momentum") {
  // the NNN shell is the NN shell scaled by sqrt(3) and rotated by 30 degrees
  const double r = std::sqrt(3.0);
  const double c = std::cos(-std::numbers::pi / 6.0), s = std::sin(-std::numbers::pi / 6.0);
  const auto [b1, b2] = reciprocal_basis();
  for (int u = 0; u < 32; ++u)
    for (int v = 0; v < 32; ++v) {
      const KVector k = (u / 32.0) * b1 + (v / 32.0) * b2;
      const KVector m(r * (c * k.kx - s * k.ky), r * (s * k.kx + c * k.ky));
      CHECK(std::abs(gamma2(k) - gamma1(m)) < 1e-12);
    }
}

TEST_CASE("structure factor extrema over the zone") {
  const BandSummary s = summarize_band([](const KVector& k) { return gamma1(k); }, 64);
  CHECK(std::abs(s.max_value - 1.0) < 1e-9);
  CHECK(std::abs(s.min_value + 0.5) < 1e-9);
  CHECK(s.argmax_k.norm() < 1e-6);  // max at Gamma (grid contains it exactly)
  CHECK(std::abs(gamma1(s.argmin_k) + 0.5) < 1e-9);
}

TEST_CASE("structure factor rejects a corrupted shell") {
  NeighborShell bad;
  bad.vectors = {{1.0, 0.0}};  // not inversion symmetric
  bad.shell_index = 1;
  CHECK_THROWS_AS(structure_factor(bad, KVector(1.0, 0.3)), std::runtime_error);
}

TEST_CASE("path sampling") {
  const auto& pts = high_symmetry_points();
  SECTION("two waypoints, two samples per segment") {
    KPath p{{{"G", pts.at("G")}, {"K", pts.at("K")}}, 2};
    const auto samples = sample_path(p);
    REQUIRE(samples.size() == 3);
    CHECK(samples.front().k.kx == 0.0);
    CHECK(samples.back().k.kx == pts.at("K").kx);  // endpoint reproduced exactly
    CHECK(samples.front().arclength == 0.0);
  }
  SECTION("degenerate segment has zero arclength") {
    KPath p{{{"G", pts.at("G")}, {"G", pts.at("G")}}, 5};
    for (const PathPoint& pt : sample_path(p)) CHECK(pt.arclength == 0.0);
  }
  SECTION("arclength of a straight segment is the distance") {
    KPath p{{{"G", pts.at("G")}, {"K", pts.at("K")}}, 4};
    const auto samples = sample_path(p);
    REQUIRE(samples.size() == 5);
    CHECK(std::abs(samples.back().arclength - 4.0 * std::numbers::pi / 3.0) < 1e-12);
  }
  SECTION("arclength is monotone and waypoints are exact") {
    KPath p{{{"G", pts.at("G")}, {"K", pts.at("K")}, {"M", pts.at("M")}, {"G", pts.at("G")}}, 7};
    const auto samples = sample_path(p);
    REQUIRE(samples.size() == 1 + 3 * 7);
    for (std::size_t i = 1; i < samples.size(); ++i)
      CHECK(samples[i].arclength >= samples[i - 1].arclength);
    CHECK(samples[7].k.kx == pts.at("K").kx);
    CHECK(samples[14].k.kx == pts.at("M").kx);
    CHECK(samples[14].k.ky == pts.at("M").ky);
  }
  SECTION("rejects zero samples per segment") {
    KPath p{{{"G", pts.at("G")}, {"K", pts.at("K")}}, 0};
    CHECK_THROWS_AS(sample_path(p), std::invalid_argument);
  }
  SECTION("rejects a single waypoint") {
    KPath p{{{"G", pts.at("G")}}, 4};
    CHECK_THROWS_AS(sample_path(p), std::invalid_argument);
  }
}

TEST_CASE("vector constructors reject non-finite components") {
  CHECK_THROWS_AS(Vec2(std::nan(""), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(KVector(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}
