/*
   Copyright 2026 The delsarte authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <fstream>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "delsarte/errors.hpp"
#include "delsarte/io.hpp"
#include "delsarte/spherical.hpp"

using namespace delsarte;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_input;
}

std::string data(const std::string& name) { return std::string(DELSARTE_DATA_DIR) + "/" + name; }

PointSet octahedron() {
  std::vector<std::vector<Rational>> pts;
  for (int a = 0; a < 3; ++a)
    for (int sign : {1, -1}) {
      std::vector<Rational> p(3, Rational(0));
      p[a] = sign;
      pts.push_back(p);
    }
  return PointSet::from_rational(pts);
}

PointSet simplex3() {
  RatMatrix g(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g(a, b) = a == b ? Rational(1) : Rational(-1, 3);
  return PointSet::from_gram(3, g);
}

// Integral of x^m over [-1,1].
Rational monomial_integral(int m) { return m % 2 ? Rational(0) : Rational(2, m + 1); }

}  // namespace

TEST(Gegenbauer, KnownPolynomials) {
  EXPECT_EQ(gegenbauer(3, 0), Polynomial{1});
  EXPECT_EQ(gegenbauer(3, 1), (Polynomial{0, 3}));
  EXPECT_EQ(gegenbauer(3, 2), (Polynomial{Rational(-5, 2), 0, Rational(15, 2)}));
  EXPECT_EQ(gegenbauer(4, 1), (Polynomial{0, 4}));
}

TEST(Gegenbauer, ValueAtOneIsHarmonicDimension) {
  for (int d = 3; d <= 7; ++d) {
    const auto basis = gegenbauer_basis(d, 9);
    for (int k = 0; k <= 9; ++k) {
      EXPECT_EQ(basis[k].degree(), k);
      EXPECT_EQ(basis[k](1), Rational(harmonic_dimension(d, k)));
    }
  }
  EXPECT_EQ(harmonic_dimension(3, 4), 9);
  EXPECT_EQ(harmonic_dimension(4, 2), 9);
}

TEST(Gegenbauer, OrthogonalForTheSphereInThreeDimensions) {
  const auto basis = gegenbauer_basis(3, 6);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j < i; ++j) {
      const auto prod = basis[i] * basis[j];
      Rational integral = 0;
      for (int m = 0; m <= prod.degree(); ++m) integral += prod.coefficient(m) * monomial_integral(m);
      EXPECT_EQ(integral, 0) << i << "," << j;
    }
}

TEST(Gegenbauer, FloatingValuesMatchExact) {
  for (int d : {3, 5, 8}) {
    const auto basis = gegenbauer_basis(d, 8);
    for (double x : {-1.0, -0.3, 0.0, 0.25, 0.9, 1.0}) {
      const auto v = gegenbauer_values(d, 8, x);
      for (int k = 0; k <= 8; ++k) EXPECT_NEAR(v[k], basis[k].evaluate(x), 1e-9 * (1 + std::abs(v[k])));
    }
  }
}

TEST(Gegenbauer, Linearization) {
  const auto q = linearization(3, 1, 1);
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0], 3);
  EXPECT_EQ(q[1], 0);
  EXPECT_EQ(q[2], Rational(6, 5));
  for (int d : {3, 4, 6})
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        const auto c = linearization(d, i, j);
        Polynomial sum;
        for (std::size_t k = 0; k < c.size(); ++k) {
          sum += c[k] * gegenbauer(d, static_cast<int>(k));
          if (c[k] != 0) EXPECT_GT(c[k], 0);
        }
        EXPECT_EQ(sum, gegenbauer(d, i) * gegenbauer(d, j));
      }
}

TEST(Gegenbauer, CircleRejected) {
  EXPECT_EQ(code_of([] { gegenbauer(2, 1); }), ErrorCode::dimension_too_small);
  EXPECT_EQ(code_of([] { PointSet::from_rational({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }),
            ErrorCode::dimension_too_small);
  EXPECT_EQ(code_of([] { PointSet::from_real({{1, 0}, {0, 1}}); }), ErrorCode::dimension_too_small);
}

TEST(PointSets, InputValidation) {
  EXPECT_EQ(code_of([] { PointSet::from_rational({{1, 1, 0}}); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { PointSet::from_rational({{1, 0, 0}, {1, 0, 0}}); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { PointSet::from_real({{1, 0, 0}, {0, 1}}); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { PointSet::from_real({{0.5, 0, 0}}); }), ErrorCode::invalid_input);
}

TEST(Moments, Octahedron) {
  const auto X = octahedron();
  const auto b = moments(X, 8);
  std::vector<Rational> want{6, 0, 0, 0, Rational(63, 2), 0, Rational(39, 4), 0, Rational(1683, 32)};
  EXPECT_EQ(b.exact, want);
  EXPECT_TRUE(design_check(b, 0, 3));
  EXPECT_FALSE(design_check(b, 0, 4));
  EXPECT_TRUE(design_check(b, 4, 1));
  EXPECT_EQ(code_of([&] { design_check(b, 6, 3); }), ErrorCode::precondition_failed);
  const auto iv = spherical_intervals(b);
  ASSERT_GE(iv.size(), 1u);
  EXPECT_EQ(iv[0].w, 0);
  EXPECT_EQ(iv[0].t, 3);
  EXPECT_TRUE(iv[0].closed);
}

TEST(Moments, AntipodalPairOnlyKillsOddDegrees) {
  const auto X = read_points_file(data("antipodal.txt"));
  EXPECT_EQ(X.mode(), PointMode::exact);
  const auto b = moments(X, 6);
  for (int k = 1; k <= 6; k += 2) EXPECT_TRUE(b.is_zero(k));
  for (int k = 0; k <= 6; k += 2) EXPECT_FALSE(b.is_zero(k));
  const auto deg = degree_set(X);
  EXPECT_EQ(deg.exact, std::vector<Rational>{-1});
}

TEST(Moments, SimplexFromGram) {
  // the regular tetrahedron has no rational coordinates, so only its Gram matrix is exact
  const auto X = simplex3();
  const auto rep = spherical_analysis(X, 6);
  EXPECT_EQ(rep.degrees.degree(), 1);
  EXPECT_TRUE(rep.moments.is_zero(1));
  EXPECT_TRUE(rep.moments.is_zero(2));
  EXPECT_FALSE(rep.moments.is_zero(3));
  ASSERT_TRUE(rep.induced.has_value());
  EXPECT_EQ(rep.induced->classes, 1);
  const auto floating = read_points_file(data("simplex.txt"));
  EXPECT_EQ(floating.mode(), PointMode::floating);
  const auto fb = moments(floating, 6);
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(fb.value(k), rep.moments.value(k), 1e-9);
}

TEST(Analysis, IcosahedronIsAFiveDesignWithAThreeClassScheme) {
  const auto X = read_points_file(data("icosahedron.txt"));
  const auto rep = spherical_analysis(X, 8);
  EXPECT_EQ(rep.mode, PointMode::floating);
  EXPECT_EQ(rep.degrees.degree(), 3);
  ASSERT_FALSE(rep.intervals.empty());
  EXPECT_EQ(rep.intervals[0].w, 0);
  EXPECT_EQ(rep.intervals[0].t, 5);
  EXPECT_TRUE(rep.intervals[0].closed);
  for (const auto& bd : rep.bounds) EXPECT_TRUE(bd.satisfied);
  ASSERT_TRUE(rep.induced.has_value());
  EXPECT_EQ(rep.induced->classes, 3);
  EXPECT_TRUE(rep.induced->q_ordering.has_value());
}

TEST(Analysis, OctahedronRelationsDescend) {
  const auto X = octahedron();
  const auto deg = degree_set(X);
  EXPECT_EQ(deg.exact, (std::vector<Rational>{0, -1}));
  const auto rel = spherical_relations(deg, X.size());
  EXPECT_EQ(rel(0, 1), 2);
  EXPECT_EQ(rel(0, 2), 1);
  const auto rep = spherical_analysis(X, 6);
  ASSERT_TRUE(rep.induced.has_value());
  EXPECT_EQ(rep.induced->classes, 2);
}

TEST(Scar, AnnihilatorIdentity) {
  const auto X = octahedron();
  const Polynomial F = Polynomial::linear_factor(0) * Polynomial::linear_factor(-1);
  const auto c = verify_scar(X, F);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.lhs_exact, 2);
  EXPECT_EQ(c.residual_exact, 0);
  EXPECT_EQ(code_of([&] { verify_scar(X, Polynomial::linear_factor(0)); }), ErrorCode::not_annihilator);

  const auto ico = read_points_file(data("icosahedron.txt"));
  const auto deg = degree_set(ico);
  // F(x) = (x + 1)(x^2 - 1/5) vanishes on {1/sqrt5, -1/sqrt5, -1}
  const Polynomial G = Polynomial::linear_factor(-1) * Polynomial{Rational(-1, 5), 0, 1};
  const auto g = verify_scar(ico, G);
  EXPECT_TRUE(g.holds);
  EXPECT_NEAR(g.lhs, 2 * 0.8, 1e-9);
  EXPECT_LE(std::abs(g.residual), g.tolerance);
  EXPECT_EQ(deg.degree(), 3);
}

TEST(Invariance, RotationsPreserveMoments) {
  // Cayley transform of a rational skew matrix is a rational rotation
  Eigen::Matrix3d K;
  K << 0, -1, 2, 1, 0, -3, -2, 3, 0;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d R = (I - K) * (I + K).inverse();
  // exact version: (I+K)^{-1} has denominator det(I+K) = 15
  std::vector<std::vector<Rational>> rotated;
  const auto oct = octahedron();
  for (int a = 0; a < 3; ++a)
    for (int sign : {1, -1}) {
      std::vector<Rational> p(3);
      for (int r = 0; r < 3; ++r) {
        const double v = sign * R(r, a) * 15;
        p[r] = Rational(static_cast<long>(std::lround(v)), 15);
        p[r].canonicalize();
      }
      rotated.push_back(p);
    }
  const auto rot = PointSet::from_rational(rotated);
  EXPECT_EQ(moments(rot, 8).exact, moments(oct, 8).exact);

  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Eigen::Matrix3d M;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) M(r, c) = g(rng);
  const Eigen::Matrix3d O = Eigen::HouseholderQR<Eigen::Matrix3d>(M).householderQ();
  std::ifstream in(data("icosahedron.txt"));
  std::vector<std::vector<double>> raw, turned;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Eigen::Vector3d v;
    ls >> v(0) >> v(1) >> v(2);
    const Eigen::Vector3d w = O * v;
    raw.push_back({v(0), v(1), v(2)});
    turned.push_back({w(0), w(1), w(2)});
  }
  ASSERT_EQ(raw.size(), 12u);
  const auto a = moments(PointSet::from_real(raw), 8);
  const auto b = moments(PointSet::from_real(turned), 8);
  for (int k = 0; k <= 8; ++k) {
    EXPECT_NEAR(a.value(k), b.value(k), 1e-8);
    EXPECT_EQ(a.is_zero(k), b.is_zero(k));
  }
}
