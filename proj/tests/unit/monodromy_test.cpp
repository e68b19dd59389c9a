#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/monodromy.hpp"

using jacobi::ComplexApprox;
using jacobi::JacobiPencil;
using jacobi::Permutation;
using jacobi::Rational;

namespace {

bool near(ComplexApprox x, ComplexApprox y, double tol = 1e-9) { return std::abs(x - y) < tol; }

bool is_transposition(const Permutation& p) {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < p.size(); ++i) moved += p[i] != i;
  return moved == 2;
}

}  // namespace

TEST(Monodromy, Compose) {
  const Permutation x{1, 0, 2};
  const Permutation y{0, 2, 1};
  // first x then y: 0 -> 1 -> 2
  EXPECT_EQ(jacobi::compose(x, y), (Permutation{2, 0, 1}));
  EXPECT_TRUE(jacobi::is_identity(jacobi::compose(x, x)));
  EXPECT_FALSE(jacobi::is_identity(x));
}

// 2x2: discriminant (a1 - a2)^2 + 4 b1^2 w^2 vanishes at w = +-i (a1 - a2) / (2 b1).
TEST(Monodromy, TwoByTwoBranchPoints) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 20; ++i) {
    const JacobiPencil p = gen::pencil(rng, 2, {9, true, true});
    const double a1 = p.a(1).to_double(), a2 = p.a(2).to_double(), b1 = p.b(1).to_double();
    const double y = std::abs((a1 - a2) / (2 * b1));
    const auto bp = jacobi::branch_points(p);
    ASSERT_EQ(bp.size(), 2u);
    EXPECT_TRUE(near(bp[0], {0, -y}));
    EXPECT_TRUE(near(bp[1], {0, y}));
  }
}

TEST(Monodromy, TwoByTwoGroup) {
  const JacobiPencil p({0, 1}, {1});
  const auto r = jacobi::monodromy_group(p);
  ASSERT_EQ(r.permutations.size(), 2u);
  for (const auto& g : r.permutations) EXPECT_TRUE(is_transposition(g));
  EXPECT_EQ(r.group_order, 2u);
  EXPECT_EQ(r.orbits.size(), 1u);
  EXPECT_GE(r.certified_step, 3.0);
  EXPECT_TRUE(r.labels_are_sites);
}

TEST(Monodromy, EqualDiagonalHasTrivialMonodromy) {
  const JacobiPencil p({0, 0}, {1});
  const auto r = jacobi::monodromy_group(p);
  ASSERT_EQ(r.branch_points.size(), 1u);
  EXPECT_TRUE(near(r.branch_points[0], {0, 0}));
  ASSERT_EQ(r.permutations.size(), 1u);
  EXPECT_TRUE(jacobi::is_identity(r.permutations[0]));
  EXPECT_EQ(r.orbits, (std::vector<std::vector<std::size_t>>{{1}, {2}}));
}

TEST(Monodromy, RejectsSizeOne) {
  EXPECT_THROW(jacobi::branch_points(JacobiPencil({3}, {})), jacobi::UnsupportedError);
  EXPECT_THROW(jacobi::monodromy_group(JacobiPencil({3}, {})), jacobi::UnsupportedError);
}

TEST(Monodromy, GenericDegreeThreeIsFullSymmetric) {
  const auto r = jacobi::monodromy_group(JacobiPencil({0, 1, 5}, {1, 1}));
  EXPECT_EQ(r.group_order, 6u);
  EXPECT_EQ(r.orbits.size(), 1u);
  ASSERT_TRUE(r.infinity_consistent.has_value());
  EXPECT_TRUE(*r.infinity_consistent);
}

TEST(Monodromy, ConstantBranchIsFixedSheet) {
  const auto r = jacobi::monodromy_group(JacobiPencil({0, 1, 2}, {1, 1}));
  ASSERT_TRUE(r.labels_are_sites);
  EXPECT_EQ(r.orbits, (std::vector<std::vector<std::size_t>>{{1, 3}, {2}}));
  EXPECT_EQ(jacobi::orbit_factor_degrees(r), (std::vector<std::size_t>{1, 2}));
}

TEST(Monodromy, SmallLoops) {
  const JacobiPencil p({0, 1}, {1});
  EXPECT_TRUE(is_transposition(jacobi::track_loop(p, {0, 0.5}, 0.1)));
  EXPECT_TRUE(jacobi::is_identity(jacobi::track_loop(p, {2, 0}, 0.2)));
  EXPECT_THROW(jacobi::track_loop(p, {0, 0.55}, 0.051), std::invalid_argument);
}

// Branch points are symmetric under w -> -w.
TEST(Monodromy, GenericBranchPointsAreSimple) {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 6; ++i) {
    const JacobiPencil p = gen::pencil(rng, 4, {9, true, true});
    const auto r = jacobi::monodromy_group(p);
    for (const auto& g : r.permutations) EXPECT_TRUE(is_transposition(g)) << p.str();
    EXPECT_EQ(r.branch_points.size() % 2, 0u);
    EXPECT_EQ(r.orbits.size(), 1u);
  }
}

TEST(Monodromy, PalindromeSplitsIntoTwoOrbits) {
  const auto r = jacobi::monodromy_group(JacobiPencil({0, 1, 1, 0}, {1, 2, 1}));
  EXPECT_EQ(jacobi::orbit_factor_degrees(r), (std::vector<std::size_t>{2, 2}));
}

TEST(Monodromy, BasePointOutsideBranchPoints) {
  const auto r = jacobi::monodromy_group(JacobiPencil({0, 3, -2, 5}, {2, -1, 3}));
  ASSERT_EQ(r.radii.size(), r.branch_points.size());
  for (std::size_t i = 0; i < r.branch_points.size(); ++i) {
    EXPECT_GT(std::abs(r.base_point), std::abs(r.branch_points[i]));
    for (std::size_t j = 0; j < r.branch_points.size(); ++j) {
      if (i != j) {
        EXPECT_LT(r.radii[i], std::abs(r.branch_points[i] - r.branch_points[j]) / 2);
      }
    }
  }
}
