#include <random>

#include <gtest/gtest.h>

#include "nilorb/errors.hpp"
#include "nilorb/exact_linalg.hpp"
#include "test_util.hpp"

using namespace nilorb;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

void expect_hermite_shape(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (h.row_is_zero(r)) {
      seen_zero_row = true;
      continue;
    }
    ASSERT_FALSE(seen_zero_row) << "nonzero row below a zero row";
    std::size_t c = 0;
    while (h(r, c) == 0) ++c;
    if (r > 0) EXPECT_GT(c, last_pivot_col);
    EXPECT_GT(h(r, c), 0);
    for (std::size_t above = 0; above < r; ++above) {
      EXPECT_GE(h(above, c), 0);
      EXPECT_LT(h(above, c), h(r, c));
    }
    last_pivot_col = c;
  }
}

}  // namespace

TEST(Hermite, KnownExample) {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto [h, u] = hermite_normal_form(m);
  IntMatrix expected{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}};
  EXPECT_EQ(h, expected) << h.to_string();
  EXPECT_EQ(u * m, h);
}

TEST(Hermite, RandomMatricesAreUnimodularAndEchelon) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    IntMatrix m = random_matrix(rng, rows, cols, 12);
    auto [h, u] = hermite_normal_form(m);
    ASSERT_EQ(u * m, h);
    Integer det = oracle::bareiss_determinant(u);
    EXPECT_TRUE(det == 1 || det == -1) << "det(u) = " << det;
    expect_hermite_shape(h);
  }
}

TEST(Hermite, IsCanonicalUnderRowOperations) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 5, 7);
    IntMatrix shuffled = m;
    for (std::size_t c = 0; c < 5; ++c) {
      std::swap(shuffled(0, c), shuffled(3, c));
      shuffled(1, c) += 3 * shuffled(2, c);
      shuffled(2, c) = -shuffled(2, c);
    }
    EXPECT_EQ(hermite_normal_form(m).h, hermite_normal_form(shuffled).h);
  }
}

TEST(Kernel, SingleRow) {
  auto k = kernel_lattice(IntMatrix{{1, 2, 3}});
  EXPECT_EQ(k.rank(), 2u);
  EXPECT_TRUE(lattice_contains(k, to_int_vector({-2, 1, 0})));
  EXPECT_TRUE(lattice_contains(k, to_int_vector({-3, 0, 1})));
  EXPECT_FALSE(lattice_contains(k, to_int_vector({1, 1, 1})));
}

TEST(Kernel, IsSaturated) {
  // 2x = 2y has kernel spanned by (1,1), not (2,2).
  auto k = kernel_lattice(IntMatrix{{2, -2}});
  ASSERT_EQ(k.rank(), 1u);
  EXPECT_TRUE(lattice_contains(k, to_int_vector({1, 1})));
}

TEST(Kernel, FullRankSquareHasTrivialKernel) {
  auto k = kernel_lattice(IntMatrix{{2, 1}, {1, 1}});
  EXPECT_EQ(k.rank(), 0u);
  EXPECT_TRUE(lattice_contains(k, to_int_vector({0, 0})));
  EXPECT_FALSE(lattice_contains(k, to_int_vector({1, 0})));
}

TEST(Kernel, HugeEntriesDoNotOverflow) {
  IntMatrix m(1, 2);
  m(0, 0) = Integer("1000000000000000000000000000000");
  m(0, 1) = 1;
  auto k = kernel_lattice(m);
  ASSERT_EQ(k.rank(), 1u);
  IntVector v{Integer(1), -Integer("1000000000000000000000000000000")};
  EXPECT_TRUE(lattice_contains(k, v));
}

TEST(Kernel, VectorsAnnihilatedAndRankMatchesDeterminantOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 3);
    auto k = kernel_lattice(m);
    for (const auto& v : k.vectors())
      for (const auto& x : multiply(m, v)) EXPECT_EQ(x, 0);
    EXPECT_EQ(k.rank() == 0, oracle::bareiss_determinant(m) != 0);
  }
}

TEST(Lattice, CoefficientsReconstructVector) {
  std::vector<IntVector> gens{to_int_vector({2, 0, 4}), to_int_vector({0, 3, 3}), to_int_vector({2, 3, 7})};
  auto b = LatticeBasis::from_generators(3, gens);
  EXPECT_EQ(b.rank(), 2u);
  IntVector v = to_int_vector({4, -6, 2});
  auto c = lattice_contains(b, v);
  ASSERT_TRUE(c);
  EXPECT_EQ(combine(b, *c), v);
  EXPECT_FALSE(lattice_contains(b, to_int_vector({1, 0, 2})));
}

TEST(Lattice, EqualLatticesCompareEqual) {
  std::vector<IntVector> a{to_int_vector({1, 1}), to_int_vector({1, -1})};
  std::vector<IntVector> b{to_int_vector({2, 0}), to_int_vector({1, 1}), to_int_vector({3, 1})};
  EXPECT_EQ(LatticeBasis::from_generators(2, a), LatticeBasis::from_generators(2, b));
}

TEST(Lattice, WrongLengthThrows) {
  auto b = kernel_lattice(IntMatrix{{1, 1, 1}});
  EXPECT_THROW(lattice_contains(b, to_int_vector({1, -1})), InputError);
}

TEST(Matrix, RaggedRowsThrow) {
  std::vector<IntVector> rows{to_int_vector({1, 2}), to_int_vector({1})};
  EXPECT_THROW(IntMatrix::from_rows(rows), InputError);
}

TEST(Arithmetic, FloorDivRoundsDown) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(-8, 2), -4);
}
