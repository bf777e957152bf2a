#include <doctest.h>

#include <random>

#include "intrep/matrix.hpp"

using namespace intrep;
using QMat = Matrix<RationalField>;
using PMat = Matrix<PrimeField>;

TEST_CASE("rank basics") {
  RationalField q;
  CHECK(rank(QMat::identity(q, 3)) == 3);
  CHECK(rank(QMat(q, 5, 0)) == 0);
  CHECK(rank(QMat(q, 0, 5)) == 0);

  auto A = QMat::from_int_rows(q, 2, 2, {{1, 1}, {2, 1}});
  CHECK(rank(A) == 2);
  auto B = QMat::from_int_rows(q, 2, 2, {{1, 1}, {1, 1}});
  CHECK(rank(B) == 1);
}

TEST_CASE("rank with rational entries") {
  RationalField q;
  QMat A(q, 2, 3);
  A.at(0, 0) = q.parse("1/2");
  A.at(0, 1) = q.parse("1/3");
  A.at(0, 2) = q.parse("1/6");
  A.at(1, 0) = q.parse("3/2");
  A.at(1, 1) = q.parse("1");
  A.at(1, 2) = q.parse("1/3");
  CHECK(rank(A) == 2);
  // A proportional second row collapses the rank.
  QMat B = A;
  for (int j = 0; j < 3; ++j) B.at(1, j) = q.mul(A.at(0, j), q.from_int(3));
  CHECK(rank(B) == 1);
}

TEST_CASE("prime field arithmetic and rank") {
  PrimeField f7(7);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.mul(f7.inv(3), 3) == 1);
  CHECK_THROWS_AS(PrimeField(6), ParseError);

  PMat A(f7, 2, 2);
  A.at(0, 0) = 1;
  A.at(0, 1) = 3;
  A.at(1, 0) = 2;
  A.at(1, 1) = 6;  // second row = 2 * first mod 7
  CHECK(rank(A) == 1);
}

TEST_CASE("block_assemble") {
  RationalField q;
  auto blk = QMat::from_int_rows(q, 2, 2, {{1, 2}, {3, 4}});
  SUBCASE("single block") {
    auto out = block_assemble(q, BlockLayout{{2}, {2}}, {{{0, 0}, blk}});
    CHECK(out == blk);
  }
  SUBCASE("stacked column") {
    auto a = QMat::from_int_rows(q, 1, 1, {{5}});
    auto b = QMat::from_int_rows(q, 1, 1, {{6}});
    auto out = block_assemble(q, BlockLayout{{1, 1}, {1}},
                              {{{0, 0}, a}, {{1, 0}, b}});
    CHECK(out.rows() == 2);
    CHECK(out.cols() == 1);
    CHECK(out.at(0, 0) == q.from_int(5));
    CHECK(out.at(1, 0) == q.from_int(6));
  }
  SUBCASE("zero-width column block vanishes") {
    auto empty = QMat(q, 2, 0);
    auto out = block_assemble(q, BlockLayout{{2}, {0, 2}},
                              {{{0, 0}, empty}, {{0, 1}, blk}});
    CHECK(out == blk);
    CHECK(rank(out) == rank(blk));
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(block_assemble(q, BlockLayout{{1}, {2}}, {{{0, 0}, blk}}),
                    ShapeMismatch);
  }
}

TEST_CASE("kernel_basis") {
  RationalField q;
  auto K0 = kernel_basis(QMat(q, 2, 2));
  CHECK(K0.cols() == 2);
  CHECK(rank(K0) == 2);

  CHECK(kernel_basis(QMat::identity(q, 3)).cols() == 0);

  auto A = QMat::from_int_rows(q, 1, 2, {{1, 1}});
  auto K = kernel_basis(A);
  REQUIRE(K.cols() == 1);
  CHECK((A * K).is_zero());
  CHECK(q.eq(K.at(0, 0), q.neg(K.at(1, 0))));
}

TEST_CASE("cokernel_projection") {
  RationalField q;
  auto Q0 = cokernel_projection(QMat(q, 3, 2));
  CHECK(Q0 == QMat::identity(q, 3));

  CHECK(cokernel_projection(QMat::identity(q, 3)).rows() == 0);

  auto col = QMat::from_int_rows(q, 2, 1, {{1}, {1}});
  auto Q1 = cokernel_projection(col);
  REQUIRE(Q1.rows() == 1);
  CHECK((Q1 * col).is_zero());
  CHECK(q.eq(Q1.at(0, 0), q.neg(Q1.at(0, 1))));
}

TEST_CASE("rank/kernel/cokernel dimension laws on random matrices") {
  std::mt19937_64 rng(5);
  RationalField q;
  std::uniform_int_distribution<int> dim(0, 5), entry(-4, 4);
  for (int t = 0; t < 60; ++t) {
    int m = dim(rng), n = dim(rng);
    QMat A(q, m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = q.from_int(entry(rng));
    int r = rank(A);
    CHECK(r == rank(A.transpose()));
    auto K = kernel_basis(A);
    CHECK(K.cols() == n - r);
    CHECK((A * K).is_zero());
    auto C = cokernel_projection(A);
    CHECK(C.rows() == m - r);
    CHECK((C * A).is_zero());
    CHECK(rank(C) == m - r);

    // Block-diagonal rank adds up.
    auto D = block_assemble(q, BlockLayout{{m, m}, {n, n}},
                            {{{0, 0}, A}, {{1, 1}, A}});
    CHECK(rank(D) == 2 * r);
  }
}

TEST_CASE("rational and prime ranks agree on small integer matrices") {
  std::mt19937_64 rng(9);
  RationalField q;
  PrimeField fp(2147483647);  // 2^31 - 1
  std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
  for (int t = 0; t < 60; ++t) {
    int m = dim(rng), n = dim(rng);
    QMat A(q, m, n);
    PMat B(fp, m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        int v = entry(rng);
        A.at(i, j) = q.from_int(v);
        B.at(i, j) = fp.from_int(v);
      }
    CHECK(rank(A) == rank(B));
  }
}
