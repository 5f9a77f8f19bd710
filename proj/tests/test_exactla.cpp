#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "psrank/exactla.hpp"

using namespace psrank;

namespace {

Matrix<Rational> from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = Rational(rows[r][c]);
  return m;
}

Matrix<Rational> random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  Matrix<Rational> m(rows, cols);
  for (auto& x : m.a) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return m;
}

std::vector<Rational> mat_apply(const Matrix<Rational>& A, const std::vector<Rational>& x) {
  std::vector<Rational> y(A.rows, Rational(0));
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) y[r] += A.at(r, c) * x[c];
  return y;
}

}  // namespace

TEST_CASE("rref rank and pivots on a fixed matrix") {
  Matrix<Rational> m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto [red, info] = rref(m);
  CHECK(info.rank == 2);
  CHECK(info.pivot_cols == std::vector<int>{0, 1});
  CHECK(rank(m) == 2);
  // reduced rows start with a unit pivot
  CHECK(red.at(0, 0) == Rational(1));
  CHECK(red.at(1, 1) == Rational(1));
  CHECK(red.at(2, 0) == Rational(0));
}

TEST_CASE("solve returns the free-variables-zero solution") {
  Matrix<Rational> A = from_rows({{1, 2, 1}, {0, 0, 1}});
  std::vector<Rational> b{Rational(3), Rational(1)};
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)[1] == Rational(0));  // free column stays zero
  CHECK(mat_apply(A, *x) == b);

  Matrix<Rational> bad = from_rows({{1, 1}, {1, 1}});
  CHECK(!solve(bad, {Rational(0), Rational(1)}));
  CHECK_THROWS_AS(solve(bad, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("kernel basis spans the kernel") {
  Matrix<Rational> A = from_rows({{1, 2, 3}});
  auto basis = kernel_basis(A);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    auto img = mat_apply(A, v);
    for (const auto& y : img) CHECK(is_zero(y));
  }
}

TEST_CASE("span membership") {
  std::vector<std::vector<Rational>> rows = {{Rational(1), Rational(0), Rational(1)},
                                             {Rational(0), Rational(1), Rational(1)}};
  CHECK(in_span(rows, {Rational(2), Rational(3), Rational(5)}));
  CHECK(!in_span(rows, {Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("Gaussian rational elimination") {
  GaussianRational i = GaussianRational::unit_i();
  Matrix<GaussianRational> m(2, 2);
  m.at(0, 0) = GaussianRational(1);
  m.at(0, 1) = i;
  m.at(1, 0) = i;
  m.at(1, 1) = GaussianRational(-1);  // second row = i * first row
  CHECK(rank(m) == 1);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] * GaussianRational(1) + basis[0][1] * i == GaussianRational(0));
}

TEST_CASE("randomized rank-nullity and solve consistency") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    Matrix<Rational> A = random_matrix(rows, cols, rng);
    int r = rank(A);
    auto basis = kernel_basis(A);
    CHECK(r + static_cast<int>(basis.size()) == cols);
    for (const auto& v : basis) {
      auto img = mat_apply(A, v);
      for (const auto& y : img) CHECK(is_zero(y));
    }
    // b in the column space: solve must succeed and satisfy the system
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = Rational(static_cast<long>(rng() % 7) - 3);
    auto b = mat_apply(A, x0);
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(mat_apply(A, *x) == b);
  }
}

TEST_CASE("rank is invariant under transpose") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    Matrix<Rational> a = random_matrix(r, c, rng);
    Matrix<Rational> at(c, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) at.at(j, i) = a.at(i, j);
    CHECK(rank(a) == rank(at));
  }
}
