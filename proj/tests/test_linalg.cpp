#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3bhcr/linalg.hpp"

using namespace k3;

static IMat from_rows(const std::vector<std::vector<long>>& rows) {
  IMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("determinant and inverse of diagonal exponent matrix") {
  IMat a = from_rows({{2, 0, 0, 0}, {0, 6, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 6}});
  CHECK(det(a) == 432);
  QMat inv = invert(a);
  CHECK(inv.at(0, 0) == Rat(1, 2));
  CHECK(inv.at(1, 1) == Rat(1, 6));
  CHECK(inv.at(3, 2) == 0);
  QMat prod = mul(inv, to_q(a));
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) CHECK(prod.at(i, j) == Rat(i == j ? 1 : 0));
}

TEST_CASE("determinant with negatives and zero determinant") {
  IMat a = from_rows({{2, 1}, {1, 1}});
  CHECK(det(a) == 1);
  IMat b = from_rows({{1, 2}, {2, 4}});
  CHECK(det(b) == 0);
  CHECK_THROWS_AS(invert(b), SingularMatrix);
}

TEST_CASE("solve_rational recovers charges of a chain matrix") {
  // x^2 - y^3 z - z^9 w - w^10 exponent matrix
  IMat a = from_rows(
      {{2, 0, 0, 0}, {0, 3, 1, 0}, {0, 0, 9, 1}, {0, 0, 0, 10}});
  std::vector<Rat> e(4, Rat(1));
  auto q = solve_rational(a, e);
  CHECK(q[0] == Rat(1, 2));
  CHECK(q[3] == Rat(1, 10));
  CHECK(q[2] == Rat(1, 10));
  CHECK(q[1] == Rat(3, 10));
}

TEST_CASE("smith normal form basics") {
  IMat a = from_rows({{2, 4}, {6, 8}});
  auto s = smith_normal_form(a);
  CHECK(s.D.at(0, 0) == 2);
  CHECK(s.D.at(1, 1) == 4);
  CHECK(mul(mul(s.U, a), s.V) == s.D);
  auto inv = invariant_factors(a);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 4);
}

TEST_CASE("smith normal form randomized property test") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
  for (int trial = 0; trial < 1000; trial++) {
    int r = dim(rng), c = dim(rng);
    IMat a(r, c);
    for (auto& x : a.a) x = val(rng);
    auto s = smith_normal_form(a);
    CHECK(mul(mul(s.U, a), s.V) == s.D);
    Int du = det(s.U), dv = det(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Int prev = 0;
    for (int i = 0; i < std::min(r, c); i++) {
      Int d = s.D.at(i, i);
      CHECK(d >= 0);
      if (prev != 0) CHECK((d == 0 || d % prev == 0));
      prev = d;
    }
    for (int i = 0; i < r; i++)
      for (int j = 0; j < c; j++)
        if (i != j) CHECK(s.D.at(i, j) == 0);
  }
}

TEST_CASE("primitive_extension maps w to e1") {
  std::vector<Int> w = {3, 1, 1, 1};
  IMat m = primitive_extension(w);
  Int d = det(m);
  CHECK((d == 1 || d == -1));
  for (int i = 0; i < 4; i++) {
    Int acc = 0;
    for (int j = 0; j < 4; j++) acc += m.at(i, j) * w[j];
    CHECK(acc == (i == 0 ? 1 : 0));
  }
  CHECK_THROWS_AS(primitive_extension(std::vector<Int>{2, 4, 6}),
                  NotPrimitive);
}

TEST_CASE("hnf_columns is canonical for the column lattice") {
  IMat a = from_rows({{2, 1}, {0, 3}});
  IMat b = from_rows({{1, 2}, {3, 0}});  // same lattice, permuted/combined
  IMat ha = hnf_columns(a);
  IMat hb = hnf_columns(b);
  CHECK(ha == hb);
  CHECK(det(ha) == 6);
}

TEST_CASE("lattice_with_generators") {
  // Z^2 + Z(1/2,1/2): index 2 overlattice
  QMat basis =
      lattice_with_generators(2, {{Rat(1, 2), Rat(1, 2)}});
  Rat d = det(basis);
  CHECK((d == Rat(1, 2) || d == Rat(-1, 2)));
  // Z^2 + Z(1/3,0) + Z(0,1/3)
  QMat b2 = lattice_with_generators(2, {{Rat(1, 3), 0}, {0, Rat(1, 3)}});
  Rat d2 = det(b2);
  CHECK((d2 == Rat(1, 9) || d2 == Rat(-1, 9)));
}

TEST_CASE("mod1") {
  CHECK(mod1(Rat(7, 3)) == Rat(1, 3));
  CHECK(mod1(Rat(-1, 4)) == Rat(3, 4));
  CHECK(mod1(Rat(2)) == 0);
}
