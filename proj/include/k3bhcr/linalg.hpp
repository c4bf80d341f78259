#pragma once
// Exact integer / rational linear algebra on small dense matrices.
// All arithmetic is arbitrary precision (GMP); no floating point anywhere.

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

using Int = mpz_class;
using Rat = mpq_class;

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& m) : std::runtime_error(m) {}
};
struct NotPrimitive : std::runtime_error {
  explicit NotPrimitive(const std::string& m) : std::runtime_error(m) {}
};

// Row-major dense matrices.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;
  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(r * c, 0) {}
  Int& at(int i, int j) { return a[i * cols + j]; }
  const Int& at(int i, int j) const { return a[i * cols + j]; }
  bool operator==(const IMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(r * c, 0) {}
  Rat& at(int i, int j) { return a[i * cols + j]; }
  const Rat& at(int i, int j) const { return a[i * cols + j]; }
  bool operator==(const QMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IMat identity_mat(int n);
IMat mul(const IMat& x, const IMat& y);
QMat mul(const QMat& x, const QMat& y);
QMat to_q(const IMat& m);
IMat transpose(const IMat& m);
QMat transpose(const QMat& m);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IMat& m);
Rat det(const QMat& m);

// Exact inverse; throws SingularMatrix.
QMat invert(const IMat& m);
QMat invert(const QMat& m);

// Solve m x = b exactly; throws SingularMatrix.
std::vector<Rat> solve_rational(const IMat& m, const std::vector<Rat>& b);

// Smith normal form: U * A * V = D with U, V unimodular, D diagonal with
// non-negative entries d1 | d2 | ... .
struct SmithDecomposition {
  IMat U, D, V;
};
SmithDecomposition smith_normal_form(const IMat& m);

// Invariant factors > 1 of coker(A : Z^c -> Z^r) for square full-rank A.
std::vector<Int> invariant_factors(const IMat& m);

// Column-style Hermite normal form of a full-column-rank integer matrix:
// returns H = m * U (U unimodular), H lower triangular with positive
// diagonal and entries to the left of each pivot reduced mod the pivot.
// Canonical generator matrix for the column lattice.
IMat hnf_columns(const IMat& m);

// Unimodular M with M * w = e1 (w a primitive integer vector);
// throws NotPrimitive if gcd(w) != 1.
IMat primitive_extension(const std::vector<Int>& w);

// Basis (as columns of a QMat, n x n) of the lattice generated by Z^n
// together with the given rational columns. Canonical via HNF.
QMat lattice_with_generators(int n, const std::vector<std::vector<Rat>>& gens);

Int lcm_int(const Int& a, const Int& b);
Int gcd_int(const Int& a, const Int& b);

// x mod 1, in [0,1).
Rat mod1(const Rat& x);

}  // namespace k3
