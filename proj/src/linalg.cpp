#include "k3bhcr/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace k3 {

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat mod1(const Rat& x) {
  Int num = x.get_num(), den = x.get_den();
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rat out(r, den);
  out.canonicalize();
  return out;
}

IMat identity_mat(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

IMat mul(const IMat& x, const IMat& y) {
  assert(x.cols == y.rows);
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; j++) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

QMat mul(const QMat& x, const QMat& y) {
  assert(x.cols == y.rows);
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; j++) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

QMat to_q(const IMat& m) {
  QMat r(m.rows, m.cols);
  for (int i = 0; i < m.rows * m.cols; i++) r.a[i] = m.a[i];
  return r;
}

IMat transpose(const IMat& m) {
  IMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) r.at(j, i) = m.at(i, j);
  return r;
}
QMat transpose(const QMat& m) {
  QMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) r.at(j, i) = m.at(i, j);
  return r;
}

Int det(const IMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; j++) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by Bareiss
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

Rat det(const QMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  QMat w = m;
  Rat result = 1;
  for (int k = 0; k < n; k++) {
    int p = -1;
    for (int i = k; i < n; i++)
      if (w.at(i, k) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; j++) std::swap(w.at(k, j), w.at(p, j));
      result = -result;
    }
    result *= w.at(k, k);
    Rat inv = 1 / w.at(k, k);
    for (int i = k + 1; i < n; i++) {
      Rat f = w.at(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < n; j++) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return result;
}

QMat invert(const QMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  QMat w = m;
  QMat inv(n, n);
  for (int i = 0; i < n; i++) inv.at(i, i) = 1;
  for (int k = 0; k < n; k++) {
    int p = -1;
    for (int i = k; i < n; i++)
      if (w.at(i, k) != 0) { p = i; break; }
    if (p < 0) throw SingularMatrix("invert: matrix is singular");
    if (p != k)
      for (int j = 0; j < n; j++) {
        std::swap(w.at(k, j), w.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = w.at(k, k);
    for (int j = 0; j < n; j++) { w.at(k, j) /= piv; inv.at(k, j) /= piv; }
    for (int i = 0; i < n; i++) {
      if (i == k || w.at(i, k) == 0) continue;
      Rat f = w.at(i, k);
      for (int j = 0; j < n; j++) {
        w.at(i, j) -= f * w.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

QMat invert(const IMat& m) { return invert(to_q(m)); }

std::vector<Rat> solve_rational(const IMat& m, const std::vector<Rat>& b) {
  assert((int)b.size() == m.rows && m.rows == m.cols);
  QMat inv = invert(m);
  std::vector<Rat> x(m.cols, Rat(0));
  for (int i = 0; i < m.cols; i++)
    for (int j = 0; j < m.rows; j++) x[i] += inv.at(i, j) * b[j];
  return x;
}

namespace {

// Row op helpers that also track the transform.
void row_swap(IMat& m, IMat& u, int i, int j) {
  for (int c = 0; c < m.cols; c++) std::swap(m.at(i, c), m.at(j, c));
  for (int c = 0; c < u.cols; c++) std::swap(u.at(i, c), u.at(j, c));
}
void row_addmul(IMat& m, IMat& u, int dst, int src, const Int& f) {
  for (int c = 0; c < m.cols; c++) m.at(dst, c) += f * m.at(src, c);
  for (int c = 0; c < u.cols; c++) u.at(dst, c) += f * u.at(src, c);
}
void row_neg(IMat& m, IMat& u, int i) {
  for (int c = 0; c < m.cols; c++) m.at(i, c) = -m.at(i, c);
  for (int c = 0; c < u.cols; c++) u.at(i, c) = -u.at(i, c);
}
void col_swap(IMat& m, IMat& v, int i, int j) {
  for (int r = 0; r < m.rows; r++) std::swap(m.at(r, i), m.at(r, j));
  for (int r = 0; r < v.rows; r++) std::swap(v.at(r, i), v.at(r, j));
}
void col_addmul(IMat& m, IMat& v, int dst, int src, const Int& f) {
  for (int r = 0; r < m.rows; r++) m.at(r, dst) += f * m.at(r, src);
  for (int r = 0; r < v.rows; r++) v.at(r, dst) += f * v.at(r, src);
}
void col_neg(IMat& m, IMat& v, int i) {
  for (int r = 0; r < m.rows; r++) m.at(r, i) = -m.at(r, i);
  for (int r = 0; r < v.rows; r++) v.at(r, i) = -v.at(r, i);
}

}  // namespace

SmithDecomposition smith_normal_form(const IMat& m) {
  SmithDecomposition s;
  s.D = m;
  s.U = identity_mat(m.rows);
  s.V = identity_mat(m.cols);
  IMat& D = s.D;
  int n = std::min(m.rows, m.cols);
  for (int k = 0; k < n; k++) {
    // Find the smallest nonzero entry in the remaining block as pivot.
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = k; i < m.rows; i++)
        for (int j = k; j < m.cols; j++) {
          if (D.at(i, j) == 0) continue;
          if (pi < 0 || cmp(abs(D.at(i, j)), abs(D.at(pi, pj))) < 0) {
            pi = i; pj = j;
          }
        }
      if (pi < 0) { pi = k; pj = k; }  // zero block: done
      if (pi != k) row_swap(D, s.U, k, pi);
      if (pj != k) col_swap(D, s.V, k, pj);
      if (D.at(k, k) == 0) break;
      bool clean = true;
      for (int i = k + 1; i < m.rows; i++) {
        if (D.at(i, k) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D.at(i, k).get_mpz_t(),
                   D.at(k, k).get_mpz_t());
        row_addmul(D, s.U, i, k, -q);
        if (D.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < m.cols; j++) {
        if (D.at(k, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D.at(k, j).get_mpz_t(),
                   D.at(k, k).get_mpz_t());
        col_addmul(D, s.V, j, k, -q);
        if (D.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility d_k | every remaining entry.
      bool divides = true;
      for (int i = k + 1; i < m.rows && divides; i++)
        for (int j = k + 1; j < m.cols && divides; j++)
          if (D.at(i, j) % D.at(k, k) != 0) {
            row_addmul(D, s.U, k, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (D.at(k, k) < 0) row_neg(D, s.U, k);
  }
  return s;
}

std::vector<Int> invariant_factors(const IMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Int> out;
  int n = std::min(m.rows, m.cols);
  for (int i = 0; i < n; i++)
    if (abs(s.D.at(i, i)) > 1) out.push_back(abs(s.D.at(i, i)));
  return out;
}

IMat hnf_columns(const IMat& m) {
  IMat h = m;
  IMat v = identity_mat(m.cols);
  int row = 0, col = 0;
  while (row < h.rows && col < h.cols) {
    // gcd accumulation across columns col..end on `row`
    for (;;) {
      int p = -1;
      for (int j = col; j < h.cols; j++) {
        if (h.at(row, j) == 0) continue;
        if (p < 0 || cmp(abs(h.at(row, j)), abs(h.at(row, p))) < 0) p = j;
      }
      if (p < 0) break;
      if (p != col) col_swap(h, v, col, p);
      bool done = true;
      for (int j = col + 1; j < h.cols; j++) {
        if (h.at(row, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(),
                   h.at(row, col).get_mpz_t());
        col_addmul(h, v, j, col, -q);
        if (h.at(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(row, col) != 0) {
      if (h.at(row, col) < 0) col_neg(h, v, col);
      // Reduce earlier columns against this pivot.
      for (int j = 0; j < col; j++) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(),
                   h.at(row, col).get_mpz_t());
        col_addmul(h, v, j, col, -q);
      }
      col++;
    }
    row++;
  }
  return h;
}

IMat primitive_extension(const std::vector<Int>& w) {
  int n = (int)w.size();
  IMat col(n, 1);
  for (int i = 0; i < n; i++) col.at(i, 0) = w[i];
  SmithDecomposition s = smith_normal_form(col);
  if (s.D.at(0, 0) != 1)
    throw NotPrimitive("primitive_extension: vector is not primitive");
  // U * w * V = e1 with V = (+-1); so (V(0,0) * U) * w = e1.
  IMat m = s.U;
  if (s.V.at(0, 0) == -1)
    for (int j = 0; j < n; j++) m.at(0, j) = -m.at(0, j);
  return m;
}

QMat lattice_with_generators(int n,
                             const std::vector<std::vector<Rat>>& gens) {
  Int L = 1;
  for (auto& g : gens)
    for (auto& x : g) L = lcm_int(L, x.get_den());
  IMat stack(n, n + (int)gens.size());
  for (int i = 0; i < n; i++) stack.at(i, i) = L;
  for (int j = 0; j < (int)gens.size(); j++)
    for (int i = 0; i < n; i++) {
      Rat scaled = gens[j][i] * Rat(L);
      assert(scaled.get_den() == 1);
      stack.at(i, n + j) = scaled.get_num();
    }
  IMat h = hnf_columns(stack);
  QMat out(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      out.at(i, j) = Rat(h.at(i, j), L);
      out.at(i, j).canonicalize();
    }
  return out;
}

}  // namespace k3
