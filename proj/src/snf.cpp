#include "pathhom/snf.hpp"

#include <algorithm>

namespace pathhom {

namespace {

Int inum(const Scalar& x) {
  Scalar y = x;
  y.canonicalize();
  internal_check(y.get_den() == 1, "NotIntegral", "integral matrix expected");
  return y.get_num();
}

void axpy_row(Mat& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += Scalar(f) * m.at(src, c);
}

void axpy_col(Mat& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += Scalar(f) * m.at(r, src);
}

void negate_row(Mat& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

void negate_col(Mat& m, int c) {
  for (int r = 0; r < m.rows(); ++r) m.at(r, c) = -m.at(r, c);
}

}  // namespace

int SmithForm::rank() const {
  int r = 0;
  for (const Int& d : diagonal)
    if (d != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const Mat& m) {
  const int rows = m.rows(), cols = m.cols();
  SmithForm out{Mat::identity(rows), m, Mat::identity(cols), {}};
  Mat& s = out.s;
  Mat& u = out.u;
  Mat& v = out.v;
  internal_check(s.is_integral(), "NotIntegral", "smith_normal_form over Z");

  const int t_max = std::min(rows, cols);
  for (int t = 0; t < t_max; ++t) {
    for (;;) {
      // Minimal |entry| pivot in the trailing block.
      int pr = -1, pc = -1;
      Int best;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c) {
          Int x = inum(s.at(r, c));
          if (x == 0) continue;
          Int ax = abs(x);
          if (pr < 0 || ax < best) { pr = r; pc = c; best = ax; }
        }
      if (pr < 0) goto done;  // trailing block is zero
      s.swap_rows(t, pr); u.swap_rows(t, pr);
      s.swap_cols(t, pc); v.swap_cols(t, pc);
      if (inum(s.at(t, t)) < 0) { negate_row(s, t); negate_row(u, t); }

      Int piv = inum(s.at(t, t));
      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        Int x = inum(s.at(r, t));
        if (x == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        axpy_row(s, r, t, -q);
        axpy_row(u, r, t, -q);
        if (inum(s.at(r, t)) != 0) clean = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        Int x = inum(s.at(t, c));
        if (x == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        axpy_col(s, c, t, -q);
        axpy_col(v, c, t, -q);
        if (inum(s.at(t, c)) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders appeared; repick pivot

      // Pivot must divide the rest of the block, otherwise pull a witness row.
      bool divides = true;
      for (int r = t + 1; r < rows && divides; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (inum(s.at(r, c)) % piv != 0) {
            axpy_row(s, t, r, Int(1));
            axpy_row(u, t, r, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:

  // Collect, canonicalize signs, and enforce the divisibility chain.
  std::vector<Int> d;
  for (int t = 0; t < t_max; ++t) d.push_back(inum(s.at(t, t)));
  for (;;) {
    bool fixed = true;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] == 0) continue;
      if (d[i] == 0 || d[i + 1] % d[i] != 0) {
        // 2x2 repair: replace (a, b) by (gcd, lcm) with matching u, v updates.
        int ii = int(i);
        Int a = d[i], b = d[i + 1];
        if (a == 0) {
          s.swap_rows(ii, ii + 1); u.swap_rows(ii, ii + 1);
          s.swap_cols(ii, ii + 1); v.swap_cols(ii, ii + 1);
          std::swap(d[i], d[i + 1]);
          fixed = false;
          continue;
        }
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int l = a / g * b;
        // col(ii) += col(ii+1); then clear via row/col steps with known gcd.
        axpy_col(s, ii, ii + 1, Int(1));
        axpy_col(v, ii, ii + 1, Int(1));
        // s now has [[a,0],[b,b]] in the 2x2 corner.
        axpy_row(s, ii, ii + 1, y);  // row ii: [a + y b, y b]
        axpy_row(u, ii, ii + 1, y);
        // With x*a + y*b = g: row reduce to make corner g.
        // s(ii,ii) = a + y*b, s(ii,ii+1) = y*b;   s(ii+1,ii) = b, s(ii+1,ii+1) = b.
        // Subtract multiples to reach [[g, *],[*, *]] then clean by steps below.
        for (int pass = 0; pass < 64; ++pass) {
          Int a00 = inum(s.at(ii, ii)), a10 = inum(s.at(ii + 1, ii));
          if (a10 == 0) break;
          if (a00 == 0 || (a10 != 0 && abs(a10) < abs(a00))) {
            s.swap_rows(ii, ii + 1); u.swap_rows(ii, ii + 1);
            continue;
          }
          Int q;
          Int na00 = a00, na10 = a10;
          mpz_fdiv_q(q.get_mpz_t(), na00.get_mpz_t(), na10.get_mpz_t());
          // reduce row ii by row ii+1
          axpy_row(s, ii, ii + 1, -q);
          axpy_row(u, ii, ii + 1, -q);
          s.swap_rows(ii, ii + 1); u.swap_rows(ii, ii + 1);
        }
        if (inum(s.at(ii, ii)) < 0) { negate_row(s, ii); negate_row(u, ii); }
        // Clear the rest of the 2x2 corner.
        {
          Int p = inum(s.at(ii, ii));
          Int r10 = inum(s.at(ii + 1, ii));
          internal_check(r10 % p == 0, "SnfRepair", "corner gcd step");
          axpy_row(s, ii + 1, ii, -(r10 / p));
          axpy_row(u, ii + 1, ii, -(r10 / p));
          Int c01 = inum(s.at(ii, ii + 1));
          internal_check(c01 % p == 0, "SnfRepair", "corner col step");
          axpy_col(s, ii + 1, ii, -(c01 / p));
          axpy_col(v, ii + 1, ii, -(c01 / p));
          if (inum(s.at(ii + 1, ii + 1)) < 0) { negate_row(s, ii + 1); negate_row(u, ii + 1); }
          d[i] = inum(s.at(ii, ii));
          d[i + 1] = inum(s.at(ii + 1, ii + 1));
          internal_check(d[i] == g && d[i + 1] == abs(l), "SnfRepair",
                         "gcd/lcm repair did not converge");
        }
        fixed = false;
      }
    }
    if (fixed) break;
  }
  // Move zeros to the end (they already are, zeros only arise past the rank).
  out.diagonal = d;
  internal_check(out.u * m * out.v == out.s, "SnfVerify", "U*M*V != S");
  return out;
}

HermiteForm column_hermite(const Mat& m) {
  HermiteForm out{m, Mat::identity(m.cols())};
  Mat& h = out.h;
  Mat& t = out.t;
  internal_check(h.is_integral(), "NotIntegral", "column_hermite over Z");
  int c0 = 0;
  for (int r = 0; r < m.rows() && c0 < m.cols(); ++r) {
    // Reduce row r across columns c0.. to a single nonzero entry via gcd steps.
    for (;;) {
      int best = -1;
      Int bv;
      for (int c = c0; c < m.cols(); ++c) {
        Int x = inum(h.at(r, c));
        if (x == 0) continue;
        Int ax = abs(x);
        if (best < 0 || ax < bv) { best = c; bv = ax; }
      }
      if (best < 0) break;
      h.swap_cols(c0, best);
      t.swap_cols(c0, best);
      Int piv = inum(h.at(r, c0));
      bool clean = true;
      for (int c = c0 + 1; c < m.cols(); ++c) {
        Int x = inum(h.at(r, c));
        if (x == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        axpy_col(h, c, c0, -q);
        axpy_col(t, c, c0, -q);
        if (inum(h.at(r, c)) != 0) clean = false;
      }
      if (clean) {
        if (inum(h.at(r, c0)) < 0) { negate_col(h, c0); negate_col(t, c0); }
        ++c0;
        break;
      }
    }
  }
  return out;
}

Scalar determinant(const Mat& m) {
  internal_check(m.rows() == m.cols(), "ShapeMismatch", "determinant of non-square");
  int n = m.rows();
  if (n == 0) return Scalar(1);
  Mat w = m;
  Scalar det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (w.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return Scalar(0);
    if (piv != c) { w.swap_rows(c, piv); det = -det; }
    det *= w.at(c, c);
    Scalar inv = 1 / w.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (w.at(r, c) == 0) continue;
      Scalar f = w.at(r, c) * inv;
      for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
    }
  }
  det.canonicalize();
  return det;
}

}  // namespace pathhom
