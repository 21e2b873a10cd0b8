#include "pathhom/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "pathhom/snf.hpp"

namespace pathhom {

Ring Ring::Fp(unsigned long p) {
  require(is_prime(p), "ValidationError", "modulus " + std::to_string(p) + " is not prime");
  return {RingKind::PrimeField, p};
}

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(p);
  }
  return "?";
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int mod_inverse(const Int& a, const Int& p) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  internal_check(g == 1, "NotInvertible", "element not invertible mod p");
  Int r = s % p;
  if (r < 0) r += p;
  return r;
}

Scalar RingOps::canon(const Scalar& x) const {
  Scalar y = x;
  y.canonicalize();
  if (ring.kind == RingKind::PrimeField) {
    Int p(ring.p);
    Int num = y.get_num() % p;
    if (num < 0) num += p;
    Int den = y.get_den() % p;
    if (den < 0) den += p;
    if (den != 1) num = (num * mod_inverse(den, p)) % p;
    return Scalar(num);
  }
  if (ring.kind == RingKind::Integers)
    internal_check(y.get_den() == 1, "NotIntegral", "non-integral scalar over Z");
  return y;
}

Scalar RingOps::div(const Scalar& a, const Scalar& b) const {
  internal_check(!is_zero(b), "DivisionByZero", "division by zero");
  if (ring.kind == RingKind::PrimeField) return mul(a, inv(b));
  Scalar q = a / b;
  q.canonicalize();
  if (ring.kind == RingKind::Integers)
    internal_check(q.get_den() == 1, "NotExactDivision", "inexact division over Z");
  return q;
}

Scalar RingOps::inv(const Scalar& a) const {
  internal_check(!is_zero(a), "DivisionByZero", "inverse of zero");
  if (ring.kind == RingKind::PrimeField) {
    Int p(ring.p);
    return Scalar(mod_inverse(canon(a).get_num(), p));
  }
  if (ring.kind == RingKind::Integers)
    internal_check(a == 1 || a == -1, "NotInvertible", "non-unit inverse over Z");
  Scalar r = 1 / a;
  r.canonicalize();
  return r;
}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.resize(size_t(rows_) * cols_);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (long x : row) at(r, c++) = Scalar(x);
    ++r;
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::col_vector(const std::vector<Scalar>& v) {
  Mat m(int(v.size()), 1);
  for (int i = 0; i < int(v.size()); ++i) m.at(i, 0) = v[i];
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  internal_check(cols_ == rhs.rows_, "ShapeMismatch", "matrix product shape");
  Mat out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c)
        if (rhs.at(k, c) != 0) out.at(r, c) += x * rhs.at(k, c);
    }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  internal_check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "ShapeMismatch", "matrix sum shape");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  internal_check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "ShapeMismatch", "matrix diff shape");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

bool Mat::operator==(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != rhs.a_[i]) return false;
  return true;
}

Mat Mat::col(int c) const {
  Mat out(rows_, 1);
  for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
  return out;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
  Mat out(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int r = 0; r < rows_; ++r) out.at(r, j) = at(r, idx[j]);
  return out;
}

Mat Mat::rows_subset(const std::vector<int>& idx) const {
  Mat out(int(idx.size()), cols_);
  for (int i = 0; i < int(idx.size()); ++i)
    for (int c = 0; c < cols_; ++c) out.at(i, c) = at(idx[i], c);
  return out;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  internal_check(a.rows_ == b.rows_, "ShapeMismatch", "hcat rows");
  Mat out(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
  }
  return out;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
  internal_check(a.cols_ == b.cols_, "ShapeMismatch", "vcat cols");
  Mat out(a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) out.at(a.rows_ + r, c) = b.at(r, c);
  return out;
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_integral() const {
  for (const auto& x : a_) {
    Scalar y = x;
    y.canonicalize();
    if (y.get_den() != 1) return false;
  }
  return true;
}

Mat Mat::kronecker(const Mat& a, const Mat& b) {
  Mat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int ra = 0; ra < a.rows_; ++ra)
    for (int ca = 0; ca < a.cols_; ++ca) {
      if (a.at(ra, ca) == 0) continue;
      for (int rb = 0; rb < b.rows_; ++rb)
        for (int cb = 0; cb < b.cols_; ++cb)
          out.at(ra * b.rows_ + rb, ca * b.cols_ + cb) = a.at(ra, ca) * b.at(rb, cb);
    }
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

Mat mat_canon(const Mat& m, const Ring& ring) {
  RingOps ops(ring);
  Mat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = ops.canon(m.at(r, c));
  return out;
}

std::vector<int> rref(Mat& m, const Ring& ring) {
  internal_check(ring.is_field(), "NotField", "rref needs field coefficients");
  RingOps ops(ring);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!ops.is_zero(m.at(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    Scalar inv = ops.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = ops.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || ops.is_zero(m.at(i, c))) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = ops.sub(m.at(i, j), ops.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const Mat& m, const Ring& ring) {
  Mat w = mat_canon(m, ring);
  if (ring.is_field()) return int(rref(w, ring).size());
  // Integer rank equals rational rank.
  Mat w2 = w;
  return int(rref(w2, Ring::Q()).size());
}

namespace {

// Canonical presentation of a kernel/basis column: first nonzero positive;
// over a field scale it to 1, over Z divide by content.
void canon_column(Mat& m, int c, const Ring& ring) {
  RingOps ops(ring);
  int lead = -1;
  for (int r = 0; r < m.rows(); ++r)
    if (!ops.is_zero(m.at(r, c))) { lead = r; break; }
  if (lead < 0) return;
  if (ring.is_field()) {
    Scalar inv = ops.inv(m.at(lead, c));
    for (int r = lead; r < m.rows(); ++r) m.at(r, c) = ops.mul(m.at(r, c), inv);
  } else {
    if (m.at(lead, c) < 0)
      for (int r = lead; r < m.rows(); ++r) m.at(r, c) = -m.at(r, c);
  }
}

}  // namespace

Mat kernel_basis(const Mat& m, const Ring& ring) {
  Mat w = mat_canon(m, ring);
  if (ring.is_field()) {
    std::vector<int> pivots = rref(w, ring);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    RingOps ops(ring);
    Mat out(m.cols(), m.cols() - int(pivots.size()));
    int k = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (is_pivot[c]) continue;
      out.at(c, k) = 1;
      for (int i = 0; i < int(pivots.size()); ++i)
        out.at(pivots[i], k) = ops.neg(w.at(i, c));
      canon_column(out, k, ring);
      ++k;
    }
    return out;
  }
  // Integer kernel via column reduction with a tracked unimodular transform.
  HermiteForm hf = column_hermite(w);
  std::vector<int> zero_cols;
  for (int c = 0; c < hf.h.cols(); ++c) {
    bool z = true;
    for (int r = 0; r < hf.h.rows(); ++r)
      if (hf.h.at(r, c) != 0) { z = false; break; }
    if (z) zero_cols.push_back(c);
  }
  Mat out = hf.t.cols_subset(zero_cols);
  for (int c = 0; c < out.cols(); ++c) canon_column(out, c, ring);
  return out;
}

Mat column_basis(const Mat& gens, const Ring& ring) {
  if (gens.cols() == 0) return Mat(gens.rows(), 0);
  if (ring.is_field()) {
    Mat w = mat_canon(gens, ring).transpose();
    rref(w, ring);
    std::vector<int> keep;
    for (int r = 0; r < w.rows(); ++r) {
      bool z = true;
      for (int c = 0; c < w.cols(); ++c)
        if (w.at(r, c) != 0) { z = false; break; }
      if (!z) keep.push_back(r);
    }
    return w.rows_subset(keep).transpose();
  }
  HermiteForm hf = column_hermite(mat_canon(gens, ring));
  std::vector<int> keep;
  for (int c = 0; c < hf.h.cols(); ++c) {
    bool z = true;
    for (int r = 0; r < hf.h.rows(); ++r)
      if (hf.h.at(r, c) != 0) { z = false; break; }
    if (!z) keep.push_back(c);
  }
  Mat out = hf.h.cols_subset(keep);
  for (int c = 0; c < out.cols(); ++c) canon_column(out, c, ring);
  return out;
}

Mat solve_in_span(const Mat& b, const Mat& target, const Ring& ring) {
  internal_check(b.rows() == target.rows(), "ShapeMismatch", "solve_in_span rows");
  // Solve over the fraction field with [b | target] elimination.
  Ring work = ring.is_field() ? ring : Ring::Q();
  Mat aug = mat_canon(Mat::hcat(b, target), work);
  std::vector<int> pivots = rref(aug, work);
  for (int p : pivots)
    internal_check(p < b.cols(), "NotInSpan", "target column not in span");
  Mat x(b.cols(), target.cols());
  for (int i = 0; i < int(pivots.size()); ++i)
    for (int c = 0; c < target.cols(); ++c) x.at(pivots[i], c) = aug.at(i, b.cols() + c);
  // Verify: rref may leave free columns among b (dependent columns); the
  // particular solution above sets them to zero.
  internal_check(mat_canon(b * x, ring) == mat_canon(target, ring), "SolveFailed",
                 "solve_in_span verification");
  if (ring == Ring::Z())
    internal_check(x.is_integral(), "NotInLattice",
                   "target is in the rational span but not in the lattice");
  return mat_canon(x, ring);
}

bool in_span(const Mat& b, const Mat& target, const Ring& ring) {
  // Over Z a dependent generating set must be reduced to a lattice basis
  // first; the particular rational solution need not be integral even when
  // an integral combination exists.
  Mat basis = ring == Ring::Z() ? column_basis(b, Ring::Z()) : b;
  Ring work = ring.is_field() ? ring : Ring::Q();
  Mat aug = mat_canon(Mat::hcat(basis, target), work);
  std::vector<int> pivots = rref(aug, work);
  for (int p : pivots)
    if (p >= basis.cols()) return false;
  if (ring == Ring::Z()) {
    Mat x(basis.cols(), target.cols());
    for (int i = 0; i < int(pivots.size()); ++i)
      for (int c = 0; c < target.cols(); ++c) x.at(pivots[i], c) = aug.at(i, basis.cols() + c);
    if (!x.is_integral()) return false;
    if (!(mat_canon(basis * x, Ring::Q()) == mat_canon(target, Ring::Q()))) return false;
  }
  return true;
}

bool same_span(const Mat& a, const Mat& b, const Ring& ring) {
  return in_span(a, b, ring) && in_span(b, a, ring);
}

Mat quotient_coordinates(const Mat& b, const Ring& ring) {
  const int m = b.rows();
  if (b.cols() == 0) return Mat::identity(m);
  if (ring.is_field()) {
    // Rows: first a left inverse on span(b), then a complement projection.
    Mat w = mat_canon(b, ring).transpose();
    std::vector<int> pivots = rref(w, ring);
    std::vector<bool> is_pivot(m, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat u(m, m);
    // Complement coordinates are the non-pivot unit functionals corrected by
    // the echelon rows so they vanish on span(b).
    int r = 0;
    RingOps ops(ring);
    for (int i = 0; i < int(pivots.size()); ++i, ++r)
      for (int c = 0; c < m; ++c) u.at(r, c) = (c == pivots[i]) ? Scalar(1) : Scalar(0);
    for (int c = 0; c < m; ++c) {
      if (is_pivot[c]) continue;
      for (int j = 0; j < m; ++j) u.at(r, j) = (j == c) ? Scalar(1) : Scalar(0);
      for (int i = 0; i < int(pivots.size()); ++i)
        u.at(r, pivots[i]) = ops.neg(w.at(i, c));
      ++r;
    }
    // u * b has echelon top rows; normalize the top block to [I; 0].
    Mat top = u * b;
    Mat topsq = top.rows_subset([&] {
      std::vector<int> idx(b.cols());
      for (int i = 0; i < b.cols(); ++i) idx[i] = i;
      return idx;
    }());
    Mat fix = solve_in_span(topsq.transpose(), Mat::identity(b.cols()), ring).transpose();
    Mat u2(m, m);
    Mat corrected = fix * u.rows_subset([&] {
      std::vector<int> idx(b.cols());
      for (int i = 0; i < b.cols(); ++i) idx[i] = i;
      return idx;
    }());
    for (int i = 0; i < b.cols(); ++i)
      for (int c = 0; c < m; ++c) u2.at(i, c) = corrected.at(i, c);
    for (int i = b.cols(); i < m; ++i)
      for (int c = 0; c < m; ++c) u2.at(i, c) = u.at(i, c);
    internal_check(mat_canon(u2 * b, ring) ==
                       Mat::vcat(Mat::identity(b.cols()), Mat::zero(m - b.cols(), b.cols())),
                   "QuotientCoords", "field quotient coordinates");
    return mat_canon(u2, ring);
  }
  SmithForm sf = smith_normal_form(b);
  for (int i = 0; i < b.cols(); ++i)
    internal_check(i < int(sf.diagonal.size()) && sf.diagonal[i] == 1, "NotSaturated",
                   "quotient_coordinates needs a saturated lattice");
  // u*b*v = [I;0]  =>  u*b = [v^-1; 0], so v * (top rows of u) * b = I.
  Mat u = sf.u;
  Mat fixed(u.rows(), u.cols());
  Mat top = sf.v * [&] {
    std::vector<int> idx(b.cols());
    for (int i = 0; i < b.cols(); ++i) idx[i] = i;
    return u.rows_subset(idx);
  }();
  for (int i = 0; i < b.cols(); ++i)
    for (int c = 0; c < u.cols(); ++c) fixed.at(i, c) = top.at(i, c);
  for (int i = b.cols(); i < u.rows(); ++i)
    for (int c = 0; c < u.cols(); ++c) fixed.at(i, c) = u.at(i, c);
  internal_check(fixed * b ==
                     Mat::vcat(Mat::identity(b.cols()), Mat::zero(m - b.cols(), b.cols())),
                 "QuotientCoords", "integer quotient coordinates");
  return fixed;
}

}  // namespace pathhom
