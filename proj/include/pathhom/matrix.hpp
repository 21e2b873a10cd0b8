#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "pathhom/ring.hpp"

namespace pathhom {

// Dense matrix of exact scalars. Row/column counts may be zero; a kernel or
// image of an empty map is handled uniformly.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat col_vector(const std::vector<Scalar>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  bool operator==(const Mat& rhs) const;

  Mat col(int c) const;
  Mat cols_subset(const std::vector<int>& idx) const;
  Mat rows_subset(const std::vector<int>& idx) const;
  // Horizontal concatenation.
  static Mat hcat(const Mat& a, const Mat& b);
  static Mat vcat(const Mat& a, const Mat& b);

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

  bool is_zero() const;
  bool is_integral() const;

  // Kronecker product, row-major on both factors.
  static Mat kronecker(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

Mat mat_canon(const Mat& m, const Ring& ring);

// Reduced row echelon form in place over a field. Returns pivot columns.
std::vector<int> rref(Mat& m, const Ring& ring);

int rank(const Mat& m, const Ring& ring);

// Basis of the kernel, as matrix columns. Over Z the columns generate the
// full integer kernel, which is a saturated sublattice of the domain.
// Columns are canonicalized: first nonzero entry positive (and equal to 1
// over a field), ordered by position of their lowest nonzero row.
Mat kernel_basis(const Mat& m, const Ring& ring);

// Lattice/subspace basis from a generating set of columns.
// Over Z: column Hermite form, zero columns dropped. Over a field: a maximal
// independent subset reduced to echelon form.
Mat column_basis(const Mat& gens, const Ring& ring);

// Solve b * x = target column-wise; every column of target must lie in the
// column span (over Z: in the lattice generated by the columns, which must be
// independent). Throws InternalInvariantError otherwise.
Mat solve_in_span(const Mat& b, const Mat& target, const Ring& ring);

bool in_span(const Mat& b, const Mat& target, const Ring& ring);

// True if the two column spans (lattices over Z) coincide.
bool same_span(const Mat& a, const Mat& b, const Ring& ring);

// Unimodular U with U*b = [I; 0] for a saturated independent column set b
// over Z (over a field: any basis). Rows r.. of U give coordinates on the
// quotient by span(b).
Mat quotient_coordinates(const Mat& b, const Ring& ring);

}  // namespace pathhom
