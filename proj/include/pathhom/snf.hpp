#pragma once
#include "pathhom/matrix.hpp"

namespace pathhom {

struct SmithForm {
  Mat u, s, v;  // u * m * v == s
  std::vector<Int> diagonal;  // nonneg, divisibility chain, zeros trailing
  int rank() const;
};

// Smith normal form over Z. Pivot selection takes a minimal-absolute-value
// nonzero entry to limit coefficient growth.
SmithForm smith_normal_form(const Mat& m);

// Column Hermite-style reduction used for integer kernels and lattice bases.
// Returns (h, t) with m * t == h, t unimodular, h lower-staircase with zero
// columns at the end.
struct HermiteForm {
  Mat h, t;
};
HermiteForm column_hermite(const Mat& m);

// Determinant via fraction-free elimination; used only by tests and small
// unimodularity checks.
Scalar determinant(const Mat& m);

}  // namespace pathhom
