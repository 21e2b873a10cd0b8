#pragma once
#include <string>
#include <vector>

#include "pathhom/homology.hpp"

namespace pathhom {

// Non-negatively graded chain complex, free in each degree, truncated at
// max_degree. boundary(n) maps degree n to degree n-1 for 1 <= n <= max_degree.
class BoundedComplex {
 public:
  BoundedComplex() = default;
  BoundedComplex(Ring ring, std::vector<int> dims, std::vector<Mat> boundaries,
                 std::vector<std::vector<std::string>> labels = {});

  const Ring& ring() const { return ring_; }
  int max_degree() const { return int(dims_.size()) - 1; }
  int dim(int n) const { return (n >= 0 && n <= max_degree()) ? dims_[n] : 0; }
  // Zero matrix of the right shape outside 1..max_degree.
  Mat boundary(int n) const;
  const std::vector<std::string>& labels(int n) const;

  void check_d_squared() const;

  std::vector<HomologyGroup> homology() const;  // degrees 0..max_degree
  HomologyGroup homology_in(int n) const;

  static BoundedComplex zero(Ring ring, int max_degree);

 private:
  Ring ring_ = Ring::Z();
  std::vector<int> dims_;
  std::vector<Mat> boundaries_;  // boundaries_[n] : n -> n-1, index 0 unused
  std::vector<std::vector<std::string>> labels_;
};

// Kunneth tensor product with sign d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
// Degree-n basis is ordered by ascending left degree, then left index, then
// right index. Per-degree offsets of the (i, n-i) block are exposed for
// callers that need coordinates.
struct TensorComplex {
  BoundedComplex complex;
  // block_offset[n][i] = first coordinate of the C_i (x) C'_{n-i} block.
  std::vector<std::vector<int>> block_offset;
};
TensorComplex tensor_complex(const BoundedComplex& a, const BoundedComplex& b);

}  // namespace pathhom
