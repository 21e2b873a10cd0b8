#pragma once
#include "pathhom/graded_pair.hpp"

namespace pathhom {

// Finite-dimensional unital algebra by structure constants over a field.
// The first basis vector is the unit.
struct Algebra {
  Ring field = Ring::Q();
  std::vector<std::string> basis;
  // b_i * b_j = sum_k c[i][j][k] b_k
  std::vector<std::vector<std::vector<Scalar>>> c;

  int dim() const { return int(basis.size()); }
  std::vector<Scalar> product(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
  void validate() const;  // two-sided unit and associativity on the basis

  static Algebra tensor(const Algebra& a, const Algebra& b);
};

// Bimodule by one action matrix per algebra basis vector.
struct Bimodule {
  int dimension = 0;
  std::vector<Mat> left;   // left[i]: action of b_i
  std::vector<Mat> right;  // right[i]: action of b_i

  void validate(const Algebra& a) const;
  static Bimodule regular(const Algebra& a);
  static Bimodule tensor(const Algebra& a, const Bimodule& m, const Algebra& b,
                         const Bimodule& n);
};

// The truncated pair: ambient degree n is M (x) (Lambda/K)^(x n), the
// submodule is M (x) (V/K)^(x n). V columns must include the unit.
GradedPair hochschild_pair(const Algebra& algebra, const Mat& submodule, const Bimodule& m,
                           int n_max);

std::vector<HomologyGroup> hochschild_homology(const Algebra& algebra, const Mat& submodule,
                                               const Bimodule& m, int n_max);

// Reference ranks from the full (un-normalized) complex M (x) Lambda^(x n);
// used as an independent check of the pair machinery when V = Lambda.
std::vector<int> bar_complex_betti(const Algebra& algebra, const Bimodule& m, int n_max);

struct HochschildEzReport {
  bool mutually_inverse = true;
  std::vector<int> tensor_dims;  // omega dims of the tensor-algebra pair
};
// Shuffle/front-back isomorphism between omega of the tensor-algebra pair
// (V (x) K + K (x) V' inside Lambda (x) Lambda') and the tensor of the two
// omega complexes.
HochschildEzReport hochschild_ez_check(const Algebra& a, const Mat& va, const Bimodule& ma,
                                       const Algebra& b, const Mat& vb, const Bimodule& mb,
                                       int n_max);

// Simplicial identities d_i d_j = d_(j-1) d_i (i < j) on the full module.
bool simplicial_identities_hold(const Algebra& algebra, const Bimodule& m, int n, int trials,
                                unsigned seed);

}  // namespace pathhom
