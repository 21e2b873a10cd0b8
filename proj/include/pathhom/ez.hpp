#pragma once
#include "pathhom/nerve.hpp"

namespace pathhom {

// Shuffle/front-back maps between a box complex and the tensor of its
// factors, expressed in the omega bases. Source coordinates of degree n are
// the blocks Omega_k (x) Omega'_(n-k) in ascending k.
struct EzAw {
  std::vector<Mat> epsilon;               // tensor -> box, per degree
  std::vector<Mat> alpha;                 // box -> tensor, per degree
  std::vector<std::vector<int>> offsets;  // offsets[n][k] = first row of block k
  bool mutually_inverse = true;
  int degrees = 0;
};

// Requires the three complexes to share the ring and cover degrees 0..n_max.
EzAw ez_aw(const OmegaComplex& left, const OmegaComplex& right, const OmegaComplex& boxed,
           const BoxQuiver& bq, int n_max);

// Kunneth comparison through certified degrees: H_n(box) against
// sum H_i (x) H_j + sum Tor(H_i, H_j).
bool kunneth_check(const OmegaComplex& left, const OmegaComplex& right,
                   const OmegaComplex& boxed);

}  // namespace pathhom
