#pragma once
#include "pathhom/complex.hpp"

namespace pathhom {

// A bounded chain complex together with a per-degree submodule which need not
// be a subcomplex. Over Z the submodule bases are saturated on ingestion so
// that all quotients stay free.
class GradedPair {
 public:
  GradedPair(BoundedComplex ambient, std::vector<Mat> sub_basis);

  const BoundedComplex& ambient() const { return ambient_; }
  // Column basis of D_n inside the ambient degree-n coordinates.
  const Mat& sub(int n) const;
  int max_degree() const { return ambient_.max_degree(); }
  const Ring& ring() const { return ambient_.ring(); }

 private:
  BoundedComplex ambient_;
  std::vector<Mat> sub_;
  Mat empty_;
};

// A subcomplex presented by per-degree bases inside an ambient complex,
// together with the restricted boundary.
struct SubComplex {
  std::vector<Mat> basis;    // degree n basis columns in ambient coordinates
  BoundedComplex complex;    // restricted boundaries in those bases
};

// Maximal subcomplex with components inside D: degree n is the kernel of
// x |-> (boundary of x) mod D_{n-1}, restricted to D_n.
SubComplex omega(const GradedPair& p);

// Minimal subcomplex containing D: degree n spans D_n + d(D_{n+1}).
// Only degrees < max_degree see the full d(D_{n+1}) term; the top degree is
// reported as computed but is not certified.
SubComplex omega_prime(const GradedPair& p);

// Maximal quotient complex killing D, i.e. ambient / omega_prime. The
// quotient is only representable here when it is free in each degree; over Z
// this throws NonFreeQuotient when omega_prime is not saturated.
struct QuotientComplex {
  std::vector<Mat> projection;  // per degree: quotient coordinates (rows)
  BoundedComplex complex;
};
QuotientComplex psi(const GradedPair& p);

std::vector<HomologyGroup> pair_homology(const GradedPair& p);       // H(omega)
std::vector<HomologyGroup> anti_homology(const GradedPair& p);       // H(psi)

// Certified degree range for homology reporting: H_n needs degree n+1 data.
inline int certified_through(const GradedPair& p) { return p.max_degree() - 1; }

// Long-exact-sequence verification over a field: builds
// 0 -> omega' -> C -> psi -> 0, the snake connecting maps, and checks
// exactness at every node in trusted degrees. Throws NotExact on failure.
struct LesReport {
  int degrees_checked = 0;
  bool exact = true;
};
LesReport verify_les(const GradedPair& p);

// Field duality: the dual pair (C^dual, K) with K^n the annihilator of D_n.
// The dual is a cochain complex; it is returned as a chain complex in the
// reversed grading m = max_degree - n, with the annihilator bases alongside.
// Checks dim omega_n(C, D) == dim psi^n(C^dual, K) for all degrees.
struct DualReport {
  GradedPair reversed_dual;
  std::vector<Mat> annihilator;  // K^n in the original grading
  std::vector<int> omega_dims;
  std::vector<int> psi_dual_dims;
  bool equal = true;
};
DualReport dual_pair(const GradedPair& p);

// Tensor product of pairs: Kunneth ambient with submodule D (x) D'.
GradedPair tensor_pair(const GradedPair& a, const GradedPair& b);

// omega(a) (x) omega(b) == omega(a (x) b) as sublattices of the tensor
// ambient; exercised by tests on small instances.
bool omega_tensor_compatible(const GradedPair& a, const GradedPair& b);

}  // namespace pathhom
