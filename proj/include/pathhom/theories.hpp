#pragma once
#include "pathhom/ez.hpp"

namespace pathhom {

OmegaComplex glmy(const Digraph& g, Ring ring, int n_max);
OmegaComplex sc(const Quiver& q, Ring ring, int n_max);
OmegaComplex free_cat(const Quiver& q, Ring ring, int n_max);

// k-power theory with the integral differentials (exterior faces scaled by
// k). A warning flag is raised when k is not invertible in the ring.
struct KPowerResult {
  OmegaComplex omega;
  bool k_invertible = true;
};
KPowerResult kpower(const Quiver& q, int k, Ring ring, int n_max);

// Above the quiver power the k-power complex coincides with the
// square-commutative one up to degreewise scaling of the boundary by k.
bool kpower_matches_sc(const Quiver& q, int k, Ring ring, int n_max);

// Regular path complex: allowed vertex sequences per length, closed under
// dropping the first or last vertex. Degree 0 is the whole vertex set.
struct PathComplexInput {
  std::vector<std::string> vertices;          // sorted unique
  std::vector<std::vector<Cell>> paths;       // paths[n] = allowed n-paths
  void validate() const;                      // closure and regularity
  static PathComplexInput from_digraph(const Digraph& g, int n_max);
};

OmegaComplex path_complex_omega(const PathComplexInput& p, Ring ring, int n_max);

struct CompareReport {
  bool triangle_free = false;
  bool isomorphic = false;          // degreewise equality of the components
  std::vector<int> sc_dims, glmy_dims;
  std::vector<int> homology_map_ranks;  // induced map ranks over the ring's fraction field
};
CompareReport compare_sc_glmy(const Digraph& g, Ring ring, int n_max);

// Cochain algebra over a field: the dual complex with the product dual to
// the front/back splitting.
struct CohomologyReport {
  std::vector<int> dims;
  std::vector<HomologyGroup> cohomology;
  bool derivation_ok = true;
  bool monomorphism_ok = true;
  bool dim_inequality_ok = true;
};
CohomologyReport cohomology_ring(const Quiver& q, const OmegaComplex& omega, int n_max);

// Front/back splitting Omega_(k+l) -> Omega_k (x) Omega_l in the omega bases.
Mat front_back_split(const Quiver& q, const OmegaComplex& omega, int k, int l);

}  // namespace pathhom
