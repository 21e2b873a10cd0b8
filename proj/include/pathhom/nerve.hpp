#pragma once
#include "pathhom/graded_pair.hpp"
#include "pathhom/oracle.hpp"

namespace pathhom {

// A degree-n basis cell: arrow indices of a composable tuple (n >= 1), or a
// single vertex index at degree 0. Path-complex cells hold vertex sequences.
using Cell = std::vector<int>;

std::vector<Cell> moore_basis(const Quiver& q, int n);

// Boundary of span(NQ_n) into the span of canonical-token tuples. Rows 0..s-1
// follow moore_basis(q, n-1) (for n >= 2; vertices for n = 1); the remaining
// rows are the tuples that leave the allowed span, in a deterministic order.
struct SpanBoundary {
  int sub_rows = 0;
  std::vector<std::string> outside_names;
  Mat matrix;
};
SpanBoundary boundary_into_span(const Quiver& q, CompositionOracle& oracle, int n);

struct OmegaDegree {
  std::vector<Cell> nq_cells;
  std::vector<std::string> nq_names;
  Mat basis;     // |nq| x dim, saturated over Z
  Mat boundary;  // previous-degree dim x dim
};

struct OmegaComplex {
  Ring ring;
  int n_max = 0;
  std::vector<OmegaDegree> deg;

  int dim(int n) const { return (n >= 0 && n <= n_max) ? deg[n].basis.cols() : 0; }
  int certified_through() const { return n_max - 1; }
  BoundedComplex complex() const;
  std::vector<HomologyGroup> homology() const;
};

OmegaComplex omega_complex(const Quiver& q, CompositionOracle& oracle, Ring ring, int n_max);

// Full ambient Moore complex together with the allowed span as a graded
// submodule. Needs a finite ambient; the span-only route above never builds
// this and scales much further.
GradedPair ambient_pair(const Quiver& q, CompositionOracle& oracle, Ring ring, int n_max);

// Anti-theory complex: quotient of the full ambient Moore complex by the
// minimal subcomplex around NQ. Needs a finite ambient.
BoundedComplex psi_complex(const Quiver& q, CompositionOracle& oracle, Ring ring, int n_max);

// Morphism of quivers; an arrow may map to an arrow or collapse to a vertex.
struct QuiverMorphism {
  std::vector<int> vertex_map;              // per source vertex
  std::vector<int> arrow_map;               // arrow index, or -1 for collapse
  bool degenerate_arrow(int a) const { return arrow_map[a] < 0; }
};

// Per-degree matrices of the chain map Omega(src) -> Omega(dst) induced by a
// quiver morphism; throws if the image leaves the target complex.
std::vector<Mat> induced_omega_maps(const OmegaComplex& src, const OmegaComplex& dst,
                                    const QuiverMorphism& f);

// Natural-transformation certificate phi: per source vertex, an arrow of the
// target quiver (or -1 when f and g agree there and the identity is meant).
struct HomotopyReport {
  bool natural = true;
  bool equal_on_homology = true;
  int degrees_checked = 0;
};
HomotopyReport verify_homotopy(const Quiver& src_q, const OmegaComplex& src,
                               const Quiver& dst_q, CompositionOracle& dst_oracle,
                               const OmegaComplex& dst, const QuiverMorphism& f,
                               const QuiverMorphism& g, const std::vector<int>& phi);

}  // namespace pathhom
