#pragma once
#include <string>
#include <vector>

#include "pathhom/snf.hpp"

namespace pathhom {

// Finitely generated module over the coefficient ring, reported as free rank
// plus torsion divisors d1 | d2 | ... (each > 1, empty over a field).
struct HomologyGroup {
  long rank = 0;
  std::vector<Int> torsion;

  bool operator==(const HomologyGroup&) const = default;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
  std::string str(const Ring& ring) const;
};

// ker(d_out) / im(d_in). Requires d_out * d_in == 0.
HomologyGroup homology_at(const Mat& d_out, const Mat& d_in, const Ring& ring);

// Quotient of two column lattices/subspaces inner <= outer of the same
// ambient space; inner columns must lie in the span of outer.
HomologyGroup subquotient(const Mat& outer, const Mat& inner, const Ring& ring);

// Arithmetic of finitely generated abelian groups in (rank, divisor-chain)
// canonical form; used by Kunneth checks over Z.
HomologyGroup group_direct_sum(const HomologyGroup& a, const HomologyGroup& b);
HomologyGroup group_tensor(const HomologyGroup& a, const HomologyGroup& b);
HomologyGroup group_tor(const HomologyGroup& a, const HomologyGroup& b);

// Homology coordinates over a field: a cycle basis plus the projection of
// cycle coordinates onto homology classes.
struct FieldHomologyCoords {
  Mat cycles;    // chain dim x cycle count
  Mat to_class;  // homology dim x cycle count
  int dim = 0;

  // Classes of cycle columns given in chain coordinates.
  Mat class_of(const Mat& chains, const Ring& ring) const;
};
FieldHomologyCoords field_homology_coords(const Mat& d_out, const Mat& d_in, const Ring& field);

}  // namespace pathhom
