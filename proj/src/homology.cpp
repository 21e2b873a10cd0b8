#include "pathhom/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pathhom {

std::string HomologyGroup::str(const Ring& ring) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  std::string base = ring.name();
  if (rank > 0) {
    os << base;
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

HomologyGroup homology_at(const Mat& d_out, const Mat& d_in, const Ring& ring) {
  internal_check(d_out.cols() == d_in.rows(), "ShapeMismatch", "homology_at chain shape");
  Mat composite = d_out * d_in;
  require(mat_canon(composite, ring).is_zero(), "CompositionNotZero",
          "d_out * d_in != 0: inconsistent complex");
  Mat k = kernel_basis(d_out, ring);
  if (ring.is_field()) {
    HomologyGroup h;
    h.rank = k.cols() - rank(d_in, ring);
    return h;
  }
  if (k.cols() == 0) return {};
  // im(d_in) lies in ker(d_out); the kernel basis is saturated, so the
  // coordinates of the image are integral.
  Mat y = solve_in_span(k, d_in, Ring::Z());
  SmithForm sf = smith_normal_form(y);
  HomologyGroup h;
  h.rank = k.cols() - sf.rank();
  for (const Int& d : sf.diagonal)
    if (d > 1) h.torsion.push_back(d);
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

HomologyGroup subquotient(const Mat& outer, const Mat& inner, const Ring& ring) {
  if (outer.cols() == 0) {
    internal_check(inner.cols() == 0 || mat_canon(inner, ring).is_zero(), "NotInSpan",
                   "inner not inside outer");
    return {};
  }
  Mat y = solve_in_span(outer, inner, ring);
  if (ring.is_field()) {
    HomologyGroup h;
    h.rank = outer.cols() - rank(y, ring);
    return h;
  }
  SmithForm sf = smith_normal_form(y);
  HomologyGroup h;
  h.rank = outer.cols() - sf.rank();
  for (const Int& d : sf.diagonal)
    if (d > 1) h.torsion.push_back(d);
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

namespace {

// Canonical form: multiset of prime powers -> divisor chain d1 | d2 | ...
std::vector<Int> chain_from_prime_powers(std::map<Int, std::vector<Int>>& pp) {
  size_t levels = 0;
  for (auto& [p, es] : pp) {
    std::sort(es.begin(), es.end(), std::greater<>());
    levels = std::max(levels, es.size());
  }
  std::vector<Int> chain(levels, Int(1));
  for (auto& [p, es] : pp)
    for (size_t i = 0; i < es.size(); ++i) {
      Int q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), es[i].get_ui());
      chain[i] *= q;
    }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void add_prime_powers(std::map<Int, std::vector<Int>>& pp, const Int& d) {
  Int rest = d;
  for (Int p = 2; rest > 1; ++p) {
    if (p * p > rest) {  // rest prime
      pp[rest].push_back(1);
      break;
    }
    unsigned long e = 0;
    while (rest % p == 0) { rest /= p; ++e; }
    if (e) pp[p].push_back(Int(e));
  }
}

}  // namespace

HomologyGroup group_direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  HomologyGroup r;
  r.rank = a.rank + b.rank;
  std::map<Int, std::vector<Int>> pp;
  for (const Int& d : a.torsion) add_prime_powers(pp, d);
  for (const Int& d : b.torsion) add_prime_powers(pp, d);
  r.torsion = chain_from_prime_powers(pp);
  return r;
}

HomologyGroup group_tensor(const HomologyGroup& a, const HomologyGroup& b) {
  HomologyGroup r;
  r.rank = a.rank * b.rank;
  std::map<Int, std::vector<Int>> pp;
  for (const Int& d : a.torsion)
    for (long i = 0; i < b.rank; ++i) add_prime_powers(pp, d);
  for (const Int& e : b.torsion)
    for (long i = 0; i < a.rank; ++i) add_prime_powers(pp, e);
  for (const Int& d : a.torsion)
    for (const Int& e : b.torsion) add_prime_powers(pp, gcd(d, e));
  r.torsion = chain_from_prime_powers(pp);
  return r;
}

HomologyGroup group_tor(const HomologyGroup& a, const HomologyGroup& b) {
  HomologyGroup r;
  std::map<Int, std::vector<Int>> pp;
  for (const Int& d : a.torsion)
    for (const Int& e : b.torsion) add_prime_powers(pp, gcd(d, e));
  r.torsion = chain_from_prime_powers(pp);
  return r;
}

Mat FieldHomologyCoords::class_of(const Mat& chains, const Ring& ring) const {
  if (dim == 0) return Mat(0, chains.cols());
  Mat coords = solve_in_span(cycles, chains, ring);
  return mat_canon(to_class * coords, ring);
}

FieldHomologyCoords field_homology_coords(const Mat& d_out, const Mat& d_in, const Ring& field) {
  internal_check(field.is_field(), "NotField", "homology coordinates need a field");
  FieldHomologyCoords hc;
  hc.cycles = kernel_basis(d_out, field);
  Mat bndry = mat_canon(d_in, field);
  Mat b_in_z =
      hc.cycles.cols() ? solve_in_span(hc.cycles, bndry, field) : Mat(0, bndry.cols());
  Mat bbasis = column_basis(b_in_z, field);
  Mat u = quotient_coordinates(bbasis, field);
  std::vector<int> bottom;
  for (int r = bbasis.cols(); r < u.rows(); ++r) bottom.push_back(r);
  hc.to_class = u.rows_subset(bottom);
  hc.dim = int(bottom.size());
  return hc;
}

}  // namespace pathhom
