#pragma once
#include <memory>

#include "pathhom/theories.hpp"

namespace pathhom {

// Group elements as canonical integer tokens with decidable equality.
// Infinite groups intern elements on demand.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual int identity() const = 0;
  virtual int multiply(int a, int b) = 0;  // product a * b
  virtual bool finite() const = 0;
  virtual std::vector<int> elements() = 0;  // all tokens when finite
  virtual std::string name(int token) const = 0;
  virtual int element(const std::string& name) = 0;
  virtual bool abelian() = 0;
  virtual int inverse(int a) = 0;
};

std::unique_ptr<GroupOracle> make_cayley_group(const std::vector<std::string>& names,
                                               const std::vector<std::vector<std::string>>& body);
std::unique_ptr<GroupOracle> make_cyclic_group(int n);
// Dihedral group of order 2n generated by two reflections x, y with
// (xy)^n = 1; element names are the shortest alternating words.
std::unique_ptr<GroupOracle> make_dihedral_group(int n);
std::unique_ptr<GroupOracle> make_free_abelian_group(int rank);
std::unique_ptr<GroupOracle> make_free_group(int rank);
std::unique_ptr<GroupOracle> make_product_group(GroupOracle& a, GroupOracle& b);

struct PointedSubset {
  GroupOracle* group = nullptr;
  std::vector<int> elements;  // includes the identity, sorted by name

  static PointedSubset make(GroupOracle& g, std::vector<int> elements);
};

// The one-object quiver of the subset (arrows = non-identity elements, label
// = element name) plus the ambient composition.
struct GroupComplexData {
  Quiver quiver;
  std::unique_ptr<CompositionOracle> oracle;
  std::vector<int> arrow_elements;  // group token per quiver arrow
};
GroupComplexData group_quiver(const PointedSubset& p);

OmegaComplex omega_group(const PointedSubset& p, Ring ring, int n_max);

struct CoacyclicReport {
  bool coacyclic = true;
  int first_failure = -1;
  std::vector<HomologyGroup> subset_homology;
  std::vector<HomologyGroup> group_homology;
  int degrees_checked = 0;
};
// Reference: the full bar complex for finite groups, closed forms for free
// abelian and free groups. Runs over Z.
CoacyclicReport coacyclic_check(const PointedSubset& p, int n_max);

// Wedge subset (X x 1) u (1 x X') in the product group.
struct WedgeData {
  std::unique_ptr<GroupOracle> product;
  PointedSubset subset;
};
WedgeData wedge(const PointedSubset& a, const PointedSubset& b);

// Shuffle/front-back isomorphism for the wedge plus the Kunneth comparison.
struct WedgeEzReport {
  bool ez_inverse = true;
  bool kunneth_ok = true;
  std::vector<HomologyGroup> wedge_homology;
};
WedgeEzReport wedge_ez_check(const PointedSubset& a, const PointedSubset& b, Ring ring,
                             int n_max);

struct UnionSplitReport {
  bool hypothesis_ok = true;
  std::string witness;  // failing products when the hypothesis is violated
  bool split_ok = true;
  int degrees_checked = 0;
};
// H(G, X u Y) must split as H(G, X) + H(G, Y) in positive degrees whenever
// the free-product comparison is a bijection on the subset and its pairwise
// products.
UnionSplitReport union_split_check(GroupOracle& g, const std::vector<int>& x,
                                   const std::vector<int>& y, Ring ring, int n_max);

struct PontryaginReport {
  std::vector<int> homology_dims;
  bool unital = true;
  bool associative = true;
  bool graded_commutative = true;
  // product_rank[k][l]: rank of H_k (x) H_l -> H_(k+l).
  std::vector<std::vector<int>> product_rank;
};
PontryaginReport pontryagin(const PointedSubset& p, Ring field, int n_max);

}  // namespace pathhom
