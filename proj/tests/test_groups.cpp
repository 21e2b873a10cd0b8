#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathhom/groups.hpp"

using namespace pathhom;

TEST_CASE("trivial subset gives a point") {
  auto g = make_cyclic_group(6);
  PointedSubset p = PointedSubset::make(*g, {g->identity()});
  OmegaComplex om = omega_group(p, Ring::Z(), 4);
  CHECK(om.dim(0) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(om.dim(n) == 0);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
}

TEST_CASE("pointed subsets must contain the identity") {
  auto g = make_cyclic_group(4);
  CHECK_THROWS_AS(PointedSubset::make(*g, {g->element("g")}), ValidationError);
}

TEST_CASE("dihedral group structure") {
  auto g = make_dihedral_group(4);
  CHECK(g->elements().size() == 8);
  int x = g->element("x"), y = g->element("y");
  CHECK(g->multiply(x, x) == g->identity());
  CHECK(g->multiply(y, y) == g->identity());
  int xy = g->multiply(x, y);
  int p = xy;
  for (int i = 1; i < 4; ++i) p = g->multiply(p, xy);
  CHECK(p == g->identity());  // (xy)^4 = 1
  CHECK(g->multiply(xy, xy) != g->identity());
  CHECK(!g->abelian());
}

TEST_CASE("dihedral subset {1, x, y}: alternating two-torsion") {
  auto g = make_dihedral_group(4);
  PointedSubset p = PointedSubset::make(*g, {g->identity(), g->element("x"), g->element("y")});
  OmegaComplex om = omega_group(p, Ring::Z(), 6);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{0, {2, 2}});
  CHECK(h[2] == HomologyGroup{0, {}});
  CHECK(h[3] == HomologyGroup{0, {2, 2}});
  CHECK(h[4] == HomologyGroup{0, {}});
  CHECK(h[5] == HomologyGroup{0, {2, 2}});
}

TEST_CASE("integers with {0, 1}") {
  auto g = make_free_abelian_group(1);
  PointedSubset p = PointedSubset::make(*g, {g->element("0"), g->element("e1")});
  OmegaComplex om = omega_group(p, Ring::Z(), 4);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{1, {}});
  CHECK(h[2] == HomologyGroup{0, {}});
  CHECK(h[3] == HomologyGroup{0, {}});
}

TEST_CASE("coacyclicity of {0, e_i} in free abelian groups") {
  for (int r = 1; r <= 3; ++r) {
    auto g = make_free_abelian_group(r);
    std::vector<int> elems{g->element("0")};
    for (int i = 1; i <= r; ++i) elems.push_back(g->element("e" + std::to_string(i)));
    PointedSubset p = PointedSubset::make(*g, elems);
    CoacyclicReport rep = coacyclic_check(p, r + 2);
    CHECK(rep.coacyclic);
  }
}

TEST_CASE("coacyclicity of generators in a free group; H_2 vanishes") {
  auto g = make_free_group(2);
  PointedSubset p =
      PointedSubset::make(*g, {g->identity(), g->element("x1"), g->element("x2")});
  CoacyclicReport rep = coacyclic_check(p, 4);
  CHECK(rep.coacyclic);
  CHECK(rep.subset_homology[1] == HomologyGroup{2, {}});
  CHECK(rep.subset_homology[2] == HomologyGroup{0, {}});
}

TEST_CASE("full subset of a finite group is coacyclic by construction") {
  auto g = make_cyclic_group(3);
  PointedSubset p = PointedSubset::make(*g, g->elements());
  CoacyclicReport rep = coacyclic_check(p, 3);
  CHECK(rep.coacyclic);
  // Cyclic group homology: Z, Z/3, 0, Z/3, ...
  CHECK(rep.subset_homology[1] == HomologyGroup{0, {3}});
  CHECK(rep.subset_homology[2] == HomologyGroup{0, {}});
}

TEST_CASE("wedge: unit and the rank-2 lattice") {
  auto g1 = make_free_abelian_group(1);
  PointedSubset p1 = PointedSubset::make(*g1, {g1->element("0"), g1->element("e1")});
  auto g2 = make_free_abelian_group(1);
  PointedSubset p2 = PointedSubset::make(*g2, {g2->element("0"), g2->element("e1")});
  WedgeEzReport rep = wedge_ez_check(p1, p2, Ring::Z(), 4);
  CHECK(rep.ez_inverse);
  CHECK(rep.kunneth_ok);
  CHECK(rep.wedge_homology[0] == HomologyGroup{1, {}});
  CHECK(rep.wedge_homology[1] == HomologyGroup{2, {}});
  CHECK(rep.wedge_homology[2] == HomologyGroup{1, {}});
  CHECK(rep.wedge_homology[3] == HomologyGroup{0, {}});

  // Wedge with the trivial subset changes nothing.
  auto gt = make_cyclic_group(1);
  PointedSubset pt = PointedSubset::make(*gt, {gt->identity()});
  WedgeEzReport rep2 = wedge_ez_check(p1, pt, Ring::Z(), 4);
  CHECK(rep2.ez_inverse);
  for (int n = 0; n + 1 <= 4; ++n)
    CHECK(rep2.wedge_homology[n] == omega_group(p1, Ring::Z(), 4).homology()[n]);

  // The wedge subset matches {0, e1, e2} inside Z^2 (coacyclic reference).
  auto gz2 = make_free_abelian_group(2);
  PointedSubset pz2 = PointedSubset::make(
      *gz2, {gz2->element("0"), gz2->element("e1"), gz2->element("e2")});
  auto h2 = omega_group(pz2, Ring::Z(), 4).homology();
  for (int n = 0; n + 1 <= 4; ++n) CHECK(rep.wedge_homology[n] == h2[n]);
}

TEST_CASE("boundary of a 2-chain over the integers: the doubled element leaves the span") {
  auto g = make_free_abelian_group(1);
  PointedSubset p = PointedSubset::make(*g, {g->element("0"), g->element("e1")});
  GroupComplexData data = group_quiver(p);
  SpanBoundary sb = boundary_into_span(data.quiver, *data.oracle, 2);
  // One source tuple <e1, e1>; d = <e1> - <2e1> + <e1> with 2e1 outside.
  REQUIRE(sb.matrix.cols() == 1);
  CHECK(sb.sub_rows == 1);
  REQUIRE(sb.outside_names.size() == 1);
  CHECK(sb.outside_names[0] == "<2*e1>");
  CHECK(sb.matrix.at(0, 0) == 2);
  CHECK(sb.matrix.at(1, 0) == -1);
}

TEST_CASE("wedge with the trivial subset leaves the dihedral homology unchanged") {
  auto g = make_dihedral_group(4);
  PointedSubset p =
      PointedSubset::make(*g, {g->identity(), g->element("x"), g->element("y")});
  auto gt = make_cyclic_group(1);
  PointedSubset pt = PointedSubset::make(*gt, {gt->identity()});
  WedgeEzReport rep = wedge_ez_check(p, pt, Ring::Z(), 4);
  CHECK(rep.ez_inverse);
  CHECK(rep.kunneth_ok);
  auto h = omega_group(p, Ring::Z(), 4).homology();
  for (int n = 0; n + 1 <= 4; ++n) CHECK(rep.wedge_homology[n] == h[n]);
}

TEST_CASE("union split: dihedral reflections") {
  auto g = make_dihedral_group(4);
  std::vector<int> x{g->identity(), g->element("x")};
  std::vector<int> y{g->identity(), g->element("y")};
  UnionSplitReport rep = union_split_check(*g, x, y, Ring::Z(), 6);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.split_ok);
  CHECK(rep.degrees_checked == 5);
}

TEST_CASE("union split: trivial second subset") {
  auto g = make_cyclic_group(4);
  std::vector<int> x{g->identity(), g->element("g")};
  std::vector<int> y{g->identity()};
  UnionSplitReport rep = union_split_check(*g, x, y, Ring::Z(), 4);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.split_ok);
}

TEST_CASE("union split rejects colliding products") {
  // In C4 with X = {1, g}, Y = {1, g2}: g*g = g2 collides with the Y letter.
  auto g = make_cyclic_group(4);
  std::vector<int> x{g->identity(), g->element("g")};
  std::vector<int> y{g->identity(), g->element("g2")};
  CHECK_THROWS_AS(union_split_check(*g, x, y, Ring::Z(), 3), ValidationError);
}

TEST_CASE("free product formula via disjointly presented tables") {
  // S3 presented as a table; X = {1, r}, Y = {1, s}: rotations meet
  // reflections freely enough for the splitting.
  std::vector<std::string> names{"1", "r", "r2", "s", "rs", "r2s"};
  // r^3 = s^2 = 1, s r s = r^2. Build the table by words.
  auto mulw = [&](int a, int b) {
    // encode: 0..2 rotations r^i, 3..5 reflections r^i s
    int ia = a % 3, fa = a / 3, ib = b % 3, fb = b / 3;
    // (r^ia s^fa)(r^ib s^fb): s r = r^2 s => r^ia s^fa r^ib = r^(ia + (fa?2*ib:ib)) s^fa
    int rot = (ia + (fa ? 2 * ib % 3 : ib)) % 3;
    int flip = (fa + fb) % 2;
    return rot + 3 * flip;
  };
  std::vector<std::vector<std::string>> body(6, std::vector<std::string>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) body[a][b] = names[mulw(a, b)];
  auto g = make_cayley_group(names, body);
  CHECK(!g->abelian());
  UnionSplitReport rep = union_split_check(
      *g, {g->identity(), g->element("r")}, {g->identity(), g->element("s")}, Ring::Z(), 4);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.split_ok);
}

TEST_CASE("conjugation invariance through homotopy certificates") {
  auto g = make_dihedral_group(3);  // order 6
  PointedSubset px =
      PointedSubset::make(*g, {g->identity(), g->element("x"), g->element("y")});
  PointedSubset pg = PointedSubset::make(*g, g->elements());
  GroupComplexData dx = group_quiver(px);
  GroupComplexData dg = group_quiver(pg);
  OmegaComplex ox = omega_complex(dx.quiver, *dx.oracle, Ring::Q(), 3);
  OmegaComplex og = omega_complex(dg.quiver, *dg.oracle, Ring::Q(), 3);

  int conj = g->element("x");
  auto arrow_of_element = [&](const GroupComplexData& d, int e) {
    for (int i = 0; i < int(d.arrow_elements.size()); ++i)
      if (d.arrow_elements[i] == e) return i;
    return -1;
  };
  QuiverMorphism f, idm;
  f.vertex_map = {0};
  idm.vertex_map = {0};
  for (int a = 0; a < dx.quiver.arrow_count(); ++a) {
    int e = dx.arrow_elements[a];
    int fe = g->multiply(g->multiply(g->inverse(conj), e), conj);
    f.arrow_map.push_back(arrow_of_element(dg, fe));
    idm.arrow_map.push_back(arrow_of_element(dg, e));
    REQUIRE(f.arrow_map.back() >= 0);
  }
  std::vector<int> phi{arrow_of_element(dg, conj)};
  HomotopyReport rep =
      verify_homotopy(dx.quiver, ox, dg.quiver, *dg.oracle, og, f, idm, phi);
  CHECK(rep.natural);
  CHECK(rep.equal_on_homology);
}

TEST_CASE("subset transport along a group embedding gives equal components") {
  // X = {1, a} inside C4 = <a> versus the image {1, g2} inside C8 = <g>.
  auto c4 = make_cyclic_group(4);
  auto c8 = make_cyclic_group(8);
  PointedSubset p4 = PointedSubset::make(*c4, {c4->identity(), c4->element("g")});
  PointedSubset p8 = PointedSubset::make(*c8, {c8->identity(), c8->element("g2")});
  OmegaComplex o4 = omega_group(p4, Ring::Z(), 5);
  OmegaComplex o8 = omega_group(p8, Ring::Z(), 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(o4.dim(n) == o8.dim(n));
    if (n >= 1) CHECK(o4.deg[n].boundary == o8.deg[n].boundary);
  }
}

TEST_CASE("pontryagin product on the rank-2 lattice subset") {
  auto g = make_free_abelian_group(2);
  PointedSubset p =
      PointedSubset::make(*g, {g->element("0"), g->element("e1"), g->element("e2")});
  PontryaginReport rep = pontryagin(p, Ring::Q(), 4);
  CHECK(rep.homology_dims[0] == 1);
  CHECK(rep.homology_dims[1] == 2);
  CHECK(rep.homology_dims[2] == 1);
  CHECK(rep.unital);
  CHECK(rep.associative);
  CHECK(rep.graded_commutative);
  // Degree-1 generators multiply onto the degree-2 class.
  CHECK(rep.product_rank[1][1] == 1);
}

TEST_CASE("pontryagin rejects non-abelian ambients") {
  auto g = make_dihedral_group(3);
  PointedSubset p = PointedSubset::make(*g, {g->identity(), g->element("x")});
  CHECK_THROWS_AS(pontryagin(p, Ring::Q(), 3), ValidationError);
}

TEST_CASE("wedge of two full cyclic subgroups in their product is coacyclic") {
  auto c2 = make_cyclic_group(2);
  auto c3 = make_cyclic_group(3);
  auto prod = make_product_group(*c2, *c3);
  std::vector<int> subset;
  for (int e : c2->elements()) subset.push_back(prod->element("(" + c2->name(e) + ",1)"));
  for (int e : c3->elements()) subset.push_back(prod->element("(1," + c3->name(e) + ")"));
  PointedSubset p = PointedSubset::make(*prod, subset);
  CoacyclicReport rep = coacyclic_check(p, 3);
  CHECK(rep.coacyclic);
  // The product is cyclic of order six.
  CHECK(rep.subset_homology[1] == HomologyGroup{0, {6}});
  CHECK(rep.subset_homology[2] == HomologyGroup{0, {}});
}
