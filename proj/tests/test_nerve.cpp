#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "pathhom/groups.hpp"

using namespace pathhom;

namespace {

Digraph triangle() {
  return Digraph::make({"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}});
}

Digraph cycle3() {
  return Digraph::make({"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}});
}

Quiver parallel_pairs() {
  return Quiver::make({"u", "v", "w"}, {{"a1", "u", "v"},
                                        {"a2", "u", "v"},
                                        {"b1", "v", "w"},
                                        {"b2", "v", "w"}});
}

}  // namespace

TEST_CASE("moore basis") {
  Quiver tq = triangle().quiver();
  CHECK(moore_basis(tq, 0).size() == 3);
  auto m2 = moore_basis(tq, 2);
  REQUIRE(m2.size() == 1);
  // The unique composable pair is v0>v1 then v1>v2.
  CHECK(tq.arrows[m2[0][0]].label == "v0>v1");
  CHECK(tq.arrows[m2[0][1]].label == "v1>v2");
  CHECK(moore_basis(tq, 3).empty());

  Quiver pq = parallel_pairs();
  CHECK(moore_basis(pq, 2).size() == 4);
  CHECK(moore_basis(pq, 3).empty());
}

TEST_CASE("boundary into span, degree 1") {
  Quiver tq = triangle().quiver();
  auto oracle = make_square_commutative_oracle(tq);
  SpanBoundary sb = boundary_into_span(tq, *oracle, 1);
  CHECK(sb.sub_rows == 3);
  CHECK(sb.outside_names.empty());
  // d<a> = head - tail for each arrow.
  for (int a = 0; a < tq.arrow_count(); ++a) {
    for (int v = 0; v < 3; ++v) {
      Scalar expect = 0;
      if (v == tq.arrows[a].head) expect += 1;
      if (v == tq.arrows[a].tail) expect -= 1;
      CHECK(sb.matrix.at(v, a) == expect);
    }
  }
}

TEST_CASE("boundary into span, square-commutative degree 2") {
  Quiver tq = triangle().quiver();
  auto oracle = make_square_commutative_oracle(tq);
  SpanBoundary sb = boundary_into_span(tq, *oracle, 2);
  // One source tuple <v0>v1, v1>v2>; interior face goes to z(v0,v2).
  CHECK(sb.matrix.cols() == 1);
  CHECK(sb.sub_rows == 3);
  REQUIRE(sb.outside_names.size() == 1);
  CHECK(sb.outside_names[0] == "<z(v0,v2)>");
  // d = <b> - <z> + <a>.
  CHECK(sb.matrix.at(sb.sub_rows, 0) == -1);
  int plus = 0;
  for (int r = 0; r < sb.sub_rows; ++r)
    if (sb.matrix.at(r, 0) == 1) ++plus;
  CHECK(plus == 2);
}

TEST_CASE("triangle: square-commutative vs one-morphism ambient") {
  Quiver tq = triangle().quiver();
  auto zo = make_square_commutative_oracle(tq);
  OmegaComplex sc = omega_complex(tq, *zo, Ring::Z(), 4);
  CHECK(sc.dim(0) == 3);
  CHECK(sc.dim(1) == 3);
  CHECK(sc.dim(2) == 0);
  CHECK(sc.dim(3) == 0);
  auto h = sc.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{1, {}});
  CHECK(h[2] == HomologyGroup{0, {}});
  CHECK(sc.certified_through() == 3);

  auto cv = make_cv_oracle(tq);
  OmegaComplex gl = omega_complex(tq, *cv, Ring::Z(), 4);
  CHECK(gl.dim(2) == 1);
  auto hg = gl.homology();
  CHECK(hg[0] == HomologyGroup{1, {}});
  CHECK(hg[1] == HomologyGroup{0, {}});
  CHECK(hg[2] == HomologyGroup{0, {}});
}

TEST_CASE("directed 3-cycle under the one-morphism ambient") {
  Quiver cq = cycle3().quiver();
  auto cv = make_cv_oracle(cq);
  OmegaComplex om = omega_complex(cq, *cv, Ring::Z(), 3);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{1, {}});
  CHECK(h[2] == HomologyGroup{0, {}});
}

TEST_CASE("single vertex") {
  Digraph pt = Digraph::make({"p"}, {});
  Quiver q = pt.quiver();
  auto cv = make_cv_oracle(q);
  OmegaComplex om = omega_complex(q, *cv, Ring::Q(), 3);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  for (int n = 1; n <= 2; ++n) CHECK(h[n].is_zero());
}

TEST_CASE("parallel pairs quiver: 0 -> K^3 -> K^4 -> K^3 -> 0") {
  Quiver pq = parallel_pairs();
  auto zo = make_square_commutative_oracle(pq);
  OmegaComplex om = omega_complex(pq, *zo, Ring::Z(), 3);
  CHECK(om.dim(0) == 3);
  CHECK(om.dim(1) == 4);
  CHECK(om.dim(2) == 3);
  CHECK(om.dim(3) == 0);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{0, {}});
  CHECK(h[2] == HomologyGroup{1, {}});

  // The 2-cycle (a1,b1) - (a1,b2) - (a2,b1) + (a2,b2) spans ker(d_2).
  auto& d2 = om.deg[2];
  REQUIRE(d2.nq_names ==
          std::vector<std::string>{"<a1,b1>", "<a1,b2>", "<a2,b1>", "<a2,b2>"});
  Mat cyc(4, 1);
  cyc.at(0, 0) = 1;
  cyc.at(1, 0) = -1;
  cyc.at(2, 0) = -1;
  cyc.at(3, 0) = 1;
  Mat cyc_in_omega = solve_in_span(d2.basis, cyc, Ring::Z());
  Mat bd = mat_canon(om.deg[2].boundary * cyc_in_omega, Ring::Z());
  CHECK(bd.is_zero());
  Mat ker = kernel_basis(om.deg[2].boundary, Ring::Z());
  CHECK(same_span(mat_canon(d2.basis * ker, Ring::Z()), cyc, Ring::Z()));
}

TEST_CASE("free category ambient kills degree two and up") {
  for (const Quiver& q : {triangle().quiver(), cycle3().quiver(), parallel_pairs()}) {
    auto fr = make_free_category_oracle(q);
    OmegaComplex om = omega_complex(q, *fr, Ring::Z(), 4);
    CHECK(om.dim(0) == q.vertex_count());
    CHECK(om.dim(1) == q.arrow_count());
    for (int n = 2; n <= 4; ++n) CHECK(om.dim(n) == 0);
  }
  Quiver cq = cycle3().quiver();
  auto fr = make_free_category_oracle(cq);
  OmegaComplex om = omega_complex(cq, *fr, Ring::Z(), 3);
  auto h = om.homology();
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{1, {}});
}

TEST_CASE("psi: full ambient gives zero anti-complex") {
  // Complete digraph: the arrow span is the whole ambient Moore complex.
  Digraph full = Digraph::make({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  Quiver q = full.quiver();
  auto cv = make_cv_oracle(q);
  BoundedComplex psi_c = psi_complex(q, *cv, Ring::Q(), 3);
  for (int n = 0; n <= 2; ++n) CHECK(psi_c.homology_in(n).is_zero());
}

TEST_CASE("psi: anti-homology shifts homology for one-morphism ambients") {
  Quiver cq = cycle3().quiver();
  auto cv = make_cv_oracle(cq);
  OmegaComplex om = omega_complex(cq, *cv, Ring::Q(), 4);
  BoundedComplex psi_c = psi_complex(cq, *cv, Ring::Q(), 4);
  auto h = om.homology();
  for (int n = 1; n + 1 <= 3; ++n) CHECK(h[n] == psi_c.homology_in(n + 1));
  // One-vertex digraph: anti-homology vanishes in positive degrees.
  Quiver pt = Digraph::make({"p"}, {}).quiver();
  auto cv1 = make_cv_oracle(pt);
  BoundedComplex psi_pt = psi_complex(pt, *cv1, Ring::Q(), 3);
  for (int n = 1; n <= 2; ++n) CHECK(psi_pt.homology_in(n).is_zero());
}

TEST_CASE("psi rejects infinite ambients") {
  Quiver cq = cycle3().quiver();
  auto fr = make_free_category_oracle(cq);
  CHECK_THROWS_AS(psi_complex(cq, *fr, Ring::Q(), 3), ValidationError);
}

TEST_CASE("homotopy certificate: identity morphisms") {
  Quiver tq = triangle().quiver();
  auto cv = make_cv_oracle(tq);
  OmegaComplex om = omega_complex(tq, *cv, Ring::Q(), 3);
  QuiverMorphism id;
  id.vertex_map = {0, 1, 2};
  id.arrow_map = {0, 1, 2};
  std::vector<int> phi(3, -1);
  HomotopyReport rep = verify_homotopy(tq, om, tq, *cv, om, id, id, phi);
  CHECK(rep.natural);
  CHECK(rep.equal_on_homology);
}

TEST_CASE("homotopy certificate: one-step homotopy on a digraph") {
  // G: two parallel chains a -> b, a -> b' with edges b -> c, b' -> c and a
  // connecting edge b -> b'. f routes through b, g through b'.
  Digraph g = Digraph::make(
      {"a", "b", "bp", "c"},
      {{"a", "b"}, {"a", "bp"}, {"b", "c"}, {"bp", "c"}, {"b", "bp"}});
  Digraph src = Digraph::make({"x", "y"}, {{"x", "y"}});
  Quiver sq = src.quiver(), gq = g.quiver();
  auto cv_s = make_cv_oracle(sq);
  auto cv_g = make_cv_oracle(gq);
  OmegaComplex om_s = omega_complex(sq, *cv_s, Ring::Q(), 3);
  OmegaComplex om_g = omega_complex(gq, *cv_g, Ring::Q(), 3);

  auto arrow_index = [&](const Quiver& q, const std::string& label) {
    for (int i = 0; i < q.arrow_count(); ++i)
      if (q.arrows[i].label == label) return i;
    REQUIRE(false);
    return -1;
  };
  // Vertices of gq are sorted: a, b, bp, c.
  QuiverMorphism f, h;
  f.vertex_map = {gq.vertex_index("a"), gq.vertex_index("b")};
  f.arrow_map = {arrow_index(gq, "a>b")};
  h.vertex_map = {gq.vertex_index("a"), gq.vertex_index("bp")};
  h.arrow_map = {arrow_index(gq, "a>bp")};
  // Certificate: phi_x = identity at a is not allowed since f(x) = g(x) = a;
  // phi_y = the edge b -> bp.
  std::vector<int> phi = {-1, arrow_index(gq, "b>bp")};
  HomotopyReport rep = verify_homotopy(sq, om_s, gq, *cv_g, om_g, f, h, phi);
  CHECK(rep.natural);
  CHECK(rep.equal_on_homology);

  // An invalid certificate is rejected.
  std::vector<int> bad = {-1, arrow_index(gq, "b>c")};
  CHECK_THROWS_AS(verify_homotopy(sq, om_s, gq, *cv_g, om_g, f, h, bad), ValidationError);
}

TEST_CASE("the component complex depends only on arrows and their pairwise composites") {
  // For a quiver without directed squares, distinct ambients that classify
  // all arrow composites as fresh and distinct give identical matrices.
  Quiver q = Quiver::make({"a", "b", "c", "d"},
                          {{"p", "a", "b"}, {"q", "b", "c"}, {"r", "c", "d"}, {"s", "a", "c"}});
  REQUIRE(!q.has_directed_square());
  auto z = make_square_commutative_oracle(q);
  auto fr = make_free_category_oracle(q);
  OmegaComplex oz = omega_complex(q, *z, Ring::Z(), 4);
  OmegaComplex of = omega_complex(q, *fr, Ring::Z(), 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(oz.deg[n].basis == of.deg[n].basis);
    if (n >= 1) CHECK(oz.deg[n].boundary == of.deg[n].boundary);
  }
}

TEST_CASE("shuffle map in bidegree (1,1) interleaves with alternating signs") {
  Digraph e1 = Digraph::make({"a", "b"}, {{"a", "b"}});
  Digraph e2 = Digraph::make({"c", "d"}, {{"c", "d"}});
  Quiver lq = e1.quiver(), rq = e2.quiver();
  BoxQuiver bq = box(lq, rq);
  OmegaComplex L = sc(lq, Ring::Z(), 2);
  OmegaComplex R = sc(rq, Ring::Z(), 2);
  OmegaComplex B = sc(bq.q, Ring::Z(), 2);
  EzAw ez = ez_aw(L, R, B, bq, 2);
  // Degree 2 source is the single pair arrow (x) arrow; the image must be
  // the left-then-right chain minus the right-then-left chain.
  REQUIRE(B.dim(2) == 1);
  Mat img = mat_canon(B.deg[2].basis * ez.epsilon[2], Ring::Z());
  REQUIRE(img.cols() == 1);
  std::map<std::string, Scalar> by_name;
  for (int r = 0; r < int(B.deg[2].nq_names.size()); ++r)
    if (img.at(r, 0) != 0) by_name[B.deg[2].nq_names[r]] = img.at(r, 0);
  REQUIRE(by_name.size() == 2);
  CHECK(by_name.at("<(a>b,c),(b,c>d)>") == 1);
  CHECK(by_name.at("<(a,c>d),(a>b,d)>") == -1);
}

TEST_CASE("induced maps restrict to omega") {
  Quiver tq = triangle().quiver();
  auto cv = make_cv_oracle(tq);
  OmegaComplex om = omega_complex(tq, *cv, Ring::Z(), 3);
  QuiverMorphism id;
  id.vertex_map = {0, 1, 2};
  id.arrow_map = {0, 1, 2};
  auto maps = induced_omega_maps(om, om, id);
  for (int n = 0; n <= 3; ++n) CHECK(maps[n] == Mat::identity(om.dim(n)));
}

TEST_CASE("span-only route agrees with the full ambient pair") {
  // The engine computes inside the allowed span with only one layer of
  // composites; the generic route takes the maximal subcomplex of the whole
  // ambient Moore complex. Both must produce the same components.
  std::vector<Quiver> inputs{triangle().quiver(), cycle3().quiver(), parallel_pairs()};
  for (const Quiver& q : inputs) {
    for (int which = 0; which < 2; ++which) {
      std::unique_ptr<CompositionOracle> o1, o2;
      if (which == 0 && q.power() > 1) continue;  // one-morphism ambient needs a digraph
      if (which == 0) {
        o1 = make_cv_oracle(q);
        o2 = make_cv_oracle(q);
      } else {
        o1 = make_square_commutative_oracle(q);
        o2 = make_square_commutative_oracle(q);
      }
      OmegaComplex fast = omega_complex(q, *o1, Ring::Z(), 3);
      SubComplex slow = omega(ambient_pair(q, *o2, Ring::Z(), 3));
      for (int n = 0; n <= 3; ++n) CHECK(fast.dim(n) == slow.complex.dim(n));
      for (int n = 0; n + 1 <= 3; ++n)
        CHECK(fast.complex().homology_in(n) == slow.complex.homology_in(n));
    }
  }
}

TEST_CASE("span-only route agrees with the ambient pair for a finite group") {
  auto g = make_cyclic_group(3);
  PointedSubset p = PointedSubset::make(*g, {g->identity(), g->element("g")});
  GroupComplexData data = group_quiver(p);
  OmegaComplex fast = omega_complex(data.quiver, *data.oracle, Ring::Z(), 4);
  GroupComplexData data2 = group_quiver(p);
  SubComplex slow = omega(ambient_pair(data2.quiver, *data2.oracle, Ring::Z(), 4));
  for (int n = 0; n <= 4; ++n) CHECK(fast.dim(n) == slow.complex.dim(n));
  for (int n = 0; n + 1 <= 4; ++n)
    CHECK(fast.complex().homology_in(n) == slow.complex.homology_in(n));
}
