#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pathhom/homology.hpp"
#include "pathhom/snf.hpp"

using namespace pathhom;

namespace {

Mat random_int_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
  return m;
}

bool is_divisibility_chain(const std::vector<Int>& d) {
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0 || d[i + 1] < 0) return false;
    if (d[i + 1] != 0 && (d[i] == 0 || d[i + 1] % d[i] != 0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form: diag(2,3) -> diag(1,6)") {
  Mat m{{2, 0}, {0, 3}};
  SmithForm sf = smith_normal_form(m);
  CHECK(sf.diagonal == std::vector<Int>{1, 6});
  CHECK(sf.u * m * sf.v == sf.s);
  CHECK(abs(determinant(sf.u)) == 1);
  CHECK(abs(determinant(sf.v)) == 1);
}

TEST_CASE("smith normal form: zero and identity") {
  Mat z = Mat::zero(2, 3);
  SmithForm sfz = smith_normal_form(z);
  CHECK(sfz.s == z);
  CHECK(sfz.u == Mat::identity(2));
  CHECK(sfz.v == Mat::identity(3));

  for (int n : {1, 3, 5}) {
    SmithForm sf = smith_normal_form(Mat::identity(n));
    CHECK(sf.s == Mat::identity(n));
  }
}

TEST_CASE("smith normal form: random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
    Mat m = random_int_matrix(rng, rows, cols, -9, 9);
    SmithForm sf = smith_normal_form(m);
    CHECK(sf.u * m * sf.v == sf.s);
    CHECK(is_divisibility_chain(sf.diagonal));
    CHECK(abs(determinant(sf.u)) == 1);
    CHECK(abs(determinant(sf.v)) == 1);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (r != c) CHECK(sf.s.at(r, c) == 0);
    // Determinism.
    SmithForm sf2 = smith_normal_form(m);
    CHECK(sf2.s == sf.s);
    CHECK(sf2.u == sf.u);
    CHECK(sf2.v == sf.v);
  }
}

TEST_CASE("kernel basis examples") {
  Mat m1{{1, 1}};
  Mat k1 = kernel_basis(m1, Ring::Q());
  REQUIRE(k1.cols() == 1);
  CHECK(k1.at(0, 0) == 1);
  CHECK(k1.at(1, 0) == -1);

  Mat m2{{2}};
  CHECK(kernel_basis(m2, Ring::Z()).cols() == 0);

  Mat m3{{1, 2}, {2, 4}};
  Mat k3 = kernel_basis(m3, Ring::Z());
  REQUIRE(k3.cols() == 1);
  CHECK(k3.at(0, 0) == 2);
  CHECK(k3.at(1, 0) == -1);
}

TEST_CASE("integer kernel is saturated") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
    Mat m = random_int_matrix(rng, rows, cols, -4, 4);
    Mat k = kernel_basis(m, Ring::Z());
    CHECK((m * k).is_zero());
    if (k.cols() > 0) {
      SmithForm sf = smith_normal_form(k);
      for (int i = 0; i < k.cols(); ++i) CHECK(sf.diagonal[i] == 1);
    }
    // Rank-nullity against the rational kernel.
    CHECK(k.cols() == kernel_basis(m, Ring::Q()).cols());
  }
}

TEST_CASE("kernel over F_p differs from Q where p divides") {
  Mat m{{2}};
  CHECK(kernel_basis(m, Ring::Q()).cols() == 0);
  CHECK(kernel_basis(m, Ring::Fp(2)).cols() == 1);
}

TEST_CASE("homology_at examples") {
  // Z --2--> Z --0--> 0-ish: quotient Z/2 at the middle.
  Mat d_out = Mat::zero(1, 1);
  Mat d_in{{2}};
  HomologyGroup h = homology_at(d_out, d_in, Ring::Z());
  CHECK(h.rank == 0);
  CHECK(h.torsion == std::vector<Int>{2});
  CHECK(h.str(Ring::Z()) == "Z/2");

  // Edge boundary of the directed 3-cycle: H1 has rank 1.
  Mat d1{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}};
  HomologyGroup h1 = homology_at(d1, Mat::zero(3, 0), Ring::Z());
  CHECK(h1.rank == 1);
  CHECK(h1.torsion.empty());

  HomologyGroup h5 = homology_at(Mat::zero(5, 5), Mat::zero(5, 5), Ring::Z());
  CHECK(h5.rank == 5);
  CHECK(h5.torsion.empty());
}

TEST_CASE("homology_at rejects non-complexes") {
  Mat d_out{{1}};
  Mat d_in{{1}};
  CHECK_THROWS_AS(homology_at(d_out, d_in, Ring::Z()), ValidationError);
}

TEST_CASE("homology_at agrees with rank-nullity over fields") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    int n2 = 1 + int(rng() % 4), n1 = 1 + int(rng() % 4), n0 = 1 + int(rng() % 4);
    Ring f = (trial % 2) ? Ring::Fp(3) : Ring::Q();
    Mat d1 = mat_canon(random_int_matrix(rng, n0, n1, -3, 3), f);
    Mat k = kernel_basis(d1, f);
    Mat coeff = mat_canon(random_int_matrix(rng, k.cols(), n2, -3, 3), f);
    Mat d2 = mat_canon(k * coeff, f);
    HomologyGroup h = homology_at(d1, d2, f);
    CHECK(h.rank == kernel_basis(d1, f).cols() - rank(d2, f));
    CHECK(h.torsion.empty());
  }
}

TEST_CASE("solve_in_span and quotient coordinates") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 2 + int(rng() % 4);
    Mat g = random_int_matrix(rng, m, 1 + int(rng() % m), -3, 3);
    Mat b = column_basis(g, Ring::Z());
    if (b.cols() == 0) continue;
    Mat coeff = random_int_matrix(rng, b.cols(), 2, -5, 5);
    Mat target = b * coeff;
    Mat x = solve_in_span(b, target, Ring::Z());
    CHECK(b * x == target);
  }
  // Saturated lattice quotient coordinates.
  Mat b{{1, 0}, {0, 2}, {0, 0}};
  Mat sat = kernel_basis(Mat{{0, 0, 1}}, Ring::Z());
  Mat u = quotient_coordinates(sat, Ring::Z());
  CHECK(u.rows() == 3);
  CHECK((u * sat) == Mat::vcat(Mat::identity(2), Mat::zero(1, 2)));
}

TEST_CASE("abelian group arithmetic") {
  HomologyGroup z2{0, {2}}, z6{0, {6}}, free2{2, {}};
  CHECK(group_direct_sum(z2, z6) == HomologyGroup{0, {2, 6}});
  CHECK(group_tensor(z2, z6) == HomologyGroup{0, {2}});
  CHECK(group_tor(z2, z6) == HomologyGroup{0, {2}});
  CHECK(group_tensor(free2, z2) == HomologyGroup{0, {2, 2}});
  CHECK(group_tensor(free2, free2).rank == 4);
  CHECK(group_direct_sum(HomologyGroup{0, {2}}, HomologyGroup{0, {2}}) ==
        HomologyGroup{0, {2, 2}});
  CHECK(group_direct_sum(HomologyGroup{0, {2}}, HomologyGroup{0, {3}}) ==
        HomologyGroup{0, {6}});
}

TEST_CASE("lattice membership with dependent generators") {
  // 1 = -1*2 + 1*3 lies in the lattice of {2, 3} even though the pivoting
  // solution against the raw generators is fractional.
  Mat gens{{2, 3}};
  Mat one{{1}};
  CHECK(in_span(gens, one, Ring::Z()));
  Mat half_only{{2, 4}};
  CHECK(!in_span(half_only, one, Ring::Z()));
  CHECK(in_span(half_only, Mat{{6}}, Ring::Z()));
}
