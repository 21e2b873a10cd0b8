#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "pathhom/nerve.hpp"
#include "pathhom/path_category.hpp"

using namespace pathhom;

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("normal form examples") {
  for (int n : {0, 1, 4}) {
    NormalForm nf = normal_form(ConnectedMap::identity(n));
    CHECK(nf == NormalForm{0, 0, {}});
  }
  // s^1 : [3] -> [2]
  ConnectedMap s1 = ConnectedMap::codegeneracy(1, 2);
  CHECK(normal_form(s1) == NormalForm{0, 0, {1}});
  // [1] -> [3], 0 -> 1, 1 -> 2: the unique injective connected map found by
  // enumeration that hits {1,2}; its presentation is one h and one t.
  ConnectedMap f;
  f.codomain = 3;
  f.values = {1, 2};
  bool found = false;
  for (const auto& g : enumerate_connected_maps(1, 3))
    if (g.is_injective() && g == f) found = true;
  CHECK(found);
  CHECK(normal_form(f) == NormalForm{1, 1, {}});
}

TEST_CASE("normal form rejects non-connected maps") {
  ConnectedMap f;
  f.codomain = 3;
  f.values = {0, 2};
  CHECK_THROWS_AS(normal_form(f), ValidationError);
}

TEST_CASE("normal_form round trips and composition stays connected") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& f : enumerate_connected_maps(n, m)) {
        CHECK(f.is_connected());
        NormalForm nf = normal_form(f);
        CHECK(recompose(nf, n, m) == f);
        for (const auto& g : enumerate_connected_maps(m, 3)) {
          ConnectedMap h = compose(g, f);
          CHECK(h.is_connected());
        }
      }
}

TEST_CASE("shuffle enumeration counts and signs") {
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= 4; ++k) {
      auto shs = enumerate_shuffles(l, k);
      CHECK(long(shs.size()) == binomial(k + l, k));
    }
  auto sh01 = enumerate_shuffles(0, 3);
  REQUIRE(sh01.size() == 1);
  CHECK(sh01[0].second == 1);

  auto sh11 = enumerate_shuffles(1, 1);
  REQUIRE(sh11.size() == 2);
  CHECK(sh11[0].second * sh11[1].second == -1);

  // The (4,3)-shuffle ((0,2,3,5),(1,4,6)) appears.
  auto sh43 = enumerate_shuffles(4, 3);
  Shuffle target{{0, 2, 3, 5}, {1, 4, 6}};
  bool found = false;
  for (auto& [s, sign] : sh43)
    if (s == target) found = true;
  CHECK(found);
}

TEST_CASE("ppi square enumeration") {
  // n = 0: all vertex pairs.
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      CHECK(int(enumerate_ppi_square(0, k, l).size()) == (k + 1) * (l + 1));

  // Surjective pairs with n = k + l are exactly the shuffle pairs.
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      int n = k + l;
      int surj_nondeg = 0;
      for (const auto& p : enumerate_ppi_square(n, k, l)) {
        if (!p.f.is_surjective() || !p.g.is_surjective()) continue;
        // non-degenerate pair: kernels disjoint
        std::vector<int> kf = p.f.kernel(), kg = p.g.kernel();
        std::set<int> inter;
        for (int x : kf)
          if (std::count(kg.begin(), kg.end(), x)) inter.insert(x);
        if (!inter.empty()) continue;
        ++surj_nondeg;
        auto d = standard_decomposition(p);
        CHECK(d.alpha == ConnectedMap::identity(k));
        CHECK(d.beta == ConnectedMap::identity(l));
        CHECK(d.sigma == ConnectedMap::identity(k));
      }
      CHECK(long(surj_nondeg) == binomial(k + l, k));
      // Non-degenerate surjective pairs vanish if n != k + l.
      for (int n2 = 0; n2 <= k + l + 1; ++n2) {
        if (n2 == k + l) continue;
        for (const auto& p : enumerate_ppi_square(n2, k, l)) {
          if (!p.f.is_surjective() || !p.g.is_surjective()) continue;
          std::vector<int> kf = p.f.kernel(), kg = p.g.kernel();
          bool disjoint = true;
          for (int x : kf)
            if (std::count(kg.begin(), kg.end(), x)) disjoint = false;
          CHECK(!disjoint);
        }
      }
    }
}

TEST_CASE("square pairs count the paths of a box of chains") {
  auto chain = [](int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("c" + std::to_string(10 + i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({names[i], names[i + 1]});
    return Digraph::make(names, edges);
  };
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      BoxQuiver bq = box(chain(k).quiver(), chain(l).quiver());
      for (int n = 0; n <= 4; ++n) {
        size_t paths = moore_basis(bq.q, n).size();
        size_t pairs = 0;
        for (const auto& p : enumerate_ppi_square(n, k, l)) {
          // Non-degenerate pairs only: the kernels must be disjoint.
          auto kf = p.f.kernel(), kg = p.g.kernel();
          bool disjoint = true;
          for (int x : kf)
            if (std::count(kg.begin(), kg.end(), x)) disjoint = false;
          if (disjoint) ++pairs;
        }
        CHECK(paths == pairs);
      }
    }
}

TEST_CASE("standard decomposition reproduces the pair") {
  ConnectedMap id0 = ConnectedMap::identity(0);
  auto d0 = standard_decomposition({id0, id0});
  CHECK(d0.alpha == id0);
  CHECK(d0.beta == id0);
  CHECK(d0.sigma == id0);
  CHECK(d0.mu.empty());
  CHECK(d0.nu.empty());

  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        for (const auto& p : enumerate_ppi_square(n, k, l)) {
          auto d = standard_decomposition(p);
          CHECK(d.alpha.is_injective());
          CHECK(d.beta.is_injective());
          CHECK(d.sigma.is_surjective());
          ConnectedMap smu = surjection_from_kernel(d.mu, n);
          ConnectedMap snu = surjection_from_kernel(d.nu, n);
          CHECK(compose(d.alpha, compose(d.sigma, smu)) == p.f);
          CHECK(compose(d.beta, snu) == p.g);
        }
}

TEST_CASE("shuffle graph") {
  auto g10 = shuffle_graph(1, 0);
  CHECK(g10.vertices.size() == 1);
  CHECK(g10.edges.empty());

  // The weight-5 edge ((0,2,3,5),(1,4,6)) -> ((0,2,3,4),(1,5,6)).
  auto g43 = shuffle_graph(4, 3);
  Shuffle from{{0, 2, 3, 5}, {1, 4, 6}};
  Shuffle to{{0, 2, 3, 4}, {1, 5, 6}};
  bool found = false;
  for (const auto& e : g43.edges)
    if (g43.vertices[e.from] == from && g43.vertices[e.to] == to && e.weight == 5) found = true;
  CHECK(found);

  for (int l = 0; l <= 5; ++l)
    for (int k = 0; k <= 5; ++k) {
      auto g = shuffle_graph(l, k);
      CHECK(g.weakly_connected());
      for (const auto& e : g.edges)
        CHECK(shuffle_sign(g.vertices[e.from]) == -shuffle_sign(g.vertices[e.to]));
    }
}

TEST_CASE("shuffle graph edges collapse to a common surjection pair") {
  // For an edge of weight i: s^mu d^i = s^mu' d^i, both components surjective,
  // kernels disjoint and jointly covering [n-2] minus {i-1}. Exhaustive for
  // k + l <= 8.
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= 4 && k + l <= 8; ++k) {
      int n = k + l;
      auto g = shuffle_graph(l, k);
      for (const auto& e : g.edges) {
        const Shuffle& a = g.vertices[e.from];
        const Shuffle& b = g.vertices[e.to];
        int i = e.weight;
        ConnectedMap di = ConnectedMap::coface(i, n);
        ConnectedMap sig = compose(surjection_from_kernel(a.mu, n), di);
        ConnectedMap tau = compose(surjection_from_kernel(a.nu, n), di);
        ConnectedMap sig2 = compose(surjection_from_kernel(b.mu, n), di);
        ConnectedMap tau2 = compose(surjection_from_kernel(b.nu, n), di);
        CHECK(sig == sig2);
        CHECK(tau == tau2);
        CHECK(sig.is_surjective());
        CHECK(tau.is_surjective());
        std::vector<int> ks = sig.kernel(), kt = tau.kernel();
        std::set<int> uni(ks.begin(), ks.end());
        for (int x : kt) {
          CHECK(!std::count(ks.begin(), ks.end(), x));
          uni.insert(x);
        }
        std::set<int> expect;
        for (int x = 0; x <= n - 2; ++x)
          if (x != i - 1) expect.insert(x);
        CHECK(uni == expect);
      }
    }
}
