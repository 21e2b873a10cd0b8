#pragma once
#include <vector>

#include "pathhom/errors.hpp"

namespace pathhom {

// Order-preserving map [n] -> [m] whose image is an interval and whose
// consecutive steps differ by 0 or 1. Stored by its value sequence.
struct ConnectedMap {
  int codomain = 0;               // target is [codomain]
  std::vector<int> values;        // f(0), ..., f(n); size n+1

  int domain() const { return int(values.size()) - 1; }
  int operator()(int i) const { return values[i]; }
  bool operator==(const ConnectedMap&) const = default;
  bool is_connected() const;
  bool is_surjective() const;
  bool is_injective() const;
  std::vector<int> kernel() const;  // { i : f(i) == f(i+1) }

  static ConnectedMap identity(int n);
  // Codegeneracy s^(i): [n+1] -> [n], i taken twice.
  static ConnectedMap codegeneracy(int i, int n);
  // Exterior cofaces [n-1] -> [n]: tail misses 0, head misses n.
  static ConnectedMap tail_coface(int n);
  static ConnectedMap head_coface(int n);
  // Coface d^(i): [n-1] -> [n] (general; connected only for i in {0, n}).
  static ConnectedMap coface(int i, int n);
};

// g after f.
ConnectedMap compose(const ConnectedMap& g, const ConnectedMap& f);

// Unique presentation h^a t^b s^(i1)...s^(im) with i1 < ... < im.
struct NormalForm {
  int h_count = 0;
  int t_count = 0;
  std::vector<int> degeneracies;
  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const ConnectedMap& f);
ConnectedMap recompose(const NormalForm& nf, int domain, int codomain);

// All connected order-preserving maps [n] -> [m].
std::vector<ConnectedMap> enumerate_connected_maps(int n, int m);

// (l,k)-shuffle: mu (length l) and nu (length k) partition {0..k+l-1}.
struct Shuffle {
  std::vector<int> mu, nu;
  bool operator==(const Shuffle&) const = default;
};

int shuffle_sign(const Shuffle& s);
std::vector<std::pair<Shuffle, int>> enumerate_shuffles(int l, int k);

// Surjection [k+l] -> [k] collapsing exactly the positions of mu.
ConnectedMap surjection_from_kernel(const std::vector<int>& mu, int n);

// Pair (f, g) with common domain [n] and Ker(f) u Ker(g) = [n-1].
struct SquarePair {
  ConnectedMap f, g;
  bool operator==(const SquarePair&) const = default;
};

std::vector<SquarePair> enumerate_ppi_square(int n, int k, int l);

struct StandardDecomposition {
  ConnectedMap alpha;   // injective
  ConnectedMap sigma;   // surjective
  std::vector<int> mu;  // f side degeneracies
  ConnectedMap beta;    // injective
  std::vector<int> nu;  // g side degeneracies
};

StandardDecomposition standard_decomposition(const SquarePair& p);

// Weighted digraph on Sh(l,k); an edge (mu,nu) -i-> (mu',nu') swaps the
// elementary inversion (i-1 in nu, i in mu).
struct ShuffleGraph {
  std::vector<Shuffle> vertices;
  struct Edge {
    int from, to, weight;
  };
  std::vector<Edge> edges;
  bool weakly_connected() const;
};

ShuffleGraph shuffle_graph(int l, int k);

}  // namespace pathhom
