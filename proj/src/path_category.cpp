#include "pathhom/path_category.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pathhom {

bool ConnectedMap::is_connected() const {
  if (values.empty()) return false;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    int step = values[i + 1] - values[i];
    if (step != 0 && step != 1) return false;
  }
  return values.front() >= 0 && values.back() <= codomain;
}

bool ConnectedMap::is_surjective() const {
  return values.front() == 0 && values.back() == codomain && is_connected();
}

bool ConnectedMap::is_injective() const {
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] == values[i]) return false;
  return true;
}

std::vector<int> ConnectedMap::kernel() const {
  std::vector<int> ker;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] == values[i + 1]) ker.push_back(int(i));
  return ker;
}

ConnectedMap ConnectedMap::identity(int n) {
  ConnectedMap f;
  f.codomain = n;
  f.values.resize(n + 1);
  std::iota(f.values.begin(), f.values.end(), 0);
  return f;
}

ConnectedMap ConnectedMap::codegeneracy(int i, int n) {
  ConnectedMap f;
  f.codomain = n;
  for (int j = 0; j <= n + 1; ++j) f.values.push_back(j <= i ? j : j - 1);
  return f;
}

ConnectedMap ConnectedMap::tail_coface(int n) { return coface(0, n); }
ConnectedMap ConnectedMap::head_coface(int n) { return coface(n, n); }

ConnectedMap ConnectedMap::coface(int i, int n) {
  ConnectedMap f;
  f.codomain = n;
  for (int j = 0; j <= n - 1; ++j) f.values.push_back(j < i ? j : j + 1);
  return f;
}

ConnectedMap compose(const ConnectedMap& g, const ConnectedMap& f) {
  internal_check(f.codomain == g.domain(), "ComposeMismatch", "connected map composition");
  ConnectedMap h;
  h.codomain = g.codomain;
  h.values.reserve(f.values.size());
  for (int v : f.values) h.values.push_back(g.values[v]);
  return h;
}

NormalForm normal_form(const ConnectedMap& f) {
  require(f.is_connected(), "NotConnected", "map image is not an interval");
  NormalForm nf;
  nf.t_count = f.values.front();
  nf.h_count = f.codomain - f.values.back();
  nf.degeneracies = f.kernel();
  return nf;
}

ConnectedMap recompose(const NormalForm& nf, int domain, int codomain) {
  ConnectedMap f = surjection_from_kernel(nf.degeneracies, domain);
  f.codomain = codomain;
  for (int& v : f.values) v += nf.t_count;
  internal_check(f.values.back() + nf.h_count == codomain, "RecomposeMismatch",
                 "normal form does not fit codomain");
  return f;
}

std::vector<ConnectedMap> enumerate_connected_maps(int n, int m) {
  std::vector<ConnectedMap> out;
  // f(0) = start, then n steps of 0/1 staying within [0, m].
  for (int start = 0; start <= m; ++start) {
    std::vector<int> vals{start};
    std::function<void()> rec = [&] {
      if (int(vals.size()) == n + 1) {
        ConnectedMap f;
        f.codomain = m;
        f.values = vals;
        out.push_back(f);
        return;
      }
      for (int step = 0; step <= 1; ++step) {
        int next = vals.back() + step;
        if (next > m) continue;
        vals.push_back(next);
        rec();
        vals.pop_back();
      }
    };
    rec();
  }
  return out;
}

int shuffle_sign(const Shuffle& s) {
  // Parity of the permutation sorting (nu | mu); equivalently the number of
  // pairs mu_i < nu_j.
  long inv = 0;
  for (int a : s.mu)
    for (int b : s.nu)
      if (a < b) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<Shuffle, int>> enumerate_shuffles(int l, int k) {
  std::vector<std::pair<Shuffle, int>> out;
  int n = k + l;
  std::vector<int> mu;
  std::function<void(int)> rec = [&](int next) {
    if (int(mu.size()) == l) {
      Shuffle s;
      s.mu = mu;
      for (int i = 0; i < n; ++i)
        if (!std::binary_search(mu.begin(), mu.end(), i)) s.nu.push_back(i);
      int sign = shuffle_sign(s);
      out.emplace_back(std::move(s), sign);
      return;
    }
    for (int i = next; i < n; ++i) {
      mu.push_back(i);
      rec(i + 1);
      mu.pop_back();
    }
  };
  rec(0);
  return out;
}

ConnectedMap surjection_from_kernel(const std::vector<int>& mu, int n) {
  ConnectedMap f;
  f.values.resize(n + 1);
  int v = 0;
  for (int i = 0; i < n; ++i) {
    f.values[i] = v;
    if (!std::binary_search(mu.begin(), mu.end(), i)) ++v;
  }
  f.values[n] = v;
  f.codomain = v;
  return f;
}

std::vector<SquarePair> enumerate_ppi_square(int n, int k, int l) {
  std::vector<SquarePair> out;
  auto fs = enumerate_connected_maps(n, k);
  auto gs = enumerate_connected_maps(n, l);
  for (const auto& f : fs)
    for (const auto& g : gs) {
      bool covers = true;
      for (int i = 0; i < n; ++i)
        if (f.values[i + 1] != f.values[i] && g.values[i + 1] != g.values[i]) {
          covers = false;
          break;
        }
      if (covers) out.push_back({f, g});
    }
  return out;
}

StandardDecomposition standard_decomposition(const SquarePair& p) {
  const ConnectedMap& f = p.f;
  const ConnectedMap& g = p.g;
  int n = f.domain();
  internal_check(g.domain() == n, "ComposeMismatch", "pair domain mismatch");
  StandardDecomposition d;
  d.nu = g.kernel();
  // g = beta s^nu with beta injective.
  ConnectedMap snu = surjection_from_kernel(d.nu, n);
  d.beta.codomain = g.codomain;
  int lprime = snu.codomain;
  d.beta.values.resize(lprime + 1);
  for (int i = 0; i <= n; ++i) d.beta.values[snu.values[i]] = g.values[i];
  // mu = complement of nu; Ker(f) covers it exactly when the pair is square.
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(d.nu.begin(), d.nu.end(), i)) d.mu.push_back(i);
  for (int i : d.mu)
    require(f.values[i] == f.values[i + 1], "NotSquarePair",
            "Ker(f) u Ker(g) does not cover [n-1]");
  ConnectedMap smu = surjection_from_kernel(d.mu, n);
  int kprime = smu.codomain;
  // f = f' s^mu, then f' = alpha sigma (epi-mono).
  ConnectedMap fprime;
  fprime.codomain = f.codomain;
  fprime.values.resize(kprime + 1);
  for (int i = 0; i <= n; ++i) fprime.values[smu.values[i]] = f.values[i];
  d.sigma = surjection_from_kernel(fprime.kernel(), kprime);
  int kpp = d.sigma.codomain;
  d.alpha.codomain = f.codomain;
  d.alpha.values.resize(kpp + 1);
  for (int i = 0; i <= kprime; ++i) d.alpha.values[d.sigma.values[i]] = fprime.values[i];
  return d;
}

bool ShuffleGraph::weakly_connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const Edge& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertices.size();
}

ShuffleGraph shuffle_graph(int l, int k) {
  ShuffleGraph gph;
  auto shs = enumerate_shuffles(l, k);
  for (auto& [s, sign] : shs) gph.vertices.push_back(s);
  auto index_of = [&](const Shuffle& s) {
    for (size_t i = 0; i < gph.vertices.size(); ++i)
      if (gph.vertices[i] == s) return int(i);
    return -1;
  };
  int n = k + l;
  for (size_t vi = 0; vi < gph.vertices.size(); ++vi) {
    const Shuffle& s = gph.vertices[vi];
    for (int i = 1; i <= n - 1; ++i) {
      bool i_in_mu = std::binary_search(s.mu.begin(), s.mu.end(), i);
      bool im1_in_nu = std::binary_search(s.nu.begin(), s.nu.end(), i - 1);
      if (!(i_in_mu && im1_in_nu)) continue;  // not an elementary inversion
      Shuffle t = s;
      *std::find(t.mu.begin(), t.mu.end(), i) = i - 1;
      *std::find(t.nu.begin(), t.nu.end(), i - 1) = i;
      std::sort(t.mu.begin(), t.mu.end());
      std::sort(t.nu.begin(), t.nu.end());
      gph.edges.push_back({int(vi), index_of(t), i});
    }
  }
  return gph;
}

}  // namespace pathhom
