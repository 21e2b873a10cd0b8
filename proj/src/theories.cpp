#include "pathhom/theories.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pathhom {

OmegaComplex glmy(const Digraph& g, Ring ring, int n_max) {
  Quiver q = g.quiver();
  auto oracle = make_cv_oracle(q);
  return omega_complex(q, *oracle, ring, n_max);
}

OmegaComplex sc(const Quiver& q, Ring ring, int n_max) {
  auto oracle = make_square_commutative_oracle(q);
  return omega_complex(q, *oracle, ring, n_max);
}

OmegaComplex free_cat(const Quiver& q, Ring ring, int n_max) {
  auto oracle = make_free_category_oracle(q);
  return omega_complex(q, *oracle, ring, n_max);
}

KPowerResult kpower(const Quiver& q, int k, Ring ring, int n_max) {
  auto oracle = make_k_power_oracle(q, k);
  KPowerResult out{omega_complex(q, *oracle, ring, n_max), true};
  RingOps ops(ring);
  out.k_invertible = ring.is_field() ? !ops.is_zero(Scalar(k)) : (k == 1);
  return out;
}

bool kpower_matches_sc(const Quiver& q, int k, Ring ring, int n_max) {
  require(q.power() < k, "PowerExceeded", "comparison needs quiver power below k");
  OmegaComplex a = sc(q, ring, n_max);
  OmegaComplex b = kpower(q, k, ring, n_max).omega;
  RingOps ops(ring);
  std::vector<Mat> change(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (!same_span(a.deg[n].basis, b.deg[n].basis, ring)) return false;
    change[n] = solve_in_span(mat_canon(a.deg[n].basis, ring),
                              mat_canon(b.deg[n].basis, ring), ring);
  }
  // In the shared coordinates the k-power boundary is k times the other one.
  for (int n = 1; n <= n_max; ++n) {
    Mat lhs = mat_canon(change[n - 1] * b.deg[n].boundary, ring);
    Mat scaled = a.deg[n].boundary;
    for (int r = 0; r < scaled.rows(); ++r)
      for (int c = 0; c < scaled.cols(); ++c)
        scaled.at(r, c) = ops.mul(scaled.at(r, c), Scalar(k));
    Mat rhs = mat_canon(scaled * change[n], ring);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

void PathComplexInput::validate() const {
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    require(vertices[i] < vertices[i + 1], "ValidationError", "vertices must be sorted unique");
  int v_count = int(vertices.size());
  for (int n = 0; n < int(paths.size()); ++n) {
    std::set<Cell> level(paths[n].begin(), paths[n].end());
    require(level.size() == paths[n].size(), "ValidationError",
            "duplicate path at length " + std::to_string(n));
    for (const Cell& p : paths[n]) {
      require(int(p.size()) == n + 1, "ValidationError", "path length mismatch");
      for (int v : p)
        require(v >= 0 && v < v_count, "ValidationError", "path vertex out of range");
      for (size_t i = 0; i + 1 < p.size(); ++i)
        require(p[i] != p[i + 1], "ValidationError", "irregular path (repeated vertex)");
      if (n >= 1) {
        const auto& prev = paths[n - 1];
        Cell drop_first(p.begin() + 1, p.end());
        Cell drop_last(p.begin(), p.end() - 1);
        require(std::find(prev.begin(), prev.end(), drop_first) != prev.end(), "NotClosed",
                "missing truncation of a listed path");
        require(std::find(prev.begin(), prev.end(), drop_last) != prev.end(), "NotClosed",
                "missing truncation of a listed path");
      }
    }
  }
  if (!paths.empty()) {
    // Degree 0 must be the whole vertex set.
    require(int(paths[0].size()) == v_count, "ValidationError",
            "degree-0 paths must list every vertex");
  }
}

PathComplexInput PathComplexInput::from_digraph(const Digraph& g, int n_max) {
  PathComplexInput out;
  out.vertices = g.vertices;
  out.paths.resize(n_max + 1);
  for (int v = 0; v < int(g.vertices.size()); ++v) out.paths[0].push_back({v});
  for (int n = 1; n <= n_max; ++n) {
    for (const Cell& p : out.paths[n - 1])
      for (int v = 0; v < int(g.vertices.size()); ++v)
        if (g.has_edge(p.back(), v)) {
          Cell q = p;
          q.push_back(v);
          out.paths[n].push_back(q);
        }
    std::sort(out.paths[n].begin(), out.paths[n].end());
  }
  return out;
}

OmegaComplex path_complex_omega(const PathComplexInput& p, Ring ring, int n_max) {
  p.validate();
  require(n_max >= 1, "ValidationError", "n_max must be at least 1");
  require(int(p.paths.size()) > n_max, "NotClosed",
          "path lists must cover lengths up to n_max");
  OmegaComplex out;
  out.ring = ring;
  out.n_max = n_max;
  out.deg.resize(n_max + 1);

  auto vertex_name = [&](int v) { return p.vertices[v]; };
  auto cell_name = [&](const Cell& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + vertex_name(c[i]);
    return s + ")";
  };

  out.deg[0].nq_cells = p.paths[0];
  for (const Cell& c : p.paths[0]) out.deg[0].nq_names.push_back(vertex_name(c[0]));
  out.deg[0].basis = Mat::identity(int(p.paths[0].size()));
  out.deg[0].boundary = Mat::zero(0, 0);

  for (int n = 1; n <= n_max; ++n) {
    OmegaDegree& d = out.deg[n];
    d.nq_cells = p.paths[n];
    std::sort(d.nq_cells.begin(), d.nq_cells.end());
    for (const Cell& c : d.nq_cells) d.nq_names.push_back(cell_name(c));

    std::map<Cell, int> sub_index;
    for (int i = 0; i < int(p.paths[n - 1].size()); ++i) sub_index[p.paths[n - 1][i]] = i;
    std::map<Cell, int> outside_rows;
    int sub_rows = int(p.paths[n - 1].size());
    std::vector<std::map<int, Scalar>> cols(d.nq_cells.size());
    for (int c = 0; c < int(d.nq_cells.size()); ++c) {
      const Cell& cell = d.nq_cells[c];
      for (int i = 0; i <= n; ++i) {
        Cell target;
        for (int j = 0; j <= n; ++j)
          if (j != i) target.push_back(cell[j]);
        // Degenerate faces vanish in the regular ambient.
        bool degenerate = false;
        for (size_t j = 0; j + 1 < target.size(); ++j)
          if (target[j] == target[j + 1]) degenerate = true;
        if (degenerate) continue;
        Scalar sign = (i % 2 == 0) ? 1 : -1;
        auto it = sub_index.find(target);
        int row;
        if (it != sub_index.end()) {
          row = it->second;
        } else {
          auto ot = outside_rows.find(target);
          if (ot == outside_rows.end()) {
            row = sub_rows + int(outside_rows.size());
            outside_rows.emplace(target, row);
          } else {
            row = ot->second;
          }
        }
        cols[c][row] += sign;
      }
    }
    Mat m(sub_rows + int(outside_rows.size()), int(d.nq_cells.size()));
    for (int c = 0; c < int(d.nq_cells.size()); ++c)
      for (auto& [row, val] : cols[c]) m.at(row, c) = val;

    std::vector<int> outside;
    for (int r = sub_rows; r < m.rows(); ++r) outside.push_back(r);
    Mat cond = mat_canon(m.rows_subset(outside), ring);
    d.basis = kernel_basis(cond, ring);
    std::vector<int> subr(sub_rows);
    for (int r = 0; r < sub_rows; ++r) subr[r] = r;
    Mat into_prev = mat_canon(m.rows_subset(subr) * d.basis, ring);
    d.boundary = solve_in_span(out.deg[n - 1].basis, into_prev, ring);
  }
  return out;
}

CompareReport compare_sc_glmy(const Digraph& g, Ring ring, int n_max) {
  CompareReport rep;
  rep.triangle_free = g.triangle_free();
  Quiver q = g.quiver();
  OmegaComplex a = sc(q, ring, n_max);
  OmegaComplex b = glmy(g, ring, n_max);
  for (int n = 0; n <= n_max; ++n) {
    rep.sc_dims.push_back(a.dim(n));
    rep.glmy_dims.push_back(b.dim(n));
    // The comparison morphism is the identity on the shared allowed span.
    internal_check(in_span(b.deg[n].basis, a.deg[n].basis, ring), "CompareInclusion",
                   "square-commutative component not inside the path component");
  }
  rep.isomorphic = true;
  for (int n = 0; n <= n_max; ++n)
    if (!same_span(a.deg[n].basis, b.deg[n].basis, ring)) rep.isomorphic = false;
  if (rep.triangle_free)
    internal_check(rep.isomorphic, "CompareIso",
                   "triangle-free comparison failed to be an isomorphism");

  // Induced homology map ranks over the fraction field.
  Ring field = ring.is_field() ? ring : Ring::Q();
  BoundedComplex ca = a.complex();
  BoundedComplex cb = b.complex();
  for (int n = 0; n + 1 <= n_max; ++n) {
    Mat f = solve_in_span(mat_canon(b.deg[n].basis, field), mat_canon(a.deg[n].basis, field),
                          field);
    Mat z = kernel_basis(mat_canon(ca.boundary(n), field), field);
    Mat img = mat_canon(f * z, field);
    Mat bb = mat_canon(cb.boundary(n + 1), field);
    int r = rank(Mat::hcat(img, bb), field) - rank(bb, field);
    rep.homology_map_ranks.push_back(r);
  }
  return rep;
}

Mat front_back_split(const Quiver& q, const OmegaComplex& omega, int k, int l) {
  const Ring ring = omega.ring;
  int n = k + l;
  internal_check(n <= omega.n_max, "ShapeMismatch", "split beyond the truncation");
  std::map<Cell, int> kindex, lindex;
  for (int i = 0; i < int(omega.deg[k].nq_cells.size()); ++i)
    kindex[omega.deg[k].nq_cells[i]] = i;
  for (int i = 0; i < int(omega.deg[l].nq_cells.size()); ++i)
    lindex[omega.deg[l].nq_cells[i]] = i;
  int lsize = int(omega.deg[l].nq_cells.size());
  Mat m(int(omega.deg[k].nq_cells.size()) * lsize, int(omega.deg[n].nq_cells.size()));
  for (int c = 0; c < int(omega.deg[n].nq_cells.size()); ++c) {
    const Cell& cell = omega.deg[n].nq_cells[c];
    Cell front, back;
    if (k == 0)
      front = {n == 0 ? cell[0] : q.arrows[cell[0]].tail};
    else
      front = Cell(cell.begin(), cell.begin() + k);
    if (l == 0)
      back = {n == 0 ? cell[0] : q.arrows[cell[n - 1]].head};
    else
      back = Cell(cell.begin() + k, cell.end());
    m.at(kindex.at(front) * lsize + lindex.at(back), c) = 1;
  }
  // Restrict to omega on both sides; the splitting lands in the tensor of
  // the omega components.
  Mat target = mat_canon(m * omega.deg[n].basis, ring);
  Mat tensor_basis = Mat::kronecker(omega.deg[k].basis, omega.deg[l].basis);
  return solve_in_span(tensor_basis, target, ring);
}

CohomologyReport cohomology_ring(const Quiver& q, const OmegaComplex& omega, int n_max) {
  const Ring ring = omega.ring;
  require(ring.is_field(), "NotField", "the cochain algebra needs field coefficients");
  require(omega.n_max >= n_max, "ValidationError", "complex truncated below requested degree");
  CohomologyReport rep;
  BoundedComplex c = omega.complex();
  for (int n = 0; n <= n_max; ++n) rep.dims.push_back(omega.dim(n));
  for (int n = 0; n <= n_max; ++n) rep.cohomology.push_back(c.homology_in(n));

  std::vector<std::vector<Mat>> nu(n_max + 1, std::vector<Mat>(n_max + 1));
  for (int k = 0; k <= n_max; ++k)
    for (int l = 0; k + l <= n_max; ++l) {
      nu[k][l] = front_back_split(q, omega, k, l);
      if (rank(nu[k][l], ring) != omega.dim(k + l)) rep.monomorphism_ok = false;
      if (omega.dim(k + l) > omega.dim(k) * omega.dim(l)) rep.dim_inequality_ok = false;
    }

  // Cup product in coordinates: a pair of cochain rows (phi, psi) multiplies
  // to (phi (x) psi) . nu. The coboundary is composition with the boundary.
  RingOps ops(ring);
  auto cup = [&](const Mat& phi_row, int k, const Mat& psi_row, int l) {
    Mat kr = Mat::kronecker(phi_row, psi_row);
    return mat_canon(kr * nu[k][l], ring);
  };
  auto delta = [&](const Mat& row, int deg) {
    if (deg + 1 > omega.n_max) return Mat(1, 0);
    return mat_canon(row * omega.deg[deg + 1].boundary, ring);
  };
  for (int k = 0; k <= n_max; ++k)
    for (int l = 0; k + l + 1 <= n_max; ++l) {
      for (int i = 0; i < omega.dim(k); ++i)
        for (int j = 0; j < omega.dim(l); ++j) {
          Mat phi(1, omega.dim(k));
          phi.at(0, i) = 1;
          Mat psi(1, omega.dim(l));
          psi.at(0, j) = 1;
          Mat lhs = delta(cup(phi, k, psi, l), k + l);
          Mat term1 = cup(delta(phi, k), k + 1, psi, l);
          Mat term2 = cup(phi, k, delta(psi, l), l + 1);
          Scalar sign = (k % 2 == 0) ? 1 : -1;
          Mat rhs(1, lhs.cols());
          for (int t = 0; t < lhs.cols(); ++t)
            rhs.at(0, t) = ops.add(term1.at(0, t), ops.mul(sign, term2.at(0, t)));
          if (!(lhs == rhs)) rep.derivation_ok = false;
        }
    }
  internal_check(rep.derivation_ok, "NotDerivation", "coboundary fails the product rule");
  internal_check(rep.monomorphism_ok, "NotMonomorphism", "front/back splitting not injective");
  internal_check(rep.dim_inequality_ok, "DimInequality", "component dimension inequality failed");
  return rep;
}

}  // namespace pathhom
