#include "pathhom/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pathhom {

namespace {

std::string cell_label(const Quiver& q, const Cell& cell, int degree) {
  if (degree == 0) return q.vertices[cell[0]];
  std::string s = "<";
  for (size_t i = 0; i < cell.size(); ++i)
    s += (i ? "," : "") + q.arrows[cell[i]].label;
  return s + ">";
}

}  // namespace

std::vector<Cell> moore_basis(const Quiver& q, int n) {
  std::vector<Cell> out;
  if (n == 0) {
    for (int v = 0; v < q.vertex_count(); ++v) out.push_back({v});
    return out;
  }
  // Arrow indices are label-sorted, so depth-first extension in index order
  // yields the lexicographic order.
  Cell cell;
  std::function<void()> rec = [&] {
    if (int(cell.size()) == n) {
      out.push_back(cell);
      return;
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (!cell.empty() && q.arrows[cell.back()].head != q.arrows[a].tail) continue;
      cell.push_back(a);
      rec();
      cell.pop_back();
    }
  };
  rec();
  return out;
}

namespace {

// Internal builder shared by boundary_into_span / omega_complex: target rows
// are NQ_(n-1) cells first, then outside token tuples in first-seen order,
// remapped at the end to a deterministic name order.
struct BoundaryBuilder {
  const Quiver& q;
  CompositionOracle& oracle;
  int n;
  std::vector<Cell> source_cells;
  std::vector<Cell> target_sub_cells;
  std::map<std::vector<int>, int> outside_rows;  // token tuple -> row
  std::vector<std::vector<int>> outside_tuples;
  Mat matrix;

  BoundaryBuilder(const Quiver& q_, CompositionOracle& o, int n_) : q(q_), oracle(o), n(n_) {
    source_cells = moore_basis(q, n);
    target_sub_cells = moore_basis(q, n - 1);
    std::map<Cell, int> sub_index;
    for (int i = 0; i < int(target_sub_cells.size()); ++i)
      sub_index[target_sub_cells[i]] = i;

    int sub_rows = int(target_sub_cells.size());
    std::vector<std::map<int, Scalar>> cols(source_cells.size());
    Int ext = oracle.exterior_scale();

    for (int cidx = 0; cidx < int(source_cells.size()); ++cidx) {
      const Cell& cell = source_cells[cidx];
      auto add_sub = [&](const Cell& target, const Int& coeff) {
        cols[cidx][sub_index.at(target)] += Scalar(coeff);
      };
      auto add_outside = [&](const std::vector<int>& tokens, const Int& coeff) {
        auto it = outside_rows.find(tokens);
        int row;
        if (it == outside_rows.end()) {
          row = sub_rows + int(outside_tuples.size());
          outside_rows.emplace(tokens, row);
          outside_tuples.push_back(tokens);
        } else {
          row = it->second;
        }
        cols[cidx][row] += Scalar(coeff);
      };

      if (n == 1) {
        // d0 = head, d1 = tail, both landing on vertices.
        add_sub({q.arrows[cell[0]].head}, ext);
        add_sub({q.arrows[cell[0]].tail}, -ext);
        continue;
      }
      for (int i = 0; i <= n; ++i) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        if (i == 0) {
          add_sub(Cell(cell.begin() + 1, cell.end()), sign * ext);
        } else if (i == n) {
          add_sub(Cell(cell.begin(), cell.end() - 1), sign * ext);
        } else {
          int a = oracle.arrow_token(cell[i - 1]);
          int b = oracle.arrow_token(cell[i]);
          for (const auto& term : oracle.compose(a, b)) {
            if (oracle.classify(term.token) == CompositionOracle::Kind::Identity)
              continue;  // degenerate tuple vanishes in the Moore quotient
            bool in_sub = oracle.classify(term.token) == CompositionOracle::Kind::Arrow;
            if (in_sub) {
              Cell target;
              for (int p = 0; p < i - 1; ++p) target.push_back(cell[p]);
              target.push_back(oracle.token_arrow(term.token));
              for (int p = i + 1; p < n; ++p) target.push_back(cell[p]);
              add_sub(target, sign * term.coeff);
            } else {
              std::vector<int> tokens;
              for (int p = 0; p < i - 1; ++p) tokens.push_back(oracle.arrow_token(cell[p]));
              tokens.push_back(term.token);
              for (int p = i + 1; p < n; ++p) tokens.push_back(oracle.arrow_token(cell[p]));
              add_outside(tokens, sign * term.coeff);
            }
          }
        }
      }
    }

    // Deterministic outside order: by token-name tuple.
    std::vector<int> order(outside_tuples.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    auto names = [&](const std::vector<int>& tup) {
      std::vector<std::string> ns;
      for (int t : tup) ns.push_back(oracle.token_name(t));
      return ns;
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return names(outside_tuples[x]) < names(outside_tuples[y]);
    });
    std::vector<int> new_row(outside_tuples.size());
    std::vector<std::vector<int>> reordered(outside_tuples.size());
    for (size_t i = 0; i < order.size(); ++i) {
      new_row[order[i]] = sub_rows + int(i);
      reordered[i] = outside_tuples[order[i]];
    }
    outside_tuples = std::move(reordered);

    matrix = Mat(sub_rows + int(outside_tuples.size()), int(source_cells.size()));
    for (int c = 0; c < int(source_cells.size()); ++c)
      for (auto& [row, val] : cols[c]) {
        int r = row < sub_rows ? row : new_row[row - sub_rows];
        matrix.at(r, c) = val;
      }
  }
};

}  // namespace

SpanBoundary boundary_into_span(const Quiver& q, CompositionOracle& oracle, int n) {
  require(n >= 1, "ValidationError", "boundary needs degree >= 1");
  BoundaryBuilder b(q, oracle, n);
  SpanBoundary out;
  out.sub_rows = int(b.target_sub_cells.size());
  for (const auto& tup : b.outside_tuples) {
    std::string name = "<";
    for (size_t i = 0; i < tup.size(); ++i)
      name += (i ? "," : "") + oracle.token_name(tup[i]);
    out.outside_names.push_back(name + ">");
  }
  out.matrix = b.matrix;
  return out;
}

BoundedComplex OmegaComplex::complex() const {
  std::vector<int> dims(n_max + 1);
  std::vector<Mat> bnd(n_max + 1);
  std::vector<std::vector<std::string>> labels(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    dims[n] = deg[n].basis.cols();
    bnd[n] = n == 0 ? Mat::zero(0, 0) : deg[n].boundary;
    labels[n] = deg[n].nq_names;
  }
  return BoundedComplex(ring, dims, bnd, labels);
}

std::vector<HomologyGroup> OmegaComplex::homology() const { return complex().homology(); }

OmegaComplex omega_complex(const Quiver& q, CompositionOracle& oracle, Ring ring, int n_max) {
  require(n_max >= 1, "ValidationError", "n_max must be at least 1");
  OmegaComplex out;
  out.ring = ring;
  out.n_max = n_max;
  out.deg.resize(n_max + 1);

  // Degree 0: the vertex span, no condition.
  out.deg[0].nq_cells = moore_basis(q, 0);
  for (const Cell& c : out.deg[0].nq_cells)
    out.deg[0].nq_names.push_back(cell_label(q, c, 0));
  out.deg[0].basis = Mat::identity(q.vertex_count());
  out.deg[0].boundary = Mat::zero(0, 0);

  int first_zero = -1;
  for (int n = 1; n <= n_max; ++n) {
    OmegaDegree& d = out.deg[n];
    BoundaryBuilder b(q, oracle, n);
    d.nq_cells = b.source_cells;
    for (const Cell& c : d.nq_cells) d.nq_names.push_back(cell_label(q, c, n));
    int sub_rows = int(b.target_sub_cells.size());
    std::vector<int> outside;
    for (int r = sub_rows; r < b.matrix.rows(); ++r) outside.push_back(r);
    Mat cond = mat_canon(b.matrix.rows_subset(outside), ring);
    d.basis = kernel_basis(cond, ring);

    std::vector<int> subr(sub_rows);
    for (int r = 0; r < sub_rows; ++r) subr[r] = r;
    Mat into_prev = mat_canon(b.matrix.rows_subset(subr) * d.basis, ring);
    // The boundary of a member of omega_n lies in omega_(n-1): express it in
    // that basis. Over Z this is exact because the kernel bases are saturated.
    Mat prev_in_nq = out.deg[n - 1].basis;
    d.boundary = solve_in_span(prev_in_nq, into_prev, ring);

    // Low-degree contracts: degree 1 is the whole arrow span.
    if (n == 1)
      internal_check(d.basis.cols() == int(d.nq_cells.size()), "LowDegree",
                     "degree-1 component must be the full arrow span");
    if (first_zero < 0 && d.basis.cols() == 0) first_zero = n;
    if (first_zero >= 0 && n > first_zero)
      internal_check(d.basis.cols() == 0, "VanishingPropagation",
                     "nonzero component above a vanishing degree");
  }
  return out;
}

GradedPair ambient_pair(const Quiver& q, CompositionOracle& oracle, Ring ring, int n_max) {
  require(oracle.ambient_finite(), "InfiniteAmbient",
          "the full ambient pair needs a degreewise finite ambient");
  // Full ambient Moore complex: tuples of composable non-identity morphisms.
  std::vector<int> toks = oracle.ambient_tokens();
  std::sort(toks.begin(), toks.end(), [&](int a, int b) {
    return oracle.token_name(a) < oracle.token_name(b);
  });
  std::vector<std::vector<std::vector<int>>> cells(n_max + 1);
  for (int v = 0; v < q.vertex_count(); ++v) cells[0].push_back({v});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::vector<int>> cur;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& acc) {
      if (int(acc.size()) == n) {
        cur.push_back(acc);
        return;
      }
      for (int t : toks) {
        if (!acc.empty() && oracle.head(acc.back()) != oracle.tail(t)) continue;
        acc.push_back(t);
        rec(acc);
        acc.pop_back();
      }
    };
    std::vector<int> acc;
    rec(acc);
    cells[n] = std::move(cur);
  }
  std::vector<std::map<std::vector<int>, int>> index(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    for (int i = 0; i < int(cells[n].size()); ++i) index[n][cells[n][i]] = i;

  std::vector<int> dims(n_max + 1);
  for (int n = 0; n <= n_max; ++n) dims[n] = int(cells[n].size());
  std::vector<Mat> bnd(n_max + 1);
  bnd[0] = Mat::zero(0, 0);
  Int ext = oracle.exterior_scale();
  for (int n = 1; n <= n_max; ++n) {
    Mat d(dims[n - 1], dims[n]);
    for (int c = 0; c < dims[n]; ++c) {
      const auto& cell = cells[n][c];
      if (n == 1) {
        d.at(index[0].at({oracle.head(cell[0])}), c) += Scalar(ext);
        d.at(index[0].at({oracle.tail(cell[0])}), c) -= Scalar(ext);
        continue;
      }
      for (int i = 0; i <= n; ++i) {
        Scalar sign = (i % 2 == 0) ? 1 : -1;
        if (i == 0 || i == n) {
          std::vector<int> t = i == 0 ? std::vector<int>(cell.begin() + 1, cell.end())
                                      : std::vector<int>(cell.begin(), cell.end() - 1);
          d.at(index[n - 1].at(t), c) += sign * Scalar(ext);
        } else {
          for (const auto& term : oracle.compose(cell[i - 1], cell[i])) {
            if (oracle.classify(term.token) == CompositionOracle::Kind::Identity) continue;
            std::vector<int> t;
            for (int p = 0; p < i - 1; ++p) t.push_back(cell[p]);
            t.push_back(term.token);
            for (int p = i + 1; p < n; ++p) t.push_back(cell[p]);
            d.at(index[n - 1].at(t), c) += sign * Scalar(term.coeff);
          }
        }
      }
    }
    bnd[n] = mat_canon(d, ring);
  }
  BoundedComplex ambient(ring, dims, bnd);

  // NQ embeds by matching token tuples.
  std::vector<Mat> sub(n_max + 1);
  sub[0] = Mat::identity(dims[0]);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Cell> nq = moore_basis(q, n);
    Mat m(dims[n], int(nq.size()));
    for (int c = 0; c < int(nq.size()); ++c) {
      std::vector<int> t;
      for (int a : nq[c]) t.push_back(oracle.arrow_token(a));
      m.at(index[n].at(t), c) = 1;
    }
    sub[n] = m;
  }
  return GradedPair(ambient, sub);
}

BoundedComplex psi_complex(const Quiver& q, CompositionOracle& oracle, Ring ring, int n_max) {
  return psi(ambient_pair(q, oracle, ring, n_max)).complex;
}

namespace {

// N(f) on the allowed span: tuples map entrywise, collapsing tuples that hit
// a degenerate image.
Mat nq_chain_map(const OmegaComplex& src, const OmegaComplex& dst, const QuiverMorphism& m,
                 int n) {
  std::map<Cell, int> dst_index;
  for (int i = 0; i < int(dst.deg[n].nq_cells.size()); ++i)
    dst_index[dst.deg[n].nq_cells[i]] = i;
  Mat out(int(dst.deg[n].nq_cells.size()), int(src.deg[n].nq_cells.size()));
  for (int c = 0; c < int(src.deg[n].nq_cells.size()); ++c) {
    const Cell& cell = src.deg[n].nq_cells[c];
    if (n == 0) {
      out.at(dst_index.at({m.vertex_map[cell[0]]}), c) = 1;
      continue;
    }
    bool killed = false;
    Cell image;
    for (int a : cell) {
      if (m.degenerate_arrow(a)) {
        killed = true;
        break;
      }
      image.push_back(m.arrow_map[a]);
    }
    if (!killed) out.at(dst_index.at(image), c) = 1;
  }
  return out;
}

}  // namespace

std::vector<Mat> induced_omega_maps(const OmegaComplex& src, const OmegaComplex& dst,
                                    const QuiverMorphism& f) {
  internal_check(src.ring == dst.ring, "RingMismatch", "induced map rings differ");
  int top = std::min(src.n_max, dst.n_max);
  std::vector<Mat> out(top + 1);
  for (int n = 0; n <= top; ++n) {
    Mat img = mat_canon(nq_chain_map(src, dst, f, n) * src.deg[n].basis, src.ring);
    out[n] = solve_in_span(dst.deg[n].basis, img, src.ring);
  }
  return out;
}

HomotopyReport verify_homotopy(const Quiver& src_q, const OmegaComplex& src,
                               const Quiver& dst_q, CompositionOracle& dst_oracle,
                               const OmegaComplex& dst, const QuiverMorphism& f,
                               const QuiverMorphism& g, const std::vector<int>& phi) {
  HomotopyReport rep;
  const Ring ring = src.ring;

  auto arrow_token_of = [&](const QuiverMorphism& m, int a) {
    if (m.degenerate_arrow(a))
      return dst_oracle.identity_token(m.vertex_map[src_q.arrows[a].tail]);
    return dst_oracle.arrow_token(m.arrow_map[a]);
  };
  auto phi_token = [&](int v) {
    if (phi[v] < 0) return dst_oracle.identity_token(f.vertex_map[v]);
    return dst_oracle.arrow_token(phi[v]);
  };
  auto compose1 = [&](int a, int b) {
    if (dst_oracle.classify(a) == CompositionOracle::Kind::Identity) return b;
    if (dst_oracle.classify(b) == CompositionOracle::Kind::Identity) return a;
    auto terms = dst_oracle.compose(a, b);
    require(terms.size() == 1 && terms[0].coeff == 1, "NotSetLevel",
            "homotopy certificates need a set-level ambient");
    return terms[0].token;
  };

  // Validate morphisms and the certificate endpoints.
  auto check_morphism = [&](const QuiverMorphism& m) {
    require(int(m.vertex_map.size()) == src_q.vertex_count(), "ValidationError",
            "vertex map size");
    require(int(m.arrow_map.size()) == src_q.arrow_count(), "ValidationError", "arrow map size");
    for (int a = 0; a < src_q.arrow_count(); ++a) {
      int t = m.vertex_map[src_q.arrows[a].tail];
      int h = m.vertex_map[src_q.arrows[a].head];
      if (m.degenerate_arrow(a)) {
        require(t == h, "ValidationError", "arrow collapsed across distinct vertices");
      } else {
        const auto& ta = dst_q.arrows[m.arrow_map[a]];
        require(ta.tail == t && ta.head == h, "ValidationError", "arrow map endpoint mismatch");
      }
    }
  };
  check_morphism(f);
  check_morphism(g);
  for (int v = 0; v < src_q.vertex_count(); ++v) {
    int pt = phi_token(v);
    require(dst_oracle.tail(pt) == f.vertex_map[v] && dst_oracle.head(pt) == g.vertex_map[v],
            "NotNatural", "certificate arrow endpoints do not join f and g");
  }

  // Naturality through the ambient: phi_head after f(arrow) equals g(arrow)
  // after phi_tail.
  for (int a = 0; a < src_q.arrow_count(); ++a) {
    int lhs = compose1(arrow_token_of(f, a), phi_token(src_q.arrows[a].head));
    int rhs = compose1(phi_token(src_q.arrows[a].tail), arrow_token_of(g, a));
    if (lhs != rhs) {
      rep.natural = false;
      throw ValidationError("NotNatural", "naturality square fails at arrow " +
                                              src_q.arrows[a].label);
    }
  }

  int top = std::min(src.n_max, dst.n_max);
  for (int n = 0; n + 1 <= top; ++n) {
    Mat fo = mat_canon(nq_chain_map(src, dst, f, n) * src.deg[n].basis, ring);
    Mat go = mat_canon(nq_chain_map(src, dst, g, n) * src.deg[n].basis, ring);
    // Both land in omega of the target; equality on homology means the
    // difference of cycle images is a boundary.
    Mat fo_in = solve_in_span(dst.deg[n].basis, fo, ring);
    Mat go_in = solve_in_span(dst.deg[n].basis, go, ring);
    Mat cyc = kernel_basis(src.deg[n].boundary, ring);
    if (cyc.cols() == 0) {
      ++rep.degrees_checked;
      continue;
    }
    Mat diff = mat_canon((fo_in - go_in) * cyc, ring);
    Mat bnd = dst.deg[n + 1].boundary;
    if (!in_span(bnd, diff, ring)) {
      rep.equal_on_homology = false;
      throw InternalInvariantError("UnequalInducedMaps",
                                   "valid certificate but unequal homology maps at degree " +
                                       std::to_string(n));
    }
    ++rep.degrees_checked;
  }
  return rep;
}

}  // namespace pathhom
