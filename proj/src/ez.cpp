#include "pathhom/ez.hpp"

#include <map>

#include "pathhom/path_category.hpp"

namespace pathhom {

namespace {

// Box cell from a shuffle (mu: right-move slots, nu: left-move slots) of a
// left k-cell and a right l-cell.
Cell weave(const BoxQuiver& bq, const Quiver& lq, const Quiver& rq, const Cell& lcell, int k,
           const Cell& rcell, int l, const Shuffle& sh) {
  int lv = k == 0 ? lcell[0] : lq.arrows[lcell[0]].tail;
  int rv = l == 0 ? rcell[0] : rq.arrows[rcell[0]].tail;
  if (k + l == 0) return {bq.vertex_of(lv, rv)};
  int li = 0, ri = 0;
  Cell out;
  for (int p = 0; p < k + l; ++p) {
    bool right_moves = std::binary_search(sh.mu.begin(), sh.mu.end(), p);
    if (right_moves) {
      int a = rcell[ri++];
      out.push_back(bq.arrow_of(1, a, lv));
      rv = rq.arrows[a].head;
    } else {
      int a = lcell[li++];
      out.push_back(bq.arrow_of(0, a, rv));
      lv = lq.arrows[a].head;
    }
  }
  return out;
}

}  // namespace

EzAw ez_aw(const OmegaComplex& left, const OmegaComplex& right, const OmegaComplex& boxed,
           const BoxQuiver& bq, int n_max) {
  internal_check(left.ring == right.ring && left.ring == boxed.ring, "RingMismatch",
                 "mixed rings in the shuffle map");
  require(left.n_max >= n_max && right.n_max >= n_max && boxed.n_max >= n_max,
          "ValidationError", "complexes truncated below the requested degree");
  const Ring ring = left.ring;
  // Recover the factor quivers through the box bookkeeping is not possible;
  // callers hand cells consistent with bq. Left/right quivers are implicit in
  // the cells, so reconstruct arrow endpoint data from bq.
  EzAw out;
  out.epsilon.resize(n_max + 1);
  out.alpha.resize(n_max + 1);
  out.offsets.resize(n_max + 1);
  out.degrees = n_max + 1;

  // Factor quivers are only used for endpoints; rebuild minimal tables.
  // bq.arrow_info gives (side, arrow, parked); endpoints of factor arrows are
  // recovered from the box quiver arrows.
  int lv_count = 0, rv_count = 0;
  for (auto [a, b] : bq.vertex_pair) {
    lv_count = std::max(lv_count, a + 1);
    rv_count = std::max(rv_count, b + 1);
  }
  int la_count = 0, ra_count = 0;
  for (const auto& info : bq.arrow_info)
    (info.side == 0 ? la_count : ra_count) = std::max(info.side == 0 ? la_count : ra_count,
                                                      info.arrow + 1);
  Quiver lq, rq;
  lq.vertices.resize(lv_count);
  rq.vertices.resize(rv_count);
  lq.arrows.resize(la_count);
  rq.arrows.resize(ra_count);
  for (int k = 0; k < int(bq.arrow_info.size()); ++k) {
    const auto& info = bq.arrow_info[k];
    auto [tl, tr] = bq.vertex_pair[bq.q.arrows[k].tail];
    auto [hl, hr] = bq.vertex_pair[bq.q.arrows[k].head];
    if (info.side == 0) {
      lq.arrows[info.arrow].tail = tl;
      lq.arrows[info.arrow].head = hl;
    } else {
      rq.arrows[info.arrow].tail = tr;
      rq.arrows[info.arrow].head = hr;
    }
  }

  for (int n = 0; n <= n_max; ++n) {
    std::map<Cell, int> box_index;
    for (int i = 0; i < int(boxed.deg[n].nq_cells.size()); ++i)
      box_index[boxed.deg[n].nq_cells[i]] = i;

    out.offsets[n].assign(n + 2, 0);
    int total = 0;
    for (int k = 0; k <= n; ++k) {
      out.offsets[n][k] = total;
      total += left.dim(k) * right.dim(n - k);
    }
    out.offsets[n][n + 1] = total;

    // epsilon on the omega-tensor basis, expanded to box NQ coordinates.
    Mat eps_nq(int(boxed.deg[n].nq_cells.size()), total);
    for (int k = 0; k <= n; ++k) {
      int l = n - k;
      if (left.dim(k) == 0 || right.dim(l) == 0) continue;
      auto shuffles = enumerate_shuffles(l, k);
      for (int uc = 0; uc < left.dim(k); ++uc)
        for (int vc = 0; vc < right.dim(l); ++vc) {
          int col = out.offsets[n][k] + uc * right.dim(l) + vc;
          for (int lc = 0; lc < int(left.deg[k].nq_cells.size()); ++lc) {
            const Scalar& cu = left.deg[k].basis.at(lc, uc);
            if (cu == 0) continue;
            for (int rc = 0; rc < int(right.deg[l].nq_cells.size()); ++rc) {
              const Scalar& cv = right.deg[l].basis.at(rc, vc);
              if (cv == 0) continue;
              for (const auto& [sh, sign] : shuffles) {
                Cell bcell = weave(bq, lq, rq, left.deg[k].nq_cells[lc], k,
                                   right.deg[l].nq_cells[rc], l, sh);
                eps_nq.at(box_index.at(bcell), col) += Scalar(sign) * cu * cv;
              }
            }
          }
        }
    }
    out.epsilon[n] = solve_in_span(boxed.deg[n].basis, mat_canon(eps_nq, ring), ring);

    // alpha: front/back split of box omega basis vectors, expanded to the
    // tensor NQ coordinates and solved into the omega-tensor basis.
    std::map<Cell, int> lindex, rindex;
    Mat alpha_nq(0, boxed.dim(n));
    std::vector<int> nq_offsets(n + 2, 0);
    {
      int t = 0;
      for (int k = 0; k <= n; ++k) {
        nq_offsets[k] = t;
        t += int(left.deg[k].nq_cells.size()) * int(right.deg[n - k].nq_cells.size());
      }
      nq_offsets[n + 1] = t;
      alpha_nq = Mat(t, boxed.dim(n));
    }
    std::vector<std::map<Cell, int>> lmaps(n + 1), rmaps(n + 1);
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i < int(left.deg[k].nq_cells.size()); ++i)
        lmaps[k][left.deg[k].nq_cells[i]] = i;
      for (int i = 0; i < int(right.deg[k].nq_cells.size()); ++i)
        rmaps[k][right.deg[k].nq_cells[i]] = i;
    }
    for (int wc = 0; wc < boxed.dim(n); ++wc) {
      for (int bc = 0; bc < int(boxed.deg[n].nq_cells.size()); ++bc) {
        const Scalar& cw = boxed.deg[n].basis.at(bc, wc);
        if (cw == 0) continue;
        const Cell& bcell = boxed.deg[n].nq_cells[bc];
        for (int k = 0; k <= n; ++k) {
          int l = n - k;
          // Front k entries must move on the left side, back l on the right.
          bool ok = true;
          for (int p = 0; p < k && ok; ++p)
            if (bq.arrow_info[bcell[p]].side != 0) ok = false;
          for (int p = k; p < n && ok; ++p)
            if (bq.arrow_info[bcell[p]].side != 1) ok = false;
          if (!ok) continue;
          Cell lcell, rcell;
          if (k == 0) {
            int bv = n == 0 ? bcell[0] : bq.q.arrows[bcell[0]].tail;
            lcell = {bq.vertex_pair[bv].first};
          } else {
            for (int p = 0; p < k; ++p) lcell.push_back(bq.arrow_info[bcell[p]].arrow);
          }
          if (l == 0) {
            int bv = n == 0 ? bcell[0] : bq.q.arrows[bcell[n - 1]].head;
            rcell = {bq.vertex_pair[bv].second};
          } else {
            for (int p = k; p < n; ++p) rcell.push_back(bq.arrow_info[bcell[p]].arrow);
          }
          int row = nq_offsets[k] + lmaps[k].at(lcell) * int(right.deg[l].nq_cells.size()) +
                    rmaps[l].at(rcell);
          alpha_nq.at(row, wc) += cw;
        }
      }
    }
    // Solve into the blockwise omega-tensor basis.
    Mat tensor_basis(alpha_nq.rows(), total);
    for (int k = 0; k <= n; ++k) {
      int l = n - k;
      if (left.dim(k) == 0 || right.dim(l) == 0) continue;
      Mat block = Mat::kronecker(left.deg[k].basis, right.deg[l].basis);
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c)
          tensor_basis.at(nq_offsets[k] + r, out.offsets[n][k] + c) = block.at(r, c);
    }
    out.alpha[n] = solve_in_span(tensor_basis, mat_canon(alpha_nq, ring), ring);

    Mat ae = mat_canon(out.alpha[n] * out.epsilon[n], ring);
    Mat ea = mat_canon(out.epsilon[n] * out.alpha[n], ring);
    if (!(ae == Mat::identity(total)) || !(ea == Mat::identity(boxed.dim(n)))) {
      out.mutually_inverse = false;
      throw InternalInvariantError("NotMutuallyInverse",
                                   "shuffle and front-back maps fail to invert at degree " +
                                       std::to_string(n));
    }
  }
  return out;
}

bool kunneth_check(const OmegaComplex& left, const OmegaComplex& right,
                   const OmegaComplex& boxed) {
  int top = std::min({left.certified_through(), right.certified_through(),
                      boxed.certified_through()});
  auto hl = left.homology();
  auto hr = right.homology();
  auto hb = boxed.homology();
  for (int n = 0; n <= top; ++n) {
    HomologyGroup expect;
    for (int i = 0; i <= n; ++i)
      expect = group_direct_sum(expect, group_tensor(hl[i], hr[n - i]));
    for (int i = 0; i + 1 <= n; ++i)
      expect = group_direct_sum(expect, group_tor(hl[i], hr[n - 1 - i]));
    if (!(expect == hb[n])) return false;
  }
  return true;
}

}  // namespace pathhom
