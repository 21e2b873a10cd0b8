#include "pathhom/hochschild.hpp"

#include <functional>
#include <random>

#include "pathhom/path_category.hpp"

namespace pathhom {

std::vector<Scalar> Algebra::product(const std::vector<Scalar>& u,
                                     const std::vector<Scalar>& v) const {
  RingOps ops(field);
  std::vector<Scalar> out(dim(), Scalar(0));
  for (int i = 0; i < dim(); ++i) {
    if (ops.is_zero(u[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (ops.is_zero(v[j])) continue;
      Scalar f = ops.mul(u[i], v[j]);
      for (int k = 0; k < dim(); ++k)
        if (!ops.is_zero(c[i][j][k])) out[k] = ops.add(out[k], ops.mul(f, c[i][j][k]));
    }
  }
  return out;
}

void Algebra::validate() const {
  require(field.is_field(), "NotField", "algebras are presented over a field");
  require(!basis.empty(), "ValidationError", "empty basis");
  int d = dim();
  require(int(c.size()) == d, "ValidationError", "structure constant shape");
  RingOps ops(field);
  auto unit_vec = [&](int i) {
    std::vector<Scalar> e(d, Scalar(0));
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < d; ++i) {
    require(int(c[i].size()) == d, "ValidationError", "structure constant shape");
    for (int j = 0; j < d; ++j)
      require(int(c[i][j].size()) == d, "ValidationError", "structure constant shape");
  }
  for (int i = 0; i < d; ++i) {
    std::vector<Scalar> lhs = product(unit_vec(0), unit_vec(i));
    std::vector<Scalar> rhs = product(unit_vec(i), unit_vec(0));
    for (int k = 0; k < d; ++k) {
      Scalar want = k == i ? Scalar(1) : Scalar(0);
      require(ops.canon(lhs[k]) == want && ops.canon(rhs[k]) == want, "NotUnital",
              "first basis vector is not a two-sided unit");
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        std::vector<Scalar> lhs = product(product(unit_vec(i), unit_vec(j)), unit_vec(k));
        std::vector<Scalar> rhs = product(unit_vec(i), product(unit_vec(j), unit_vec(k)));
        for (int t = 0; t < d; ++t)
          require(ops.canon(lhs[t]) == ops.canon(rhs[t]), "NotAssociative",
                  "basis associativity fails at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

Algebra Algebra::tensor(const Algebra& a, const Algebra& b) {
  internal_check(a.field == b.field, "RingMismatch", "tensor of algebras over one field");
  Algebra out;
  out.field = a.field;
  int da = a.dim(), db = b.dim(), d = da * db;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) out.basis.push_back(a.basis[i] + "(x)" + b.basis[j]);
  out.c.assign(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d, Scalar(0))));
  RingOps ops(a.field);
  for (int i1 = 0; i1 < da; ++i1)
    for (int j1 = 0; j1 < db; ++j1)
      for (int i2 = 0; i2 < da; ++i2)
        for (int j2 = 0; j2 < db; ++j2)
          for (int k1 = 0; k1 < da; ++k1)
            for (int k2 = 0; k2 < db; ++k2) {
              Scalar v = ops.mul(a.c[i1][i2][k1], b.c[j1][j2][k2]);
              if (!ops.is_zero(v)) out.c[i1 * db + j1][i2 * db + j2][k1 * db + k2] = v;
            }
  return out;
}

void Bimodule::validate(const Algebra& a) const {
  require(int(left.size()) == a.dim() && int(right.size()) == a.dim(), "ValidationError",
          "one action matrix per basis vector expected");
  const Ring f = a.field;
  for (int i = 0; i < a.dim(); ++i)
    require(left[i].rows() == dimension && left[i].cols() == dimension &&
                right[i].rows() == dimension && right[i].cols() == dimension,
            "ValidationError", "action matrix shape");
  // Unit acts as the identity; actions respect the product and commute.
  require(mat_canon(left[0], f) == Mat::identity(dimension), "ValidationError",
          "unit must act as identity on the left");
  require(mat_canon(right[0], f) == Mat::identity(dimension), "ValidationError",
          "unit must act as identity on the right");
  auto lin = [&](const std::vector<Mat>& act, const std::vector<Scalar>& coeff) {
    Mat out(dimension, dimension);
    for (int i = 0; i < a.dim(); ++i)
      if (coeff[i] != 0) out = out + act[i] * [&] {
            Mat s = Mat::identity(dimension);
            for (int r = 0; r < dimension; ++r) s.at(r, r) = coeff[i];
            return s;
          }();
    return mat_canon(out, f);
  };
  auto unit_vec = [&](int i) {
    std::vector<Scalar> e(a.dim(), Scalar(0));
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Scalar> prod = a.product(unit_vec(i), unit_vec(j));
      require(mat_canon(left[i] * left[j], f) == lin(left, prod), "ValidationError",
              "left action does not respect the product");
      require(mat_canon(right[j] * right[i], f) == lin(right, prod), "ValidationError",
              "right action does not respect the product");
      require(mat_canon(left[i] * right[j], f) == mat_canon(right[j] * left[i], f),
              "ValidationError", "left and right actions must commute");
    }
}

Bimodule Bimodule::regular(const Algebra& a) {
  Bimodule m;
  m.dimension = a.dim();
  for (int i = 0; i < a.dim(); ++i) {
    Mat l(a.dim(), a.dim()), r(a.dim(), a.dim());
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        l.at(k, j) = a.c[i][j][k];
        r.at(k, j) = a.c[j][i][k];
      }
    m.left.push_back(l);
    m.right.push_back(r);
  }
  return m;
}

Bimodule Bimodule::tensor(const Algebra& a, const Bimodule& m, const Algebra& b,
                          const Bimodule& n) {
  Bimodule out;
  out.dimension = m.dimension * n.dimension;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      out.left.push_back(Mat::kronecker(m.left[i], n.left[j]));
      out.right.push_back(Mat::kronecker(m.right[i], n.right[j]));
    }
  return out;
}

namespace {

// Coordinates of the truncated module M (x) (Lambda/K)^(x n): slot values run
// over the non-unit basis vectors 1..d-1, flat row-major after the M index.
struct ChainSpace {
  int m_dim, slots, n;
  long dim() const {
    long t = m_dim;
    for (int i = 0; i < n; ++i) t *= slots;
    return t;
  }
  long index(int mi, const std::vector<int>& tuple) const {
    long idx = mi;
    for (int v : tuple) idx = idx * slots + (v - 1);
    return idx;
  }
};

// One face of the truncated complex; lifts slots to the algebra, applies the
// multiplication, and projects away the unit coordinate.
void add_face_terms(const Algebra& alg, const Bimodule& mod, int n, int face, int mi,
                    const std::vector<int>& tuple, Mat& out, int col, const Scalar& sign) {
  const int d = alg.dim();
  RingOps ops(alg.field);
  ChainSpace target{mod.dimension, d - 1, n - 1};
  if (face == 0) {
    // m . lambda_1 (right action), drop the first slot.
    std::vector<int> rest(tuple.begin() + 1, tuple.end());
    const Mat& act = mod.right[tuple[0]];
    for (int r = 0; r < mod.dimension; ++r)
      if (act.at(r, mi) != 0)
        out.at(target.index(r, rest), col) += sign * act.at(r, mi);
    return;
  }
  if (face == n) {
    std::vector<int> rest(tuple.begin(), tuple.end() - 1);
    const Mat& act = mod.left[tuple[n - 1]];
    for (int r = 0; r < mod.dimension; ++r)
      if (act.at(r, mi) != 0)
        out.at(target.index(r, rest), col) += sign * act.at(r, mi);
    return;
  }
  // Multiply slots face-1 and face, project out the unit coordinate.
  const auto& cc = alg.c[tuple[face - 1]][tuple[face]];
  for (int k = 1; k < d; ++k) {
    if (ops.is_zero(cc[k])) continue;
    std::vector<int> rest;
    for (int p = 0; p < face - 1; ++p) rest.push_back(tuple[p]);
    rest.push_back(k);
    for (int p = face + 1; p < n; ++p) rest.push_back(tuple[p]);
    out.at(target.index(mi, rest), col) += sign * cc[k];
  }
}

Mat truncated_boundary(const Algebra& alg, const Bimodule& mod, int n) {
  const int d = alg.dim();
  ChainSpace src{mod.dimension, d - 1, n};
  ChainSpace dst{mod.dimension, d - 1, n - 1};
  Mat out(int(dst.dim()), int(src.dim()));
  std::vector<int> tuple(n, 1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      for (int mi = 0; mi < mod.dimension; ++mi) {
        int col = int(src.index(mi, tuple));
        for (int face = 0; face <= n; ++face)
          add_face_terms(alg, mod, n, face, mi, tuple, out, col,
                         face % 2 == 0 ? Scalar(1) : Scalar(-1));
      }
      return;
    }
    for (int v = 1; v < d; ++v) {
      tuple[pos] = v;
      rec(pos + 1);
    }
  };
  if (n >= 1) rec(0);
  return mat_canon(out, alg.field);
}

// Projection of the submodule to Lambda/K, as a column basis.
Mat reduced_submodule(const Algebra& alg, const Mat& submodule) {
  require(submodule.rows() == alg.dim(), "ValidationError", "submodule rows");
  // The unit must lie in the span.
  Mat unit(alg.dim(), 1);
  unit.at(0, 0) = 1;
  require(in_span(mat_canon(submodule, alg.field), unit, alg.field), "UnitMissing",
          "a pointed submodule must contain the unit");
  std::vector<int> rest;
  for (int r = 1; r < alg.dim(); ++r) rest.push_back(r);
  return column_basis(mat_canon(submodule.rows_subset(rest), alg.field), alg.field);
}

}  // namespace

GradedPair hochschild_pair(const Algebra& algebra, const Mat& submodule, const Bimodule& m,
                           int n_max) {
  algebra.validate();
  m.validate(algebra);
  const Ring f = algebra.field;
  Mat vbar = reduced_submodule(algebra, submodule);

  std::vector<int> dims(n_max + 1);
  std::vector<Mat> bnd(n_max + 1);
  std::vector<Mat> sub(n_max + 1);
  bnd[0] = Mat::zero(0, 0);
  ChainSpace cs{m.dimension, algebra.dim() - 1, 0};
  for (int n = 0; n <= n_max; ++n) {
    cs.n = n;
    dims[n] = int(cs.dim());
    if (n >= 1) bnd[n] = truncated_boundary(algebra, m, n);
    Mat s = Mat::identity(m.dimension);
    for (int i = 0; i < n; ++i) s = Mat::kronecker(s, vbar);
    sub[n] = s;
  }
  BoundedComplex ambient(f, dims, bnd);
  return GradedPair(ambient, sub);
}

std::vector<HomologyGroup> hochschild_homology(const Algebra& algebra, const Mat& submodule,
                                               const Bimodule& m, int n_max) {
  return pair_homology(hochschild_pair(algebra, submodule, m, n_max));
}

std::vector<int> bar_complex_betti(const Algebra& algebra, const Bimodule& m, int n_max) {
  algebra.validate();
  m.validate(algebra);
  const Ring f = algebra.field;
  const int d = algebra.dim();
  // Full module M (x) Lambda^(x n) with all slots, no normalization.
  auto full_dim = [&](int n) {
    long t = m.dimension;
    for (int i = 0; i < n; ++i) t *= d;
    return t;
  };
  auto index = [&](int mi, const std::vector<int>& tuple) {
    long idx = mi;
    for (int v : tuple) idx = idx * d + v;
    return idx;
  };
  std::vector<Mat> bnd(n_max + 2);
  for (int n = 1; n <= n_max + 1; ++n) {
    Mat out(int(full_dim(n - 1)), int(full_dim(n)));
    std::vector<int> tuple(n, 0);
    RingOps ops(f);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        for (int mi = 0; mi < m.dimension; ++mi) {
          int col = int(index(mi, tuple));
          for (int face = 0; face <= n; ++face) {
            Scalar sign = face % 2 == 0 ? 1 : -1;
            if (face == 0) {
              std::vector<int> rest(tuple.begin() + 1, tuple.end());
              const Mat& act = m.right[tuple[0]];
              for (int r = 0; r < m.dimension; ++r)
                if (act.at(r, mi) != 0) out.at(index(r, rest), col) += sign * act.at(r, mi);
            } else if (face == n) {
              std::vector<int> rest(tuple.begin(), tuple.end() - 1);
              const Mat& act = m.left[tuple[n - 1]];
              for (int r = 0; r < m.dimension; ++r)
                if (act.at(r, mi) != 0) out.at(index(r, rest), col) += sign * act.at(r, mi);
            } else {
              const auto& cc = algebra.c[tuple[face - 1]][tuple[face]];
              for (int k = 0; k < d; ++k) {
                if (ops.is_zero(cc[k])) continue;
                std::vector<int> rest;
                for (int p = 0; p < face - 1; ++p) rest.push_back(tuple[p]);
                rest.push_back(k);
                for (int p = face + 1; p < n; ++p) rest.push_back(tuple[p]);
                out.at(index(mi, rest), col) += sign * cc[k];
              }
            }
          }
        }
        return;
      }
      for (int v = 0; v < d; ++v) {
        tuple[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
    bnd[n] = mat_canon(out, f);
  }
  std::vector<int> betti;
  for (int n = 0; n <= n_max; ++n) {
    int z = int(full_dim(n)) - (n >= 1 ? rank(bnd[n], f) : 0);
    betti.push_back(z - rank(bnd[n + 1], f));
  }
  return betti;
}

HochschildEzReport hochschild_ez_check(const Algebra& a, const Mat& va, const Bimodule& ma,
                                       const Algebra& b, const Mat& vb, const Bimodule& mb,
                                       int n_max) {
  const Ring f = a.field;
  internal_check(f == b.field, "RingMismatch", "shared field expected");
  HochschildEzReport rep;

  GradedPair pa = hochschild_pair(a, va, ma, n_max);
  GradedPair pb = hochschild_pair(b, vb, mb, n_max);
  SubComplex oa = omega(pa);
  SubComplex ob = omega(pb);

  Algebra ab = Algebra::tensor(a, b);
  Bimodule mab = Bimodule::tensor(a, ma, b, mb);
  // V (x) K + K (x) V' inside the tensor algebra.
  Mat vsum(ab.dim(), va.cols() + vb.cols());
  for (int c = 0; c < va.cols(); ++c)
    for (int r = 0; r < a.dim(); ++r) vsum.at(r * b.dim() + 0, c) = va.at(r, c);
  for (int c = 0; c < vb.cols(); ++c)
    for (int r = 0; r < b.dim(); ++r) vsum.at(0 * b.dim() + r, va.cols() + c) = vb.at(r, c);
  GradedPair pab = hochschild_pair(ab, vsum, mab, n_max);
  SubComplex oab = omega(pab);
  for (int n = 0; n <= n_max; ++n) rep.tensor_dims.push_back(oab.complex.dim(n));

  // Shuffle map on ambient coordinates: degree (k, l) block into degree n.
  const int da = a.dim(), db = b.dim();
  auto slot_pair = [&](int i, int j) { return i * db + j; };  // tensor-algebra basis index
  for (int n = 0; n <= n_max; ++n) {
    ChainSpace ca{ma.dimension, da - 1, 0}, cb{mb.dimension, db - 1, 0};
    ChainSpace cab{mab.dimension, da * db - 1, n};
    // Build epsilon from the direct sum of blocks into the tensor ambient.
    int total_cols = 0;
    std::vector<int> offs(n + 2, 0);
    for (int k = 0; k <= n; ++k) {
      offs[k] = total_cols;
      ca.n = k;
      cb.n = n - k;
      total_cols += int(ca.dim()) * int(cb.dim());
    }
    offs[n + 1] = total_cols;
    Mat eps(int(cab.dim()), total_cols);
    for (int k = 0; k <= n; ++k) {
      int l = n - k;
      ca.n = k;
      cb.n = l;
      auto shuffles = enumerate_shuffles(l, k);
      std::vector<int> ta(k, 1), tb(l, 1);
      std::function<void(int)> rec_b = [&](int) {};
      // Enumerate basis tensors of the (k, l) block.
      std::vector<std::vector<int>> tuples_a, tuples_b;
      std::function<void(std::vector<int>&, int, int, std::vector<std::vector<int>>&)> gen =
          [&](std::vector<int>& t, int pos, int slots, std::vector<std::vector<int>>& out) {
            if (pos == int(t.size())) {
              out.push_back(t);
              return;
            }
            for (int v = 1; v <= slots; ++v) {
              t[pos] = v;
              gen(t, pos + 1, slots, out);
            }
          };
      std::vector<int> tmpa(k), tmpb(l);
      gen(tmpa, 0, da - 1, tuples_a);
      gen(tmpb, 0, db - 1, tuples_b);
      for (int mi = 0; mi < ma.dimension; ++mi)
        for (size_t ia = 0; ia < tuples_a.size(); ++ia)
          for (int mj = 0; mj < mb.dimension; ++mj)
            for (size_t ib = 0; ib < tuples_b.size(); ++ib) {
              ca.n = k;
              cb.n = l;
              int col = offs[k] + int(ca.index(mi, tuples_a[ia]) * cb.dim() +
                                      cb.index(mj, tuples_b[ib]));
              for (const auto& [sh, sign] : shuffles) {
                // Weave with unit slots: positions in mu take the b-side
                // letter, positions in nu take the a-side letter.
                std::vector<int> slots(n);
                int pa_i = 0, pb_i = 0;
                bool dead = false;
                for (int p = 0; p < n; ++p) {
                  bool right_moves =
                      std::binary_search(sh.mu.begin(), sh.mu.end(), p);
                  int pair;
                  if (right_moves)
                    pair = slot_pair(0, tuples_b[ib][pb_i++]);
                  else
                    pair = slot_pair(tuples_a[ia][pa_i++], 0);
                  if (pair == 0) { dead = true; break; }  // the tensor unit
                  slots[p] = pair;
                }
                if (dead) continue;
                int mi_ab = mi * mb.dimension + mj;
                eps.at(cab.index(mi_ab, slots), col) += Scalar(sign);
              }
            }
    }
    // Restrict to the omega bases on both sides.
    Mat tensor_basis(total_cols, 0);
    {
      int cols = 0;
      for (int k = 0; k <= n; ++k) cols += oa.basis[k].cols() * ob.basis[n - k].cols();
      tensor_basis = Mat(total_cols, cols);
      int col0 = 0;
      for (int k = 0; k <= n; ++k) {
        Mat block = Mat::kronecker(oa.basis[k], ob.basis[n - k]);
        for (int r = 0; r < block.rows(); ++r)
          for (int c = 0; c < block.cols(); ++c)
            tensor_basis.at(offs[k] + r, col0 + c) = block.at(r, c);
        col0 += block.cols();
      }
    }
    Mat eps_on_omega = mat_canon(eps * tensor_basis, f);
    Mat eps_in = solve_in_span(oab.basis[n], eps_on_omega, f);
    if (rank(eps_in, f) != eps_in.cols() || eps_in.rows() != eps_in.cols()) {
      rep.mutually_inverse = false;
      throw InternalInvariantError("NotMutuallyInverse",
                                   "module shuffle map not bijective at degree " +
                                       std::to_string(n));
    }
  }
  return rep;
}

bool simplicial_identities_hold(const Algebra& algebra, const Bimodule& m, int n, int trials,
                                unsigned seed) {
  algebra.validate();
  m.validate(algebra);
  const Ring f = algebra.field;
  const int d = algebra.dim();
  std::mt19937_64 rng(seed);
  auto full_dim = [&](int deg) {
    long t = m.dimension;
    for (int i = 0; i < deg; ++i) t *= d;
    return t;
  };
  auto index = [&](int mi, const std::vector<int>& tuple) {
    long idx = mi;
    for (int v : tuple) idx = idx * d + v;
    return idx;
  };
  // Single face matrix on the full module.
  auto face = [&](int deg, int i) {
    Mat out(int(full_dim(deg - 1)), int(full_dim(deg)));
    std::vector<int> tuple(deg, 0);
    RingOps ops(f);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == deg) {
        for (int mi = 0; mi < m.dimension; ++mi) {
          int col = int(index(mi, tuple));
          if (i == 0) {
            std::vector<int> rest(tuple.begin() + 1, tuple.end());
            const Mat& act = m.right[tuple[0]];
            for (int r = 0; r < m.dimension; ++r)
              if (act.at(r, mi) != 0) out.at(index(r, rest), col) += act.at(r, mi);
          } else if (i == deg) {
            std::vector<int> rest(tuple.begin(), tuple.end() - 1);
            const Mat& act = m.left[tuple[deg - 1]];
            for (int r = 0; r < m.dimension; ++r)
              if (act.at(r, mi) != 0) out.at(index(r, rest), col) += act.at(r, mi);
          } else {
            const auto& cc = algebra.c[tuple[i - 1]][tuple[i]];
            for (int k = 0; k < d; ++k) {
              if (ops.is_zero(cc[k])) continue;
              std::vector<int> rest;
              for (int p = 0; p < i - 1; ++p) rest.push_back(tuple[p]);
              rest.push_back(k);
              for (int p = i + 1; p < deg; ++p) rest.push_back(tuple[p]);
              out.at(index(mi, rest), col) += cc[k];
            }
          }
        }
        return;
      }
      for (int v = 0; v < d; ++v) {
        tuple[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
    return mat_canon(out, f);
  };
  for (int t = 0; t < trials; ++t) {
    int deg = 2 + int(rng() % std::max(1, n - 1));
    int j = 1 + int(rng() % deg);
    int i = int(rng() % j);
    Mat lhs = mat_canon(face(deg - 1, i) * face(deg, j), f);
    Mat rhs = mat_canon(face(deg - 1, j - 1) * face(deg, i), f);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace pathhom
