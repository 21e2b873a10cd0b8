#include "pathhom/graded_pair.hpp"

namespace pathhom {

namespace {

// Saturation of the column lattice: all integer points of its rational span.
Mat saturate(const Mat& gens, const Ring& ring) {
  if (gens.cols() == 0) return Mat(gens.rows(), 0);
  if (ring.is_field()) return column_basis(gens, ring);
  Mat ann = kernel_basis(gens.transpose(), Ring::Q());
  // Clear denominators columnwise; the integer kernel of ann^T is saturated.
  Mat annT = ann.transpose();
  for (int r = 0; r < annT.rows(); ++r) {
    Int lcm = 1;
    for (int c = 0; c < annT.cols(); ++c) {
      Scalar x = annT.at(r, c);
      x.canonicalize();
      lcm = lcm / gcd(lcm, x.get_den()) * x.get_den();
    }
    for (int c = 0; c < annT.cols(); ++c) annT.at(r, c) *= Scalar(lcm);
  }
  return kernel_basis(annT, Ring::Z());
}

Mat right_inverse(const Mat& u, const Ring& ring) {
  return solve_in_span(u, Mat::identity(u.rows()), ring.is_field() ? ring : Ring::Z());
}

}  // namespace

GradedPair::GradedPair(BoundedComplex ambient, std::vector<Mat> sub_basis)
    : ambient_(std::move(ambient)), sub_(std::move(sub_basis)) {
  require(int(sub_.size()) == ambient_.max_degree() + 1, "ValidationError",
          "one submodule basis per degree expected");
  for (int n = 0; n <= ambient_.max_degree(); ++n) {
    require(sub_[n].rows() == ambient_.dim(n), "ValidationError",
            "submodule basis rows at degree " + std::to_string(n));
    // Generating sets are reduced to a basis; over Z it is saturated so that
    // all quotients stay free.
    sub_[n] = saturate(sub_[n], ring());
  }
}

const Mat& GradedPair::sub(int n) const {
  if (n < 0 || n > max_degree()) return empty_;
  return sub_[n];
}

SubComplex omega(const GradedPair& p) {
  const Ring ring = p.ring();
  const int n_max = p.max_degree();
  SubComplex out;
  out.basis.resize(n_max + 1);
  std::vector<int> dims(n_max + 1, 0);
  std::vector<Mat> bnd(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const Mat& b = p.sub(n);
    if (n == 0) {
      out.basis[0] = b;
    } else {
      // Kernel of D_n -> C_{n-1}/D_{n-1}.
      Mat u = quotient_coordinates(p.sub(n - 1), ring);
      std::vector<int> bottom;
      for (int r = p.sub(n - 1).cols(); r < u.rows(); ++r) bottom.push_back(r);
      Mat pi = u.rows_subset(bottom);
      Mat m = mat_canon(pi * p.ambient().boundary(n) * b, ring);
      Mat k = kernel_basis(m, ring);
      out.basis[n] = mat_canon(b * k, ring);
    }
    dims[n] = out.basis[n].cols();
  }
  bnd[0] = Mat::zero(0, 0);
  for (int n = 1; n <= n_max; ++n) {
    Mat img = mat_canon(p.ambient().boundary(n) * out.basis[n], ring);
    bnd[n] = solve_in_span(out.basis[n - 1], img, ring);
  }
  out.complex = BoundedComplex(ring, dims, bnd);
  return out;
}

SubComplex omega_prime(const GradedPair& p) {
  const Ring ring = p.ring();
  const int n_max = p.max_degree();
  SubComplex out;
  out.basis.resize(n_max + 1);
  std::vector<int> dims(n_max + 1, 0);
  std::vector<Mat> bnd(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Mat gens = p.sub(n);
    if (n < n_max)
      gens = Mat::hcat(gens, mat_canon(p.ambient().boundary(n + 1) * p.sub(n + 1), ring));
    out.basis[n] = column_basis(gens, ring);
    dims[n] = out.basis[n].cols();
  }
  bnd[0] = Mat::zero(0, 0);
  for (int n = 1; n <= n_max; ++n) {
    Mat img = mat_canon(p.ambient().boundary(n) * out.basis[n], ring);
    bnd[n] = solve_in_span(out.basis[n - 1], img, ring);
  }
  out.complex = BoundedComplex(ring, dims, bnd);
  return out;
}

QuotientComplex psi(const GradedPair& p) {
  const Ring ring = p.ring();
  const int n_max = p.max_degree();
  SubComplex w = omega_prime(p);
  if (ring == Ring::Z()) {
    for (int n = 0; n <= n_max; ++n) {
      if (w.basis[n].cols() == 0) continue;
      SmithForm sf = smith_normal_form(w.basis[n]);
      for (int i = 0; i < w.basis[n].cols(); ++i)
        require(sf.diagonal[i] == 1, "NonFreeQuotient",
                "quotient by the minimal subcomplex has torsion over Z at degree " +
                    std::to_string(n) + "; use field coefficients");
    }
  }
  QuotientComplex out;
  out.projection.resize(n_max + 1);
  std::vector<int> dims(n_max + 1, 0);
  std::vector<Mat> bnd(n_max + 1);
  std::vector<Mat> sections(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Mat u = quotient_coordinates(w.basis[n], ring);
    Mat uinv = right_inverse(u, ring);
    int r = w.basis[n].cols();
    std::vector<int> bottom;
    for (int i = r; i < u.rows(); ++i) bottom.push_back(i);
    out.projection[n] = u.rows_subset(bottom);
    std::vector<int> bcols = bottom;
    sections[n] = uinv.cols_subset(bcols);
    dims[n] = int(bottom.size());
  }
  bnd[0] = Mat::zero(0, 0);
  for (int n = 1; n <= n_max; ++n)
    bnd[n] = mat_canon(out.projection[n - 1] * p.ambient().boundary(n) * sections[n], ring);
  out.complex = BoundedComplex(ring, dims, bnd);
  return out;
}

std::vector<HomologyGroup> pair_homology(const GradedPair& p) {
  return omega(p).complex.homology();
}

std::vector<HomologyGroup> anti_homology(const GradedPair& p) {
  return psi(p).complex.homology();
}

namespace {

FieldHomologyCoords homology_coords(const BoundedComplex& c, int n) {
  return field_homology_coords(c.boundary(n), c.boundary(n + 1), c.ring());
}

}  // namespace

LesReport verify_les(const GradedPair& p) {
  const Ring ring = p.ring();
  require(ring.is_field(), "NotField", "long-exact-sequence check needs field coefficients");
  const int n_max = p.max_degree();
  SubComplex w = omega_prime(p);
  QuotientComplex q = psi(p);
  const BoundedComplex& c = p.ambient();

  // Quasi-isomorphism omega -> omega': equal homology in trusted degrees.
  SubComplex om = omega(p);
  for (int n = 0; n + 1 <= n_max; ++n) {
    internal_check(in_span(w.basis[n], om.basis[n], ring), "NotExact",
                   "omega not inside omega' at degree " + std::to_string(n));
    internal_check(om.complex.homology_in(n) == w.complex.homology_in(n), "NotExact",
                   "omega -> omega' not a quasi-isomorphism at degree " + std::to_string(n));
  }

  // Per-degree helpers: homology coordinates and a section of the quotient.
  auto section_of = [&](int n) {
    Mat u = quotient_coordinates(w.basis[n], ring);
    Mat uinv = solve_in_span(u, Mat::identity(u.rows()), ring);
    std::vector<int> bottom;
    for (int r = w.basis[n].cols(); r < u.rows(); ++r) bottom.push_back(r);
    return uinv.cols_subset(bottom);
  };
  // Connecting values: psi-cycles (psi coordinates) -> classes in H_{n-1}(w).
  auto connect = [&](int n, const Mat& psi_cycles, const FieldHomologyCoords& hw_prev) {
    if (psi_cycles.cols() == 0 || hw_prev.dim == 0) return Mat(hw_prev.dim, psi_cycles.cols());
    Mat lifts = mat_canon(section_of(n) * psi_cycles, ring);
    Mat bnd = mat_canon(c.boundary(n) * lifts, ring);
    // Internal omega'-coordinates of the boundary, the connecting value.
    Mat in_w = solve_in_span(w.basis[n - 1], bnd, ring);
    return hw_prev.class_of(in_w, ring);
  };
  auto exact_at = [&](const Mat& incoming, const Mat& outgoing, const Mat& composite,
                      int dim_node, const std::string& where) {
    internal_check(composite.is_zero(), "NotExact", "composite not zero at " + where);
    int r_in = rank(incoming, ring), r_out = rank(outgoing, ring);
    internal_check(r_in + r_out == dim_node, "NotExact",
                   "im != ker at " + where + " (rank " + std::to_string(r_in) + " + " +
                       std::to_string(r_out) + " != " + std::to_string(dim_node) + ")");
  };

  LesReport rep;
  for (int n = 0; n + 1 <= n_max; ++n) {
    FieldHomologyCoords hw = homology_coords(w.complex, n);
    FieldHomologyCoords hc = homology_coords(c, n);
    FieldHomologyCoords hq = homology_coords(q.complex, n);

    // Images of cycles under each induced map, as homology classes.
    Mat w_cycles_in_c = mat_canon(w.basis[n] * hw.cycles, ring);
    Mat i_mat = hc.dim ? hc.class_of(w_cycles_in_c, ring) : Mat(0, hw.cycles.cols());
    Mat p_of_c_cycles = mat_canon(q.projection[n] * hc.cycles, ring);
    Mat p_mat = hq.dim ? hq.class_of(p_of_c_cycles, ring) : Mat(0, hc.cycles.cols());
    Mat p_after_i = hq.dim ? hq.class_of(mat_canon(q.projection[n] * w_cycles_in_c, ring), ring)
                           : Mat(0, hw.cycles.cols());

    exact_at(i_mat, p_mat, p_after_i, hc.dim, "H_" + std::to_string(n) + "(C)");

    if (n >= 1) {
      FieldHomologyCoords hw_prev = homology_coords(w.complex, n - 1);
      FieldHomologyCoords hc_prev = homology_coords(c, n - 1);
      Mat conn = connect(n, hq.cycles, hw_prev);
      Mat conn_after_p = connect(n, p_of_c_cycles, hw_prev);
      exact_at(p_mat, conn, conn_after_p, hq.dim, "H_" + std::to_string(n) + "(psi)");

      Mat i_prev = hc_prev.dim
                       ? hc_prev.class_of(mat_canon(w.basis[n - 1] * hw_prev.cycles, ring), ring)
                       : Mat(0, hw_prev.cycles.cols());
      // i after the connecting map: boundaries in C, hence zero classes.
      Mat i_after_conn(hc_prev.dim, hq.cycles.cols());
      if (hq.cycles.cols() && hc_prev.dim) {
        Mat lifts = mat_canon(section_of(n) * hq.cycles, ring);
        Mat bnd = mat_canon(c.boundary(n) * lifts, ring);
        i_after_conn = hc_prev.class_of(bnd, ring);
      }
      exact_at(conn, i_prev, i_after_conn, hw_prev.dim, "H_" + std::to_string(n - 1) + "(omega')");
    }
    ++rep.degrees_checked;
  }
  return rep;
}

namespace {

GradedPair reversed_dual_pair(const GradedPair& p, const std::vector<Mat>& annihilator) {
  // The dual cochain complex read as a chain complex in the grading
  // m = max_degree - n; its boundary is the transposed original boundary.
  const int n_max = p.max_degree();
  std::vector<int> dims(n_max + 1);
  std::vector<Mat> bnd(n_max + 1);
  std::vector<Mat> sub(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    dims[m] = p.ambient().dim(n_max - m);
    sub[m] = annihilator[n_max - m];
  }
  bnd[0] = Mat::zero(0, 0);
  for (int m = 1; m <= n_max; ++m)
    bnd[m] = p.ambient().boundary(n_max - m + 1).transpose();
  return GradedPair(BoundedComplex(p.ring(), dims, bnd), sub);
}

}  // namespace

DualReport dual_pair(const GradedPair& p) {
  const Ring ring = p.ring();
  require(ring.is_field(), "NotField", "duality needs field coefficients");
  const int n_max = p.max_degree();
  SubComplex om = omega(p);
  std::vector<Mat> annihilator(n_max + 1);
  std::vector<int> omega_dims, psi_dims;
  bool equal = true;
  for (int n = 0; n <= n_max; ++n) {
    omega_dims.push_back(om.basis[n].cols());
    // K^n = annihilator of D_n; the minimal dual subcomplex around K at
    // degree n spans K^n + delta(K^{n-1}).
    annihilator[n] = kernel_basis(p.sub(n).transpose(), ring);
    Mat gens = annihilator[n];
    if (n >= 1) {
      Mat kn1 = kernel_basis(p.sub(n - 1).transpose(), ring);
      gens = Mat::hcat(gens, mat_canon(p.ambient().boundary(n).transpose() * kn1, ring));
    }
    int dim_psi = p.ambient().dim(n) - rank(gens, ring);
    psi_dims.push_back(dim_psi);
    if (omega_dims.back() != dim_psi) equal = false;
  }
  DualReport rep{reversed_dual_pair(p, annihilator), annihilator, omega_dims, psi_dims, equal};
  internal_check(rep.equal, "DualityMismatch", "dim omega_n != dim psi^n of the dual pair");
  // The returned pair computes the same quotient dimensions; degree n of the
  // original grading sits at max_degree - n. Nothing lives above the top of
  // the dual, so every reversed degree is trusted.
  QuotientComplex q = psi(rep.reversed_dual);
  for (int n = 0; n <= n_max; ++n)
    internal_check(q.complex.dim(n_max - n) == rep.psi_dual_dims[n], "DualityMismatch",
                   "reversed dual quotient dimensions disagree");
  return rep;
}

GradedPair tensor_pair(const GradedPair& a, const GradedPair& b) {
  require(a.ring() == b.ring(), "RingMismatch", "tensor of pairs over one ring");
  TensorComplex tc = tensor_complex(a.ambient(), b.ambient());
  int n_max = tc.complex.max_degree();
  std::vector<Mat> sub(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Mat gens(tc.complex.dim(n), 0);
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      if (j > b.max_degree() || i > a.max_degree()) continue;
      const Mat& ba = a.sub(i);
      const Mat& bb = b.sub(j);
      if (ba.cols() == 0 || bb.cols() == 0) continue;
      Mat block = Mat::kronecker(ba, bb);
      Mat placed(tc.complex.dim(n), block.cols());
      int row0 = tc.block_offset[n][i];
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) placed.at(row0 + r, c) = block.at(r, c);
      gens = Mat::hcat(gens, placed);
    }
    sub[n] = gens;
  }
  return GradedPair(tc.complex, sub);
}

bool omega_tensor_compatible(const GradedPair& a, const GradedPair& b) {
  GradedPair t = tensor_pair(a, b);
  SubComplex om_t = omega(t);
  SubComplex om_a = omega(a);
  SubComplex om_b = omega(b);
  TensorComplex tc = tensor_complex(a.ambient(), b.ambient());
  for (int n = 0; n <= t.max_degree(); ++n) {
    Mat gens(tc.complex.dim(n), 0);
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      if (i > a.max_degree() || j > b.max_degree()) continue;
      if (om_a.basis[i].cols() == 0 || om_b.basis[j].cols() == 0) continue;
      Mat block = Mat::kronecker(om_a.basis[i], om_b.basis[j]);
      Mat placed(tc.complex.dim(n), block.cols());
      int row0 = tc.block_offset[n][i];
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) placed.at(row0 + r, c) = block.at(r, c);
      gens = Mat::hcat(gens, placed);
    }
    if (!same_span(gens, om_t.basis[n], t.ring())) return false;
  }
  return true;
}

}  // namespace pathhom
