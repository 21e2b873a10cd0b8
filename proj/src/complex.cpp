#include "pathhom/complex.hpp"

#include <future>
#include <thread>

namespace pathhom {

namespace {

int thread_budget() {
  const char* env = std::getenv("PATHHOM_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  if (n < 1) return 1;
  return std::min<int>(n, std::thread::hardware_concurrency());
}

}  // namespace

BoundedComplex::BoundedComplex(Ring ring, std::vector<int> dims, std::vector<Mat> boundaries,
                               std::vector<std::vector<std::string>> labels)
    : ring_(ring), dims_(std::move(dims)), boundaries_(std::move(boundaries)),
      labels_(std::move(labels)) {
  internal_check(boundaries_.size() == dims_.size(), "ShapeMismatch",
                 "one boundary slot per degree expected");
  for (int n = 1; n <= max_degree(); ++n) {
    internal_check(boundaries_[n].rows() == dims_[n - 1] && boundaries_[n].cols() == dims_[n],
                   "ShapeMismatch", "boundary shape at degree " + std::to_string(n));
  }
  check_d_squared();
}

Mat BoundedComplex::boundary(int n) const {
  if (n >= 1 && n <= max_degree()) return boundaries_[n];
  if (n == max_degree() + 1) return Mat::zero(dim(max_degree()), 0);
  return Mat::zero(dim(n - 1), dim(n));
}

const std::vector<std::string>& BoundedComplex::labels(int n) const {
  static const std::vector<std::string> none;
  if (n < 0 || n >= int(labels_.size())) return none;
  return labels_[n];
}

void BoundedComplex::check_d_squared() const {
  for (int n = 2; n <= max_degree(); ++n)
    require(mat_canon(boundaries_[n - 1] * boundaries_[n], ring_).is_zero(),
            "CompositionNotZero", "d*d != 0 at degree " + std::to_string(n));
}

std::vector<HomologyGroup> BoundedComplex::homology() const {
  int threads = thread_budget();
  std::vector<HomologyGroup> out(max_degree() + 1);
  if (threads <= 1) {
    for (int n = 0; n <= max_degree(); ++n) out[n] = homology_in(n);
    return out;
  }
  std::vector<std::future<HomologyGroup>> futs;
  for (int n = 0; n <= max_degree(); ++n)
    futs.push_back(std::async(std::launch::async, [this, n] { return homology_in(n); }));
  for (int n = 0; n <= max_degree(); ++n) out[n] = futs[n].get();
  return out;
}

HomologyGroup BoundedComplex::homology_in(int n) const {
  return homology_at(boundary(n), boundary(n + 1), ring_);
}

BoundedComplex BoundedComplex::zero(Ring ring, int max_degree) {
  std::vector<int> dims(max_degree + 1, 0);
  std::vector<Mat> bnd(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) bnd[n] = Mat::zero(0, 0);
  return BoundedComplex(ring, dims, bnd);
}

TensorComplex tensor_complex(const BoundedComplex& a, const BoundedComplex& b) {
  internal_check(a.ring() == b.ring(), "RingMismatch", "tensor of complexes over one ring");
  int n_max = a.max_degree() + b.max_degree();
  std::vector<int> dims(n_max + 1, 0);
  std::vector<std::vector<int>> offsets(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    offsets[n].assign(n + 2, 0);
    int total = 0;
    for (int i = 0; i <= n; ++i) {
      offsets[n][i] = total;
      total += a.dim(i) * b.dim(n - i);
    }
    offsets[n][n + 1] = total;
    dims[n] = total;
  }
  std::vector<Mat> bnd(n_max + 1);
  bnd[0] = Mat::zero(0, 0);
  for (int n = 1; n <= n_max; ++n) {
    Mat d(dims[n - 1], dims[n]);
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      int da = a.dim(i), db = b.dim(j);
      if (da == 0 || db == 0) continue;
      int col0 = offsets[n][i];
      // d (x) 1 into block (i-1, j).
      if (i >= 1 && a.dim(i - 1) > 0) {
        Mat dA = a.boundary(i);
        int row0 = offsets[n - 1][i - 1];
        for (int ca = 0; ca < da; ++ca)
          for (int cb = 0; cb < db; ++cb)
            for (int ra = 0; ra < a.dim(i - 1); ++ra)
              if (dA.at(ra, ca) != 0)
                d.at(row0 + ra * db + cb, col0 + ca * db + cb) += dA.at(ra, ca);
      }
      // (-1)^i 1 (x) d into block (i, j-1).
      if (j >= 1 && b.dim(j - 1) > 0) {
        Mat dB = b.boundary(j);
        int row0 = offsets[n - 1][i];
        Scalar sign = (i % 2 == 0) ? 1 : -1;
        for (int ca = 0; ca < da; ++ca)
          for (int cb = 0; cb < db; ++cb)
            for (int rb = 0; rb < b.dim(j - 1); ++rb)
              if (dB.at(rb, cb) != 0)
                d.at(row0 + ca * b.dim(j - 1) + rb, col0 + ca * db + cb) +=
                    sign * dB.at(rb, cb);
      }
    }
    bnd[n] = mat_canon(d, a.ring());
  }
  TensorComplex out{BoundedComplex(a.ring(), dims, bnd), offsets};
  return out;
}

}  // namespace pathhom
