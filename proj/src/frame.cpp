#include "krylab/frame.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace krylab {

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

Frame::Frame(CMatrix columns, Index ambient_dim, double ortho_tol)
    : cols_(std::move(columns)), ambient_(ambient_dim), ortho_tol_(ortho_tol) {
  require(ambient_ >= 0, "Frame: negative ambient dimension");
  require(cols_.cols() == 0 || cols_.rows() == ambient_,
          "Frame: column dimension does not match ambient dimension");
  require(cols_.cols() <= ambient_, "Frame: more columns than ambient dimension");
  require(ortho_tol_ >= 0, "Frame: negative orthonormality tolerance");
  require(cols_.allFinite(), "Frame: non-finite entries");
  if (gram_defect() > 10 * ortho_tol_)
    throw InvalidInput("Frame: columns are not orthonormal to tolerance");
}

Frame Frame::empty(Index ambient_dim) {
  Frame f;
  f.ambient_ = ambient_dim;
  f.cols_ = CMatrix(ambient_dim, 0);
  return f;
}

Frame Frame::full(Index ambient_dim) {
  return Frame(CMatrix::Identity(ambient_dim, ambient_dim), ambient_dim);
}

double Frame::gram_defect() const {
  if (cols_.cols() == 0) return 0.0;
  CMatrix g = cols_.adjoint() * cols_;
  g.diagonal().array() -= 1.0;
  return spectral_norm(g);
}

namespace {

// One MGS sweep of v against the columns of q.
void mgs_sweep(const CMatrix& q, Index k, HVector& v) {
  for (Index j = 0; j < k; ++j) {
    Complex c = q.col(j).dot(v);  // Eigen: conjugates the left argument
    v -= c * q.col(j);
  }
}

}  // namespace

Frame orthonormalize(const CMatrix& vectors, double tol) {
  require(vectors.cols() > 0, "orthonormalize: empty input");
  require(tol > 0, "orthonormalize: tolerance must be positive");
  require(vectors.allFinite(), "orthonormalize: non-finite entries");
  const Index n = vectors.rows();
  double max_norm = 0.0;
  for (Index i = 0; i < vectors.cols(); ++i)
    max_norm = std::max(max_norm, vectors.col(i).norm());
  if (max_norm == 0.0) return Frame::empty(n);

  CMatrix q(n, std::min(vectors.cols(), n));
  Index k = 0;
  for (Index i = 0; i < vectors.cols() && k < n; ++i) {
    HVector v = vectors.col(i);
    mgs_sweep(q, k, v);
    mgs_sweep(q, k, v);  // one full reorthogonalization pass
    const double r = v.norm();
    if (r <= tol * max_norm) continue;  // rank-deficient direction
    q.col(k) = v / r;
    ++k;
  }
  return Frame(q.leftCols(k), n);
}

Frame orthonormalize(const std::vector<HVector>& vectors, double tol) {
  require(!vectors.empty(), "orthonormalize: empty input");
  const Index n = vectors.front().size();
  CMatrix m(n, static_cast<Index>(vectors.size()));
  for (Index i = 0; i < m.cols(); ++i) {
    require(vectors[static_cast<std::size_t>(i)].size() == n,
            "orthonormalize: vectors of mixed dimension");
    m.col(i) = vectors[static_cast<std::size_t>(i)];
  }
  return orthonormalize(m, tol);
}

HVector project(const Frame& f, const HVector& v) {
  require(v.size() == f.ambient_dim(), "project: dimension mismatch");
  if (f.is_empty()) return HVector::Zero(f.ambient_dim());
  return f.columns() * (f.columns().adjoint() * v);
}

double distance_to_span(const Frame& f, const HVector& v) {
  return (v - project(f, v)).norm();
}

std::vector<double> principal_angles(const Frame& u, const Frame& v) {
  require(u.ambient_dim() == v.ambient_dim(), "principal_angles: dimension mismatch");
  if (u.is_empty() || v.is_empty()) return {};

  const Index k = std::min(u.dim(), v.dim());
  CMatrix cross = u.columns().adjoint() * v.columns();
  Eigen::BDCSVD<CMatrix> svd(cross);
  Eigen::VectorXd cosines = svd.singularValues().head(k);

  // Sines of the same angles from the residual of V against span(U),
  // accurate where the cosine is ill-conditioned (angle near 0).
  CMatrix resid = v.columns() - u.columns() * cross;
  Eigen::BDCSVD<CMatrix> svd_s(resid);
  const auto& sv = svd_s.singularValues();
  // The k smallest singular values of the residual are the sines of the
  // principal angles; ascending sines pair with descending cosines.
  Eigen::VectorXd sines = Eigen::VectorXd::Zero(k);
  for (Index i = 0; i < k && i < sv.size(); ++i) sines(i) = sv(sv.size() - 1 - i);

  std::vector<double> angles(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) {
    const double c = std::clamp(cosines(i), 0.0, 1.0);
    const double s = std::clamp(sines(i), 0.0, 1.0);
    angles[static_cast<std::size_t>(i)] = (c * c > 0.5) ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

Frame subspace_intersection(const Frame& u, const Frame& v, double angle_tol) {
  require(u.ambient_dim() == v.ambient_dim(),
          "subspace_intersection: dimension mismatch");
  require(angle_tol > 0, "subspace_intersection: tolerance must be positive");
  if (u.is_empty() || v.is_empty()) return Frame::empty(u.ambient_dim());

  CMatrix cross = u.columns().adjoint() * v.columns();
  Eigen::JacobiSVD<CMatrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Index k = std::min(u.dim(), v.dim());

  std::vector<HVector> directions;
  for (Index i = 0; i < k; ++i) {
    const double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
    const double angle = std::acos(c);
    if (angle >= angle_tol) break;  // singular values descend, angles ascend
    HVector uu = u.columns() * svd.matrixU().col(i);
    HVector vv = v.columns() * svd.matrixV().col(i);
    directions.push_back(0.5 * (uu + vv));
  }
  if (directions.empty()) return Frame::empty(u.ambient_dim());
  return orthonormalize(directions, 1e-12);
}

Frame orthogonal_complement(const Frame& u) {
  const Index n = u.ambient_dim();
  if (u.is_empty()) return Frame::full(n);
  if (u.dim() == n) return Frame::empty(n);
  Eigen::BDCSVD<CMatrix> svd(u.columns(), Eigen::ComputeFullU);
  return Frame(svd.matrixU().rightCols(n - u.dim()), n);
}

}  // namespace krylab
