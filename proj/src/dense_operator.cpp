#include "krylab/dense_operator.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace krylab {

namespace {

double herm_min_eig(const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Eigen::BDCSVD<CMatrix> thin_svd(const CMatrix& m) {
  return Eigen::BDCSVD<CMatrix>(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

}  // namespace

DenseOperator::DenseOperator(CMatrix matrix, std::set<OperatorFlag> flags,
                             double flag_tol)
    : mat_(std::move(matrix)), flags_(std::move(flags)) {
  require(mat_.rows() == mat_.cols(), "DenseOperator: matrix must be square");
  require(mat_.rows() > 0, "DenseOperator: empty matrix");
  require(mat_.allFinite(), "DenseOperator: non-finite entries");
  if (flags_.count(OperatorFlag::self_adjoint)) flags_.insert(OperatorFlag::normal);

  Eigen::BDCSVD<CMatrix> svd(mat_);
  sigma_max_ = svd.singularValues()(0);
  sigma_min_ = svd.singularValues()(mat_.rows() - 1);

  verify_flags(flag_tol);
}

void DenseOperator::verify_flags(double flag_tol) const {
  const double scale = std::max(1.0, sigma_max_);
  if (has(OperatorFlag::self_adjoint) &&
      spectral_norm(mat_ - mat_.adjoint()) > flag_tol * scale)
    throw InvalidInput("DenseOperator: self_adjoint flag violated");
  if (has(OperatorFlag::skew_adjoint) &&
      spectral_norm(mat_ + mat_.adjoint()) > flag_tol * scale)
    throw InvalidInput("DenseOperator: skew_adjoint flag violated");
  if (has(OperatorFlag::normal) &&
      spectral_norm(mat_ * mat_.adjoint() - mat_.adjoint() * mat_) >
          flag_tol * scale * scale)
    throw InvalidInput("DenseOperator: normal flag violated");
  if (has(OperatorFlag::positive) && herm_min_eig(mat_) < -flag_tol * scale)
    throw InvalidInput("DenseOperator: positive flag violated");
  if (has(OperatorFlag::invertible_known) && cond_estimate() >= 1e12)
    throw InvalidInput("DenseOperator: invertible_known flag violated");
}

DenseOperator DenseOperator::with_detected_flags(CMatrix matrix, double flag_tol) {
  DenseOperator op(std::move(matrix));
  const double scale = std::max(1.0, op.norm());
  std::set<OperatorFlag> flags;
  if (spectral_norm(op.mat_ - op.mat_.adjoint()) <= flag_tol * scale)
    flags.insert(OperatorFlag::self_adjoint);
  if (spectral_norm(op.mat_ + op.mat_.adjoint()) <= flag_tol * scale)
    flags.insert(OperatorFlag::skew_adjoint);
  if (spectral_norm(op.mat_ * op.mat_.adjoint() - op.mat_.adjoint() * op.mat_) <=
      flag_tol * scale * scale)
    flags.insert(OperatorFlag::normal);
  if (herm_min_eig(op.mat_) >= -flag_tol * scale)
    flags.insert(OperatorFlag::positive);
  if (op.cond_estimate() < 1e12) flags.insert(OperatorFlag::invertible_known);
  return DenseOperator(std::move(op.mat_), std::move(flags), flag_tol);
}

HVector DenseOperator::apply(const HVector& v) const {
  require(v.size() == dim(), "DenseOperator::apply: dimension mismatch");
  return mat_ * v;
}

HVector DenseOperator::apply_adjoint(const HVector& v) const {
  require(v.size() == dim(), "DenseOperator::apply_adjoint: dimension mismatch");
  return mat_.adjoint() * v;
}

double DenseOperator::cond_estimate() const {
  if (sigma_min_ <= sigma_max_ * std::numeric_limits<double>::epsilon())
    return std::numeric_limits<double>::infinity();
  return sigma_max_ / sigma_min_;
}

HVector dense_solve(const DenseOperator& a, const HVector& b) {
  require(b.size() == a.dim(), "dense_solve: dimension mismatch");
  if (a.cond_estimate() >= 1e12)
    throw SingularOperator("dense_solve: operator singular to tolerance");
  auto svd = thin_svd(a.matrix());
  return svd.solve(b);
}

double range_residual(const DenseOperator& a, const HVector& b) {
  require(b.size() == a.dim(), "range_residual: dimension mismatch");
  const double bn = b.norm();
  if (bn == 0.0) return 0.0;
  auto svd = thin_svd(a.matrix());
  const auto& sv = svd.singularValues();
  const double cutoff = sv(0) * a.dim() * std::numeric_limits<double>::epsilon();
  HVector c = svd.matrixU().adjoint() * b;
  double out_sq = 0.0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff) out_sq += std::norm(c(i));
  return std::sqrt(out_sq) / bn;
}

HVector min_norm_solve(const DenseOperator& a, const HVector& b, double range_tol) {
  require(b.size() == a.dim(), "min_norm_solve: dimension mismatch");
  auto svd = thin_svd(a.matrix());
  const auto& sv = svd.singularValues();
  const double cutoff = sv(0) * a.dim() * std::numeric_limits<double>::epsilon();

  HVector c = svd.matrixU().adjoint() * b;
  double out_sq = 0.0;
  HVector y = HVector::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff)
      y(i) = c(i) / sv(i);
    else
      out_sq += std::norm(c(i));
  }
  const double bn = b.norm();
  if (bn > 0.0 && std::sqrt(out_sq) > range_tol * bn)
    throw NoSolution("min_norm_solve: datum detectably outside ran A");
  return svd.matrixV() * y;
}

}  // namespace krylab
