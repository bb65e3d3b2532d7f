#pragma once

#include <set>

#include "krylab/core.hpp"

namespace krylab {

enum class OperatorFlag {
  self_adjoint,
  skew_adjoint,
  normal,
  positive,
  invertible_known,
};

// A finite-dimensional linear map with declared structure flags.
// Flagged properties are verified against tolerance at construction
// (operator norm, relative to max(1, ||A||)); self_adjoint implies normal.
class DenseOperator {
 public:
  static constexpr double kFlagTol = 1e-12;

  explicit DenseOperator(CMatrix matrix, std::set<OperatorFlag> flags = {},
                         double flag_tol = kFlagTol);

  // Detects self/skew-adjointness, normality, positivity and invertibility
  // numerically and sets the flags accordingly.
  static DenseOperator with_detected_flags(CMatrix matrix, double flag_tol = kFlagTol);

  const CMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  bool has(OperatorFlag f) const { return flags_.count(f) > 0; }
  const std::set<OperatorFlag>& flags() const { return flags_; }

  HVector apply(const HVector& v) const;
  HVector apply_adjoint(const HVector& v) const;

  // Spectral norm and extreme singular values, computed at construction.
  double norm() const { return sigma_max_; }
  double sigma_min() const { return sigma_min_; }
  // sigma_max / sigma_min; +inf when singular to machine precision.
  double cond_estimate() const;

 private:
  void verify_flags(double flag_tol) const;

  CMatrix mat_;
  std::set<OperatorFlag> flags_;
  double sigma_max_ = 0.0;
  double sigma_min_ = 0.0;
};

// Direct solve through the SVD; requires cond_estimate() < 1e12, throws
// SingularOperator otherwise. Ground-truth oracle for A f = g.
HVector dense_solve(const DenseOperator& a, const HVector& b);

// Minimum-norm least-squares solution through the SVD pseudoinverse with
// relative rank cutoff. Throws NoSolution when b is detectably outside
// ran A (relative residual above range_tol).
HVector min_norm_solve(const DenseOperator& a, const HVector& b,
                       double range_tol = 1e-8);

// Relative distance of b from ran A, ||(I - P_ran) b|| / ||b|| (0 for b = 0).
double range_residual(const DenseOperator& a, const HVector& b);

}  // namespace krylab
