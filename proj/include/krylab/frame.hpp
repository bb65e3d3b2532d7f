#pragma once

#include <vector>

#include "krylab/core.hpp"

namespace krylab {

// An orthonormal basis of a subspace of C^N, stored column-wise.
// The Gram matrix F*F deviates from the identity by at most ortho_tol
// in operator norm; this is verified at construction.
class Frame {
 public:
  static constexpr double kDefaultOrthoTol = 1e-12;

  Frame() = default;
  Frame(CMatrix columns, Index ambient_dim, double ortho_tol = kDefaultOrthoTol);

  static Frame empty(Index ambient_dim);
  // Frame of the full ambient space (identity columns).
  static Frame full(Index ambient_dim);

  const CMatrix& columns() const { return cols_; }
  Index ambient_dim() const { return ambient_; }
  Index dim() const { return cols_.cols(); }
  bool is_empty() const { return cols_.cols() == 0; }
  double ortho_tol() const { return ortho_tol_; }

  // ||F*F - I|| in operator norm, 0 for the empty frame.
  double gram_defect() const;

 private:
  CMatrix cols_;
  Index ambient_ = 0;
  double ortho_tol_ = kDefaultOrthoTol;
};

// Modified Gram-Schmidt with one full reorthogonalization pass.
// Vectors whose residual after projection has norm <= tol * (max input
// norm) are dropped as rank-deficient.
Frame orthonormalize(const std::vector<HVector>& vectors, double tol = 1e-8);
Frame orthonormalize(const CMatrix& vectors, double tol = 1e-8);

// Orthogonal projection of v onto span(F).
HVector project(const Frame& f, const HVector& v);

// Distance ||v - P_F v||.
double distance_to_span(const Frame& f, const HVector& v);

// Principal angles between the spans, ascending, in [0, pi/2].
// Cosines are the singular values of the cross-Gram matrix U*V clamped to
// [0,1]; angles with cos^2 > 1/2 are recomputed via the sine-based
// formulation for accuracy near 0.
std::vector<double> principal_angles(const Frame& u, const Frame& v);

// Frame for the span of principal directions whose principal angle is
// strictly below angle_tol. Each returned column lies in both spans up to
// a distance of order angle_tol.
Frame subspace_intersection(const Frame& u, const Frame& v, double angle_tol = 1e-8);

// Orthogonal complement within the ambient space; ambient_dim - dim(U)
// columns, each orthogonal to span(U) within 1e-12.
Frame orthogonal_complement(const Frame& u);

}  // namespace krylab
