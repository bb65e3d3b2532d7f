#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace krylab {

using Complex = std::complex<double>;
using HVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Thrown on contract violations of the caller (dimension mismatch, empty
// input, zero datum, index outside window, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown by dense_solve when the operator is singular to tolerance.
struct SingularOperator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by min_norm_solve when the datum is detectably outside ran A.
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by gallery constructors when the positivity condition fails.
struct NotFriedrichs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by the CG recursion on a detected negative curvature direction.
struct NotPositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A degenerate compressed (Galerkin) system at some truncation level n.
// Reportable event: runners catch it, record n, and move on.
struct TruncationSingular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by experiment runners whose paper anchor requires a structural
// precondition (e.g. A + A* a multiple of the identity).
struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral (2-)norm of a dense matrix. Returns 0 for empty matrices.
double spectral_norm(const CMatrix& m);

inline bool is_finite(const HVector& v) { return v.allFinite(); }

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

}  // namespace krylab
