#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "krylab/dense_operator.hpp"

namespace krylab {

// ---------------------------------------------------------------------------
// Bilateral shift on a finite window [-N, N] of l^2(Z).
// Storage index p = window index + N, so e_{-N} sits at position 0.
// ---------------------------------------------------------------------------

enum class ShiftFill { zero_fill, cyclic };

struct ShiftSpec {
  int window_radius = 8;  // indices -N..N, ambient dimension 2N+1
  ShiftFill fill = ShiftFill::zero_fill;
};

DenseOperator build_shift(const ShiftSpec& spec);

inline Index shift_dim(int window_radius) { return 2 * window_radius + 1; }
inline Index shift_storage_index(int window_index, int window_radius) {
  return window_index + window_radius;
}

// Canonical datum e_n of the window; throws InvalidInput outside it.
HVector shift_noncyclic_datum(int window_index, int window_radius);

// Numerical stand-in for a cyclic vector of the bilateral shift: inverse
// discrete Fourier transform of samples of the symbol
//   F(theta) = exp(-1/|theta|) * exp(-1/(pi - |theta|)),
// taken on an offset grid that avoids the zeros at theta = 0 and +-pi.
// log F is not integrable at 0 (Szego condition), F > 0 elsewhere.
// A nonzero seed applies a deterministic phase twist to the samples.
struct SzegoParams {
  int window_radius = 8;
};
HVector shift_szego_datum(std::uint64_t seed, const SzegoParams& params);

// Symbol samples used by shift_szego_datum, in storage order.
Eigen::VectorXd szego_symbol_samples(int window_radius);

// ---------------------------------------------------------------------------
// Fourier-spectral differentiation on a periodic grid.
// ---------------------------------------------------------------------------

// Real antisymmetric differentiation matrix on grid_points nodes of a
// periodic domain of the given length; antisymmetry is exact by
// construction (mirrored entries).
Eigen::MatrixXd spectral_derivative(int grid_points, double domain_length);

// Discrete wavenumber 2*pi*k / L of integer mode k.
inline double wavenumber(int mode, double domain_length) {
  return 2.0 * M_PI * mode / domain_length;
}

// Unit-norm samples of exp(i k_hat x) on the periodic grid.
HVector fourier_mode_datum(int mode, int grid_points, double domain_length);

// Unit-norm combination of the given integer modes (equal weights).
HVector band_limited_datum(const std::vector<int>& modes, int grid_points,
                           double domain_length);

// Unit-norm periodic bump exp(kappa (cos(2 pi (x - x0)/L) - 1)); all
// Fourier modes active.
HVector bump_datum(int grid_points, double domain_length, double kappa = 4.0,
                   double center = 0.0);

// ---------------------------------------------------------------------------
// Classical 1-D Friedrichs operator, periodic, discretized spectrally:
//   A0 f = d/dx (B f) + C f,   A0~ f = -d/dx (B f) + (C* + B') f,
// with B Hermitian per grid point and C + C* + B' >= mu at every point.
// Block layout is component-major: entry (component i, grid point p) is
// stored at i * grid_points + p.
// ---------------------------------------------------------------------------

struct Friedrichs1DSpec {
  int system_size = 1;      // r
  int grid_points = 32;     // M
  double domain_length = 2.0 * M_PI;
  // Per-grid-point r x r samples; a single entry means a constant
  // coefficient.
  std::vector<CMatrix> B;
  std::vector<CMatrix> C;
  double mu = 0.0;          // claimed positivity constant
};

struct FriedrichsPair {
  DenseOperator minimal;         // A0
  DenseOperator formal_adjoint;  // A0~
};

FriedrichsPair build_friedrichs_1d(const Friedrichs1DSpec& spec);

// ---------------------------------------------------------------------------
// Prototype operator A = -d/dx + c(x) on the periodic Fourier grid.
// For c == 1, A + A* equals 2I exactly.
// ---------------------------------------------------------------------------

struct PrototypeSpec {
  std::vector<Complex> c_samples;  // one sample per grid point; empty => c == 1
  int modes = 32;                  // grid points M
  double domain_length = 2.0 * M_PI;
};

DenseOperator build_prototype(const PrototypeSpec& spec);

// ---------------------------------------------------------------------------
// Abstract Friedrichs-pair check on concrete matrices.
// ---------------------------------------------------------------------------

struct FriedrichsCheck {
  bool is_pair = false;
  double sum_self_adjoint_defect = 0.0;  // ||(T + T~) - (T + T~)*||
  double bottom = 0.0;                   // smallest eigenvalue of T + T~
  double bound = 0.0;                    // ||T + T~||
};

FriedrichsCheck check_friedrichs_pair(const DenseOperator& t,
                                      const DenseOperator& t_tilde,
                                      double tol = 1e-10);

// ---------------------------------------------------------------------------
// Window guard: desk-scale validity condition. Vectors modeled on a
// truncated infinite lattice are trusted only while their relative mass in
// the outer bands (5% of positions at each end) stays below the threshold.
// ---------------------------------------------------------------------------

struct WindowGuard {
  bool applicable = false;
  int band = 0;               // positions per edge
  double threshold = 1e-8;
  double max_outer_mass = 0.0;  // worst relative squared mass over vectors
  bool ok = true;
};

WindowGuard check_window_mass(const CMatrix& columns, double threshold = 1e-8);
WindowGuard check_window_mass(const std::vector<HVector>& vectors,
                              double threshold = 1e-8);

}  // namespace krylab
