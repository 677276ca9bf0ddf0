#pragma once

#include "lmx/types.hpp"

namespace lmx {

/// Spectrum of a square complex matrix together with the spectral
/// abscissas alpha (max real part) and beta (min real part) and the
/// condition number of the eigenvector matrix (infinite when the matrix
/// is defective to working precision).
struct SpectralSummary {
  Eigen::VectorXcd eigenvalues;
  double alpha = 0.0;
  double beta = 0.0;
  double eigcond = 1.0;

  bool defective(double cap) const { return !(eigcond < cap); }
};

SpectralSummary spectral_summary(const ComplexMatrix& M);

/// beta(M) > 0, strict, from exact eigenvalue real parts.
bool is_positive_stable(const ComplexMatrix& M);

/// ||M1*M2 - M2*M1||_F. Orders must match.
double commute_residual(const ComplexMatrix& M1, const ComplexMatrix& M2);

/// Reusable plan for t -> t^E = exp(E ln t), t > 0. Diagonalizable E uses
/// the eigendecomposition once; otherwise each application falls back to a
/// scaling-and-squaring exponential of E ln t.
class MatrixPower {
 public:
  explicit MatrixPower(ComplexMatrix E, const Tolerances& tol = {});

  ComplexMatrix operator()(double t) const;
  bool uses_exp_fallback() const { return fallback_; }

 private:
  ComplexMatrix E_;
  Eigen::MatrixXcd V_, Vinv_;
  Eigen::VectorXcd d_;
  bool fallback_ = false;
};

ComplexMatrix scalar_power(double t, const ComplexMatrix& E, const Tolerances& tol = {});

ComplexMatrix matrix_gamma(const ComplexMatrix& A, const Tolerances& tol = {});

/// Reciprocal gamma via the shift recurrence
/// Gamma^{-1}(A) = A(A+I)...(A+(n-1)I) Gamma^{-1}(A+nI)
/// with n = max(0, ceil(1 - beta(A)) + 1), so beta(A+nI) > 0 with margin.
/// Defined for all A, including eigenvalues at the gamma poles.
ComplexMatrix reciprocal_gamma(const ComplexMatrix& A, const Tolerances& tol = {});

/// (A)_0 = I, (A)_n = A(A+I)...(A+(n-1)I), multiplied left to right.
ComplexMatrix pochhammer(const ComplexMatrix& A, int n);

/// (n-1)! (A)_n^{-1} n^A, the limit form converging to Gamma(A).
/// Evaluated in log space so large n (e.g. 1024) does not overflow.
ComplexMatrix gamma_limit_approx(const ComplexMatrix& A, long n, const Tolerances& tol = {});

/// B(A,B) = int_0^1 t^{A-I} (1-t)^{B-I} dt by tanh-sinh quadrature.
/// Requires A, B positive stable.
ComplexMatrix beta_matrix(const ComplexMatrix& A, const ComplexMatrix& B, int quad_level = 9,
                          const Tolerances& tol = {});

namespace detail {

// Scalar complex gamma / log-gamma (Lanczos, reflection for Re z < 0.5).
Complex cgamma(Complex z);
Complex clgamma(Complex z);

struct EigenSystem {
  Eigen::MatrixXcd V, Vinv;
  Eigen::VectorXcd d;
  double cond = 1.0;
};

EigenSystem decompose(const ComplexMatrix& M);

}  // namespace detail

}  // namespace lmx
