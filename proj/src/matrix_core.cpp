#include "lmx/matrix_core.hpp"

#include "lmx/tanh_sinh.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace lmx {

namespace detail {

namespace {

// Lanczos approximation, g = 7, 9 coefficients. Relative accuracy is a
// few units in the 13th digit over the arguments used here.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

Complex lanczos_sum(Complex z) {
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  return x;
}

}  // namespace

Complex cgamma(Complex z) {
  if (z.real() < 0.5) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
  }
  z -= 1.0;
  const Complex x = lanczos_sum(z);
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex clgamma(Complex z) {
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - clgamma(1.0 - z);
  }
  z -= 1.0;
  const Complex x = lanczos_sum(z);
  const Complex t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

EigenSystem decompose(const ComplexMatrix& M) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(M, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigenvalue solver did not converge for the " << M.rows() << "x" << M.cols()
       << " matrix:\n"
       << M;
    throw NumericalError(os.str());
  }
  EigenSystem sys;
  sys.V = es.eigenvectors();
  sys.d = es.eigenvalues();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.V);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  sys.cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (std::isfinite(sys.cond)) sys.Vinv = sys.V.partialPivLu().solve(Eigen::MatrixXcd::Identity(M.rows(), M.cols()));
  return sys;
}

}  // namespace detail

namespace {

void require_square(const ComplexMatrix& M, const char* what) {
  if (M.rows() != M.cols() || M.rows() < 1)
    throw InputError(std::string(what) + ": matrix must be square of order >= 1");
  if (!M.allFinite()) throw InputError(std::string(what) + ": matrix has non-finite entries");
}

// Functional calculus via the eigendecomposition; rejects matrices whose
// eigenvector matrix is worse conditioned than tol.eigcond_cap.
template <typename F>
ComplexMatrix apply_function(const ComplexMatrix& A, F&& f, const Tolerances& tol,
                             const char* what) {
  const auto sys = detail::decompose(A);
  if (!(sys.cond < tol.eigcond_cap)) {
    std::ostringstream os;
    os << what << ": matrix is defective within tolerance (eigenvector condition " << sys.cond
       << " exceeds cap " << tol.eigcond_cap
       << "); perturb the parameter away from the defective case";
    throw DefectiveMatrixError(os.str());
  }
  Eigen::VectorXcd fd(sys.d.size());
  for (Eigen::Index i = 0; i < sys.d.size(); ++i) fd[i] = f(sys.d[i]);
  return sys.V * fd.asDiagonal() * sys.Vinv;
}

}  // namespace

SpectralSummary spectral_summary(const ComplexMatrix& M) {
  require_square(M, "spectral_summary");
  const auto sys = detail::decompose(M);
  SpectralSummary s;
  s.eigenvalues = sys.d;
  s.alpha = sys.d.real().maxCoeff();
  s.beta = sys.d.real().minCoeff();
  s.eigcond = sys.cond;
  return s;
}

bool is_positive_stable(const ComplexMatrix& M) { return spectral_summary(M).beta > 0.0; }

double commute_residual(const ComplexMatrix& M1, const ComplexMatrix& M2) {
  require_square(M1, "commute_residual");
  require_square(M2, "commute_residual");
  if (M1.rows() != M2.rows())
    throw InputError("commute_residual: matrix orders differ (" + std::to_string(M1.rows()) +
                     " vs " + std::to_string(M2.rows()) + ")");
  return (M1 * M2 - M2 * M1).norm();
}

MatrixPower::MatrixPower(ComplexMatrix E, const Tolerances& tol) : E_(std::move(E)) {
  require_square(E_, "scalar_power");
  const auto sys = detail::decompose(E_);
  if (sys.cond < tol.eigcond_cap) {
    V_ = sys.V;
    Vinv_ = sys.Vinv;
    d_ = sys.d;
  } else {
    fallback_ = true;  // scaling-and-squaring exp of E*ln t, exact but slower
  }
}

ComplexMatrix MatrixPower::operator()(double t) const {
  if (!(t > 0.0)) throw DomainError("scalar_power: base t must be positive, got " + std::to_string(t));
  const double lt = std::log(t);
  if (fallback_) {
    ComplexMatrix S = E_ * lt;
    return S.exp();
  }
  Eigen::VectorXcd p(d_.size());
  for (Eigen::Index i = 0; i < d_.size(); ++i) p[i] = std::exp(d_[i] * lt);
  return V_ * p.asDiagonal() * Vinv_;
}

ComplexMatrix scalar_power(double t, const ComplexMatrix& E, const Tolerances& tol) {
  return MatrixPower(E, tol)(t);
}

ComplexMatrix matrix_gamma(const ComplexMatrix& A, const Tolerances& tol) {
  require_square(A, "matrix_gamma");
  const auto s = spectral_summary(A);
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const Complex z = s.eigenvalues[i];
    if (std::abs(z.imag()) <= tol.eig_tol && z.real() <= tol.eig_tol) {
      const double k = std::round(z.real());
      if (k <= 0.0 && std::abs(z.real() - k) <= tol.eig_tol) {
        std::ostringstream os;
        os << "matrix_gamma: eigenvalue " << z << " sits at a gamma pole (nonpositive integer "
           << k << ")";
        throw PoleError(os.str());
      }
    }
  }
  return apply_function(A, [](Complex z) { return detail::cgamma(z); }, tol, "matrix_gamma");
}

ComplexMatrix reciprocal_gamma(const ComplexMatrix& A, const Tolerances& tol) {
  require_square(A, "reciprocal_gamma");
  const auto s = spectral_summary(A);
  const int n = std::max(0, static_cast<int>(std::ceil(1.0 - s.beta)) + 1);
  const ComplexMatrix shifted = A + static_cast<double>(n) * identity_like(A);
  const ComplexMatrix ginv = matrix_gamma(shifted, tol).partialPivLu().solve(identity_like(A));
  if (n == 0) return ginv;
  return pochhammer(A, n) * ginv;
}

ComplexMatrix pochhammer(const ComplexMatrix& A, int n) {
  require_square(A, "pochhammer");
  if (n < 0) throw InputError("pochhammer: n must be nonnegative");
  ComplexMatrix P = identity_like(A);
  for (int k = 0; k < n; ++k) P = P * (A + static_cast<double>(k) * identity_like(A));
  return P;
}

ComplexMatrix gamma_limit_approx(const ComplexMatrix& A, long n, const Tolerances& tol) {
  require_square(A, "gamma_limit_approx");
  if (n < 1) throw InputError("gamma_limit_approx: n must be positive");
  const auto sys = detail::decompose(A);
  for (Eigen::Index i = 0; i < sys.d.size(); ++i) {
    const Complex z = sys.d[i];
    if (std::abs(z.imag()) <= tol.eig_tol && z.real() <= tol.eig_tol &&
        z.real() >= -static_cast<double>(n - 1) - tol.eig_tol) {
      const double k = std::round(-z.real());
      if (std::abs(z.real() + k) <= tol.eig_tol) {
        std::ostringstream os;
        os << "gamma_limit_approx: (A)_n is singular, eigenvalue " << z << " reaches 0 at shift "
           << static_cast<long>(k);
        throw SingularPochhammerError(os.str(), "A", static_cast<int>(k));
      }
    }
  }
  if (!(sys.cond < tol.eigcond_cap))
    throw DefectiveMatrixError("gamma_limit_approx: matrix is defective within tolerance");
  // (n-1)! (A)_n^{-1} n^A = exp(lgamma(n) + lgamma(d) - lgamma(d+n) + d ln n) per eigenvalue
  const double ln_n = std::log(static_cast<double>(n));
  const Complex lg_n = detail::clgamma(Complex(static_cast<double>(n), 0.0));
  Eigen::VectorXcd fd(sys.d.size());
  for (Eigen::Index i = 0; i < sys.d.size(); ++i) {
    const Complex d = sys.d[i];
    fd[i] = std::exp(lg_n + detail::clgamma(d) - detail::clgamma(d + static_cast<double>(n)) +
                     d * ln_n);
  }
  return sys.V * fd.asDiagonal() * sys.Vinv;
}

ComplexMatrix beta_matrix(const ComplexMatrix& A, const ComplexMatrix& B, int quad_level,
                          const Tolerances& tol) {
  require_square(A, "beta_matrix");
  require_square(B, "beta_matrix");
  if (A.rows() != B.rows()) throw InputError("beta_matrix: matrix orders differ");
  if (!is_positive_stable(A)) throw InputError("beta_matrix: A is not positive stable");
  if (!is_positive_stable(B)) throw InputError("beta_matrix: B is not positive stable");

  const ComplexMatrix I = identity_like(A);
  const MatrixPower pa(A - I, tol);
  const MatrixPower pb(B - I, tol);
  ComplexMatrix acc = ComplexMatrix::Zero(A.rows(), A.cols());
  for (const auto& node : tanh_sinh_rule(quad_level)) {
    acc.noalias() += node.weight * (pa(node.u) * pb(node.om));
  }
  return acc;
}

std::vector<QuadratureNode> tanh_sinh_rule(int level) {
  if (level < 3) throw InputError("tanh_sinh_rule: level must be >= 3");
  constexpr double kPi2 = 1.57079632679489661923;
  constexpr double t_max = 6.0;
  const long half = 1L << (level - 1);
  const double h = t_max / static_cast<double>(half);
  std::vector<QuadratureNode> rule;
  rule.reserve(2 * static_cast<size_t>(half) + 1);
  for (long k = -half; k <= half; ++k) {
    const double t = static_cast<double>(k) * h;
    const double z = kPi2 * std::sinh(t);
    // u = (1+tanh z)/2 and 1-u, both via e^{-2|z|} so neither endpoint cancels
    const double e = std::exp(-2.0 * std::abs(z));
    const double near_side = e / (1.0 + e);        // distance to the closer endpoint
    const double far_side = 1.0 / (1.0 + e);
    const double u = z >= 0.0 ? far_side : near_side;
    const double om = z >= 0.0 ? near_side : far_side;
    // du/dt = (pi/2) cosh(t) sech^2(z) / 2 for u = (1 + tanh z)/2
    const double sech = 2.0 * std::exp(-std::abs(z)) / (1.0 + e);
    const double w = 0.5 * h * kPi2 * std::cosh(t) * sech * sech;
    if (w < 1e-320 || u <= 0.0 || om <= 0.0) continue;
    rule.push_back({u, om, w});
  }
  return rule;
}

std::vector<SemiAxisNode> exp_sinh_rule(int level, double u_max) {
  if (level < 3) throw InputError("exp_sinh_rule: level must be >= 3");
  constexpr double kPi2 = 1.57079632679489661923;
  constexpr double t_max = 6.0;
  const long half = 1L << (level - 1);
  const double h = t_max / static_cast<double>(half);
  std::vector<SemiAxisNode> rule;
  for (long k = -half; k <= half; ++k) {
    const double t = static_cast<double>(k) * h;
    const double z = kPi2 * std::sinh(t);
    const double u = std::exp(z);
    if (u > u_max || u < 1e-280) continue;
    const double w = h * kPi2 * std::cosh(t) * u;
    if (w < 1e-320) continue;
    rule.push_back({u, w});
  }
  return rule;
}

}  // namespace lmx
