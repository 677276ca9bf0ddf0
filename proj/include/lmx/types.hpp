#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Point = std::vector<Complex>;

/// Tolerances shared across the library. All comparisons of matrices are
/// made in the Frobenius norm with an explicit tolerance, never bitwise.
struct Tolerances {
  double eig_tol = 1e-10;      // eigenvalue pole / singularity detection
  double commute_tol = 1e-10;  // scaled by ||M1||_F * ||M2||_F
  double value_tol = 1e-9;     // relative value agreement
  double eigcond_cap = 1e8;    // eigenvector condition number cap
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: problem files, bad ids, mismatched orders, violated
/// representation hypotheses, points outside a stated domain.
class InputError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Numerical failure: non-converged eigensolver, gamma pole, defective
/// matrix beyond the condition cap, singular denominator Pochhammer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DefectiveMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularPochhammerError : public NumericalError {
 public:
  SingularPochhammerError(const std::string& msg, std::string role, int index)
      : NumericalError(msg), role_(std::move(role)), index_(index) {}
  const std::string& role() const { return role_; }
  int index() const { return index_; }

 private:
  std::string role_;
  int index_;
};

/// Summation multi-index (m_1, ..., m_n), all components nonnegative.
struct MultiIndex {
  std::vector<int> m;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> comps) : m(std::move(comps)) {}
  MultiIndex(std::initializer_list<int> comps) : m(comps) {}

  int size() const { return static_cast<int>(m.size()); }
  int operator[](int i) const { return m[static_cast<size_t>(i)]; }
  int& operator[](int i) { return m[static_cast<size_t>(i)]; }
  int total() const { return std::accumulate(m.begin(), m.end(), 0); }
  bool operator==(const MultiIndex& o) const { return m == o.m; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(m[static_cast<size_t>(i)]);
    return s + ")";
  }
};

inline ComplexMatrix identity_like(const ComplexMatrix& A) {
  return ComplexMatrix::Identity(A.rows(), A.cols());
}

inline double frobenius(const ComplexMatrix& A) { return A.norm(); }

}  // namespace lmx
