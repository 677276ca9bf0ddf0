#pragma once

#include "lmx/function_spec.hpp"
#include "lmx/types.hpp"

#include <optional>
#include <unordered_map>

namespace lmx {

struct TruncationPolicy {
  int max_total_degree = 20;
  std::optional<double> tail_tol;  // optional early stop once shells fall below it
};

enum class ConvergenceFlag { PaperGuaranteed, NotGuaranteed, DivergingSuspected };

std::string to_string(ConvergenceFlag f);

struct SeriesValue {
  ComplexMatrix value;
  double tail_estimate = 0.0;  // norm of the last total-degree shell (heuristic)
  long terms_summed = 0;
  ConvergenceFlag flag = ConvergenceFlag::NotGuaranteed;
  std::vector<double> shell_norms;  // Frobenius norm of each total-degree shell
};

struct SpectralCheck {
  std::string name;        // e.g. "alpha(A) < 1"
  double lhs = 0.0;        // actual value of the left side
  double rhs = 0.0;        // bound it must stay below (or above, see cmp)
  bool pass = false;
};

struct ConvergenceReport {
  std::vector<SpectralCheck> spectral;
  std::string domain_condition;
  bool domain_known = false;  // false: region not restated by the source text
  bool domain_pass = false;
  std::string note;

  bool paper_guaranteed() const;
};

/// Cached coefficient access for one series. Pochhammer factors grow
/// incrementally ((A)_{k+1} = (A)_k (A+kI)) per role; denominator factors
/// are checked for invertibility at the index where they are first used.
/// Not thread-safe; evaluate()/sweeps create their own instance.
class CoefficientTable {
 public:
  explicit CoefficientTable(const FunctionSpec& spec);

  /// Full matrix coefficient of x^idx including the 1/(m_1!...m_n!) factor,
  /// factors multiplied in the defining equation's left-to-right order.
  const ComplexMatrix& coeff(const MultiIndex& idx);

  int n() const { return n_; }
  int order() const { return r_; }

 private:
  struct FactorState {
    PochFactor factor;
    ComplexMatrix base;
    std::vector<ComplexMatrix> pow;  // (M)_k or (M)_k^{-1}
  };

  const ComplexMatrix& factor_power(FactorState& f, int k);

  int n_, r_;
  std::vector<FactorState> factors_;
  std::vector<double> inv_factorial_;
  std::unordered_map<uint64_t, ComplexMatrix> cache_;
};

ComplexMatrix term_coefficient(const FunctionSpec& spec, const MultiIndex& idx);

SeriesValue evaluate(const FunctionSpec& spec, const Point& point,
                     const TruncationPolicy& policy = {});

ConvergenceReport convergence_report(const FunctionSpec& spec, const Point& point);

/// 0F1(-; C; z) = sum_k (C)_k^{-1} z^k / k!, truncated when the term norm
/// drops below 1e-16 of the partial sum.
ComplexMatrix hyper0F1(const ComplexMatrix& C, Complex z);

/// Reusable evaluator with a cached (C)_k^{-1} ladder (not thread-safe).
class Hyper0F1 {
 public:
  explicit Hyper0F1(ComplexMatrix C);
  ComplexMatrix operator()(Complex z) const;

 private:
  const ComplexMatrix& inv_poch(int k) const;
  ComplexMatrix C_;
  mutable std::vector<ComplexMatrix> inv_;
};

struct Violation {
  std::string condition;  // e.g. "B1 C1 = C1 B1" or "beta(C1 - A1) > 0"
  std::string source;     // which hypothesis set it came from
  double residual = 0.0;
  double threshold = 0.0;
};

/// Checks every commutation hypothesis of the id's differential system and,
/// where integral representations exist, their commutation and positive-
/// stability hypotheses. Empty result means all hypotheses hold.
std::vector<Violation> validate_parameters(const FunctionSpec& spec, const Tolerances& tol = {});

/// Multi-indices of the given total degree in ascending lexicographic
/// order; enumerate_shells yields degree 0..max_degree in order.
std::vector<MultiIndex> shell_indices(int n, int degree);

}  // namespace lmx
