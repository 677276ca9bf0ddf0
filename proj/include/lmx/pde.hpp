#pragma once

#include "lmx/report.hpp"
#include "lmx/series.hpp"

namespace lmx {

/// One differential system per function; aliases resolve to FA..FD. The
/// FA..FD systems have n equations, the three-variable systems have 3.
struct PdeSystemId {
  FunctionId function;
  int equation = 0;  // 0-based
};

int equation_count(FunctionId id, int n);

/// The F10 third equation prints a lowercase "u_xx" term; Amended reads it
/// as U_xx (the reading under which the coefficient identities vanish),
/// Literal drops the unexplained term. The discrepancy is reported, not
/// resolved.
enum class F10Eq3Reading { Amended, Literal };

std::string f10_eq3_note();

/// M_role + shift*I
struct MatExpr {
  std::string role;
  double shift = 0.0;
};

/// One bilateral term c * x^mono * L * (dU) * R. Every equation of every
/// system is a finite sum of these.
struct OperatorTerm {
  double coeff = 1.0;
  MultiIndex mono;       // monomial multiplier in x
  int d1 = -1, d2 = -1;  // derivative axes; (-1,-1) none, (i,-1) d/dx_i
  std::vector<MatExpr> left;
  std::vector<MatExpr> right;
};

/// Machine-readable transcription of one equation, signs included, exactly
/// as printed in the source systems.
std::vector<OperatorTerm> system_terms(const PdeSystemId& id, const FunctionSpec& spec,
                                       F10Eq3Reading reading = F10Eq3Reading::Amended);

/// Verifier holding a shared coefficient cache for residual sweeps over
/// many multi-indices. Not thread-safe; cheap to construct per use.
class PdeVerifier {
 public:
  PdeVerifier(const FunctionSpec& spec, F10Eq3Reading reading = F10Eq3Reading::Amended);

  int equations() const { return static_cast<int>(eqs_.size()); }

  /// Exact coefficient of x^idx in the equation applied to the series;
  /// no truncation error for any idx.
  ComplexMatrix coefficient_residual(int equation, const MultiIndex& idx);

  /// ||residual||_F / (1 + max single-term norm), the cancellation measure
  /// used by the degree sweeps.
  double relative_coefficient_residual(int equation, const MultiIndex& idx);

  /// Max relative coefficient residual over all equations and all
  /// multi-indices of total degree <= max_degree.
  double sweep_max_relative(int max_degree);

  /// ||assembled equation||_F at `point` with all partials taken termwise
  /// on the truncated series.
  double pointwise_residual(int equation, const Point& point, const TruncationPolicy& policy);

 private:
  ComplexMatrix assemble(int equation, const MultiIndex& idx, double& max_term);

  FunctionSpec spec_;
  CoefficientTable table_;
  std::vector<std::vector<OperatorTerm>> eqs_;
};

ComplexMatrix coefficient_residual(const PdeSystemId& id, const FunctionSpec& spec,
                                   const MultiIndex& idx,
                                   F10Eq3Reading reading = F10Eq3Reading::Amended);

double pointwise_residual(const PdeSystemId& id, const FunctionSpec& spec, const Point& point,
                          const TruncationPolicy& policy,
                          F10Eq3Reading reading = F10Eq3Reading::Amended);

/// For each commutation hypothesis of the id's system, builds a parameter
/// set violating exactly that hypothesis (all other roles are scalar
/// multiples of I; one matrix of the pair carries a random strictly upper
/// triangular perturbation of Frobenius norm 0.1), scans multi-indices by
/// ascending total degree (lexicographic within a shell) and reports the
/// first nonzero coefficient residual. A control row checks that a fully
/// commuting draw keeps every residual at zero.
VerificationReport necessity_probe(FunctionId function, int order, uint64_t seed,
                                   int max_degree = 6,
                                   F10Eq3Reading reading = F10Eq3Reading::Amended);

}  // namespace lmx
