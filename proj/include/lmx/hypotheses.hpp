#pragma once

#include "lmx/function_spec.hpp"

namespace lmx {

struct CommutePair {
  std::string a, b;
  std::string name() const { return a + " " + b + " = " + b + " " + a; }
};

/// Commutation hypotheses of the bilateral differential system satisfied
/// by the given function (theorem statements / conditions column).
std::vector<CommutePair> pde_commutation_hypotheses(FunctionId id, int n);

/// Signed combination of parameter roles, e.g. C1 - A1 or C - B1 - B2.
struct RoleExpr {
  std::vector<std::pair<double, std::string>> terms;
  std::string name() const;
  ComplexMatrix eval(const FunctionSpec& spec) const;
};

enum class RepresentationId {
  FA_NFOLD,
  FB_SIMPLEX,
  FD_EULER,
  FD_SIMPLEX,
  DIRICHLET_LEMMA,
  F6, F7, F8, F11, F12, F13,
  HA, HB, HC,
};

std::string to_string(RepresentationId rep);

/// Integral representations available for a function id (aliases resolve
/// first). FC, F3, F4, F10 and F14 have none.
std::vector<RepresentationId> representations_for(FunctionId id);

struct RepresentationHypotheses {
  std::vector<CommutePair> commute;
  std::vector<RoleExpr> positive_stable;
};

RepresentationHypotheses representation_hypotheses(RepresentationId rep, int n);

/// The printed domain constraint at `point`; empty if satisfied, otherwise
/// the violated inequality. Points must be real for integral evaluation.
std::optional<std::string> representation_domain_violation(RepresentationId rep,
                                                           const Point& point);

}  // namespace lmx
