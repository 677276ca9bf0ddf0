#pragma once

#include "lmx/types.hpp"

namespace lmx {

/// One abscissa of a tanh-sinh rule on (0,1). om is 1-u computed in a
/// cancellation-free form so endpoint-singular factors (1-u)^{E} stay
/// accurate arbitrarily close to 1.
struct QuadratureNode {
  double u;
  double om;
  double weight;
};

/// Tanh-sinh (double exponential) rule on (0,1). Level L places 2^L+1
/// nodes, step h = 6/2^(L-1) on t in [-6,6]; raising the level by one
/// doubles the node count and the nodes nest. Level must be >= 3.
std::vector<QuadratureNode> tanh_sinh_rule(int level);

/// Exp-sinh rule on (0,inf) for exponentially damped integrands,
/// truncated at u_max (where the e^{-u} weight is negligible).
struct SemiAxisNode {
  double u;
  double weight;
};

std::vector<SemiAxisNode> exp_sinh_rule(int level, double u_max = 41.5);

}  // namespace lmx
