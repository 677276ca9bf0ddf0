#pragma once

#include "lmx/function_spec.hpp"
#include "lmx/hypotheses.hpp"
#include "lmx/tanh_sinh.hpp"

namespace lmx {

/// Iterated tanh-sinh quadrature; level L uses 2^L+1 nodes per axis.
/// Simplex regions are mapped to the unit cube by v -> (1-u)v' (and
/// w -> (1-u-v)w'), keeping the endpoint factors cancellation-free.
struct QuadratureSpec {
  int level = 8;
};

/// Simplex Dirichlet integral of u_1^{A_1-I} ... u_n^{A_n-I} (1-sum u)^{C-I}
/// over {u_i >= 0, sum u_i <= 1}, n = A_list.size() in 1..3. Hypotheses:
/// A_i and C pairwise commute and A_i, C, sum A_i + C are positive stable.
ComplexMatrix dirichlet_simplex_integral(const std::vector<ComplexMatrix>& A_list,
                                         const ComplexMatrix& C, const QuadratureSpec& q = {},
                                         const Tolerances& tol = {});

/// Evaluates the printed integral representation: positive scalar bases
/// raised to matrix exponents, multiplied in the printed left-to-right
/// order, over the printed region, times the printed gamma normalizer.
/// Checks the representation's hypotheses and domain first; evaluation
/// points must be real.
ComplexMatrix integral_value(RepresentationId rep, const FunctionSpec& spec, const Point& point,
                             const QuadratureSpec& q = {}, const Tolerances& tol = {});

}  // namespace lmx
