#include "lmx/quadrature.hpp"

#include "lmx/matrix_core.hpp"
#include "lmx/series.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace lmx {

namespace {

using Rule = std::vector<QuadratureNode>;

// Composite simplex coordinates can underflow to exact zero at the extreme
// tanh-sinh nodes; such corners carry doubly-exponentially small weight and
// are skipped rather than fed to scalar_power. Likewise a weight product
// that underflows marks a negligible node.
constexpr double kTinyCoord = 1e-300;

std::vector<double> real_point(const Point& point) {
  std::vector<double> x;
  x.reserve(point.size());
  for (const auto& z : point) {
    if (z.imag() != 0.0)
      throw DomainError("integral evaluation requires real evaluation points (got imaginary part " +
                        std::to_string(z.imag()) + ")");
    x.push_back(z.real());
  }
  return x;
}

void check_hypotheses(RepresentationId rep, const FunctionSpec& spec, const Tolerances& tol) {
  const auto hyp = representation_hypotheses(rep, spec.n());
  for (const auto& pair : hyp.commute) {
    const ComplexMatrix& A = spec.param(pair.a);
    const ComplexMatrix& B = spec.param(pair.b);
    const double res = commute_residual(A, B);
    const double thr = tol.commute_tol * std::max(1e-300, A.norm() * B.norm());
    if (res > thr)
      throw HypothesisError(to_string(rep) + ": hypothesis " + pair.name() +
                            " violated (commutator norm " + std::to_string(res) + ")");
  }
  for (const auto& expr : hyp.positive_stable) {
    if (!is_positive_stable(expr.eval(spec)))
      throw HypothesisError(to_string(rep) + ": hypothesis beta(" + expr.name() +
                            ") > 0 violated");
  }
}

double kernel_base(double v, const char* what) {
  if (!(v > 0.0))
    throw NumericalError(std::string("integral kernel ") + what +
                         " is not positive inside the region (value " + std::to_string(v) + ")");
  return v;
}

/// acc += s * F1 * F2 * ...; the scalar weight is folded into the leftmost
/// factor so no intermediate product can overflow when s is tiny.
class WeightedSum {
 public:
  explicit WeightedSum(Eigen::Index r) : acc_(ComplexMatrix::Zero(r, r)) {}

  template <typename... Ms>
  void add(double s, const ComplexMatrix& first, const Ms&... rest) {
    if (!(s >= kTinyCoord)) return;  // underflowed or zero weight: negligible node
    prod_ = s * first;
    (void)std::initializer_list<int>{(prod_ = prod_ * rest, 0)...};
    acc_ += prod_;
  }

  const ComplexMatrix& value() const { return acc_; }

 private:
  ComplexMatrix acc_, prod_;
};

/// Gamma normalizer Gamma(tops...) Gamma^{-1}(bottoms...) in printed order.
ComplexMatrix gamma_chain(const FunctionSpec& spec, const std::vector<RoleExpr>& tops,
                          const std::vector<RoleExpr>& bottoms, const Tolerances& tol) {
  ComplexMatrix M = ComplexMatrix::Identity(spec.order(), spec.order());
  for (const auto& e : tops) M = M * matrix_gamma(e.eval(spec), tol);
  for (const auto& e : bottoms) M = M * reciprocal_gamma(e.eval(spec), tol);
  return M;
}

RoleExpr role1(const std::string& r) {
  RoleExpr e;
  e.terms = {{1.0, r}};
  return e;
}

RoleExpr diff(const std::string& a, std::initializer_list<std::string> subtract) {
  RoleExpr e;
  e.terms.push_back({1.0, a});
  for (const auto& s : subtract) e.terms.push_back({-1.0, s});
  return e;
}

// Per-axis cache of t^(E) over the rule's nodes (u or om side).
std::vector<ComplexMatrix> pow_cache(const Rule& rule, const MatrixPower& plan, bool om_side) {
  std::vector<ComplexMatrix> c;
  c.reserve(rule.size());
  for (const auto& n : rule) c.push_back(plan(om_side ? n.om : n.u));
  return c;
}

}  // namespace

ComplexMatrix dirichlet_simplex_integral(const std::vector<ComplexMatrix>& A_list,
                                         const ComplexMatrix& C, const QuadratureSpec& q,
                                         const Tolerances& tol) {
  const int n = static_cast<int>(A_list.size());
  if (n < 1 || n > 3)
    throw InputError("dirichlet_simplex_integral: dimension must be 1..3, got " +
                     std::to_string(n));
  const Eigen::Index r = C.rows();
  ComplexMatrix total = C;
  for (const auto& A : A_list) {
    if (A.rows() != r || A.cols() != r)
      throw InputError("dirichlet_simplex_integral: parameter orders differ");
    total += A;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (commute_residual(A_list[i], A_list[j]) >
          tol.commute_tol * std::max(1e-300, A_list[i].norm() * A_list[j].norm()))
        throw HypothesisError("dirichlet_simplex_integral: A_" + std::to_string(i + 1) +
                              " and A_" + std::to_string(j + 1) + " do not commute");
    if (commute_residual(A_list[i], C) >
        tol.commute_tol * std::max(1e-300, A_list[i].norm() * C.norm()))
      throw HypothesisError("dirichlet_simplex_integral: A_" + std::to_string(i + 1) +
                            " and C do not commute");
    if (!is_positive_stable(A_list[i]))
      throw HypothesisError("dirichlet_simplex_integral: A_" + std::to_string(i + 1) +
                            " is not positive stable");
  }
  if (!is_positive_stable(C))
    throw HypothesisError("dirichlet_simplex_integral: C is not positive stable");
  if (!is_positive_stable(total))
    throw HypothesisError("dirichlet_simplex_integral: A_1 + ... + A_n + C is not positive stable");

  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(r, r);
  std::vector<MatrixPower> plans;
  for (const auto& A : A_list) plans.emplace_back(A - I, tol);
  const MatrixPower pc(C - I, tol);

  WeightedSum acc(r);
  if (n == 1) {
    for (const auto& a : rule) acc.add(a.weight, plans[0](a.u), pc(a.om));
  } else if (n == 2) {
    const auto f1 = pow_cache(rule, plans[0], false);
    for (size_t ia = 0; ia < rule.size(); ++ia) {
      const auto& a = rule[ia];
      for (const auto& b : rule) {
        const double v = a.om * b.u, rem = a.om * b.om;
        if (v < kTinyCoord || rem < kTinyCoord) continue;
        acc.add(a.weight * b.weight * a.om, f1[ia], plans[1](v), pc(rem));
      }
    }
  } else {
    const auto f1 = pow_cache(rule, plans[0], false);
    for (size_t ia = 0; ia < rule.size(); ++ia) {
      const auto& a = rule[ia];
      for (const auto& b : rule) {
        const double v = a.om * b.u;
        if (v < kTinyCoord) continue;
        const ComplexMatrix vfac = plans[1](v);
        for (const auto& c : rule) {
          const double w = a.om * b.om * c.u, rem = a.om * b.om * c.om;
          if (w < kTinyCoord || rem < kTinyCoord) continue;
          acc.add(a.weight * b.weight * c.weight * a.om * a.om * b.om, f1[ia], vfac, plans[2](w),
                  pc(rem));
        }
      }
    }
  }
  return acc.value();
}

namespace {

// --- representation integrands -------------------------------------------
// Every factor is multiplied in the printed left-to-right order; the gamma
// normalizer sits on the printed side.

ComplexMatrix eval_fa_nfold(const FunctionSpec& spec, const std::vector<double>& x,
                            const QuadratureSpec& q, const Tolerances& tol) {
  const int n = spec.n();
  if (n < 1 || n > 3) throw InputError("FA-nfold: quadrature supports n = 1..3");
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa(-spec.param("A"), tol);
  std::vector<std::vector<ComplexMatrix>> axis(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::string bi = "B" + std::to_string(i + 1), ci = "C" + std::to_string(i + 1);
    const MatrixPower pb(spec.param(bi) - I, tol);
    const MatrixPower pc(spec.param(ci) - spec.param(bi) - I, tol);
    auto& ax = axis[static_cast<size_t>(i)];
    ax.reserve(rule.size());
    for (const auto& node : rule) ax.push_back(pb(node.u) * pc(node.om));
  }
  WeightedSum acc(spec.order());
  if (n == 1) {
    for (size_t i = 0; i < rule.size(); ++i) {
      const double k = kernel_base(1.0 - rule[i].u * x[0], "1 - u x");
      acc.add(rule[i].weight, pa(k), axis[0][i]);
    }
  } else if (n == 2) {
    for (size_t i = 0; i < rule.size(); ++i)
      for (size_t j = 0; j < rule.size(); ++j) {
        const double k = kernel_base(1.0 - rule[i].u * x[0] - rule[j].u * x[1], "1 - sum u x");
        acc.add(rule[i].weight * rule[j].weight, pa(k), axis[0][i], axis[1][j]);
      }
  } else {
    for (size_t i = 0; i < rule.size(); ++i)
      for (size_t j = 0; j < rule.size(); ++j) {
        const double w2 = rule[i].weight * rule[j].weight;
        const double base2 = 1.0 - rule[i].u * x[0] - rule[j].u * x[1];
        for (size_t l = 0; l < rule.size(); ++l) {
          const double k = kernel_base(base2 - rule[l].u * x[2], "1 - sum u x");
          acc.add(w2 * rule[l].weight, pa(k), axis[0][i], axis[1][j], axis[2][l]);
        }
      }
  }
  std::vector<RoleExpr> tops, bottoms;
  for (int i = 1; i <= n; ++i) tops.push_back(role1("C" + std::to_string(i)));
  for (int i = 1; i <= n; ++i) bottoms.push_back(role1("B" + std::to_string(i)));
  for (int i = 1; i <= n; ++i)
    bottoms.push_back(diff("C" + std::to_string(i), {"B" + std::to_string(i)}));
  return acc.value() * gamma_chain(spec, tops, bottoms, tol);
}

ComplexMatrix eval_fb_fd_simplex(RepresentationId rep, const FunctionSpec& spec,
                                 const std::vector<double>& x, const QuadratureSpec& q,
                                 const Tolerances& tol) {
  const int n = spec.n();
  if (n < 1 || n > 3)
    throw InputError(to_string(rep) + ": quadrature supports n = 1..3");
  const bool fb = rep == RepresentationId::FB_SIMPLEX;
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());

  std::vector<MatrixPower> pb;
  for (int i = 1; i <= n; ++i) pb.emplace_back(spec.param("B" + std::to_string(i)) - I, tol);
  RoleExpr rem_expr = role1("C");
  for (int i = 1; i <= n; ++i) rem_expr.terms.push_back({-1.0, "B" + std::to_string(i)});
  const MatrixPower prem(rem_expr.eval(spec) - I, tol);
  std::vector<MatrixPower> pa;  // FB kernels: one (1-u_i x_i)^{-A_i} per axis
  if (fb)
    for (int i = 1; i <= n; ++i) pa.emplace_back(-spec.param("A" + std::to_string(i)), tol);
  std::optional<MatrixPower> pa_fd;
  if (!fb) pa_fd.emplace(-spec.param("A"), tol);

  // simplex coordinates: u1 = a, u2 = (1-a)b, u3 = (1-a)(1-b)c; the
  // remainder 1 - sum u arrives as a product of complements.
  WeightedSum acc(spec.order());
  auto body = [&](const std::vector<double>& u, double rem, double jac_weight) {
    ComplexMatrix kern;
    if (fb) {
      kern = pa[0](kernel_base(1.0 - u[0] * x[0], "1 - u x"));
      for (int i = 1; i < n; ++i)
        kern = kern * pa[static_cast<size_t>(i)](
                          kernel_base(1.0 - u[static_cast<size_t>(i)] * x[static_cast<size_t>(i)],
                                      "1 - u x"));
    } else {
      double k = 1.0;
      for (int i = 0; i < n; ++i) k -= u[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
      kern = (*pa_fd)(kernel_base(k, "1 - sum u x"));
    }
    for (int i = 0; i < n; ++i) kern = kern * pb[static_cast<size_t>(i)](u[static_cast<size_t>(i)]);
    acc.add(jac_weight, kern, prem(rem));
  };

  if (n == 1) {
    for (const auto& a : rule) body({a.u}, a.om, a.weight);
  } else if (n == 2) {
    for (const auto& a : rule)
      for (const auto& b : rule) {
        const double v = a.om * b.u, rem = a.om * b.om;
        if (v < kTinyCoord || rem < kTinyCoord) continue;
        body({a.u, v}, rem, a.weight * b.weight * a.om);
      }
  } else {
    for (const auto& a : rule)
      for (const auto& b : rule)
        for (const auto& c : rule) {
          const double v = a.om * b.u, w = a.om * b.om * c.u, rem = a.om * b.om * c.om;
          if (v < kTinyCoord || w < kTinyCoord || rem < kTinyCoord) continue;
          body({a.u, v, w}, rem, a.weight * b.weight * c.weight * a.om * a.om * b.om);
        }
  }

  std::vector<RoleExpr> bottoms;
  for (int i = 1; i <= n; ++i) bottoms.push_back(role1("B" + std::to_string(i)));
  bottoms.push_back(rem_expr);
  return acc.value() * gamma_chain(spec, {role1("C")}, bottoms, tol);
}

ComplexMatrix eval_fd_euler(const FunctionSpec& spec, const std::vector<double>& x,
                            const QuadratureSpec& q, const Tolerances& tol) {
  const int n = spec.n();
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa(spec.param("A") - I, tol);
  const MatrixPower pc(diff("C", {"A"}).eval(spec) - I, tol);
  std::vector<MatrixPower> pb;
  for (int i = 1; i <= n; ++i) pb.emplace_back(-spec.param("B" + std::to_string(i)), tol);
  WeightedSum acc(spec.order());
  for (const auto& node : rule) {
    ComplexMatrix kern = pb[0](kernel_base(1.0 - node.u * x[0], "1 - u x"));
    for (int i = 1; i < n; ++i)
      kern = kern * pb[static_cast<size_t>(i)](
                        kernel_base(1.0 - node.u * x[static_cast<size_t>(i)], "1 - u x"));
    acc.add(node.weight, pa(node.u), pc(node.om), kern);
  }
  return gamma_chain(spec, {role1("C")}, {role1("A"), diff("C", {"A"})}, tol) * acc.value();
}

ComplexMatrix eval_f6(const FunctionSpec& spec, const std::vector<double>& x,
                      const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pu(spec.param("A1") - I, tol), pou(diff("C1", {"A1"}).eval(spec) - I, tol);
  const MatrixPower pv(spec.param("A2") - I, tol), pw(spec.param("A3") - I, tol);
  const MatrixPower prem(diff("C2", {"A2", "A3"}).eval(spec) - I, tol);
  const MatrixPower pb2(-spec.param("B2"), tol), pb1(-spec.param("B1"), tol);

  const auto cu = pow_cache(rule, pu, false);
  const auto cou = pow_cache(rule, pou, true);
  const auto cv = pow_cache(rule, pv, false);
  std::vector<ComplexMatrix> cvy;
  cvy.reserve(rule.size());
  for (const auto& b : rule) cvy.push_back(pb2(kernel_base(1.0 - b.u * x[1], "1 - v y")));

  WeightedSum acc(spec.order());
  for (size_t jb = 0; jb < rule.size(); ++jb) {
    const auto& b = rule[jb];
    for (const auto& c : rule) {
      const double w = b.om * c.u, rem = b.om * c.om;
      if (w < kTinyCoord || rem < kTinyCoord) continue;
      const ComplexMatrix w_fac = pw(w);
      const ComplexMatrix tail = prem(rem) * cvy[jb];
      const double wgt_bc = b.weight * c.weight * b.om;
      for (size_t ia = 0; ia < rule.size(); ++ia) {
        const auto& a = rule[ia];
        const double k = kernel_base(1.0 - a.u * x[0] - w * x[2], "1 - u x - w z");
        acc.add(wgt_bc * a.weight, cu[ia], cv[jb], w_fac, cou[ia], tail, pb1(k));
      }
    }
  }
  return gamma_chain(spec, {role1("C1"), role1("C2")},
                     {role1("A1"), role1("A2"), role1("A3"), diff("C1", {"A1"}),
                      diff("C2", {"A2", "A3"})},
                     tol) *
         acc.value();
}

ComplexMatrix eval_f7(const FunctionSpec& spec, const std::vector<double>& x,
                      const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa1(-spec.param("A1"), tol), pa2(-spec.param("A2"), tol);
  const MatrixPower pb1(spec.param("B1") - I, tol), pb2(spec.param("B2") - I, tol),
      pb3(spec.param("B3") - I, tol);
  const MatrixPower prem(diff("C1", {"B1", "B2", "B3"}).eval(spec) - I, tol);
  WeightedSum acc(spec.order());
  for (const auto& a : rule) {
    const double u = a.u;
    const ComplexMatrix head = pa1(kernel_base(1.0 - u * x[0], "1 - u x"));
    const ComplexMatrix ub = pb1(u);
    for (const auto& b : rule) {
      const double v = a.om * b.u;
      if (v < kTinyCoord) continue;
      const ComplexMatrix vb = pb2(v);
      for (const auto& c : rule) {
        const double w = a.om * b.om * c.u, rem = a.om * b.om * c.om;
        if (w < kTinyCoord || rem < kTinyCoord) continue;
        const double k = kernel_base(1.0 - v * x[1] - w * x[2], "1 - v y - w z");
        const double wgt = a.weight * b.weight * c.weight * a.om * a.om * b.om;
        acc.add(wgt, head, pa2(k), ub, vb, pb3(w), prem(rem));
      }
    }
  }
  return acc.value() * gamma_chain(spec, {role1("C1")},
                                   {role1("B1"), role1("B2"), role1("B3"),
                                    diff("C1", {"B1", "B2", "B3"})},
                                   tol);
}

ComplexMatrix eval_f8(const FunctionSpec& spec, const std::vector<double>& x,
                      const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa1(-spec.param("A1"), tol);
  const MatrixPower pb1(spec.param("B1") - I, tol), pb2(spec.param("B2") - I, tol),
      pb3(spec.param("B3") - I, tol);
  const MatrixPower pou(diff("C1", {"B1"}).eval(spec) - I, tol);
  const MatrixPower prem(diff("C2", {"B2", "B3"}).eval(spec) - I, tol);
  const auto cu = pow_cache(rule, pb1, false);
  const auto cou = pow_cache(rule, pou, true);
  WeightedSum acc(spec.order());
  for (const auto& b : rule) {
    const double v = b.u;
    const ComplexMatrix vb = pb2(v);
    for (const auto& c : rule) {
      const double w = b.om * c.u, rem = b.om * c.om;
      if (w < kTinyCoord || rem < kTinyCoord) continue;
      const ComplexMatrix tail = pb3(w);
      const ComplexMatrix rem_fac = prem(rem);
      const double wgt_bc = b.weight * c.weight * b.om;
      const double kc = 1.0 - v * x[1] - w * x[2];
      for (size_t ia = 0; ia < rule.size(); ++ia) {
        const auto& a = rule[ia];
        const double k = kernel_base(kc - a.u * x[0], "1 - u x - v y - w z");
        acc.add(wgt_bc * a.weight, pa1(k), cu[ia], vb, tail, cou[ia], rem_fac);
      }
    }
  }
  return acc.value() * gamma_chain(spec, {role1("C1"), role1("C2")},
                                   {role1("B1"), role1("B2"), role1("B3"), diff("C1", {"B1"}),
                                    diff("C2", {"B2", "B3"})},
                                   tol);
}

ComplexMatrix eval_f11(const FunctionSpec& spec, const std::vector<double>& x,
                       const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pu(spec.param("A1") - I, tol), pv(spec.param("A2") - I, tol);
  const MatrixPower pou(diff("C1", {"A1"}).eval(spec) - I, tol),
      pov(diff("C2", {"A2"}).eval(spec) - I, tol);
  const MatrixPower pb1(-spec.param("B1"), tol), pb2(-spec.param("B2"), tol);
  const auto cu = pow_cache(rule, pu, false);
  const auto cou = pow_cache(rule, pou, true);
  WeightedSum acc(spec.order());
  for (size_t jb = 0; jb < rule.size(); ++jb) {
    const auto& b = rule[jb];
    const ComplexMatrix vfac = pv(b.u), ovfac = pov(b.om);
    const ComplexMatrix yfac = pb2(kernel_base(1.0 - b.u * x[1], "1 - v y"));
    for (size_t ia = 0; ia < rule.size(); ++ia) {
      const auto& a = rule[ia];
      const double k = kernel_base(1.0 - a.u * x[0] - b.u * x[2], "1 - u x - v z");
      acc.add(a.weight * b.weight, cu[ia], vfac, cou[ia], ovfac, pb1(k), yfac);
    }
  }
  return gamma_chain(spec, {role1("C1"), role1("C2")},
                     {role1("A1"), role1("A2"), diff("C1", {"A1"}), diff("C2", {"A2"})}, tol) *
         acc.value();
}

ComplexMatrix eval_f12(const FunctionSpec& spec, const std::vector<double>& x,
                       const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa1_pos(spec.param("A1"), tol), pa1_neg(-spec.param("A1"), tol);
  const MatrixPower pb1u(spec.param("B1") - I, tol), pv(spec.param("A2") - I, tol),
      pw(spec.param("B2") - I, tol);
  const MatrixPower pou(diff("C1", {"B1"}).eval(spec) - I, tol);
  const MatrixPower prem(diff("C2", {"A2", "B2"}).eval(spec) - I, tol);
  const MatrixPower pb1k(-spec.param("B1"), tol);
  const auto cu = pow_cache(rule, pb1u, false);
  const auto cou = pow_cache(rule, pou, true);
  WeightedSum acc(spec.order());
  for (const auto& b : rule) {
    const double v = b.u;
    const double one_minus_vy = kernel_base(1.0 - v * x[1], "1 - v y");
    const ComplexMatrix head = pa1_pos(one_minus_vy);
    const ComplexMatrix vfac = pv(v);
    const ComplexMatrix ytail = pb1k(one_minus_vy);
    for (const auto& c : rule) {
      const double w = b.om * c.u, rem = b.om * c.om;
      if (w < kTinyCoord || rem < kTinyCoord) continue;
      const ComplexMatrix wfac = pw(w);
      const ComplexMatrix rem_fac = prem(rem);
      const double wgt_bc = b.weight * c.weight * b.om;
      // 1 - ux - vy - wz + vwyz = (1-vy)(1-wz) - ux
      const double base2 = one_minus_vy * (1.0 - w * x[2]);
      for (size_t ia = 0; ia < rule.size(); ++ia) {
        const auto& a = rule[ia];
        const double k = kernel_base(base2 - a.u * x[0], "(1-vy)(1-wz) - ux");
        acc.add(wgt_bc * a.weight, head, pa1_neg(k), cu[ia], vfac, wfac, cou[ia], rem_fac,
                ytail);
      }
    }
  }
  return acc.value() * gamma_chain(spec, {role1("C1"), role1("C2")},
                                   {role1("A2"), role1("B1"), role1("B2"), diff("C1", {"B1"}),
                                    diff("C2", {"A2", "B2"})},
                                   tol);
}

ComplexMatrix eval_f13(const FunctionSpec& spec, const std::vector<double>& x,
                       const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa1(-spec.param("A1"), tol), pa2(-spec.param("A2"), tol);
  const MatrixPower pb1(spec.param("B1") - I, tol), pb2(spec.param("B2") - I, tol);
  const MatrixPower prem(diff("C1", {"B1", "B2"}).eval(spec) - I, tol);
  WeightedSum acc(spec.order());
  for (const auto& a : rule) {
    const double u = a.u;
    const ComplexMatrix head = pa1(kernel_base(1.0 - u * x[0], "1 - u x"));
    const ComplexMatrix ub = pb1(u);
    for (const auto& b : rule) {
      const double v = a.om * b.u, rem = a.om * b.om;
      if (v < kTinyCoord || rem < kTinyCoord) continue;
      const double k = kernel_base(1.0 - v * x[1] - u * x[2], "1 - v y - u z");
      acc.add(a.weight * b.weight * a.om, head, pa2(k), ub, pb2(v), prem(rem));
    }
  }
  return acc.value() * gamma_chain(spec, {role1("C1")},
                                   {role1("B1"), role1("B2"), diff("C1", {"B1", "B2"})}, tol);
}

ComplexMatrix eval_ha(const FunctionSpec& spec, const std::vector<double>& x,
                      const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pa_neg(-spec.param("A"), tol), pa_pos(spec.param("A"), tol);
  const MatrixPower pu(spec.param("B") - I, tol), pv(spec.param("B'") - I, tol);
  const MatrixPower pou(diff("C", {"B"}).eval(spec) - I, tol),
      pov(diff("C'", {"B'"}).eval(spec) - I, tol);
  const MatrixPower pbk(-spec.param("B"), tol);
  const auto cu = pow_cache(rule, pu, false);
  const auto cou = pow_cache(rule, pou, true);
  WeightedSum acc(spec.order());
  for (const auto& b : rule) {
    const double v = b.u;
    const double one_minus_vy = kernel_base(1.0 - v * x[1], "1 - v y");
    // 1 - ux - vy - vz + v^2 yz = (1-vy)(1-vz) - ux
    const double base2 = one_minus_vy * (1.0 - v * x[2]);
    const ComplexMatrix mid = pa_pos(one_minus_vy);
    const ComplexMatrix vfac = pv(v), ovfac = pov(b.om);
    const ComplexMatrix tail = pbk(one_minus_vy);
    for (size_t ia = 0; ia < rule.size(); ++ia) {
      const auto& a = rule[ia];
      const double k = kernel_base(base2 - a.u * x[0], "(1-vy)(1-vz) - ux");
      acc.add(a.weight * b.weight, pa_neg(k), mid, cu[ia], vfac, cou[ia], ovfac, tail);
    }
  }
  return acc.value() * gamma_chain(spec, {role1("C"), role1("C'")},
                                   {role1("B"), role1("B'"), diff("C", {"B"}),
                                    diff("C'", {"B'"})},
                                   tol);
}

ComplexMatrix eval_hb(const FunctionSpec& spec, const std::vector<double>& x,
                      const QuadratureSpec& q, const Tolerances& tol) {
  const auto rule = exp_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pv(spec.param("A") - I, tol), pu(spec.param("B") - I, tol),
      pw(spec.param("B'") - I, tol);
  const Hyper0F1 f1(spec.param("C")), f2(spec.param("C'")), f3(spec.param("C''"));

  const size_t N = rule.size();
  std::vector<ComplexMatrix> mu(N), mv(N), mw(N);
  for (size_t i = 0; i < N; ++i) {
    const double damp = std::exp(-rule[i].u) * rule[i].weight;
    mu[i] = damp * pu(rule[i].u);
    mv[i] = damp * pv(rule[i].u);
    mw[i] = damp * pw(rule[i].u);
  }
  // 0F1 factors depend on two axes each; tabulate the three faces once.
  std::vector<std::vector<ComplexMatrix>> t_xy(N, std::vector<ComplexMatrix>(N));
  std::vector<std::vector<ComplexMatrix>> t_xz(N, std::vector<ComplexMatrix>(N));
  std::vector<std::vector<ComplexMatrix>> t_yz(N, std::vector<ComplexMatrix>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      t_xy[i][j] = f1(x[0] * rule[i].u * rule[j].u);  // 0F1(-;C;xuv)
      t_xz[i][j] = f2(x[1] * rule[i].u * rule[j].u);  // 0F1(-;C';yuw)
      t_yz[i][j] = f3(x[2] * rule[i].u * rule[j].u);  // 0F1(-;C'';zvw)
    }
  ComplexMatrix acc = ComplexMatrix::Zero(spec.order(), spec.order());
  for (size_t iu = 0; iu < N; ++iu)
    for (size_t jv = 0; jv < N; ++jv) {
      const ComplexMatrix head = mv[jv] * mu[iu];
      const ComplexMatrix& fxy = t_xy[iu][jv];
      for (size_t kw = 0; kw < N; ++kw) {
        acc.noalias() += head * mw[kw] * fxy * t_xz[iu][kw] * t_yz[jv][kw];
      }
    }
  ComplexMatrix norm = reciprocal_gamma(spec.param("A"), tol) *
                       reciprocal_gamma(spec.param("B"), tol) *
                       reciprocal_gamma(spec.param("B'"), tol);
  return norm * acc;
}

ComplexMatrix eval_hc(const FunctionSpec& spec, const std::vector<double>& x,
                      const QuadratureSpec& q, const Tolerances& tol) {
  const Rule rule = tanh_sinh_rule(q.level);
  const ComplexMatrix I = ComplexMatrix::Identity(spec.order(), spec.order());
  const MatrixPower pu(spec.param("A") - I, tol), pv(spec.param("B") - I, tol);
  const MatrixPower pou(diff("C", {"A"}).eval(spec) - I, tol),
      pov(diff("C", {"A", "B"}).eval(spec) - I, tol);
  const MatrixPower pb_neg(-spec.param("B"), tol), pbp_pos(spec.param("B'"), tol),
      pbp_neg(-spec.param("B'"), tol);
  const auto cv = pow_cache(rule, pv, false);
  const auto cov = pow_cache(rule, pov, true);
  WeightedSum acc(spec.order());
  for (const auto& a : rule) {
    const double u = a.u;
    const double one_minus_ux = kernel_base(1.0 - u * x[0], "1 - u x");
    // (1-ux)(1-uz) - (1-u) v y  [= 1 - ux - vy - uz + uvy + u^2 xz]
    const double base2 = one_minus_ux * (1.0 - u * x[2]);
    const ComplexMatrix ufac = pu(u), oufac = pou(a.om);
    const ComplexMatrix mid = pb_neg(one_minus_ux) * pbp_pos(one_minus_ux);
    for (size_t jb = 0; jb < rule.size(); ++jb) {
      const auto& b = rule[jb];
      const double k = kernel_base(base2 - a.om * b.u * x[1], "(1-ux)(1-uz) - (1-u)vy");
      acc.add(a.weight * b.weight, ufac, cv[jb], oufac, cov[jb], mid, pbp_neg(k));
    }
  }
  return gamma_chain(spec, {role1("C")}, {role1("A"), role1("B"), diff("C", {"A", "B"})}, tol) *
         acc.value();
}

}  // namespace

ComplexMatrix integral_value(RepresentationId rep, const FunctionSpec& spec_in, const Point& point,
                             const QuadratureSpec& q, const Tolerances& tol) {
  const FunctionSpec spec = spec_in.canonical();
  const auto expected = representations_for(spec.id());
  if (std::find(expected.begin(), expected.end(), rep) == expected.end())
    throw InputError("representation " + to_string(rep) + " does not apply to " +
                     to_string(spec.id()));
  if (static_cast<int>(point.size()) != spec.n())
    throw InputError("integral_value: point size mismatch");
  if (q.level < 3) throw InputError("integral_value: quadrature level must be >= 3");

  check_hypotheses(rep, spec, tol);
  if (auto violation = representation_domain_violation(rep, point))
    throw DomainError(to_string(rep) + ": evaluation point outside the printed domain: " +
                      *violation);
  const std::vector<double> x = real_point(point);

  switch (rep) {
    case RepresentationId::FA_NFOLD: return eval_fa_nfold(spec, x, q, tol);
    case RepresentationId::FB_SIMPLEX:
    case RepresentationId::FD_SIMPLEX: return eval_fb_fd_simplex(rep, spec, x, q, tol);
    case RepresentationId::FD_EULER: return eval_fd_euler(spec, x, q, tol);
    case RepresentationId::F6: return eval_f6(spec, x, q, tol);
    case RepresentationId::F7: return eval_f7(spec, x, q, tol);
    case RepresentationId::F8: return eval_f8(spec, x, q, tol);
    case RepresentationId::F11: return eval_f11(spec, x, q, tol);
    case RepresentationId::F12: return eval_f12(spec, x, q, tol);
    case RepresentationId::F13: return eval_f13(spec, x, q, tol);
    case RepresentationId::HA: return eval_ha(spec, x, q, tol);
    case RepresentationId::HB: return eval_hb(spec, x, q, tol);
    case RepresentationId::HC: return eval_hc(spec, x, q, tol);
    case RepresentationId::DIRICHLET_LEMMA:
      throw InputError("dirichlet-lemma is not a series representation; "
                       "use dirichlet_simplex_integral");
  }
  throw InputError("integral_value: unhandled representation");
}

}  // namespace lmx
