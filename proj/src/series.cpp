#include "lmx/series.hpp"

#include "lmx/hypotheses.hpp"
#include "lmx/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lmx {

std::string to_string(ConvergenceFlag f) {
  switch (f) {
    case ConvergenceFlag::PaperGuaranteed: return "paper-guaranteed";
    case ConvergenceFlag::NotGuaranteed: return "not-guaranteed";
    case ConvergenceFlag::DivergingSuspected: return "diverging-suspected";
  }
  return "?";
}

bool ConvergenceReport::paper_guaranteed() const {
  for (const auto& c : spectral)
    if (!c.pass) return false;
  return domain_known && domain_pass;
}

std::vector<MultiIndex> shell_indices(int n, int degree) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  cur.m.assign(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == n - 1) {
      cur[axis] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[axis] = v;
      rec(axis + 1, remaining - v);
    }
  };
  if (n < 1) throw InputError("shell_indices: n must be >= 1");
  rec(0, degree);
  return out;
}

CoefficientTable::CoefficientTable(const FunctionSpec& spec) {
  const FunctionSpec c = spec.canonical();
  n_ = c.n();
  r_ = c.order();
  for (const auto& f : series_recipe(c.id(), n_)) {
    FactorState st;
    st.factor = f;
    st.base = c.param(f.role);
    st.pow.push_back(ComplexMatrix::Identity(r_, r_));
    factors_.push_back(std::move(st));
  }
  inv_factorial_.push_back(1.0);
}

const ComplexMatrix& CoefficientTable::factor_power(FactorState& f, int k) {
  while (static_cast<int>(f.pow.size()) <= k) {
    const int j = static_cast<int>(f.pow.size()) - 1;  // extend (M)_j -> (M)_{j+1}
    const ComplexMatrix step = f.base + static_cast<double>(j) * ComplexMatrix::Identity(r_, r_);
    if (f.factor.inverted) {
      Eigen::FullPivLU<ComplexMatrix> lu(step);
      if (!lu.isInvertible()) {
        std::ostringstream os;
        os << "denominator Pochhammer (" << f.factor.role << ")_" << (j + 1) << " is singular: "
           << f.factor.role << " + " << j << "I is not invertible";
        throw SingularPochhammerError(os.str(), f.factor.role, j);
      }
      f.pow.push_back(lu.solve(f.pow.back()));
    } else {
      f.pow.push_back(f.pow.back() * step);
    }
  }
  return f.pow[static_cast<size_t>(k)];
}

const ComplexMatrix& CoefficientTable::coeff(const MultiIndex& idx) {
  if (idx.size() != n_)
    throw InputError("coefficient index has " + std::to_string(idx.size()) +
                     " components, expected " + std::to_string(n_));
  uint64_t key = 0;
  const bool cacheable = n_ <= 8 && idx.total() < 256;
  if (cacheable) {
    for (int i = 0; i < n_; ++i) key = (key << 8) | static_cast<uint64_t>(idx[i]);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  while (static_cast<int>(inv_factorial_.size()) <= idx.total())
    inv_factorial_.push_back(inv_factorial_.back() / static_cast<double>(inv_factorial_.size()));

  ComplexMatrix M = ComplexMatrix::Identity(r_, r_);
  for (auto& f : factors_) {
    int k = 0;
    for (int i = 0; i < n_; ++i) k += f.factor.weights[static_cast<size_t>(i)] * idx[i];
    M = M * factor_power(f, k);
  }
  double scale = 1.0;
  for (int i = 0; i < n_; ++i) scale *= inv_factorial_[static_cast<size_t>(idx[i])];
  M *= scale;
  if (!cacheable) {
    static thread_local ComplexMatrix scratch;
    scratch = std::move(M);
    return scratch;
  }
  return cache_.emplace(key, std::move(M)).first->second;
}

ComplexMatrix term_coefficient(const FunctionSpec& spec, const MultiIndex& idx) {
  CoefficientTable table(spec);
  return table.coeff(idx);
}

SeriesValue evaluate(const FunctionSpec& spec, const Point& point, const TruncationPolicy& policy) {
  const FunctionSpec c = spec.canonical();
  const int n = c.n();
  const int K = policy.max_total_degree;
  if (static_cast<int>(point.size()) != n)
    throw InputError("evaluate: point has " + std::to_string(point.size()) +
                     " components, expected " + std::to_string(n));
  if (K < 1) throw InputError("evaluate: max_total_degree must be >= 1");

  CoefficientTable table(c);
  std::vector<std::vector<Complex>> pows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& p = pows[static_cast<size_t>(i)];
    p.resize(static_cast<size_t>(K) + 1);
    p[0] = 1.0;
    for (int k = 1; k <= K; ++k) p[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] * point[static_cast<size_t>(i)];
  }

  SeriesValue out;
  out.value = ComplexMatrix::Zero(c.order(), c.order());
  ComplexMatrix shell(c.order(), c.order());
  bool overflowed = false;
  for (int deg = 0; deg <= K; ++deg) {
    shell.setZero();
    for (const auto& idx : shell_indices(n, deg)) {
      Complex xc = 1.0;
      for (int i = 0; i < n; ++i) xc *= pows[static_cast<size_t>(i)][static_cast<size_t>(idx[i])];
      shell.noalias() += xc * table.coeff(idx);
      ++out.terms_summed;
    }
    if (!shell.allFinite()) {
      overflowed = true;  // keep the partial value summed so far
      break;
    }
    out.value += shell;
    out.shell_norms.push_back(shell.norm());
    if (policy.tail_tol && out.shell_norms.size() >= 2) {
      const double floor = *policy.tail_tol * (1.0 + out.value.norm());
      const auto& sn = out.shell_norms;
      if (sn[sn.size() - 1] <= floor && sn[sn.size() - 2] <= floor) break;
    }
  }
  out.tail_estimate = out.shell_norms.empty() ? 0.0 : out.shell_norms.back();

  if (overflowed) {
    out.flag = ConvergenceFlag::DivergingSuspected;
    return out;
  }
  const size_t s = out.shell_norms.size();
  if (s >= 2 && out.shell_norms[s - 1] > out.shell_norms[s - 2]) {
    out.flag = ConvergenceFlag::DivergingSuspected;
    return out;
  }
  out.flag = convergence_report(c, point).paper_guaranteed() ? ConvergenceFlag::PaperGuaranteed
                                                             : ConvergenceFlag::NotGuaranteed;
  return out;
}

namespace {

SpectralCheck lt_check(const std::string& name, double lhs, double rhs) {
  return {name, lhs, rhs, lhs < rhs};
}

SpectralCheck pos_stable_check(const std::string& role, double beta) {
  return {"beta(" + role + ") > 0", beta, 0.0, beta > 0.0};
}

}  // namespace

ConvergenceReport convergence_report(const FunctionSpec& spec, const Point& point) {
  const FunctionSpec c = spec.canonical();
  const int n = c.n();
  if (static_cast<int>(point.size()) != n)
    throw InputError("convergence_report: point size mismatch");
  ConvergenceReport rep;

  std::map<std::string, SpectralSummary> summaries;
  for (const auto& [role, M] : c.params()) summaries.emplace(role, spectral_summary(M));
  auto alpha = [&](const std::string& r) { return summaries.at(r).alpha; };
  auto beta = [&](const std::string& r) { return summaries.at(r).beta; };
  auto require_pos_stable_all = [&] {
    for (const auto& role : roles_for(c.id(), n))
      rep.spectral.push_back(pos_stable_check(role, beta(role)));
  };
  std::vector<double> mag;
  for (const auto& z : point) mag.push_back(std::abs(z));
  auto mag_sum = [&] {
    double s = 0;
    for (double v : mag) s += v;
    return s;
  };

  switch (c.id()) {
    case FunctionId::FA: {
      require_pos_stable_all();
      rep.spectral.push_back(lt_check("alpha(A) < 1", alpha("A"), 1.0));
      for (int i = 1; i <= n; ++i) {
        const std::string b = "B" + std::to_string(i), cc = "C" + std::to_string(i);
        rep.spectral.push_back(lt_check("alpha(" + b + ") < beta(" + cc + ")", alpha(b), beta(cc)));
      }
      rep.domain_condition = "|x_1| + ... + |x_n| < 1";
      rep.domain_known = true;
      rep.domain_pass = mag_sum() < 1.0;
      break;
    }
    case FunctionId::FB: {
      require_pos_stable_all();
      for (int i = 1; i <= n; ++i) {
        const std::string a = "A" + std::to_string(i), b = "B" + std::to_string(i);
        rep.spectral.push_back(
            lt_check("alpha(" + a + ") + alpha(" + b + ") < 2", alpha(a) + alpha(b), 2.0));
      }
      rep.spectral.push_back({"beta(C) > 1", beta("C"), 1.0, beta("C") > 1.0});
      rep.domain_condition = "|x_i| < 1 for every i";
      rep.domain_known = true;
      rep.domain_pass = *std::max_element(mag.begin(), mag.end()) < 1.0;
      break;
    }
    case FunctionId::FC: {
      require_pos_stable_all();
      rep.spectral.push_back(lt_check("alpha(A) + alpha(B) < 2", alpha("A") + alpha("B"), 2.0));
      for (int i = 1; i <= n; ++i) {
        const std::string cc = "C" + std::to_string(i);
        rep.spectral.push_back({"beta(" + cc + ") > 1", beta(cc), 1.0, beta(cc) > 1.0});
      }
      double s = 0;
      for (double v : mag) s += std::sqrt(v);
      rep.domain_condition = "sqrt|x_1| + ... + sqrt|x_n| < 1";
      rep.domain_known = true;
      rep.domain_pass = s < 1.0;
      break;
    }
    case FunctionId::FD: {
      require_pos_stable_all();
      rep.spectral.push_back(lt_check("alpha(A) < beta(C)", alpha("A"), beta("C")));
      for (int i = 1; i <= n; ++i) {
        const std::string b = "B" + std::to_string(i);
        rep.spectral.push_back(lt_check("alpha(" + b + ") < 1", alpha(b), 1.0));
      }
      rep.domain_condition = "|x_i| < 1 for every i";
      rep.domain_known = true;
      rep.domain_pass = *std::max_element(mag.begin(), mag.end()) < 1.0;
      break;
    }
    case FunctionId::F3: {
      require_pos_stable_all();
      rep.spectral.push_back(lt_check("alpha(A1) < beta(C1)", alpha("A1"), beta("C1")));
      rep.spectral.push_back(lt_check("alpha(A2) < 1", alpha("A2"), 1.0));
      rep.spectral.push_back(lt_check("alpha(B1) < 1", alpha("B1"), 1.0));
      rep.spectral.push_back(lt_check("alpha(B2) < beta(C2)", alpha("B2"), beta("C2")));
      rep.spectral.push_back({"beta(C3) > 1", beta("C3"), 1.0, beta("C3") > 1.0});
      rep.domain_condition = "|x| < 1, |y| < 1, (1-|x|)(1-|y|) > |z|";
      rep.domain_known = true;
      rep.domain_pass =
          mag[0] < 1.0 && mag[1] < 1.0 && (1.0 - mag[0]) * (1.0 - mag[1]) > mag[2];
      break;
    }
    default:
      rep.domain_condition = "convergence region not restated for " + to_string(c.id());
      rep.domain_known = false;
      rep.domain_pass = false;
      rep.note = "unverified-by-this-source: region stated only in the cited prior work";
      break;
  }
  return rep;
}

Hyper0F1::Hyper0F1(ComplexMatrix C) : C_(std::move(C)) {
  if (C_.rows() != C_.cols() || C_.rows() < 1) throw InputError("hyper0F1: C must be square");
  inv_.push_back(ComplexMatrix::Identity(C_.rows(), C_.cols()));
}

const ComplexMatrix& Hyper0F1::inv_poch(int k) const {
  while (static_cast<int>(inv_.size()) <= k) {
    const int j = static_cast<int>(inv_.size()) - 1;
    const ComplexMatrix step = C_ + static_cast<double>(j) * identity_like(C_);
    Eigen::FullPivLU<ComplexMatrix> lu(step);
    if (!lu.isInvertible()) {
      std::ostringstream os;
      os << "hyper0F1: (C)_" << (j + 1) << " is singular: C + " << j << "I is not invertible";
      throw SingularPochhammerError(os.str(), "C", j);
    }
    inv_.push_back(lu.solve(inv_.back()));
  }
  return inv_[static_cast<size_t>(k)];
}

ComplexMatrix Hyper0F1::operator()(Complex z) const {
  ComplexMatrix sum = identity_like(C_);
  Complex zk = 1.0;
  const double az = std::abs(z);
  for (int k = 1; k <= 20000; ++k) {
    zk *= z / static_cast<double>(k);
    const ComplexMatrix term = inv_poch(k) * zk;
    sum += term;
    if (static_cast<double>(k) * static_cast<double>(k) > az &&
        term.norm() <= 1e-16 * sum.norm())
      return sum;
  }
  throw NumericalError("hyper0F1: series did not converge within 20000 terms (|z| = " +
                       std::to_string(az) + ")");
}

ComplexMatrix hyper0F1(const ComplexMatrix& C, Complex z) { return Hyper0F1(C)(z); }

std::vector<Violation> validate_parameters(const FunctionSpec& spec, const Tolerances& tol) {
  const FunctionSpec c = spec.canonical();
  std::vector<Violation> out;
  auto check_commute = [&](const CommutePair& pair, const std::string& source) {
    const ComplexMatrix& A = c.param(pair.a);
    const ComplexMatrix& B = c.param(pair.b);
    const double res = commute_residual(A, B);
    const double thr = tol.commute_tol * std::max(1e-300, A.norm() * B.norm());
    if (res > thr) out.push_back({pair.name(), source, res, thr});
  };
  for (const auto& pair : pde_commutation_hypotheses(c.id(), c.n()))
    check_commute(pair, "differential system hypotheses");
  for (const auto rep : representations_for(c.id())) {
    const std::string source = "integral representation " + to_string(rep);
    const auto hyp = representation_hypotheses(rep, c.n());
    for (const auto& pair : hyp.commute) check_commute(pair, source);
    for (const auto& expr : hyp.positive_stable) {
      const double b = spectral_summary(expr.eval(c)).beta;
      if (!(b > 0.0)) out.push_back({"beta(" + expr.name() + ") > 0", source, b, 0.0});
    }
  }
  return out;
}

}  // namespace lmx
