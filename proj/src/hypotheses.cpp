#include "lmx/hypotheses.hpp"

#include <cmath>
#include <sstream>

namespace lmx {

namespace {

std::string idx_role(const char* base, int i) { return std::string(base) + std::to_string(i); }

std::vector<CommutePair> pairs_within(const std::vector<std::string>& roles) {
  std::vector<CommutePair> ps;
  for (size_t i = 0; i < roles.size(); ++i)
    for (size_t j = i + 1; j < roles.size(); ++j) ps.push_back({roles[i], roles[j]});
  return ps;
}

}  // namespace

std::vector<CommutePair> pde_commutation_hypotheses(FunctionId id, int n) {
  std::vector<CommutePair> h;
  auto add = [&h](const std::string& a, const std::string& b) { h.push_back({a, b}); };
  switch (canonical_id(id)) {
    case FunctionId::FA:
      // B_i B_j = B_j B_i, C_i B_j = B_j C_i (all i,j), C_i C_j = C_j C_i
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add(idx_role("C", i), idx_role("B", j));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("C", i), idx_role("C", j));
      return h;
    case FunctionId::FB:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("A", i), idx_role("A", j));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int j = 1; j <= n; ++j) add("C", idx_role("B", j));
      return h;
    case FunctionId::FC:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("C", i), idx_role("C", j));
      for (int j = 1; j <= n; ++j) add(idx_role("C", j), "B");
      return h;
    case FunctionId::FD:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int j = 1; j <= n; ++j) add("C", idx_role("B", j));
      return h;
    case FunctionId::F3:
      add("A1", "A2");
      add("B1", "B2");
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) add(idx_role("B", i), idx_role("C", j));
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("C", i), idx_role("C", j));
      return h;
    case FunctionId::F4:
      add("B1", "B2");
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("C", i), idx_role("C", j));
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) add(idx_role("B", i), idx_role("C", j));
      return h;
    case FunctionId::F6:
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("A", i), idx_role("A", j));
      add("B1", "B2");
      add("C1", "C2");
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      return h;
    case FunctionId::F7:
      add("A1", "A2");
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int i = 1; i <= 3; ++i) add(idx_role("B", i), "C1");
      return h;
    case FunctionId::F8:
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("B", i), idx_role("B", j));
      add("C1", "C2");
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      return h;
    case FunctionId::F10:
    case FunctionId::F11:
    case FunctionId::F12:
      add("A1", "A2");
      add("B1", "B2");
      add("C1", "C2");
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      return h;
    case FunctionId::F13:
      add("A1", "A2");
      add("B1", "B2");
      for (int i = 1; i <= 2; ++i) add(idx_role("B", i), "C1");
      return h;
    case FunctionId::F14:
      add("B1", "B2");
      add("C1", "C2");
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      return h;
    case FunctionId::HA: return pairs_within({"B", "B'", "C", "C'"});
    case FunctionId::HB: return pairs_within({"B", "B'", "C", "C'", "C''"});
    case FunctionId::HC: return pairs_within({"B", "B'", "C"});
    default: throw InputError("pde_commutation_hypotheses: unhandled id");
  }
}

std::string RoleExpr::name() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, role] : terms) {
    if (c >= 0)
      os << (first ? "" : " + ");
    else
      os << (first ? "-" : " - ");
    if (std::abs(c) != 1.0) os << std::abs(c) << " ";
    os << role;
    first = false;
  }
  return os.str();
}

ComplexMatrix RoleExpr::eval(const FunctionSpec& spec) const {
  ComplexMatrix M = ComplexMatrix::Zero(spec.order(), spec.order());
  for (const auto& [c, role] : terms) M += c * spec.param(role);
  return M;
}

namespace {

RoleExpr re(std::initializer_list<std::pair<double, std::string>> terms) {
  RoleExpr e;
  for (auto& t : terms) e.terms.push_back(t);
  return e;
}

RoleExpr plain(const std::string& role) { return re({{1.0, role}}); }

}  // namespace

std::string to_string(RepresentationId rep) {
  switch (rep) {
    case RepresentationId::FA_NFOLD: return "FA-nfold";
    case RepresentationId::FB_SIMPLEX: return "FB-simplex";
    case RepresentationId::FD_EULER: return "FD-euler";
    case RepresentationId::FD_SIMPLEX: return "FD-simplex";
    case RepresentationId::DIRICHLET_LEMMA: return "dirichlet-lemma";
    case RepresentationId::F6: return "F6";
    case RepresentationId::F7: return "F7";
    case RepresentationId::F8: return "F8";
    case RepresentationId::F11: return "F11";
    case RepresentationId::F12: return "F12";
    case RepresentationId::F13: return "F13";
    case RepresentationId::HA: return "HA";
    case RepresentationId::HB: return "HB";
    case RepresentationId::HC: return "HC";
  }
  return "?";
}

std::vector<RepresentationId> representations_for(FunctionId id) {
  switch (canonical_id(id)) {
    case FunctionId::FA: return {RepresentationId::FA_NFOLD};
    case FunctionId::FB: return {RepresentationId::FB_SIMPLEX};
    case FunctionId::FD: return {RepresentationId::FD_EULER, RepresentationId::FD_SIMPLEX};
    case FunctionId::F6: return {RepresentationId::F6};
    case FunctionId::F7: return {RepresentationId::F7};
    case FunctionId::F8: return {RepresentationId::F8};
    case FunctionId::F11: return {RepresentationId::F11};
    case FunctionId::F12: return {RepresentationId::F12};
    case FunctionId::F13: return {RepresentationId::F13};
    case FunctionId::HA: return {RepresentationId::HA};
    case FunctionId::HB: return {RepresentationId::HB};
    case FunctionId::HC: return {RepresentationId::HC};
    default: return {};  // FC, F3, F4, F10, F14: none
  }
}

RepresentationHypotheses representation_hypotheses(RepresentationId rep, int n) {
  RepresentationHypotheses h;
  auto add = [&h](const std::string& a, const std::string& b) { h.commute.push_back({a, b}); };
  auto ps = [&h](const RoleExpr& e) { h.positive_stable.push_back(e); };
  switch (rep) {
    case RepresentationId::FA_NFOLD:
      h.commute = pde_commutation_hypotheses(FunctionId::FA, n);
      for (int i = 1; i <= n; ++i) {
        ps(plain(idx_role("B", i)));
        ps(plain(idx_role("C", i)));
        ps(re({{1, idx_role("C", i)}, {-1, idx_role("B", i)}}));
      }
      return h;
    case RepresentationId::FB_SIMPLEX: {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int j = 1; j <= n; ++j) add("C", idx_role("B", j));
      RoleExpr rem = plain("C");
      for (int i = 1; i <= n; ++i) {
        ps(plain(idx_role("B", i)));
        rem.terms.push_back({-1.0, idx_role("B", i)});
      }
      ps(plain("C"));
      ps(rem);
      return h;
    }
    case RepresentationId::FD_EULER:
      for (int i = 1; i <= n; ++i) add("C", idx_role("B", i));
      add("A", "C");
      ps(plain("A"));
      ps(plain("C"));
      ps(re({{1, "C"}, {-1, "A"}}));
      return h;
    case RepresentationId::FD_SIMPLEX: {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int j = 1; j <= n; ++j) add("C", idx_role("B", j));
      RoleExpr rem = plain("C");
      for (int i = 1; i <= n; ++i) {
        ps(plain(idx_role("B", i)));
        rem.terms.push_back({-1.0, idx_role("B", i)});
      }
      ps(plain("C"));
      ps(rem);
      return h;
    }
    case RepresentationId::DIRICHLET_LEMMA:
      throw InputError("dirichlet-lemma hypotheses are checked by dirichlet_simplex_integral");
    case RepresentationId::F6:
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("A", i), idx_role("A", j));
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      add("C1", "C2");
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("A", i), idx_role("C", j));
      ps(plain("A1")); ps(plain("A2")); ps(plain("A3"));
      ps(plain("C1")); ps(plain("C2"));
      ps(re({{1, "C1"}, {-1, "A1"}}));
      ps(re({{1, "C2"}, {-1, "A2"}, {-1, "A3"}}));
      return h;
    case RepresentationId::F7:
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("B", i), idx_role("B", j));
      for (int i = 1; i <= 3; ++i) add(idx_role("B", i), "C1");
      ps(plain("B1")); ps(plain("B2")); ps(plain("B3")); ps(plain("C1"));
      ps(re({{1, "C1"}, {-1, "B1"}, {-1, "B2"}, {-1, "B3"}}));
      return h;
    case RepresentationId::F8:
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) add(idx_role("B", i), idx_role("B", j));
      add("C1", "C2");
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      ps(plain("B1")); ps(plain("B2")); ps(plain("B3"));
      ps(plain("C1")); ps(plain("C2"));
      ps(re({{1, "C1"}, {-1, "B1"}}));
      ps(re({{1, "C2"}, {-1, "B2"}, {-1, "B3"}}));
      return h;
    case RepresentationId::F11:
      add("A1", "A2");
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("B", i), idx_role("C", j));
      add("C1", "C2");
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) add(idx_role("A", i), idx_role("C", j));
      ps(plain("A1")); ps(plain("A2")); ps(plain("C1")); ps(plain("C2"));
      ps(re({{1, "C1"}, {-1, "A1"}}));
      ps(re({{1, "C2"}, {-1, "A2"}}));
      return h;
    case RepresentationId::F12:
      h.commute = pairs_within({"C1", "C2", "B1", "B2", "A2"});
      ps(plain("A2")); ps(plain("B1")); ps(plain("B2")); ps(plain("C1")); ps(plain("C2"));
      ps(re({{1, "C1"}, {-1, "B1"}}));
      ps(re({{1, "C2"}, {-1, "A2"}, {-1, "B2"}}));
      return h;
    case RepresentationId::F13:
      h.commute = pairs_within({"C1", "B1", "B2"});
      ps(plain("B1")); ps(plain("B2")); ps(plain("C1"));
      ps(re({{1, "C1"}, {-1, "B1"}, {-1, "B2"}}));
      return h;
    case RepresentationId::HA:
      h.commute = pairs_within({"B", "B'", "C", "C'"});
      ps(plain("B")); ps(plain("B'")); ps(plain("C")); ps(plain("C'"));
      ps(re({{1, "C"}, {-1, "B"}}));
      ps(re({{1, "C'"}, {-1, "B'"}}));
      return h;
    case RepresentationId::HB:
      add("B", "A");
      add("B'", "A");
      ps(plain("A")); ps(plain("B")); ps(plain("B'"));
      return h;
    case RepresentationId::HC:
      h.commute = pairs_within({"A", "B", "C"});
      add("B'", "C");
      ps(plain("A")); ps(plain("B")); ps(plain("C"));
      ps(re({{1, "C"}, {-1, "A"}, {-1, "B"}}));
      return h;
  }
  throw InputError("representation_hypotheses: unhandled representation");
}

std::optional<std::string> representation_domain_violation(RepresentationId rep,
                                                           const Point& point) {
  std::vector<double> a;
  a.reserve(point.size());
  for (const auto& z : point) a.push_back(std::abs(z));
  auto sum = [&a] {
    double s = 0;
    for (double v : a) s += v;
    return s;
  };
  auto all_below_one = [&a]() -> std::optional<std::string> {
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] < 1.0))
        return "|x_" + std::to_string(i + 1) + "| < 1 violated (" + std::to_string(a[i]) + ")";
    return std::nullopt;
  };
  std::ostringstream os;
  switch (rep) {
    case RepresentationId::FA_NFOLD:
    case RepresentationId::FD_SIMPLEX:
      if (!(sum() < 1.0)) {
        os << "|x_1| + ... + |x_n| < 1 violated (" << sum() << ")";
        return os.str();
      }
      return std::nullopt;
    case RepresentationId::FB_SIMPLEX:
    case RepresentationId::FD_EULER: return all_below_one();
    case RepresentationId::DIRICHLET_LEMMA: return std::nullopt;
    case RepresentationId::F6:
      if (!(a[0] + a[2] < 1.0)) return "|x| + |z| < 1 violated";
      if (!(a[1] < 1.0)) return "|y| < 1 violated";
      return std::nullopt;
    case RepresentationId::F7:
      if (!(a[1] + a[2] < 1.0)) return "|y| + |z| < 1 violated";
      if (!(a[0] < 1.0)) return "|x| < 1 violated";
      return std::nullopt;
    case RepresentationId::F8:
      if (!(sum() < 1.0)) return "|x| + |y| + |z| < 1 violated";
      return std::nullopt;
    case RepresentationId::F11:
      if (!(a[0] + a[2] < 1.0)) return "|x| + |z| < 1 violated";
      if (!(a[1] < 1.0)) return "|y| < 1 violated";
      return std::nullopt;
    case RepresentationId::F12:
    case RepresentationId::HA:
      if (!(a[0] + a[1] + a[2] < 1.0 + a[1] * a[2]))
        return "|x| + |y| + |z| < 1 + |y||z| violated";
      return std::nullopt;
    case RepresentationId::F13:
      if (!(a[1] + a[2] < 1.0)) return "|y| + |z| < 1 violated";
      if (!(a[0] < 1.0)) return "|x| < 1 violated";
      return std::nullopt;
    case RepresentationId::HB: return all_below_one();
    case RepresentationId::HC:
      if (!(a[0] + a[1] + a[2] + a[0] * a[2] < 1.0 + a[1]))
        return "|x| + |y| + |z| + |x||z| < 1 + |y| violated";
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace lmx
