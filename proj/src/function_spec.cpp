#include "lmx/function_spec.hpp"

#include <algorithm>
#include <sstream>

namespace lmx {

namespace {

struct IdInfo {
  FunctionId id;
  const char* name;
};

const IdInfo kIds[] = {
    {FunctionId::FA, "FA"},   {FunctionId::FB, "FB"},   {FunctionId::FC, "FC"},
    {FunctionId::FD, "FD"},   {FunctionId::F1, "F1"},   {FunctionId::F2, "F2"},
    {FunctionId::F3, "F3"},   {FunctionId::F4, "F4"},   {FunctionId::F5, "F5"},
    {FunctionId::F6, "F6"},   {FunctionId::F7, "F7"},   {FunctionId::F8, "F8"},
    {FunctionId::F9, "F9"},   {FunctionId::F10, "F10"}, {FunctionId::F11, "F11"},
    {FunctionId::F12, "F12"}, {FunctionId::F13, "F13"}, {FunctionId::F14, "F14"},
    {FunctionId::HA, "HA"},   {FunctionId::HB, "HB"},   {FunctionId::HC, "HC"},
};

// weight helpers over (m,n,p) for the three-variable series
std::vector<int> w(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

const std::vector<FunctionId>& all_function_ids() {
  static const std::vector<FunctionId> ids = [] {
    std::vector<FunctionId> v;
    for (const auto& info : kIds) v.push_back(info.id);
    return v;
  }();
  return ids;
}

std::string to_string(FunctionId id) {
  for (const auto& info : kIds)
    if (info.id == id) return info.name;
  return "?";
}

std::optional<FunctionId> parse_function_id(const std::string& s) {
  for (const auto& info : kIds)
    if (s == info.name) return info.id;
  return std::nullopt;
}

FunctionId canonical_id(FunctionId id) {
  switch (id) {
    case FunctionId::F1: return FunctionId::FA;
    case FunctionId::F2: return FunctionId::FB;
    case FunctionId::F5: return FunctionId::FC;
    case FunctionId::F9: return FunctionId::FD;
    default: return id;
  }
}

bool is_alias(FunctionId id) { return canonical_id(id) != id; }

bool has_free_variable_count(FunctionId id) {
  switch (id) {
    case FunctionId::FA:
    case FunctionId::FB:
    case FunctionId::FC:
    case FunctionId::FD: return true;
    default: return false;
  }
}

std::vector<std::string> roles_for(FunctionId id, int n) {
  auto indexed = [n](const std::string& base) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(base + std::to_string(i));
    return v;
  };
  std::vector<std::string> r;
  switch (canonical_id(id)) {
    case FunctionId::FA:
      r = {"A"};
      for (auto& s : indexed("B")) r.push_back(s);
      for (auto& s : indexed("C")) r.push_back(s);
      return r;
    case FunctionId::FB:
      for (auto& s : indexed("A")) r.push_back(s);
      for (auto& s : indexed("B")) r.push_back(s);
      r.push_back("C");
      return r;
    case FunctionId::FC:
      r = {"A", "B"};
      for (auto& s : indexed("C")) r.push_back(s);
      return r;
    case FunctionId::FD:
      r = {"A"};
      for (auto& s : indexed("B")) r.push_back(s);
      r.push_back("C");
      return r;
    case FunctionId::F3: return {"A1", "A2", "B1", "B2", "C1", "C2", "C3"};
    case FunctionId::F4: return {"A1", "B1", "B2", "C1", "C2", "C3"};
    case FunctionId::F6: return {"A1", "A2", "A3", "B1", "B2", "C1", "C2"};
    case FunctionId::F7: return {"A1", "A2", "B1", "B2", "B3", "C1"};
    case FunctionId::F8: return {"A1", "B1", "B2", "B3", "C1", "C2"};
    case FunctionId::F10: return {"A1", "A2", "B1", "B2", "C1", "C2"};
    case FunctionId::F11: return {"A1", "A2", "B1", "B2", "C1", "C2"};
    case FunctionId::F12: return {"A1", "A2", "B1", "B2", "C1", "C2"};
    case FunctionId::F13: return {"A1", "A2", "B1", "B2", "C1"};
    case FunctionId::F14: return {"A1", "B1", "B2", "C1", "C2"};
    case FunctionId::HA: return {"A", "B", "B'", "C", "C'"};
    case FunctionId::HB: return {"A", "B", "B'", "C", "C'", "C''"};
    case FunctionId::HC: return {"A", "B", "B'", "C"};
    default: throw InputError("roles_for: unhandled id");
  }
}

std::vector<PochFactor> series_recipe(FunctionId id, int n) {
  std::vector<PochFactor> rec;
  auto unit = [n](int i) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  auto total = [n] { return std::vector<int>(static_cast<size_t>(n), 1); };

  switch (canonical_id(id)) {
    case FunctionId::FA:
      rec.push_back({"A", total(), false});
      for (int i = 0; i < n; ++i) rec.push_back({"B" + std::to_string(i + 1), unit(i), false});
      for (int i = 0; i < n; ++i) rec.push_back({"C" + std::to_string(i + 1), unit(i), true});
      return rec;
    case FunctionId::FB:
      for (int i = 0; i < n; ++i) rec.push_back({"A" + std::to_string(i + 1), unit(i), false});
      for (int i = 0; i < n; ++i) rec.push_back({"B" + std::to_string(i + 1), unit(i), false});
      rec.push_back({"C", total(), true});
      return rec;
    case FunctionId::FC:
      rec.push_back({"A", total(), false});
      rec.push_back({"B", total(), false});
      for (int i = 0; i < n; ++i) rec.push_back({"C" + std::to_string(i + 1), unit(i), true});
      return rec;
    case FunctionId::FD:
      rec.push_back({"A", total(), false});
      for (int i = 0; i < n; ++i) rec.push_back({"B" + std::to_string(i + 1), unit(i), false});
      rec.push_back({"C", total(), true});
      return rec;
    // Three-variable series: weights over (m, n, p) <-> (x, y, z).
    case FunctionId::F3:
      return {{"A1", w({1, 0, 0}), false}, {"A2", w({0, 1, 1}), false},
              {"B1", w({1, 0, 1}), false}, {"B2", w({0, 1, 0}), false},
              {"C1", w({1, 0, 0}), true},  {"C2", w({0, 1, 0}), true},
              {"C3", w({0, 0, 1}), true}};
    case FunctionId::F4:
      return {{"A1", w({1, 1, 1}), false}, {"B1", w({1, 0, 0}), false},
              {"B2", w({0, 1, 1}), false}, {"C1", w({1, 0, 0}), true},
              {"C2", w({0, 1, 0}), true},  {"C3", w({0, 0, 1}), true}};
    case FunctionId::F6:
      return {{"A1", w({1, 0, 0}), false}, {"A2", w({0, 1, 0}), false},
              {"A3", w({0, 0, 1}), false}, {"B1", w({1, 0, 1}), false},
              {"B2", w({0, 1, 0}), false}, {"C1", w({1, 0, 0}), true},
              {"C2", w({0, 1, 1}), true}};
    case FunctionId::F7:
      return {{"A1", w({1, 0, 0}), false}, {"A2", w({0, 1, 1}), false},
              {"B1", w({1, 0, 0}), false}, {"B2", w({0, 1, 0}), false},
              {"B3", w({0, 0, 1}), false}, {"C1", w({1, 1, 1}), true}};
    case FunctionId::F8:
      return {{"A1", w({1, 1, 1}), false}, {"B1", w({1, 0, 0}), false},
              {"B2", w({0, 1, 0}), false}, {"B3", w({0, 0, 1}), false},
              {"C1", w({1, 0, 0}), true},  {"C2", w({0, 1, 1}), true}};
    case FunctionId::F10:
      return {{"A1", w({1, 0, 1}), false}, {"A2", w({0, 1, 0}), false},
              {"B1", w({1, 0, 1}), false}, {"B2", w({0, 1, 0}), false},
              {"C1", w({1, 0, 0}), true},  {"C2", w({0, 1, 1}), true}};
    case FunctionId::F11:
      return {{"A1", w({1, 0, 0}), false}, {"A2", w({0, 1, 1}), false},
              {"B1", w({1, 0, 1}), false}, {"B2", w({0, 1, 0}), false},
              {"C1", w({1, 0, 0}), true},  {"C2", w({0, 1, 1}), true}};
    case FunctionId::F12:
      return {{"A1", w({1, 0, 1}), false}, {"A2", w({0, 1, 0}), false},
              {"B1", w({1, 1, 0}), false}, {"B2", w({0, 0, 1}), false},
              {"C1", w({1, 0, 0}), true},  {"C2", w({0, 1, 1}), true}};
    case FunctionId::F13:
      return {{"A1", w({1, 0, 0}), false}, {"A2", w({0, 1, 1}), false},
              {"B1", w({1, 0, 1}), false}, {"B2", w({0, 1, 0}), false},
              {"C1", w({1, 1, 1}), true}};
    case FunctionId::F14:
      return {{"A1", w({1, 1, 1}), false}, {"B1", w({1, 0, 1}), false},
              {"B2", w({0, 1, 0}), false}, {"C1", w({1, 0, 0}), true},
              {"C2", w({0, 1, 1}), true}};
    case FunctionId::HA:
      return {{"A", w({1, 0, 1}), false}, {"B", w({1, 1, 0}), false},
              {"B'", w({0, 1, 1}), false}, {"C", w({1, 0, 0}), true},
              {"C'", w({0, 1, 1}), true}};
    case FunctionId::HB:
      return {{"A", w({1, 0, 1}), false}, {"B", w({1, 1, 0}), false},
              {"B'", w({0, 1, 1}), false}, {"C", w({1, 0, 0}), true},
              {"C'", w({0, 1, 0}), true},  {"C''", w({0, 0, 1}), true}};
    case FunctionId::HC:
      return {{"A", w({1, 0, 1}), false}, {"B", w({1, 1, 0}), false},
              {"B'", w({0, 1, 1}), false}, {"C", w({1, 1, 1}), true}};
    default: throw InputError("series_recipe: unhandled id");
  }
}

FunctionSpec::FunctionSpec(FunctionId id, int n, std::map<std::string, ComplexMatrix> params)
    : id_(id), n_(n), params_(std::move(params)) {
  if (has_free_variable_count(id)) {
    if (n_ < 1) throw InputError(to_string(id) + " requires variable count n >= 1");
  } else {
    if (n_ != 3)
      throw InputError(to_string(id) + " is a three-variable function (got n = " +
                       std::to_string(n_) + ")");
  }
  const auto roles = roles_for(id_, n_);
  r_ = 0;
  for (const auto& role : roles) {
    auto it = params_.find(role);
    if (it == params_.end())
      throw InputError(to_string(id) + ": missing parameter matrix for role " + role);
    const ComplexMatrix& M = it->second;
    if (M.rows() != M.cols() || M.rows() < 1)
      throw InputError(to_string(id) + ": parameter " + role + " is not square");
    if (!M.allFinite())
      throw InputError(to_string(id) + ": parameter " + role + " has non-finite entries");
    if (r_ == 0) r_ = static_cast<int>(M.rows());
    if (M.rows() != r_)
      throw InputError(to_string(id) + ": parameter " + role + " has order " +
                       std::to_string(M.rows()) + ", expected " + std::to_string(r_));
  }
  for (const auto& [role, M] : params_) {
    if (std::find(roles.begin(), roles.end(), role) == roles.end())
      throw InputError(to_string(id) + ": unexpected parameter role " + role);
  }
}

const ComplexMatrix& FunctionSpec::param(const std::string& role) const {
  auto it = params_.find(role);
  if (it == params_.end()) throw InputError("no parameter for role " + role);
  return it->second;
}

FunctionSpec FunctionSpec::canonical() const {
  if (!is_alias(id_)) return *this;
  return FunctionSpec(canonical_id(id_), n_, params_);
}

}  // namespace lmx
