#include "lmx/problem.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace lmx {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw InputError(where + ": expected a number or an [re, im] pair, got " + j.dump());
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw InputError(where + ": expected a non-empty array of matrix rows");
  const size_t rows = j.size();
  size_t cols = 0;
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array())
      throw InputError(where + ": row " + std::to_string(i + 1) + " is not an array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols)
      throw InputError(where + ": ragged matrix, row " + std::to_string(i + 1) + " has " +
                       std::to_string(j[i].size()) + " entries, expected " +
                       std::to_string(cols));
  }
  if (rows != cols)
    throw InputError(where + ": matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                     ", expected square");
  ComplexMatrix M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k)
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          parse_complex(j[i][k], where + "[" + std::to_string(i + 1) + "][" +
                                     std::to_string(k + 1) + "]");
  if (!M.allFinite()) throw InputError(where + ": matrix has non-finite entries");
  return M;
}

std::string valid_ids() {
  std::string s;
  for (const auto id : all_function_ids()) s += (s.empty() ? "" : ", ") + to_string(id);
  return s;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("problem file: top level must be a JSON object");

  ProblemFile pf;
  if (!j.contains("function") || !j["function"].is_string())
    throw InputError("problem file: missing string field 'function'");
  const std::string fname = j["function"].get<std::string>();
  const auto id = parse_function_id(fname);
  if (!id)
    throw InputError("problem file: unknown function id '" + fname + "', valid ids: " +
                     valid_ids());
  pf.function = *id;

  if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
    throw InputError("problem file: 'points' must be a non-empty array of evaluation points");
  for (size_t p = 0; p < j["points"].size(); ++p) {
    const auto& jp = j["points"][p];
    const std::string where = "points[" + std::to_string(p + 1) + "]";
    if (!jp.is_array() || jp.empty())
      throw InputError(where + ": expected a non-empty array of coordinates");
    Point pt;
    for (size_t i = 0; i < jp.size(); ++i)
      pt.push_back(parse_complex(jp[i], where + "[" + std::to_string(i + 1) + "]"));
    pf.points.push_back(std::move(pt));
  }

  // variable count: explicit n, or fixed 3, or inferred from the points
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
      throw InputError("problem file: 'n' must be a positive integer");
    pf.n = j["n"].get<int>();
  } else if (!has_free_variable_count(pf.function)) {
    pf.n = 3;
  } else {
    pf.n = static_cast<int>(pf.points[0].size());
  }
  for (size_t p = 0; p < pf.points.size(); ++p)
    if (static_cast<int>(pf.points[p].size()) != pf.n)
      throw InputError("points[" + std::to_string(p + 1) + "]: has " +
                       std::to_string(pf.points[p].size()) + " coordinates, expected n = " +
                       std::to_string(pf.n));

  if (!j.contains("parameters") || !j["parameters"].is_object())
    throw InputError("problem file: missing object field 'parameters'");
  for (const auto& [role, jm] : j["parameters"].items())
    pf.parameters[role] = parse_matrix(jm, "parameters." + role);
  for (const auto& role : roles_for(pf.function, pf.n))
    if (!pf.parameters.count(role))
      throw InputError("problem file: " + to_string(pf.function) +
                       " requires parameter matrix '" + role + "'");

  if (j.contains("max_degree")) {
    if (!j["max_degree"].is_number_integer() || j["max_degree"].get<int>() < 1)
      throw InputError("problem file: 'max_degree' must be a positive integer");
    pf.max_degree = j["max_degree"].get<int>();
  }
  if (j.contains("quad_level")) {
    if (!j["quad_level"].is_number_integer() || j["quad_level"].get<int>() < 3)
      throw InputError("problem file: 'quad_level' must be an integer >= 3");
    pf.quad_level = j["quad_level"].get<int>();
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw InputError("problem file: 'checks' must be an array");
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) throw InputError("problem file: 'checks' entries must be strings");
      pf.checks.push_back(c.get<std::string>());
    }
  }

  pf.spec();  // run FunctionSpec validation (role set, orders, finiteness)
  return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string serialize_problem(const ProblemFile& pf) {
  json j;
  j["function"] = to_string(pf.function);
  j["n"] = pf.n;
  json params = json::object();
  for (const auto& [role, M] : pf.parameters) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < M.cols(); ++k)
        row.push_back({M(i, k).real(), M(i, k).imag()});
      rows.push_back(row);
    }
    params[role] = rows;
  }
  j["parameters"] = params;
  json pts = json::array();
  for (const auto& pt : pf.points) {
    json p = json::array();
    for (const auto& z : pt) p.push_back({z.real(), z.imag()});
    pts.push_back(p);
  }
  j["points"] = pts;
  j["max_degree"] = pf.max_degree;
  j["quad_level"] = pf.quad_level;
  if (!pf.checks.empty()) j["checks"] = pf.checks;
  return j.dump(2) + "\n";
}

}  // namespace lmx
