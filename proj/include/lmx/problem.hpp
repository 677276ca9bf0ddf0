#pragma once

#include "lmx/function_spec.hpp"

namespace lmx {

/// Parsed problem file: which series, its parameter matrices, where to
/// evaluate it and with what truncation/quadrature settings. Complex
/// entries are [re, im] pairs in JSON; a bare number is accepted as a
/// real entry and serialized back in pair form.
struct ProblemFile {
  FunctionId function = FunctionId::FD;
  int n = 1;
  std::map<std::string, ComplexMatrix> parameters;
  std::vector<Point> points;
  int max_degree = 20;
  int quad_level = 8;
  std::vector<std::string> checks;  // optional, informational

  FunctionSpec spec() const { return FunctionSpec(function, n, parameters); }
};

ProblemFile parse_problem_file(const std::string& path);
ProblemFile parse_problem_text(const std::string& json_text);
std::string serialize_problem(const ProblemFile& pf);

}  // namespace lmx
