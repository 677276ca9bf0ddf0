#include "lmx/hypotheses.hpp"
#include "lmx/matrix_core.hpp"
#include "lmx/pde.hpp"
#include "lmx/problem.hpp"
#include "lmx/quadrature.hpp"
#include "lmx/report.hpp"
#include "lmx/series.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

namespace {

using namespace lmx;

struct Options {
  std::string path;
  uint64_t seed = 0;
  int max_degree = -1;   // -1: use the problem file's value
  int quad_level = -1;
  std::string format = "text";
};

std::string fmt_complex(const Complex& z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string fmt_point(const Point& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + fmt_complex(p[i]);
  return s + ")";
}

nlohmann::json matrix_json(const ComplexMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back({M(i, k).real(), M(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

int finish(const VerificationReport& report, const Options& opt) {
  std::cout << format_report(report,
                             opt.format == "jsonl" ? ReportFormat::JsonLines : ReportFormat::Text);
  return report.overall_pass() ? 0 : 1;
}

int cmd_eval(const ProblemFile& pf, const Options& opt) {
  const FunctionSpec spec = pf.spec();
  TruncationPolicy policy{opt.max_degree > 0 ? opt.max_degree : pf.max_degree, std::nullopt};
  VerificationReport report;
  const bool jsonl = opt.format == "jsonl";
  for (size_t p = 0; p < pf.points.size(); ++p) {
    const SeriesValue sv = evaluate(spec, pf.points[p], policy);
    if (jsonl) {
      nlohmann::json j;
      j["check"] = "eval[" + std::to_string(p) + "]";
      j["point"] = nlohmann::json::array();
      for (const auto& z : pf.points[p]) j["point"].push_back({z.real(), z.imag()});
      j["value"] = matrix_json(sv.value);
      j["tail_estimate"] = sv.tail_estimate;
      j["terms_summed"] = sv.terms_summed;
      j["flag"] = to_string(sv.flag);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << to_string(pf.function) << " at " << fmt_point(pf.points[p]) << ":\n"
                << sv.value << "\n"
                << "  tail estimate " << sv.tail_estimate << " after " << sv.terms_summed
                << " terms, " << to_string(sv.flag) << "\n";
    }
    CheckRecord rec;
    rec.check = "eval[" + std::to_string(p) + "]";
    rec.anchor = to_string(pf.function) + " series";
    rec.residual = sv.tail_estimate;
    rec.status = sv.flag == ConvergenceFlag::DivergingSuspected ? CheckStatus::Fail
                                                                : CheckStatus::Pass;
    rec.note = to_string(sv.flag);
    report.add(rec);
  }
  return finish(report, opt);
}

int cmd_converge(const ProblemFile& pf, const Options& opt) {
  const FunctionSpec spec = pf.spec();
  VerificationReport report;
  for (size_t p = 0; p < pf.points.size(); ++p) {
    const ConvergenceReport cr = convergence_report(spec, pf.points[p]);
    const std::string tag = "point[" + std::to_string(p) + "] ";
    for (const auto& c : cr.spectral) {
      CheckRecord rec;
      rec.check = tag + c.name;
      rec.anchor = to_string(pf.function) + " convergence theorem";
      rec.status = c.pass ? CheckStatus::Pass : CheckStatus::Fail;
      rec.residual = c.lhs;
      rec.tol = c.rhs;
      report.add(rec);
    }
    CheckRecord dom;
    dom.check = tag + "domain: " + cr.domain_condition;
    dom.anchor = to_string(pf.function) + " convergence domain";
    if (!cr.domain_known) {
      dom.status = CheckStatus::Skipped;
      dom.note = cr.note;
    } else {
      dom.status = cr.domain_pass ? CheckStatus::Pass : CheckStatus::Fail;
    }
    report.add(dom);
  }
  return finish(report, opt);
}

int cmd_validate(const ProblemFile& pf, const Options& opt) {
  const auto violations = validate_parameters(pf.spec());
  VerificationReport report;
  if (violations.empty()) {
    CheckRecord rec;
    rec.check = "all commutation and positive-stability hypotheses hold";
    rec.anchor = to_string(pf.function) + " hypotheses";
    rec.status = CheckStatus::Pass;
    report.add(rec);
  }
  for (const auto& v : violations) {
    CheckRecord rec;
    rec.check = "violated: " + v.condition;
    rec.anchor = v.source;
    rec.status = CheckStatus::Fail;
    rec.residual = v.residual;
    rec.tol = v.threshold;
    report.add(rec);
  }
  return finish(report, opt);
}

int cmd_verify_integral(const ProblemFile& pf, const Options& opt) {
  const FunctionSpec spec = pf.spec();
  VerificationReport report;
  const auto reps = representations_for(pf.function);
  if (reps.empty()) {
    CheckRecord rec;
    rec.check = "series vs integral";
    rec.anchor = to_string(pf.function);
    rec.status = CheckStatus::Skipped;
    rec.note = canonical_id(pf.function) == FunctionId::FC
                   ? "no integral representation (F_C admits no simple form)"
                   : "no integral representation is stated for this function";
    report.add(rec);
    return finish(report, opt);
  }
  TruncationPolicy policy{opt.max_degree > 0 ? opt.max_degree : pf.max_degree, std::nullopt};
  QuadratureSpec q{opt.quad_level > 0 ? opt.quad_level : pf.quad_level};
  for (const auto rep : reps) {
    for (size_t p = 0; p < pf.points.size(); ++p) {
      const SeriesValue sv = evaluate(spec, pf.points[p], policy);
      const ComplexMatrix iv = integral_value(rep, spec, pf.points[p], q);
      // one coarser level gives an a-posteriori quadrature error estimate
      const ComplexMatrix coarse =
          integral_value(rep, spec, pf.points[p], QuadratureSpec{q.level - 1});
      CheckRecord rec;
      rec.check = to_string(rep) + " vs series at point[" + std::to_string(p) + "]";
      rec.anchor = to_string(rep) + " integral representation";
      rec.residual = (sv.value - iv).norm();
      rec.tol = 1e-6 * (1.0 + sv.value.norm());
      rec.status = rec.residual <= rec.tol ? CheckStatus::Pass : CheckStatus::Fail;
      std::ostringstream note;
      note.precision(3);
      note << "quadrature self-difference " << (iv - coarse).norm() << ", series tail "
           << sv.tail_estimate;
      rec.note = note.str();
      report.add(rec);
    }
  }
  return finish(report, opt);
}

int cmd_verify_pde(const ProblemFile& pf, const Options& opt) {
  const FunctionSpec spec = pf.spec();
  PdeVerifier verifier(spec);
  VerificationReport report;
  const int sweep_degree = 6;
  {
    CheckRecord rec;
    rec.check = "coefficient identities, all equations, total degree <= " +
                std::to_string(sweep_degree);
    rec.anchor = to_string(pf.function) + " bilateral system";
    rec.residual = verifier.sweep_max_relative(sweep_degree);
    rec.tol = 1e-10;
    rec.status = rec.residual <= rec.tol ? CheckStatus::Pass : CheckStatus::Fail;
    report.add(rec);
  }
  const int K = opt.max_degree > 0 ? opt.max_degree : pf.max_degree;
  TruncationPolicy policy{K, std::nullopt};
  for (size_t p = 0; p < pf.points.size(); ++p) {
    const SeriesValue sv = evaluate(spec, pf.points[p], policy);
    const size_t s = sv.shell_norms.size();
    const double boundary =
        s >= 2 ? sv.shell_norms[s - 1] + sv.shell_norms[s - 2] : sv.tail_estimate;
    for (int eq = 0; eq < verifier.equations(); ++eq) {
      CheckRecord rec;
      rec.check = "pointwise residual, equation " + std::to_string(eq + 1) + ", point[" +
                  std::to_string(p) + "]";
      rec.anchor = to_string(pf.function) + " bilateral system";
      rec.residual = verifier.pointwise_residual(eq, pf.points[p], policy);
      rec.tol = std::max(1e-12, 1e3 * static_cast<double>(K) * static_cast<double>(K) *
                                     boundary);
      rec.status = rec.residual <= rec.tol ? CheckStatus::Pass : CheckStatus::Fail;
      rec.note = "truncation K = " + std::to_string(K);
      report.add(rec);
    }
  }
  if (canonical_id(pf.function) == FunctionId::F10) {
    CheckRecord rec;
    rec.check = "transcription note";
    rec.anchor = "F10 bilateral system";
    rec.status = CheckStatus::Skipped;
    rec.note = f10_eq3_note();
    report.add(rec);
  }
  return finish(report, opt);
}

int cmd_necessity(const ProblemFile& pf, const Options& opt) {
  const FunctionSpec spec = pf.spec();
  const int order = std::max(2, spec.order());
  const auto report = necessity_probe(pf.function, order, opt.seed);
  return finish(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lmx: Lauricella and Srivastava matrix hypergeometric functions"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"eval", "evaluate the truncated series at the problem file's points"},
      {"converge", "check the sufficient convergence conditions"},
      {"validate", "check commutation / positive-stability hypotheses"},
      {"verify-integral", "compare the series against its integral representations"},
      {"verify-pde", "verify the bilateral differential system at the coefficient level"},
      {"necessity", "probe necessity of each commutation hypothesis"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, desc] : commands) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("problem", opt.path, "problem JSON file")->required();
    sub->add_option("--seed", opt.seed, "seed for randomized draws");
    sub->add_option("--max-degree", opt.max_degree, "series truncation degree override");
    sub->add_option("--quad-level", opt.quad_level, "tanh-sinh level override");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
    subs[name] = sub;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const ProblemFile pf = parse_problem_file(opt.path);
    if (subs["eval"]->parsed()) return cmd_eval(pf, opt);
    if (subs["converge"]->parsed()) return cmd_converge(pf, opt);
    if (subs["validate"]->parsed()) return cmd_validate(pf, opt);
    if (subs["verify-integral"]->parsed()) return cmd_verify_integral(pf, opt);
    if (subs["verify-pde"]->parsed()) return cmd_verify_pde(pf, opt);
    if (subs["necessity"]->parsed()) return cmd_necessity(pf, opt);
  } catch (const lmx::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lmx::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const lmx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
