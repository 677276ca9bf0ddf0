#include "lmx/pde.hpp"

#include "lmx/hypotheses.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace lmx;
using namespace lmx::testutil;

namespace {

const std::vector<FunctionId> kSystems = {
    FunctionId::FA,  FunctionId::FB,  FunctionId::FC,  FunctionId::FD, FunctionId::F3,
    FunctionId::F4,  FunctionId::F6,  FunctionId::F7,  FunctionId::F8, FunctionId::F10,
    FunctionId::F11, FunctionId::F12, FunctionId::F13, FunctionId::F14, FunctionId::HA,
    FunctionId::HB,  FunctionId::HC};

std::map<std::string, ComplexMatrix> scalar_draw(FunctionId id, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ur(0.5, 2.2);
  std::map<std::string, ComplexMatrix> params;
  for (const auto& role : roles_for(id, n)) params[role] = scalar1(Complex(ur(rng), 0.2 * ur(rng)));
  return params;
}

std::map<std::string, std::pair<double, double>> default_ranges(FunctionId id, int n) {
  std::map<std::string, std::pair<double, double>> ranges;
  for (const auto& role : roles_for(id, n))
    ranges[role] = role[0] == 'C' ? std::make_pair(0.9, 2.2) : std::make_pair(0.4, 1.5);
  return ranges;
}

}  // namespace

TEST_CASE("scalar parameters satisfy all seventeen systems exactly") {
  std::mt19937_64 rng(101);
  for (const auto id : kSystems) {
    CAPTURE(to_string(id));
    FunctionSpec spec(id, 3, scalar_draw(id, 3, rng));
    PdeVerifier v(spec);
    CHECK(v.sweep_max_relative(6) < 1e-12);
  }
}

TEST_CASE("commuting draws satisfy all seventeen systems to 1e-10") {
  std::mt19937_64 rng(103);
  for (const auto id : kSystems) {
    CAPTURE(to_string(id));
    for (int r : {2, 3}) {
      FunctionSpec spec(id, 3, commuting_draw(roles_for(id, 3), r, rng, default_ranges(id, 3)));
      PdeVerifier v(spec);
      CHECK(v.sweep_max_relative(6) < 1e-10);
    }
  }
}

TEST_CASE("F3 equation 1: the exact first-order necessity residual") {
  std::mt19937_64 rng(107);
  // arbitrary (non-commuting) parameters
  std::map<std::string, ComplexMatrix> p;
  for (const auto& role : roles_for(FunctionId::F3, 3))
    p[role] = random_diagonalizable(2, rng, 0.5, 2.0);
  FunctionSpec spec(FunctionId::F3, 3, p);

  const ComplexMatrix got = coefficient_residual({FunctionId::F3, 0}, spec, MultiIndex({1, 0, 0}));
  const ComplexMatrix I = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix &A1 = p["A1"], &B1 = p["B1"];
  const ComplexMatrix C1inv = p["C1"].inverse();
  const ComplexMatrix want =
      A1 * (A1 + I) * B1 * (B1 + I) * C1inv - A1 * (A1 + I) * B1 * C1inv * (B1 + I);
  CHECK((got - want).norm() <= 1e-12 * std::max(1.0, want.norm()));
}

TEST_CASE("pointwise residuals") {
  std::mt19937_64 rng(109);

  SUBCASE("origin, F3 equation 1, commuting parameters") {
    FunctionSpec spec(FunctionId::F3, 3,
                      commuting_draw(roles_for(FunctionId::F3, 3), 2, rng,
                                     default_ranges(FunctionId::F3, 3)));
    const double res = pointwise_residual({FunctionId::F3, 0}, spec, {0.0, 0.0, 0.0},
                                          TruncationPolicy{8, std::nullopt});
    CHECK(res < 1e-12);
  }

  SUBCASE("scalar parameters: strictly decreasing in K") {
    FunctionSpec spec(FunctionId::F3, 3, scalar_draw(FunctionId::F3, 3, rng));
    const Point x = {0.1, 0.1, 0.1};
    double prev = 1e300;
    for (int K : {6, 10, 14}) {
      const double res =
          pointwise_residual({FunctionId::F3, 0}, spec, x, TruncationPolicy{K, std::nullopt});
      CHECK(res < prev);
      prev = res;
    }
  }

  SUBCASE("commuting diagonal parameters at K = 14") {
    std::map<std::string, ComplexMatrix> p;
    double shift = 0.0;
    for (const auto& role : roles_for(FunctionId::F3, 3)) {
      const double base = role[0] == 'C' ? 1.2 : 0.5;
      p[role] = diag2(base + shift, base + shift + 0.3);
      shift += 0.07;
    }
    FunctionSpec spec(FunctionId::F3, 3, p);
    for (int eq = 0; eq < 3; ++eq)
      CHECK(pointwise_residual({FunctionId::F3, eq}, spec, {0.1, 0.1, 0.1},
                               TruncationPolicy{14, std::nullopt}) < 1e-8);
  }
}

TEST_CASE("necessity probe for F3 finds each violated hypothesis") {
  const auto report = necessity_probe(FunctionId::F3, 2, /*seed=*/12345);
  REQUIRE(report.overall_pass());

  auto find = [&](const std::string& needle) -> const CheckRecord& {
    for (const auto& rec : report.checks)
      if (rec.check.find(needle) != std::string::npos) return rec;
    throw std::runtime_error("missing record " + needle);
  };

  CHECK(find("control").status == CheckStatus::Pass);

  const auto& b1c1 = find("violating B1 C1 = C1 B1");
  CHECK(b1c1.status == CheckStatus::Pass);
  CHECK(b1c1.note.find("(1,0,0)") != std::string::npos);
  CHECK(b1c1.note.find("equation 1") != std::string::npos);

  for (const char* name : {"violating B1 B2 = B2 B1", "violating C1 C2 = C2 C1",
                           "violating B1 C2 = C2 B1"}) {
    const auto& rec = find(name);
    CHECK(rec.status == CheckStatus::Pass);
    CHECK(rec.note.find("(0,1,0)") != std::string::npos);
  }

  // every one of the 11 hypotheses is individually necessary
  int probed = 0;
  for (const auto& rec : report.checks)
    if (rec.check.rfind("violating", 0) == 0) {
      ++probed;
      CHECK(rec.status == CheckStatus::Pass);
    }
  CHECK(probed == 11);
}

TEST_CASE("necessity probe is deterministic for a fixed seed") {
  const auto a = necessity_probe(FunctionId::HA, 2, 42);
  const auto b = necessity_probe(FunctionId::HA, 2, 42);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].check == b.checks[i].check);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].residual == b.checks[i].residual);
    CHECK(a.checks[i].note == b.checks[i].note);
  }
}

TEST_CASE("F10 third equation: amended reading closes the identity, literal does not") {
  std::mt19937_64 rng(113);
  FunctionSpec spec(FunctionId::F10, 3,
                    commuting_draw(roles_for(FunctionId::F10, 3), 2, rng,
                                   default_ranges(FunctionId::F10, 3)));
  PdeVerifier amended(spec, F10Eq3Reading::Amended);
  CHECK(amended.sweep_max_relative(6) < 1e-10);
  PdeVerifier literal(spec, F10Eq3Reading::Literal);
  CHECK(literal.sweep_max_relative(6) > 1e-4);
  CHECK(!f10_eq3_note().empty());
}

TEST_CASE("system_terms transcription details") {
  std::mt19937_64 rng(127);

  SUBCASE("mismatched system and spec") {
    FunctionSpec spec(FunctionId::F3, 3, scalar_draw(FunctionId::F3, 3, rng));
    CHECK_THROWS_AS(system_terms({FunctionId::F4, 0}, spec), InputError);
    CHECK_THROWS_AS(system_terms({FunctionId::F3, 5}, spec), InputError);
  }

  SUBCASE("F3 equation 1 term inventory") {
    FunctionSpec spec(FunctionId::F3, 3, scalar_draw(FunctionId::F3, 3, rng));
    const auto terms = system_terms({FunctionId::F3, 0}, spec);
    CHECK(terms.size() == 8);  // x U_xx, -x^2 U_xx, -xz U_xz, U_x C1, -x U_x (B1+I),
                               // -x A1 U_x, -z A1 U_z, -A1 U B1
    int with_right_c1 = 0, with_left_a1 = 0;
    for (const auto& t : terms) {
      for (const auto& m : t.right)
        if (m.role == "C1") ++with_right_c1;
      for (const auto& m : t.left)
        if (m.role == "A1") ++with_left_a1;
    }
    CHECK(with_right_c1 == 1);
    CHECK(with_left_a1 == 3);
  }

  SUBCASE("FA equation i carries the right-multiplied derivative sum") {
    FunctionSpec spec(FunctionId::FA, 2, commuting_draw(roles_for(FunctionId::FA, 2), 2, rng,
                                                        default_ranges(FunctionId::FA, 2)));
    const auto terms = system_terms({FunctionId::FA, 0}, spec);
    // -(x1 U_x1 + x2 U_x2) B1: two first-derivative terms right-multiplied by B1
    int right_b1_derivs = 0;
    for (const auto& t : terms)
      if (t.d1 >= 0 && t.d2 < 0 && t.right.size() == 1 && t.right[0].role == "B1" &&
          t.right[0].shift == 0.0)
        ++right_b1_derivs;
    CHECK(right_b1_derivs == 2);
  }

  SUBCASE("HC equation 1 includes +yU_xy and +zU_xz") {
    FunctionSpec spec(FunctionId::HC, 3, scalar_draw(FunctionId::HC, 3, rng));
    const auto terms = system_terms({FunctionId::HC, 0}, spec);
    bool y_uxy = false, z_uxz = false;
    for (const auto& t : terms) {
      if (t.coeff == 1.0 && t.mono == MultiIndex({0, 1, 0}) && t.d1 == 0 && t.d2 == 1)
        y_uxy = true;
      if (t.coeff == 1.0 && t.mono == MultiIndex({0, 0, 1}) && t.d1 == 0 && t.d2 == 2)
        z_uxz = true;
    }
    CHECK(y_uxy);
    CHECK(z_uxz);
  }

  SUBCASE("HA equation 2 ends with the bilateral U B B' term") {
    FunctionSpec spec(FunctionId::HA, 3, scalar_draw(FunctionId::HA, 3, rng));
    const auto terms = system_terms({FunctionId::HA, 1}, spec);
    bool found = false;
    for (const auto& t : terms)
      if (t.d1 < 0 && t.right.size() == 2 && t.right[0].role == "B" && t.right[1].role == "B'")
        found = true;
    CHECK(found);
  }
}

TEST_CASE("pointwise residual is bounded by the truncated boundary shells") {
  std::mt19937_64 rng(131);
  for (const auto id : {FunctionId::F7, FunctionId::HB}) {
    FunctionSpec spec(id, 3, commuting_draw(roles_for(id, 3), 2, rng, default_ranges(id, 3)));
    const Point x = {0.1, 0.08, 0.12};
    const int K = 12;
    const SeriesValue sv = evaluate(spec, x, {K, std::nullopt});
    const double boundary = sv.shell_norms[static_cast<size_t>(K)] +
                            sv.shell_norms[static_cast<size_t>(K - 1)];
    PdeVerifier v(spec);
    for (int eq = 0; eq < 3; ++eq) {
      const double res = v.pointwise_residual(eq, x, {K, std::nullopt});
      CHECK(res <= 1e3 * K * K * boundary + 1e-12);
    }
  }
}
