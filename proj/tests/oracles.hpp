#pragma once

// Test-only scalar oracles: brute-force summation of the classical scalar
// series, transcribed directly from the defining equations and kept
// independent of the library's recipe tables.

#include "lmx/function_spec.hpp"
#include "lmx/types.hpp"

#include <map>

namespace lmx::oracle {

inline Complex spoch(Complex a, int k) {
  Complex p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + static_cast<double>(i);
  return p;
}

inline double sfact(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Scalar coefficient of x^idx, including the reciprocal factorials.
inline Complex scalar_coefficient(FunctionId id, const std::map<std::string, Complex>& P,
                                  const std::vector<int>& q) {
  auto v = [&](const char* role) { return P.at(role); };
  double fact = 1.0;
  for (int c : q) fact *= sfact(c);
  int total = 0;
  for (int c : q) total += c;
  const int nvars = static_cast<int>(q.size());

  Complex num = 1.0, den = 1.0;
  switch (canonical_id(id)) {
    case FunctionId::FA: {
      num = spoch(v("A"), total);
      for (int i = 0; i < nvars; ++i) {
        num *= spoch(P.at("B" + std::to_string(i + 1)), q[i]);
        den *= spoch(P.at("C" + std::to_string(i + 1)), q[i]);
      }
      break;
    }
    case FunctionId::FB: {
      for (int i = 0; i < nvars; ++i) {
        num *= spoch(P.at("A" + std::to_string(i + 1)), q[i]);
        num *= spoch(P.at("B" + std::to_string(i + 1)), q[i]);
      }
      den = spoch(v("C"), total);
      break;
    }
    case FunctionId::FC: {
      num = spoch(v("A"), total) * spoch(v("B"), total);
      for (int i = 0; i < nvars; ++i) den *= spoch(P.at("C" + std::to_string(i + 1)), q[i]);
      break;
    }
    case FunctionId::FD: {
      num = spoch(v("A"), total);
      for (int i = 0; i < nvars; ++i) num *= spoch(P.at("B" + std::to_string(i + 1)), q[i]);
      den = spoch(v("C"), total);
      break;
    }
    case FunctionId::F3: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m) * spoch(v("A2"), n + p) * spoch(v("B1"), m + p) * spoch(v("B2"), n);
      den = spoch(v("C1"), m) * spoch(v("C2"), n) * spoch(v("C3"), p);
      break;
    }
    case FunctionId::F4: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m + n + p) * spoch(v("B1"), m) * spoch(v("B2"), n + p);
      den = spoch(v("C1"), m) * spoch(v("C2"), n) * spoch(v("C3"), p);
      break;
    }
    case FunctionId::F6: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m) * spoch(v("A2"), n) * spoch(v("A3"), p) * spoch(v("B1"), m + p) *
            spoch(v("B2"), n);
      den = spoch(v("C1"), m) * spoch(v("C2"), n + p);
      break;
    }
    case FunctionId::F7: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m) * spoch(v("A2"), n + p) * spoch(v("B1"), m) * spoch(v("B2"), n) *
            spoch(v("B3"), p);
      den = spoch(v("C1"), m + n + p);
      break;
    }
    case FunctionId::F8: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m + n + p) * spoch(v("B1"), m) * spoch(v("B2"), n) * spoch(v("B3"), p);
      den = spoch(v("C1"), m) * spoch(v("C2"), n + p);
      break;
    }
    case FunctionId::F10: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m + p) * spoch(v("A2"), n) * spoch(v("B1"), m + p) * spoch(v("B2"), n);
      den = spoch(v("C1"), m) * spoch(v("C2"), n + p);
      break;
    }
    case FunctionId::F11: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m) * spoch(v("A2"), n + p) * spoch(v("B1"), m + p) * spoch(v("B2"), n);
      den = spoch(v("C1"), m) * spoch(v("C2"), n + p);
      break;
    }
    case FunctionId::F12: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m + p) * spoch(v("A2"), n) * spoch(v("B1"), m + n) * spoch(v("B2"), p);
      den = spoch(v("C1"), m) * spoch(v("C2"), n + p);
      break;
    }
    case FunctionId::F13: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m) * spoch(v("A2"), n + p) * spoch(v("B1"), m + p) * spoch(v("B2"), n);
      den = spoch(v("C1"), m + n + p);
      break;
    }
    case FunctionId::F14: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A1"), m + n + p) * spoch(v("B1"), m + p) * spoch(v("B2"), n);
      den = spoch(v("C1"), m) * spoch(v("C2"), n + p);
      break;
    }
    case FunctionId::HA: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A"), m + p) * spoch(v("B"), m + n) * spoch(v("B'"), n + p);
      den = spoch(v("C"), m) * spoch(v("C'"), n + p);
      break;
    }
    case FunctionId::HB: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A"), m + p) * spoch(v("B"), m + n) * spoch(v("B'"), n + p);
      den = spoch(v("C"), m) * spoch(v("C'"), n) * spoch(v("C''"), p);
      break;
    }
    case FunctionId::HC: {
      const int m = q[0], n = q[1], p = q[2];
      num = spoch(v("A"), m + p) * spoch(v("B"), m + n) * spoch(v("B'"), n + p);
      den = spoch(v("C"), m + n + p);
      break;
    }
    default: throw std::runtime_error("scalar_coefficient: unhandled id");
  }
  return num / (den * fact);
}

/// Brute-force truncated scalar sum over all total degrees <= K.
inline Complex scalar_eval(FunctionId id, const std::map<std::string, Complex>& P,
                           const std::vector<Complex>& x, int K) {
  const int nvars = static_cast<int>(x.size());
  Complex sum = 0.0;
  std::vector<int> q(static_cast<size_t>(nvars), 0);
  // odometer over all multi-indices with every component <= K, filtered by total
  while (true) {
    int total = 0;
    for (int c : q) total += c;
    if (total <= K) {
      Complex xc = 1.0;
      for (int i = 0; i < nvars; ++i)
        for (int k = 0; k < q[static_cast<size_t>(i)]; ++k) xc *= x[static_cast<size_t>(i)];
      sum += scalar_coefficient(id, P, q) * xc;
    }
    int axis = nvars - 1;
    while (axis >= 0) {
      if (++q[static_cast<size_t>(axis)] <= K) break;
      q[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return sum;
}

}  // namespace lmx::oracle
