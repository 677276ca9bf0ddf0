#pragma once

// Shared-eigenbasis parameter draws whose spectra satisfy each integral
// representation's positive-stability hypotheses with margin, plus small
// helpers mapping representations to functions and dimensions. Test-only.

#include "lmx/hypotheses.hpp"
#include "test_util.hpp"

#include <random>

namespace lmx::testutil {

// Shared-eigenbasis draws whose spectra satisfy each representation's
// positive-stability hypotheses with margin.
inline std::map<std::string, std::pair<double, double>> rep_ranges(RepresentationId rep, int n) {
  std::map<std::string, std::pair<double, double>> m;
  auto set = [&](const std::string& role, double lo, double hi) { m[role] = {lo, hi}; };
  switch (rep) {
    case RepresentationId::FA_NFOLD:
      set("A", 0.4, 1.2);
      for (int i = 1; i <= n; ++i) {
        set("B" + std::to_string(i), 0.3, 0.7);
        set("C" + std::to_string(i), 1.2, 1.8);
      }
      return m;
    case RepresentationId::FB_SIMPLEX:
      for (int i = 1; i <= n; ++i) {
        set("A" + std::to_string(i), 0.4, 1.2);
        set("B" + std::to_string(i), 0.3, 0.6);
      }
      set("C", 1.8, 2.4);
      return m;
    case RepresentationId::FD_EULER:
      set("A", 0.4, 0.9);
      set("C", 1.5, 2.0);
      for (int i = 1; i <= n; ++i) set("B" + std::to_string(i), 0.3, 1.0);
      return m;
    case RepresentationId::FD_SIMPLEX:
      set("A", 0.4, 1.2);
      set("C", 1.8, 2.4);
      for (int i = 1; i <= n; ++i) set("B" + std::to_string(i), 0.3, 0.6);
      return m;
    case RepresentationId::F6:
      set("A1", 0.3, 0.5);
      set("A2", 0.3, 0.5);
      set("A3", 0.3, 0.5);
      set("B1", 0.3, 0.9);
      set("B2", 0.3, 0.9);
      set("C1", 1.0, 1.5);
      set("C2", 1.4, 1.9);
      return m;
    case RepresentationId::F7:
      set("A1", 0.3, 0.9);
      set("A2", 0.3, 0.9);
      set("B1", 0.3, 0.5);
      set("B2", 0.3, 0.5);
      set("B3", 0.3, 0.5);
      set("C1", 1.8, 2.2);
      return m;
    case RepresentationId::F8:
      set("A1", 0.3, 0.9);
      set("B1", 0.3, 0.5);
      set("B2", 0.3, 0.5);
      set("B3", 0.3, 0.5);
      set("C1", 1.0, 1.4);
      set("C2", 1.4, 1.8);
      return m;
    case RepresentationId::F11:
      set("A1", 0.3, 0.7);
      set("A2", 0.3, 0.7);
      set("B1", 0.3, 0.9);
      set("B2", 0.3, 0.9);
      set("C1", 1.2, 1.8);
      set("C2", 1.2, 1.8);
      return m;
    case RepresentationId::F12:
      set("A1", 0.3, 0.9);
      set("A2", 0.3, 0.5);
      set("B1", 0.3, 0.5);
      set("B2", 0.3, 0.5);
      set("C1", 1.0, 1.4);
      set("C2", 1.3, 1.7);
      return m;
    case RepresentationId::F13:
      set("A1", 0.3, 0.9);
      set("A2", 0.3, 0.9);
      set("B1", 0.3, 0.5);
      set("B2", 0.3, 0.5);
      set("C1", 1.4, 1.8);
      return m;
    case RepresentationId::HA:
      set("A", 0.3, 0.9);
      set("B", 0.3, 0.6);
      set("B'", 0.3, 0.6);
      set("C", 1.2, 1.8);
      set("C'", 1.2, 1.8);
      return m;
    case RepresentationId::HB:
      set("A", 0.3, 0.8);
      set("B", 0.3, 0.8);
      set("B'", 0.3, 0.8);
      set("C", 0.8, 1.6);
      set("C'", 0.8, 1.6);
      set("C''", 0.8, 1.6);
      return m;
    case RepresentationId::HC:
      set("A", 0.3, 0.5);
      set("B", 0.3, 0.5);
      set("B'", 0.3, 0.8);
      set("C", 1.4, 1.8);
      return m;
    default: return m;
  }
}

inline FunctionId rep_function(RepresentationId rep) {
  switch (rep) {
    case RepresentationId::FA_NFOLD: return FunctionId::FA;
    case RepresentationId::FB_SIMPLEX: return FunctionId::FB;
    case RepresentationId::FD_EULER:
    case RepresentationId::FD_SIMPLEX: return FunctionId::FD;
    case RepresentationId::F6: return FunctionId::F6;
    case RepresentationId::F7: return FunctionId::F7;
    case RepresentationId::F8: return FunctionId::F8;
    case RepresentationId::F11: return FunctionId::F11;
    case RepresentationId::F12: return FunctionId::F12;
    case RepresentationId::F13: return FunctionId::F13;
    case RepresentationId::HA: return FunctionId::HA;
    case RepresentationId::HB: return FunctionId::HB;
    case RepresentationId::HC: return FunctionId::HC;
    default: throw InputError("no function for representation");
  }
}

inline int rep_dimension(RepresentationId rep, int n) {
  switch (rep) {
    case RepresentationId::FA_NFOLD:
    case RepresentationId::FB_SIMPLEX:
    case RepresentationId::FD_SIMPLEX: return n;
    case RepresentationId::FD_EULER: return 1;
    case RepresentationId::F11:
    case RepresentationId::F13:
    case RepresentationId::HA:
    case RepresentationId::HC: return 2;
    default: return 3;
  }
}

inline FunctionSpec rep_spec(RepresentationId rep, int n, int r, std::mt19937_64& rng) {
  const FunctionId fn = rep_function(rep);
  return FunctionSpec(fn, fn == FunctionId::FA || fn == FunctionId::FB || fn == FunctionId::FD
                              ? n
                              : 3,
                      commuting_draw(roles_for(fn, n), r, rng, rep_ranges(rep, n)));
}


}  // namespace lmx::testutil
