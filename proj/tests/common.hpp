#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "qubeam/sweep.hpp"

namespace qt {

using namespace qubeam;

inline ModelParams figure() { return make_params(2500.0, 3000.0, 0.5, 0.1); }

// Runs fn and returns the ErrorCode it throws; fails the test if nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qubeam::Error");
  return ErrorCode::ParseError;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Random valid parameters in the small-coupling regime.
struct ParamGen {
  std::mt19937_64 rng;
  explicit ParamGen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  ModelParams operator()() {
    const double k1 = log_uniform(1.0, 5000.0);
    const double k2 = k1 * (1.0 + log_uniform(0.01, 2.0));
    const double om = uniform(0.0, 0.5) * k1;
    const double eps = log_uniform(1e-6, 1e-2) * k1 * k1;
    return make_params(k1, k2, om, eps);
  }
};

}  // namespace qt
