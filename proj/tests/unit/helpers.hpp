#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "abkernel/spectrum.hpp"

namespace ut {

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
inline double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline abk::StateCoeffs random_state(const abk::FieldConfig& cfg, const abk::ModeSet& ms, std::mt19937_64& rng,
                                     int nonzero) {
  abk::StateCoeffs s(cfg, ms);
  std::uniform_int_distribution<size_t> pick(0, ms.size() - 1);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < nonzero; ++i) s[pick(rng)] = {n(rng), n(rng)};
  return s;
}

inline abk::StateCoeffs single_mode(const abk::FieldConfig& cfg, abk::ModeIndex i, std::complex<double> c = 1.0) {
  abk::ModeSet ms{std::min(i.k, 0), std::max(i.k, 0), std::max(i.m, 0)};
  abk::StateCoeffs s(cfg, ms);
  s.set(i, c);
  return s;
}

} // namespace ut
