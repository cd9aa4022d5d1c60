#pragma once

#include <cmath>

#include "types.hpp"

namespace symtrig2d {

// e^{2 pi i t}
inline complexd unit_phase(double t) {
  return std::polar(1.0, two_pi * t);
}

// e^{2 pi i (lambda x + mu y)} -+ e^{2 pi i (lambda y + mu x)}; the "-" branch
// vanishes on x = y and changes sign under both argument and label swaps, the
// "+" branch is invariant under them.
inline complexd eval_exp_anti(FrequencyPair p, Point2 pt) {
  double lambda = p.lambda.value();
  double mu = p.mu.value();
  return unit_phase(lambda * pt.x + mu * pt.y) - unit_phase(lambda * pt.y + mu * pt.x);
}

inline complexd eval_exp_sym(FrequencyPair p, Point2 pt) {
  double lambda = p.lambda.value();
  double mu = p.mu.value();
  return unit_phase(lambda * pt.x + mu * pt.y) + unit_phase(lambda * pt.y + mu * pt.x);
}

// cos(pi lambda x) cos(pi mu y) -+ cos(pi mu x) cos(pi lambda y).  Real-valued,
// even in each argument and in each label separately, 2-periodic.
inline double eval_cos_anti_real(FrequencyPair p, Point2 pt) {
  double lambda = p.lambda.value();
  double mu = p.mu.value();
  double pi = two_pi / 2.0;
  return std::cos(pi * lambda * pt.x) * std::cos(pi * mu * pt.y) -
         std::cos(pi * mu * pt.x) * std::cos(pi * lambda * pt.y);
}

inline double eval_cos_sym_real(FrequencyPair p, Point2 pt) {
  double lambda = p.lambda.value();
  double mu = p.mu.value();
  double pi = two_pi / 2.0;
  return std::cos(pi * lambda * pt.x) * std::cos(pi * mu * pt.y) +
         std::cos(pi * mu * pt.x) * std::cos(pi * lambda * pt.y);
}

inline complexd eval_cos_anti(FrequencyPair p, Point2 pt) {
  return {eval_cos_anti_real(p, pt), 0.0};
}

inline complexd eval_cos_sym(FrequencyPair p, Point2 pt) {
  return {eval_cos_sym_real(p, pt), 0.0};
}

inline complexd eval_basis(Family family, FrequencyPair p, Point2 pt) {
  switch (family) {
    case Family::exp_anti: return eval_exp_anti(p, pt);
    case Family::exp_sym: return eval_exp_sym(p, pt);
    case Family::cos_anti: return eval_cos_anti(p, pt);
    default: return eval_cos_sym(p, pt);
  }
}

// Laplace eigenvalue: each family solves  Laplacian f = eigenvalue * f  with
// -4 pi^2 (lambda^2 + mu^2) for the exponential pair and -pi^2 (...) for the
// cosine pair (half-angle arguments).
inline double laplace_eigenvalue(Family family, FrequencyPair p) {
  double lambda = p.lambda.value();
  double mu = p.mu.value();
  double s = lambda * lambda + mu * mu;
  double pi2 = std::numbers::pi * std::numbers::pi;
  return is_exponential(family) ? -4.0 * pi2 * s : -pi2 * s;
}

// Mixed eigenvalue of d^4/dx^2 dy^2: 16 pi^4 lambda^2 mu^2 (exponential) or
// pi^4 lambda^2 mu^2 (cosine).
inline double mixed_derivative_eigenvalue(Family family, FrequencyPair p) {
  double lambda = p.lambda.value();
  double mu = p.mu.value();
  double s = lambda * lambda * mu * mu;
  double pi4 = std::pow(std::numbers::pi, 4);
  return is_exponential(family) ? 16.0 * pi4 * s : pi4 * s;
}

}  // namespace symtrig2d
