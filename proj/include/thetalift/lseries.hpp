#pragma once

// Real-argument zeta and Dirichlet L-functions of real quadratic characters.

#include "thetalift/arith.hpp"

namespace thetalift {

// value is within abs_error_bound of L(s, chi_D); D == 1 means zeta.
struct LValue {
  i64 D;
  double s;
  double value;
  double abs_error_bound;
};

// Euler-Maclaurin with an explicit remainder bound. Requires s >= 1.25.
LValue zeta(double s);

// Hurwitz zeta(s, a) for s > 1, 0 < a <= 1. Used by the closed forms,
// which need s arbitrarily close to 1.
LValue hurwitz_zeta(double s, double a);

// Partial sum over k <= cutoff with the Abel tail bound |D| cutoff^{-s}.
LValue L_direct(i64 D, double s, i64 cutoff);

// L(s, chi_D) for s > 1 through Hurwitz zeta values over one period.
LValue L_value(i64 D, double s);

// Finite-sum evaluation at s = 1 (D != 1):
//   D < 0: -(pi / |D|^{3/2}) sum chi(a) a
//   D > 0: -(1 / sqrt D) sum chi(a) log sin(pi a / D)
LValue L_at_1(i64 D);

}  // namespace thetalift
