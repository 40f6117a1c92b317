#pragma once

namespace thetalift {

// Every acceptance threshold used by the verification suites. scaled()
// multiplies the floating-point tolerances; exact checks stay exact.
struct Tolerances {
  double identity = 1e-10;          // S(0;c), lambda_Z, gamma, R~, s = 1 routes, Z_0(1)
  double imag_class_formula = 1e-10;
  double real_class_rounding = 1e-6;
  double rn_recovery = 1e-8;        // r(n) from Z_n(1) and the c-(n) identity
  double hecke_half = 1e-7;         // weight 1/2 eigenform identity on c+(n)
  double multiplier = 1e-8;         // theta transformation under Gamma_Theta
  double realness = 1e-10;          // imaginary parts of c+(n), c-(n)
  double phase_floor = 1e-10;       // phase purity floor, max(floor, 2 * error bound)

  [[nodiscard]] Tolerances scaled(double factor) const {
    Tolerances t = *this;
    t.identity *= factor;
    t.imag_class_formula *= factor;
    t.real_class_rounding *= factor;
    t.rn_recovery *= factor;
    t.hecke_half *= factor;
    t.multiplier *= factor;
    t.realness *= factor;
    t.phase_floor *= factor;
    return t;
  }
};

}  // namespace thetalift
