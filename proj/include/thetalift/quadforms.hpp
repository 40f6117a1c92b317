#pragma once

// Binary quadratic forms, class numbers, Hurwitz class numbers, fundamental
// units of real quadratic fields, and sums of three squares.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <vector>

#include "thetalift/arith.hpp"

namespace thetalift {

using BigInt = boost::multiprecision::cpp_int;

// a x^2 + b x y + c y^2
struct ReducedForm {
  i64 a, b, c;
  [[nodiscard]] i64 discriminant() const { return b * b - 4 * a * c; }
  friend auto operator<=>(const ReducedForm&, const ReducedForm&) = default;
};

// Reduced rational number with positive denominator.
class Rational {
 public:
  Rational(i64 num = 0, i64 den = 1);
  [[nodiscard]] i64 num() const { return num_; }
  [[nodiscard]] i64 den() const { return den_; }
  [[nodiscard]] double to_double() const { return double(num_) / double(den_); }
  [[nodiscard]] std::string str() const;  // "p/q", or "p" when q == 1

  friend Rational operator+(Rational x, Rational y);
  friend Rational operator-(Rational x, Rational y);
  friend Rational operator*(Rational x, Rational y);
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  i64 num_;
  i64 den_;
};

struct PellUnit {
  i64 D;
  BigInt x;  // epsilon = (x + y sqrt(D)) / 2
  BigInt y;
  double log_eps;
  [[nodiscard]] int norm() const;  // +1 or -1
};

// All reduced forms (primitive or not) of discriminant Delta < 0, sorted.
std::vector<ReducedForm> reduced_forms(i64 Delta);
i64 class_number_imag(i64 Delta);
int omega_units(i64 Delta);

// H(-N) by weighted enumeration of reduced forms.
Rational hurwitz_direct(i64 N);
// H(-N) = 2 h(-Delta_N) / omega_N * T_1^{psi_{-N}}(f).
Rational hurwitz_formula(i64 N);

// Fundamental unit via the continued fraction of (b + sqrt(D))/2.
PellUnit pell_unit(i64 D);
// log of a positive big integer.
double big_log(const BigInt& v);

// h(D) for D > 0 from L(1, chi_D) = 2 h log(eps) / sqrt(D).
// Throws PrecisionError if the quotient is not within 1e-6 of an integer.
i64 class_number_real(i64 D);
// The unrounded quotient sqrt(D) L(1,chi_D) / (2 log eps_D).
double class_number_real_quotient(i64 D);

i64 r3_brute(i64 n);
i64 r3_hurwitz(i64 n);

}  // namespace thetalift
