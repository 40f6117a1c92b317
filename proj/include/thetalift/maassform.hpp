#pragma once

// Fourier coefficients of F_Theta, Hecke operators T(p^2) on half-integral
// weight coefficient tables, the theta multiplier and pointwise evaluation.

#include <string_view>
#include <vector>

#include "thetalift/arith.hpp"
#include "thetalift/kloosterman.hpp"

namespace thetalift {

enum class CoeffFamily { holo_plus, nonholo_minus, r3 };

// theorem2: c+(0) = (1/2) pi e^{-pi i/4} conj(Z_0(1)) from the Fourier
// expansion at s = 3/4; intro: c+(0) = pi e^{-pi i/4} conj(Z_0(1)).
enum class ConstantTermConvention { theorem2, intro };

std::string_view family_name(CoeffFamily f);

Complex c_plus(i64 n, ConstantTermConvention conv = ConstantTermConvention::theorem2);
Complex c_minus(i64 n);

class CoeffTable {
 public:
  CoeffTable(CoeffFamily family, i64 first, std::vector<Complex> entries);

  [[nodiscard]] CoeffFamily family() const { return family_; }
  [[nodiscard]] i64 first_index() const { return first_; }
  [[nodiscard]] i64 n_max() const { return first_ + i64(entries_.size()) - 1; }
  [[nodiscard]] bool contains(i64 n) const { return n >= first_ && n <= n_max(); }
  [[nodiscard]] Complex at(i64 n) const;
  [[nodiscard]] const std::vector<Complex>& entries() const { return entries_; }

 private:
  CoeffFamily family_;
  i64 first_;
  std::vector<Complex> entries_;
};

// Entries for n = first..n_max, where first is 1 for nonholo_minus and 0
// otherwise. Throws PrecisionError if a holo/nonholo entry is not real.
CoeffTable coeff_table(CoeffFamily family, i64 n_max,
                       ConstantTermConvention conv = ConstantTermConvention::theorem2,
                       unsigned threads = 1);

// a'(n) = a(p^2 n) + ((-1)^k n | p) p^{k-1} a(n) + p^{2k-1} a(n / p^2)
// for n up to table.n_max() / p^2; k = 0 is weight 1/2, k = 1 weight 3/2.
CoeffTable hecke_Tp2(const CoeffTable& table, i64 p, int half_weight_k);

struct UpperHalfPoint {
  double x;
  double y;
  UpperHalfPoint(double x_, double y_);
  [[nodiscard]] Complex tau() const { return {x, y}; }
};

class GammaThetaMatrix {
 public:
  GammaThetaMatrix(i64 a, i64 b, i64 c, i64 d);
  static GammaThetaMatrix identity() { return {1, 0, 0, 1}; }
  static GammaThetaMatrix translation() { return {1, 2, 0, 1}; }  // tau -> tau + 2
  static GammaThetaMatrix inversion() { return {0, 1, -1, 0}; }   // tau -> -1/tau

  [[nodiscard]] i64 a() const { return a_; }
  [[nodiscard]] i64 b() const { return b_; }
  [[nodiscard]] i64 c() const { return c_; }
  [[nodiscard]] i64 d() const { return d_; }
  [[nodiscard]] GammaThetaMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  [[nodiscard]] Complex act(Complex tau) const { return (double(a_) * tau + double(b_)) / (double(c_) * tau + double(d_)); }

  friend GammaThetaMatrix operator*(const GammaThetaMatrix& x, const GammaThetaMatrix& y);
  friend bool operator==(const GammaThetaMatrix&, const GammaThetaMatrix&) = default;

 private:
  i64 a_, b_, c_, d_;
};

Complex nu_theta(const GammaThetaMatrix& A);

// Square root with argument in [-pi/2, pi/2), i.e. arg z taken in [-pi, pi).
// Agrees with the principal branch off the negative real axis.
Complex automorphy_sqrt(Complex z);

struct SeriesValue {
  Complex value;
  double truncation;  // bound (theta) or last-term magnitude (F)
};

SeriesValue theta_eval(const UpperHalfPoint& tau, i64 cutoff);

// Gamma(1/2; x) = sqrt(pi) erfc(sqrt(x)).
double incomplete_gamma_half(double x);
// e^x Gamma(1/2; x), finite for all x >= 0.
double incomplete_gamma_half_scaled(double x);

struct FValue {
  Complex value;
  Complex holomorphic;     // sum c+(n) q^n, n <= n_max
  Complex nonholomorphic;  // 2 y^{1/2} + sum c-(n) Gamma(1/2; 4 pi n y) q^{-n}
  double last_term;        // magnitude of the largest n = n_max term
};

FValue F_eval(const UpperHalfPoint& tau, i64 n_max,
              ConstantTermConvention conv = ConstantTermConvention::theorem2);

}  // namespace thetalift
