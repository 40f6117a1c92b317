#include "thetalift/lseries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "thetalift/errors.hpp"

namespace thetalift {

namespace {

// B_{2j} / (2j)!, j = 1..12
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    0.083333333333333329,   -0.0013888888888888889,  3.3068783068783071e-05,
    -8.2671957671957675e-07, 2.08767569878681e-08,    -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13, 8.5860620562778452e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812522e-19,
};

constexpr int kEulerMaclaurinN = 16;
constexpr int kEulerMaclaurinTerms = 10;

// sum_{k >= 0} (k + a)^{-s} for s > 1, with |remainder| bounded by the first
// omitted correction term (real s).
LValue euler_maclaurin(double s, double a) {
  double head = 0.0;
  for (int k = 0; k < kEulerMaclaurinN; ++k) head += std::pow(k + a, -s);
  const double x = kEulerMaclaurinN + a;
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // rising factorial s (s+1) ... (s + 2j - 2) times x^{-s-2j+1}
  double rising = s;
  double xpow = std::pow(x, -s - 1.0);
  double next = 0.0;
  for (int j = 1; j <= kEulerMaclaurinTerms + 1; ++j) {
    double term = kBernoulliOverFactorial[j - 1] * rising * xpow;
    if (j == kEulerMaclaurinTerms + 1) {
      next = term;
      break;
    }
    tail += term;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    xpow /= x * x;
  }
  const double value = head + tail;
  const double rounding = (kEulerMaclaurinN + 4) * std::numeric_limits<double>::epsilon() * (std::abs(head) + std::abs(tail));
  return {1, s, value, std::abs(next) + rounding};
}

// Neumaier-compensated sum; the rounding error is at most 2 eps sum |x_i|
// up to second-order terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
    abs_ += std::abs(x);
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }
  [[nodiscard]] double abs_total() const { return abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

void require_period_char(i64 D, const char* what) {
  if (D != 1 && !is_fundamental_discriminant(D))
    throw DomainError(std::string(what) + ": " + std::to_string(D) +
                      " is not a fundamental discriminant");
}

}  // namespace

LValue zeta(double s) {
  if (!(s >= 1.25))
    throw DomainError("zeta: s = " + std::to_string(s) + " is too close to the pole (need s >= 1.25)");
  return euler_maclaurin(s, 1.0);
}

LValue hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  return euler_maclaurin(s, a);
}

LValue L_direct(i64 D, double s, i64 cutoff) {
  require_period_char(D, "L_direct");
  if (!(s > 1.0)) throw DomainError("L_direct: s must exceed 1");
  if (cutoff < 1) throw DomainError("L_direct: cutoff must be positive");
  if (D == 1) return zeta(s);
  CompensatedSum sum;
  for (i64 k = 1; k <= cutoff; ++k) {
    int ch = kronecker(D, k);
    if (ch != 0) sum.add(ch * std::pow(double(k), -s));
  }
  // pow is faithful to an ulp; the compensated sum adds 2 eps sum |x|
  const double bound = double(std::abs(D)) * std::pow(double(cutoff), -s) +
                       4 * std::numeric_limits<double>::epsilon() * sum.abs_total();
  return {D, s, sum.value(), bound};
}

LValue L_value(i64 D, double s) {
  require_period_char(D, "L_value");
  if (!(s > 1.0)) throw DomainError("L_value: s must exceed 1");
  if (D == 1) {
    LValue z = hurwitz_zeta(s, 1.0);
    z.D = 1;
    return z;
  }
  const i64 k = std::abs(D);
  CompensatedSum sum;
  double err = 0.0;
  for (i64 a = 1; a < k; ++a) {
    int ch = kronecker(D, a);
    if (ch == 0) continue;
    LValue h = hurwitz_zeta(s, double(a) / double(k));
    sum.add(ch * h.value);
    err += h.abs_error_bound;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::pow(double(k), -s);
  const double value = sum.value() * scale;
  return {D, s, value, (err + 4 * eps * sum.abs_total()) * scale + 2 * eps * std::abs(value)};
}

LValue L_at_1(i64 D) {
  if (D == 1) throw DomainError("L_at_1: trivial character has a pole at s = 1");
  require_period_char(D, "L_at_1");
  const i64 k = std::abs(D);
  const double eps = std::numeric_limits<double>::epsilon();
  if (D < 0) {
    i64 sum = 0;
    for (i64 a = 1; a < k; ++a) sum += kronecker(D, a) * a;
    const double value = -std::numbers::pi * double(sum) / std::pow(double(k), 1.5);
    return {D, 1.0, value, 8 * eps * std::abs(value)};
  }
  double sum = 0.0;
  for (i64 a = 1; a < k; ++a) {
    int ch = kronecker(D, a);
    if (ch == 0) continue;
    const i64 r = std::min(a, k - a);
    sum += ch * std::log(std::sin(std::numbers::pi * double(r) / double(k)));
  }
  const double value = -sum / std::sqrt(double(k));
  return {D, 1.0, value, 16 * eps * double(k) / std::sqrt(double(k))};
}

}  // namespace thetalift
