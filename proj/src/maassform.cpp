#include "thetalift/maassform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "thetalift/errors.hpp"
#include "thetalift/parallel.hpp"
#include "thetalift/quadforms.hpp"

namespace thetalift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kRealnessTolerance = 1e-10;

bool is_odd_prime(i64 p) {
  if (p < 3 || p % 2 == 0) return false;
  const Factorization f = factorize(p);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

}  // namespace

std::string_view family_name(CoeffFamily f) {
  switch (f) {
    case CoeffFamily::holo_plus:
      return "holo_plus";
    case CoeffFamily::nonholo_minus:
      return "nonholo_minus";
    case CoeffFamily::r3:
      return "r3";
  }
  return "unknown";
}

Complex c_plus(i64 n, ConstantTermConvention conv) {
  if (n < 0) throw DomainError("c_plus: n must be nonnegative");
  Complex v = kPi * eighth_root(-1) * std::conj(Z_at_1(-n).value);
  if (n == 0 && conv == ConstantTermConvention::theorem2) v *= 0.5;
  return v;
}

Complex c_minus(i64 n) {
  if (n < 1) throw DomainError("c_minus: n must be positive");
  return kSqrtPi * eighth_root(-1) * std::conj(Z_at_1(n).value);
}

CoeffTable::CoeffTable(CoeffFamily family, i64 first, std::vector<Complex> entries)
    : family_(family), first_(first), entries_(std::move(entries)) {}

Complex CoeffTable::at(i64 n) const {
  if (!contains(n))
    throw DomainError("CoeffTable: index " + std::to_string(n) + " outside [" +
                      std::to_string(first_) + ", " + std::to_string(n_max()) + "]");
  return entries_[std::size_t(n - first_)];
}

CoeffTable coeff_table(CoeffFamily family, i64 n_max, ConstantTermConvention conv,
                       unsigned threads) {
  if (n_max < 0) throw DomainError("coeff_table: n_max must be nonnegative");
  const i64 first = family == CoeffFamily::nonholo_minus ? 1 : 0;
  const i64 count = std::max<i64>(n_max - first + 1, 0);
  std::vector<Complex> entries(static_cast<std::size_t>(count));
  parallel_for(std::size_t(count), threads, [&](std::size_t i) {
    const i64 n = first + i64(i);
    switch (family) {
      case CoeffFamily::holo_plus:
        entries[i] = c_plus(n, conv);
        break;
      case CoeffFamily::nonholo_minus:
        entries[i] = c_minus(n);
        break;
      case CoeffFamily::r3:
        entries[i] = double(r3_brute(n));
        break;
    }
  });
  if (family != CoeffFamily::r3)
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (std::abs(entries[i].imag()) > kRealnessTolerance)
        throw PrecisionError("coeff_table: coefficient " + std::to_string(first + i64(i)) +
                             " has imaginary part " + std::to_string(entries[i].imag()));
  return CoeffTable(family, first, std::move(entries));
}

CoeffTable hecke_Tp2(const CoeffTable& table, i64 p, int half_weight_k) {
  if (!is_odd_prime(p)) throw DomainError("hecke_Tp2: p must be an odd prime");
  if (half_weight_k != 0 && half_weight_k != 1)
    throw DomainError("hecke_Tp2: half_weight_k must be 0 or 1");
  const i64 p2 = p * p;
  const i64 out_max = table.n_max() / p2;
  if (out_max < table.first_index())
    throw DomainError("hecke_Tp2: table range " + std::to_string(table.n_max()) +
                      " is insufficient for p = " + std::to_string(p));
  const double middle_scale = half_weight_k == 1 ? 1.0 : 1.0 / double(p);
  const double last_scale = half_weight_k == 1 ? double(p) : 1.0 / double(p);
  std::vector<Complex> out;
  for (i64 n = table.first_index(); n <= out_max; ++n) {
    const i64 top = half_weight_k == 1 ? -n : n;
    Complex v = table.at(p2 * n) + double(kronecker(top, p)) * middle_scale * table.at(n);
    if (n % p2 == 0 && table.contains(n / p2)) v += last_scale * table.at(n / p2);
    out.push_back(v);
  }
  return CoeffTable(table.family(), table.first_index(), std::move(out));
}

UpperHalfPoint::UpperHalfPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw DomainError("UpperHalfPoint: need finite x and y > 0");
}

GammaThetaMatrix::GammaThetaMatrix(i64 a, i64 b, i64 c, i64 d) : a_(a), b_(b), c_(c), d_(d) {
  if ((__int128)a * d - (__int128)b * c != 1)
    throw DomainError("GammaThetaMatrix: determinant must be 1");
  const bool swap_class = (a % 2 == 0) && (d % 2 == 0) && (b % 2 != 0) && (c % 2 != 0);
  const bool diag_class = (a % 2 != 0) && (d % 2 != 0) && (b % 2 == 0) && (c % 2 == 0);
  if (!swap_class && !diag_class)
    throw DomainError("GammaThetaMatrix: matrix is not in the theta group");
}

GammaThetaMatrix operator*(const GammaThetaMatrix& x, const GammaThetaMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

Complex nu_theta(const GammaThetaMatrix& A) {
  if (A.c() % 2 != 0) return double(star_upper(A.d(), A.c())) * eighth_root(-A.c());
  return double(star_lower(A.c(), A.d())) * eighth_root(A.d() - 1);
}

Complex automorphy_sqrt(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return {0.0, -std::sqrt(-z.real())};
  return std::sqrt(z);
}

SeriesValue theta_eval(const UpperHalfPoint& tau, i64 cutoff) {
  if (cutoff < 1) throw DomainError("theta_eval: cutoff must be positive");
  Complex sum(0);
  for (i64 n = cutoff; n >= 1; --n) {
    const double n2 = double(n) * double(n);
    const double frac = std::fmod(n2 * tau.x, 1.0);
    sum += std::polar(std::exp(-2.0 * kPi * n2 * tau.y), 2.0 * kPi * frac);
  }
  const double K = double(cutoff);
  return {1.0 + 2.0 * sum, 4.0 * std::exp(-2.0 * kPi * tau.y * K * K)};
}

namespace {

// sum x^k / ((1/2)(3/2)...(1/2+k)), the lower incomplete gamma series at a = 1/2
double lower_series(double x) {
  double term = 2.0;  // 1 / (1/2)
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= x / (0.5 + k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

// e^x x^{-1/2} Gamma(1/2, x) by the Lentz continued fraction, x >= 4.
double upper_fraction(double x) {
  constexpr double tiny = 1e-300;
  const double a = 0.5;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace

double incomplete_gamma_half(double x) {
  if (!(x >= 0.0)) throw DomainError("incomplete_gamma_half: x must be nonnegative");
  if (x < 4.0) return kSqrtPi - std::exp(-x) * std::sqrt(x) * lower_series(x);
  return std::exp(-x) * std::sqrt(x) * upper_fraction(x);
}

double incomplete_gamma_half_scaled(double x) {
  if (!(x >= 0.0)) throw DomainError("incomplete_gamma_half_scaled: x must be nonnegative");
  if (x < 4.0) return std::exp(x) * kSqrtPi - std::sqrt(x) * lower_series(x);
  return std::sqrt(x) * upper_fraction(x);
}

FValue F_eval(const UpperHalfPoint& tau, i64 n_max, ConstantTermConvention conv) {
  if (n_max < 1) throw DomainError("F_eval: n_max must be positive");
  FValue out{};
  Complex holo(0), nonholo(0);
  double last_holo = 0.0, last_nonholo = 0.0;
  for (i64 n = n_max; n >= 0; --n) {
    const double nd = double(n);
    const double frac = std::fmod(nd * tau.x, 1.0);
    const double decay = std::exp(-2.0 * kPi * nd * tau.y);
    const Complex holo_term = c_plus(n, conv) * std::polar(decay, 2.0 * kPi * frac);
    holo += holo_term;
    if (n == n_max) last_holo = std::abs(holo_term);
    if (n == 0) continue;
    // Gamma(1/2; 4 pi n y) q^{-n} = e^{4 pi n y} Gamma(1/2; 4 pi n y) e^{-2 pi n y} e^{-2 pi i n x}
    const double g = incomplete_gamma_half_scaled(4.0 * kPi * nd * tau.y);
    const Complex nh_term = c_minus(n) * std::polar(g * decay, -2.0 * kPi * frac);
    nonholo += nh_term;
    if (n == n_max) last_nonholo = std::abs(nh_term);
  }
  nonholo += 2.0 * std::sqrt(tau.y);
  out.holomorphic = holo;
  out.nonholomorphic = nonholo;
  out.value = holo + nonholo;
  out.last_term = std::max(last_holo, last_nonholo);
  return out;
}

}  // namespace thetalift
