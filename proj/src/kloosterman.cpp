#include "thetalift/kloosterman.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "thetalift/errors.hpp"
#include "thetalift/lseries.hpp"
#include "thetalift/parallel.hpp"

namespace thetalift {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;
constexpr std::array<Complex, 8> kEighthRoots = {
    Complex(1, 0),           Complex(kHalfSqrt2, kHalfSqrt2),
    Complex(0, 1),           Complex(-kHalfSqrt2, kHalfSqrt2),
    Complex(-1, 0),          Complex(-kHalfSqrt2, -kHalfSqrt2),
    Complex(0, -1),          Complex(kHalfSqrt2, -kHalfSqrt2),
};

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_modulus(i64 c, const char* what) {
  if (c < 1) throw DomainError(std::string(what) + ": c must be positive");
}

// lambda(d, c) = e^{pi i k / 4} * j with j in {-1, 0, 1}.
struct LambdaParts {
  i64 k;
  int j;
};

LambdaParts lambda_parts(i64 d, i64 c) {
  const bool c_odd = floor_mod(c, 2) == 1;
  const bool d_odd = floor_mod(d, 2) == 1;
  if (c_odd && !d_odd) return {-c, star_upper(d, c)};
  if (!c_odd && d_odd) return {d - 1, star_lower(c, d)};
  return {0, 0};
}

// e^{pi i m / c} for integer m.
Complex unit_root(i64 m, i64 c) {
  const i64 r = floor_mod(m, 2 * c);
  return std::polar(1.0, kPi * double(r) / double(c));
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return i64(((__int128)floor_mod(a, m) * (__int128)floor_mod(b, m)) % m);
}

int two_adic_valuation(i64 v) {
  int e = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++e;
  }
  return e;
}

// L value, zeta(2s) and the Theorem-style product Z_n^odd(s) R_n(s).
Complex closed_product(i64 n, double s, double Lval, double zeta2s) {
  const SquarefreeSplit sp = squarefree_split(n);
  const QuadChar chi = QuadChar::of_field(-n);
  const double p2 = chi(2);
  const double two_s = std::pow(2.0, -s);
  const double two_2s = std::pow(2.0, -2.0 * s);
  const Complex odd = zeta_phase() * (Lval / zeta2s) * std::pow(double(sp.w), 1.0 - 2.0 * s) *
                      T(s, chi, sp.w) * (1.0 - p2 * two_s) / (1.0 - two_2s);
  double r_star = 0.0;
  const i64 n4 = floor_mod(n, 4);
  if (n4 == 0 || n4 == 3) {
    const int Q = floor_mod(sp.d, 4) == 3 ? sp.q : sp.q - 1;
    if (Q < 0) throw InternalError("closed_product: negative 2-adic exponent");
    r_star = (1.0 - two_2s) / (1.0 - p2 * two_s) * std::pow(2.0, Q * (1.0 - 2.0 * s)) *
             T(s, chi, i64(1) << Q);
  }
  const double R = 1.0 + two_s - 2.0 * two_s * r_star;
  return odd * R;
}

}  // namespace

Complex eighth_root(i64 k) { return kEighthRoots[std::size_t(floor_mod(k, 8))]; }

double ZetaValue::phase_residual() const {
  return std::abs((value * std::conj(zeta_phase())).imag());
}

Complex lambda(i64 d, i64 c) {
  require_modulus(c, "lambda");
  const LambdaParts p = lambda_parts(d, c);
  return p.j == 0 ? Complex(0) : double(p.j) * eighth_root(p.k);
}

KloostermanSum S(i64 n, i64 c) {
  require_modulus(c, "S");
  Complex acc(0);
  for (i64 d = 0; d < 2 * c; ++d) {
    const LambdaParts p = lambda_parts(d, c);
    if (p.j == 0) continue;
    // conj(lambda)^3 e^{pi i d n / c} = j e^{pi i (4 d n - 3 k c) / (4c)}
    const i64 m = floor_mod(4 * mul_mod(d, n, 2 * c) - 3 * mul_mod(p.k, c, 8 * c), 8 * c);
    acc += double(p.j) * std::polar(1.0, kPi * double(m) / double(4 * c));
  }
  return {n, c, acc};
}

Complex S0_closed(i64 c) {
  require_modulus(c, "S0_closed");
  const int r = two_adic_valuation(c);
  const i64 c_odd = c >> r;
  if (!is_square(c_odd)) return 0;
  if (r == 0) return zeta_phase() * double(euler_phi(c));
  if (r % 2 == 1) return -std::pow(2.0, r - 0.5) * zeta_phase() * double(euler_phi(c_odd));
  return 0;
}

Complex lambda_Z(i64 d, i64 c) {
  require_modulus(c, "lambda_Z");
  const bool c_odd = floor_mod(c, 2) == 1;
  const bool d_odd = floor_mod(d, 2) == 1;
  // i^{(1-c)/2} = e^{pi i (1-c)/4}; i^{d/2} read as e^{pi i d/4}.
  if (c_odd && !d_odd) return double(star_upper(d, c)) * eighth_root(1 - c);
  if (!c_odd && d_odd) return double(star_lower(c, d)) * eighth_root(d);
  return 0;
}

Complex gamma_c(i64 N, i64 c) {
  require_modulus(c, "gamma_c");
  Complex acc(0);
  for (i64 d = 1; d <= 2 * c; ++d) {
    const Complex lz = lambda_Z(d, c);
    if (lz == Complex(0)) continue;
    acc += lz * unit_root(-mul_mod(d, N, 2 * c), c);
  }
  return acc / std::sqrt(double(c));
}

double Q_r(i64 N, int r) {
  if (N == 0) throw DomainError("Q_r: N must be nonzero");
  if (r < 1) throw DomainError("Q_r: r must be positive");
  const int shift = r % 2 == 0 ? r - 2 : r - 1;
  if (shift >= 62) return 0.0;
  const i64 pow2 = i64(1) << shift;
  if (N % pow2 != 0) return 0.0;
  const i64 m = N / pow2;
  if (r % 2 == 0) {
    if (floor_mod(m, 4) != 1) return 0.0;
    const int sign = floor_mod((m - 1) / 4, 2) == 0 ? 1 : -1;
    return sign * std::pow(2.0, r / 2.0);
  }
  const int sign = floor_mod(m, 4) <= 1 ? 1 : -1;  // (-1)^{m(m-1)/2}
  return sign * std::pow(2.0, (r - 1) / 2.0);
}

double R_tilde(i64 N, double s) {
  if (N == 0) throw DomainError("R_tilde: N must be nonzero");
  if (!(s > 0.5)) throw DomainError("R_tilde: s must exceed 1/2");
  const i64 N4 = floor_mod(N, 4);
  if (N4 == 2 || N4 == 3) return 0.0;
  const QuadChar chi = QuadChar::of_field(N);
  const i64 F = isqrt(N / chi.discriminant());
  const int Q = two_adic_valuation(F);
  const double p2 = chi(2);
  return (1.0 - std::pow(2.0, -2.0 * s)) / (1.0 - p2 * std::pow(2.0, -s)) *
         std::pow(2.0, Q * (1.0 - 2.0 * s)) * T(s, chi, i64(1) << Q);
}

double R_tilde_series(i64 N, double s, int r_max) {
  if (N == 0) throw DomainError("R_tilde_series: N must be nonzero");
  double sum = 1.0;
  for (int r = 1; r <= r_max; ++r) {
    const double q = Q_r(N, r);
    if (q != 0.0) sum += q * std::pow(2.0, -(r - 1) * s);
  }
  return 0.5 * sum;
}

KloostermanTable::KloostermanTable(std::span<const i64> ns, i64 cutoff, unsigned threads)
    : ns_(ns.begin(), ns.end()), cutoff_(cutoff) {
  require_modulus(cutoff, "KloostermanTable");
  values_.assign(ns_.size() * std::size_t(cutoff_), Complex(0));

  // Smallest prime factor up to 2 * cutoff; the symbols d -> (d/c) and
  // d -> (c/d) are completely multiplicative in d, so only primes need a
  // Jacobi evaluation.
  const i64 limit = 2 * cutoff_ + 1;
  std::vector<i64> spf(std::size_t(limit + 1), 0);
  for (i64 i = 2; i <= limit; ++i)
    if (spf[i] == 0)
      for (i64 j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = i;

  parallel_for(std::size_t(cutoff_), threads, [&](std::size_t idx) {
    const i64 c = i64(idx) + 1;
    const bool c_odd = c % 2 == 1;
    const i64 period = 2 * c;

    std::vector<Complex> roots(static_cast<std::size_t>(period));
    for (i64 m = 0; m < c; ++m) {
      roots[std::size_t(m)] = std::polar(1.0, kPi * double(m) / double(c));
      roots[std::size_t(m + c)] = -roots[std::size_t(m)];
    }

    // conj(lambda(d, c))^3 at d = d0, d0 + 2, ..., d0 + 2(c-1).
    const i64 d0 = c_odd ? 0 : 1;
    std::vector<Complex> weights(static_cast<std::size_t>(c));
    if (c_odd) {
      // (d/c) for even d = 2e only depends on d mod c.
      std::vector<int> chi(std::size_t(c), 0);
      chi[0] = c == 1 ? 1 : 0;
      if (c > 1) chi[1] = 1;
      for (i64 e = 2; e < c; ++e) {
        const i64 p = spf[std::size_t(e)];
        chi[std::size_t(e)] = p == e ? kronecker(p, c) : chi[std::size_t(p)] * chi[std::size_t(e / p)];
      }
      const Complex phase = eighth_root(3 * c);
      for (i64 t = 0; t < c; ++t) {
        const i64 d = d0 + 2 * t;
        weights[std::size_t(t)] = double(chi[std::size_t(d % c)]) * phase;
      }
    } else {
      // (c/d) over odd d < 2c, multiplicative in d.
      std::vector<int> chi(std::size_t(period), 0);
      chi[1] = 1;
      for (i64 d = 3; d < period; d += 2) {
        const i64 p = spf[std::size_t(d)];
        chi[std::size_t(d)] = p == d ? kronecker(c, p) : chi[std::size_t(p)] * chi[std::size_t(d / p)];
      }
      for (i64 t = 0; t < c; ++t) {
        const i64 d = d0 + 2 * t;
        weights[std::size_t(t)] = double(chi[std::size_t(d)]) * eighth_root(-3 * (d - 1));
      }
    }

    for (std::size_t row = 0; row < ns_.size(); ++row) {
      const i64 n = ns_[row];
      const i64 step = floor_mod(2 * n, period);
      i64 m = mul_mod(d0, n, period);
      Complex acc(0);
      for (i64 t = 0; t < c; ++t) {
        acc += weights[std::size_t(t)] * roots[std::size_t(m)];
        m += step;
        if (m >= period) m -= period;
      }
      values_[row * std::size_t(cutoff_) + idx] = acc;
    }
  });
}

double series_tail_bound(double s, i64 cutoff) {
  return 2.0 * std::pow(double(cutoff), 1.5 - s) / (s - 1.5);
}

namespace {

void require_series_range(double s, i64 cutoff) {
  if (!(s >= 2.0))
    throw SeriesRangeError("Z_series: s = " + std::to_string(s) +
                           " is below 2, where the trivial tail bound is not usable");
  if (cutoff < 100) throw DomainError("Z_series: cutoff must be at least 100");
}

}  // namespace

ZetaValue Z_series(const KloostermanTable& table, std::size_t row, double s, i64 cutoff) {
  require_series_range(s, cutoff);
  if (cutoff > table.cutoff()) throw DomainError("Z_series: cutoff exceeds table range");
  std::vector<Complex> terms(static_cast<std::size_t>(cutoff));
  for (i64 c = 1; c <= cutoff; ++c)
    terms[std::size_t(c - 1)] = table.at(row, c) * std::pow(double(c), -(s + 0.5));
  ZetaValue z{table.ns()[row], s, pairwise_sum(terms), ZetaMethod::series};
  z.error_bound = series_tail_bound(s, cutoff) + 64 * kEps * std::log2(double(cutoff));
  return z;
}

ZetaValue Z_series(i64 n, double s, i64 cutoff, unsigned threads) {
  require_series_range(s, cutoff);
  const std::array<i64, 1> ns{n};
  const KloostermanTable table(ns, cutoff, threads);
  return Z_series(table, 0, s, cutoff);
}

ZetaValue Z0_closed(double s) {
  if (!(s > 1.0)) throw DomainError("Z0_closed: s must exceed 1 (use Z_at_1 at s = 1)");
  const LValue num = hurwitz_zeta(2.0 * s - 1.0, 1.0);
  const LValue den = hurwitz_zeta(2.0 * s, 1.0);
  const double factor = (1.0 - std::pow(2.0, -(2.0 * s - 1.0)) - std::pow(2.0, -s)) /
                        (1.0 - std::pow(2.0, -2.0 * s));
  ZetaValue z{0, s, zeta_phase() * (num.value / den.value) * factor, ZetaMethod::closed_form};
  z.error_bound = std::abs(z.value) * (num.abs_error_bound / num.value +
                                       den.abs_error_bound / den.value + 8 * kEps);
  z.trivial_character = true;
  return z;
}

ZetaValue Zn_closed(i64 n, double s) {
  if (n == 0) return Z0_closed(s);
  if (!(s > 1.0)) throw DomainError("Zn_closed: s must exceed 1 (use Z_at_1 at s = 1)");
  const QuadChar chi = QuadChar::of_field(-n);
  const LValue L = L_value(chi.discriminant(), s);
  const LValue z2 = hurwitz_zeta(2.0 * s, 1.0);
  ZetaValue z{n, s, closed_product(n, s, L.value, z2.value), ZetaMethod::closed_form};
  z.error_bound = std::abs(z.value) * (L.abs_error_bound / std::abs(L.value) +
                                       z2.abs_error_bound / z2.value + 32 * kEps);
  z.trivial_character = chi.is_trivial();
  return z;
}

ZetaValue Zn_closed_at_1(i64 n) {
  if (n == 0) throw DomainError("Zn_closed_at_1: use Z0_limit_at_1 for n = 0");
  const QuadChar chi = QuadChar::of_field(-n);
  if (chi.is_trivial())
    throw DomainError("Zn_closed_at_1: -n is a square, L(s, psi_{-n}) has a pole at s = 1");
  const LValue L = L_at_1(chi.discriminant());
  const double zeta2 = kPi * kPi / 6.0;
  ZetaValue z{n, 1.0, closed_product(n, 1.0, L.value, zeta2), ZetaMethod::closed_form};
  z.error_bound = std::abs(z.value) * (L.abs_error_bound / std::abs(L.value) + 32 * kEps);
  return z;
}

ZetaValue Z0_limit_at_1() {
  // zeta(2s - 1) = 1/(2(s-1)) + O(1) and g(s) = 1 - 2^{1-2s} - 2^{-s} vanishes
  // at s = 1, so the limit is g'(1) / 2.
  const double ln2 = std::log(2.0);
  const double g_prime = 2.0 * ln2 * std::pow(2.0, 1.0 - 2.0) + ln2 * std::pow(2.0, -1.0);
  const double limit = g_prime / 2.0;
  const double zeta2 = kPi * kPi / 6.0;
  ZetaValue z{0, 1.0, 4.0 * zeta_phase() / (3.0 * zeta2) * limit, ZetaMethod::closed_form};
  z.error_bound = 8 * kEps * std::abs(z.value);
  z.trivial_character = true;
  return z;
}

ZetaValue Z_at_1(i64 n) {
  const Complex base = zeta_phase() * (6.0 / (kPi * kPi));
  const double ln2 = std::log(2.0);
  if (n == 0) return {0, 1.0, base * ln2, ZetaMethod::s1_special, 4 * kEps, true};
  const SquarefreeSplit sp = squarefree_split(n);
  const QuadChar chi = QuadChar::of_field(-n);
  if (chi.is_trivial()) {
    const double ratio = double(T1(chi, sp.w)) / double(sp.w);
    return {n, 1.0, base * ln2 * ratio, ZetaMethod::s1_special, 4 * kEps, true};
  }
  const int p2 = chi(2);
  double c_n;
  const i64 n4 = floor_mod(n, 4);
  if (n4 == 1 || n4 == 2) {
    c_n = 2.0 - p2;
  } else {
    const int Q = floor_mod(sp.d, 4) == 3 ? sp.q : sp.q - 1;
    c_n = std::pow(2.0, -Q) * (1.0 - p2);
  }
  const LValue L = L_at_1(chi.discriminant());
  const double ratio = double(T1(chi, sp.w)) / double(sp.w);
  ZetaValue z{n, 1.0, base * L.value * ratio * c_n, ZetaMethod::s1_special};
  z.error_bound = std::abs(z.value) * (L.abs_error_bound / std::abs(L.value) + 8 * kEps);
  return z;
}

}  // namespace thetalift
