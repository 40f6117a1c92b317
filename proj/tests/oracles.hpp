#pragma once

// Reference computations for the tests. Written from first principles and
// kept independent of the library code paths they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

inline i64 powmod(i64 a, i64 e, i64 m) {
  __int128 r = 1, b = ((a % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return i64(r);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(i64 a, i64 p) {
  const i64 r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// Kronecker symbol (a|b) from the prime factorization of b, with Euler's
// criterion at odd primes, the mod 8 rule at 2 and the sign rule at -1.
inline int kronecker(i64 a, i64 b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (b < 0) {
    b = -b;
    if (a < 0) result = -result;
  }
  while (b % 2 == 0) {
    b /= 2;
    if (a % 2 == 0) return 0;
    const i64 r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  for (i64 p = 3; p * p <= b; p += 2)
    while (b % p == 0) {
      b /= p;
      result *= legendre(a, p);
    }
  if (b > 1) result *= legendre(a, b);
  return result;
}

// r(n) = #{(x, y, z) : x^2 + y^2 + z^2 = n} by a full triple loop.
inline i64 r3(i64 n) {
  i64 m = 0;
  while ((m + 1) * (m + 1) <= n) ++m;
  i64 count = 0;
  for (i64 x = -m; x <= m; ++x)
    for (i64 y = -m; y <= m; ++y)
      for (i64 z = -m; z <= m; ++z)
        if (x * x + y * y + z * z == n) ++count;
  return count;
}

// Minimal y > 0 with x^2 - D y^2 = +-4 by direct search.
struct PellSolution {
  i64 x, y;
  int norm;
};

inline std::optional<PellSolution> pell_search(i64 D, i64 y_limit) {
  for (i64 y = 1; y <= y_limit; ++y) {
    for (int sign : {-1, 1}) {
      const __int128 t = __int128(D) * y * y + 4 * sign;
      if (t <= 0) continue;
      i64 x = i64(std::sqrt(double(t)));
      while (__int128(x) * x > t) --x;
      while (__int128(x + 1) * (x + 1) <= t) ++x;
      if (__int128(x) * x == t) return PellSolution{x, y, sign == -1 ? -1 : 1};
    }
  }
  return std::nullopt;
}

inline bool squarefree(i64 n) {
  n = n < 0 ? -n : n;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

inline bool fundamental(i64 D) {
  if (D == 0 || D == 1) return false;
  const i64 r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  const i64 m = D / 4;
  const i64 s = ((m % 4) + 4) % 4;
  return (s == 2 || s == 3) && squarefree(m);
}

// Narrow and wide class numbers of discriminant D > 0 by counting cycles of
// reduced primitive indefinite forms under the reduction operator rho.
struct IndefiniteClasses {
  i64 narrow;
  i64 wide;
};

inline IndefiniteClasses indefinite_class_numbers(i64 D) {
  const double root = std::sqrt(double(D));
  using Form = std::tuple<i64, i64, i64>;
  std::vector<Form> reduced;
  for (i64 b = 1; double(b) < root; ++b) {
    if ((b * b - D) % 4 != 0) continue;
    const i64 ac = (b * b - D) / 4;  // negative
    for (i64 a = 1; a <= -ac; ++a) {
      if ((-ac) % a != 0) continue;
      for (int sa : {1, -1}) {
        const i64 A = sa * a, C = ac / A;
        if (!(root - double(b) < 2.0 * double(a) && 2.0 * double(a) < root + double(b))) continue;
        if (std::gcd(std::gcd(a, b), C < 0 ? -C : C) != 1) continue;
        reduced.emplace_back(A, b, C);
      }
    }
  }
  auto rho = [&](const Form& f) {
    const auto [a, b, c] = f;
    const i64 twoc = 2 * (c < 0 ? -c : c);
    i64 bb = -b;
    // choose bb = -b mod 2|c| in (sqrt D - 2|c|, sqrt D)
    i64 k = i64(std::floor((root - double(bb)) / double(twoc)));
    bb += k * twoc;
    while (double(bb) >= root) bb -= twoc;
    while (double(bb) <= root - double(twoc)) bb += twoc;
    return Form{c, bb, (bb * bb - D) / (4 * c)};
  };
  // The wide class number halves the narrow one unless some form and its
  // negative (-a, b, -c) share a cycle, which happens for all forms at once.
  std::set<Form> unseen(reduced.begin(), reduced.end());
  i64 cycles = 0;
  bool negative_in_cycle = false;
  while (!unseen.empty()) {
    Form f = *unseen.begin();
    const Form start = f;
    const Form neg{-std::get<0>(start), std::get<1>(start), -std::get<2>(start)};
    ++cycles;
    while (unseen.erase(f)) {
      if (f == neg) negative_in_cycle = true;
      f = rho(f);
    }
  }
  return {cycles, negative_in_cycle ? cycles : cycles / 2};
}

// Dirichlet L(s, (D|.)) by an Euler product over p <= P with the bound
// |log(tail)| <= 2 sum_{p > P} p^{-s} <= 2 P^{1-s} / (s - 1).
struct Bounded {
  double value;
  double bound;
};

inline Bounded euler_product(i64 D, double s, i64 P) {
  double logv = 0.0;
  for (i64 p = 2; p <= P; ++p)
    if (is_prime(p)) logv -= std::log1p(-double(kronecker(D, p)) * std::pow(double(p), -s));
  const double tail = 2.0 * std::pow(double(P), 1.0 - s) / (s - 1.0);
  const double v = std::exp(logv);
  return {v, v * (std::exp(tail) - 1.0)};
}

// Gamma(1/2; x) = 2 int_{sqrt x}^inf e^{-v^2} dv by composite Simpson.
inline double incomplete_gamma_half(double x) {
  const double a = std::sqrt(x), b = a + 12.0;
  const int n = 20000;
  const double h = (b - a) / n;
  double sum = std::exp(-a * a) + std::exp(-b * b);
  for (int i = 1; i < n; ++i) {
    const double v = a + i * h;
    sum += (i % 2 ? 4.0 : 2.0) * std::exp(-v * v);
  }
  return 2.0 * sum * h / 3.0;
}

// S(n; c) straight from the definition with trig roots of unity.
inline cplx lambda(i64 d, i64 c) {
  auto E = [](double k) { return std::polar(1.0, pi * k / 4.0); };
  const i64 dm = ((d % (2 * c)) + 2 * c) % (2 * c);
  if (c % 2 == 1 && d % 2 == 0) {
    // (d/c)^* = (d/|c|), c > 0 odd
    const int sym = c == 1 ? 1 : kronecker(dm, c);
    return E(-double(c)) * double(sym);
  }
  if (c % 2 == 0 && d % 2 != 0) {
    // (c/d)_* = (c/|d|), sign flip when c < 0 and d < 0 (c > 0 here)
    const i64 ad = d < 0 ? -d : d;
    return E(double(d - 1)) * double(kronecker(c, ad));
  }
  return 0.0;
}

inline cplx kloosterman(i64 n, i64 c, i64 d_start = 0) {
  cplx sum = 0.0;
  for (i64 d = d_start; d < d_start + 2 * c; ++d)
    sum += std::pow(std::conj(lambda(d, c)), 3) * std::polar(1.0, pi * double(d) * double(n) / double(c));
  return sum;
}

// Theta(tau) = sum q^{n^2} with many terms.
inline cplx theta(cplx tau, int terms = 200) {
  cplx sum = 1.0;
  for (int n = 1; n <= terms; ++n) sum += 2.0 * std::exp(cplx(0, 2 * pi) * double(n) * double(n) * tau);
  return sum;
}

}  // namespace oracle
