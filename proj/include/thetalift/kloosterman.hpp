#pragma once

// Kloosterman-type sums attached to the cube of the theta multiplier, the
// Kloosterman zeta function Z_n(s) and its closed forms.

#include <complex>
#include <span>
#include <vector>

#include "thetalift/arith.hpp"

namespace thetalift {

using Complex = std::complex<double>;

// e^{pi i k / 4} from an exact table.
Complex eighth_root(i64 k);

// The fixed phase e^{3 pi i / 4} carried by every Z_n(s).
inline Complex zeta_phase() { return eighth_root(3); }

struct KloostermanSum {
  i64 n;
  i64 c;
  Complex value;
};

enum class ZetaMethod { series, closed_form, s1_special };

struct ZetaValue {
  i64 n;
  double s;
  Complex value;
  ZetaMethod method;
  double error_bound = 0.0;
  bool trivial_character = false;  // L(s, psi_{-n}) = zeta(s)

  // |Im(value e^{-3 pi i / 4})|
  [[nodiscard]] double phase_residual() const;
};

Complex lambda(i64 d, i64 c);
KloostermanSum S(i64 n, i64 c);
// Closed form of S(0; c) via c = 2^r c'.
Complex S0_closed(i64 c);

Complex lambda_Z(i64 d, i64 c);
Complex gamma_c(i64 N, i64 c);
double Q_r(i64 N, int r);

// R~_N(s) from its closed form, and from the series in Q_r truncated at r_max.
double R_tilde(i64 N, double s);
double R_tilde_series(i64 N, double s, int r_max = 60);

// S(n; c) for every n in ns and 1 <= c <= cutoff. Row i holds n = ns[i],
// column c - 1 holds modulus c. Work is split over c.
class KloostermanTable {
 public:
  KloostermanTable(std::span<const i64> ns, i64 cutoff, unsigned threads = 1);

  [[nodiscard]] i64 cutoff() const { return cutoff_; }
  [[nodiscard]] const std::vector<i64>& ns() const { return ns_; }
  [[nodiscard]] Complex at(std::size_t row, i64 c) const {
    return values_[row * std::size_t(cutoff_) + std::size_t(c - 1)];
  }

 private:
  std::vector<i64> ns_;
  i64 cutoff_;
  std::vector<Complex> values_;
};

// Trivial-bound tail: 2 sum_{c > C} c^{1/2 - s} <= 2 C^{3/2 - s} / (s - 3/2).
double series_tail_bound(double s, i64 cutoff);

// Partial sum of S(n;c)/c^{s+1/2} over c <= cutoff (pairwise summation).
// Requires s >= 2 and cutoff >= 100.
ZetaValue Z_series(i64 n, double s, i64 cutoff, unsigned threads = 1);
ZetaValue Z_series(const KloostermanTable& table, std::size_t row, double s, i64 cutoff);

ZetaValue Z0_closed(double s);
ZetaValue Zn_closed(i64 n, double s);

// Z_n^odd(1) R_n(1) for -n not a perfect square, built from the factored
// form at s = 1 with the finite-sum value of L(1, psi_{-n}).
ZetaValue Zn_closed_at_1(i64 n);
// Z_0(1) from 4 e^{3 pi i/4} / (3 zeta(2)) * lim zeta(2s-1)(1 - 2^{1-2s} - 2^{-s}).
ZetaValue Z0_limit_at_1();

// Z_n(1) from the class-number recipe.
ZetaValue Z_at_1(i64 n);

}  // namespace thetalift
