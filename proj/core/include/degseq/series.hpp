#pragma once

#include <vector>

#include "degseq/bipoly.hpp"

namespace degseq {

// Whether the t^n coefficient of a series carries a 1/n! normalization
// (exponential) or is the sequence value itself (ordinary).
enum class SeqConvention { exponential, ordinary };

// Formal power series in t over Q[lambda, x], truncated at a fixed order N:
// exactly N+1 stored coefficients, and no operation ever reads or writes
// beyond index N. Values are immutable once built.
//
// kDefaultOrder covers every identity check at n <= 12; 32 is the highest
// order the suite exercises.
inline constexpr int kDefaultOrder = 16;

class TruncSeries {
 public:
  explicit TruncSeries(int order = kDefaultOrder);
  TruncSeries(int order, std::vector<BiPoly> coeffs);  // coeffs.size() must be order+1

  static TruncSeries constant(int order, const BiPoly& c);
  static TruncSeries constant(int order, const Rational& c) { return constant(order, BiPoly(c)); }
  static TruncSeries t_power(int order, int k);  // t^k, k <= order

  int order() const { return order_; }
  const BiPoly& coeff(int n) const;

  TruncSeries operator+(const TruncSeries& o) const;  // orders must match
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;  // Cauchy product mod t^{N+1}

  // Multiplicative inverse mod t^{N+1}. The constant term must be a nonzero
  // rational constant (lambda- and x-free); anything else is rejected with
  // std::domain_error.
  TruncSeries reciprocal() const;

  // A(B(t)) mod t^{N+1} by Horner over the series ring; B must have zero
  // constant term (std::domain_error otherwise).
  TruncSeries compose(const TruncSeries& inner) const;

  // Division by t^k. The k low coefficients must vanish; the result has
  // order N-k, since the shifted-in high terms lie beyond the truncation.
  TruncSeries shift_div(int k) const;

  TruncSeries pow(unsigned e) const;
  TruncSeries scaled(const BiPoly& c) const;
  TruncSeries truncated(int new_order) const;  // new_order <= order

  bool operator==(const TruncSeries& o) const = default;

 private:
  int order_ = 0;
  std::vector<BiPoly> coeff_;
};

// log(1+t) = sum_{n>=1} (-1)^{n-1} t^n / n.
TruncSeries gf_log1p(int order);
// e^t - 1 = sum_{n>=1} t^n / n!.
TruncSeries gf_exp_minus_1(int order);
// e^{xt}: coefficient of t^n is x^n / n!.
TruncSeries gf_exp_x(int order);
// Degenerate exponential e_lambda^x(t) (with_x) or e_lambda(t): coefficient
// of t^n is (x)_{n,lambda}/n!, resp. (1)_{n,lambda}/n!.
TruncSeries gf_degenerate_exp(int order, bool with_x);
// log_lambda(1+t): zero constant term, then (lambda-1)...(lambda-n+1)/n!.
TruncSeries gf_log_lambda(int order);
// (1+t)^x: coefficient of t^n is (x)_n / n!.
TruncSeries gf_binomial_pow_x(int order);
// Modified polyexponential Ei_k: coefficient of t^n is 1/((n-1)! n^k) for
// n >= 1; any integer k is allowed.
TruncSeries gf_polyexponential(int k, int order);

// Exact moment of (x_1 + ... + x_r)^m over the unit cube [0,1]^r, r >= 1.
Rational cube_moment(int r, int m);

}  // namespace degseq
