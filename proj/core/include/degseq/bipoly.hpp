#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degseq/rational.hpp"

namespace degseq {

// Dense element of Q[lambda, x], x-major / lambda-minor: rows_[j][i] holds
// the coefficient of x^j * lambda^i. Canonical trimmed form: no trailing
// all-zero row, no trailing zero entry within a row; the zero polynomial is
// the empty array. Structural equality of canonical forms is mathematical
// equality, which keeps identity checking decidable.
class BiPoly {
 public:
  BiPoly() = default;  // zero
  explicit BiPoly(const Rational& c) { *this = constant(c); }

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, int lambda_deg, int x_deg);
  static BiPoly lambda() { return monomial(Rational(1), 1, 0); }
  static BiPoly x() { return monomial(Rational(1), 0, 1); }

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const;
  // The value of a constant polynomial (zero included). Throws
  // std::domain_error when lambda or x is still present.
  Rational constant_value() const;

  int x_degree() const { return static_cast<int>(rows_.size()) - 1; }  // -1 for zero
  int lambda_degree() const;
  Rational coeff(int lambda_deg, int x_deg) const;  // 0 outside the stored range

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;  // schoolbook; degrees stay tiny here
  BiPoly scaled(const Rational& c) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);

  bool operator==(const BiPoly& o) const = default;

  // Substitution homomorphisms; results have lambda- (resp. x-) degree 0.
  BiPoly eval_lambda(const Rational& v) const;
  BiPoly eval_x(const Rational& v) const;

  // Exact division by lambda. Throws std::domain_error when any monomial is
  // lambda-free.
  BiPoly div_lambda() const;

  // Canonical text: terms "c*λ^i*x^j" joined with " + ", ordered by (j, i)
  // ascending, exponent 1 and zero-degree factors omitted, zero poly "0".
  std::string to_string() const;
  static BiPoly parse(std::string_view text);

 private:
  std::vector<std::vector<Rational>> rows_;
  void trim();
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
BiPoly falling_factorial(unsigned n);
// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda), with (x)_{0,lambda} = 1;
// specializes to x^n at lambda=0 and to (x)_n at lambda=1.
BiPoly degenerate_falling_factorial(unsigned n);

}  // namespace degseq
