#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace degseq {

// Arbitrary-precision rational scalar in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1. Every operation returns a fresh
// canonical value; values are immutable and safe to share across threads.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // implicit by design
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpz_class n);

  // Parses "p", "-p" or "p/q". Rejects q = 0, signs on q, and any other
  // malformed text with std::invalid_argument.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws std::domain_error on o = 0

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  Rational pow(long e) const;  // e < 0 requires a nonzero value
  Rational abs() const;

  bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(q_, o.q_);
    return c <=> 0;
  }

  // "p/q", with "/q" omitted when q = 1. Sign lives in p.
  std::string to_string() const { return q_.get_str(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact integer combinatorics, returned as (integral) rationals.
Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

}  // namespace degseq
