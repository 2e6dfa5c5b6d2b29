#include "degseq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace degseq {

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  mpq_class q;
  q.get_num() = std::move(num);
  q.get_den() = std::move(den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(mpz_class num, mpz_class den) : q_(make_canonical(std::move(num), std::move(den))) {}

Rational::Rational(mpz_class n) : q_(std::move(n)) {}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("Rational: malformed text \"" + std::string(text) + "\""); };
  std::string_view s = text;
  if (s.empty()) bad();
  std::string num;
  if (s.front() == '-') {
    num.push_back('-');
    s.remove_prefix(1);
  }
  auto digits = [&](std::string& out) {
    size_t n = 0;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    if (n == 0) bad();
    out.append(s.substr(0, n));
    s.remove_prefix(n);
  };
  digits(num);
  std::string den = "1";
  if (!s.empty()) {
    if (s.front() != '/') bad();
    s.remove_prefix(1);
    den.clear();
    digits(den);
    if (!s.empty()) bad();
  }
  mpz_class d(den);
  if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator in \"" + std::string(text) + "\"");
  return Rational(mpz_class(num), std::move(d));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }

Rational Rational::operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }

Rational Rational::operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  *this = *this / o;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long exp = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw std::domain_error("Rational: zero to a negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), exp);
  return invert ? Rational(std::move(d), std::move(n)) : Rational(std::move(n), std::move(d));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(std::move(f));
}

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(std::move(b));
}

}  // namespace degseq
