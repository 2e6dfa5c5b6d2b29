#include "degseq/bipoly.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace degseq {

void BiPoly::trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int lambda_deg, int x_deg) {
  if (lambda_deg < 0 || x_deg < 0) throw std::invalid_argument("BiPoly: negative degree");
  BiPoly p;
  if (c.is_zero()) return p;
  p.rows_.resize(x_deg + 1);
  p.rows_[x_deg].assign(lambda_deg + 1, Rational(0));
  p.rows_[x_deg][lambda_deg] = c;
  return p;
}

bool BiPoly::is_constant() const { return rows_.empty() || (rows_.size() == 1 && rows_[0].size() == 1); }

Rational BiPoly::constant_value() const {
  if (is_zero()) return Rational(0);
  if (!is_constant()) throw std::domain_error("BiPoly: not a constant: " + to_string());
  return rows_[0][0];
}

int BiPoly::lambda_degree() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational BiPoly::coeff(int lambda_deg, int x_deg) const {
  if (x_deg < 0 || lambda_deg < 0) return Rational(0);
  if (static_cast<size_t>(x_deg) >= rows_.size()) return Rational(0);
  const auto& row = rows_[x_deg];
  if (static_cast<size_t>(lambda_deg) >= row.size()) return Rational(0);
  return row[lambda_deg];
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.rows_)
    for (auto& c : row) c = -c;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  r += o;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  r -= o;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (size_t j = 0; j < o.rows_.size(); ++j) {
    auto& row = rows_[j];
    const auto& orow = o.rows_[j];
    if (row.size() < orow.size()) row.resize(orow.size(), Rational(0));
    for (size_t i = 0; i < orow.size(); ++i) row[i] += orow[i];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  *this += -o;
  return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.rows_.assign(rows_.size() + o.rows_.size() - 1, {});
  size_t cols = 0;
  for (const auto& row : rows_) cols = std::max(cols, row.size());
  size_t ocols = 0;
  for (const auto& row : o.rows_) ocols = std::max(ocols, row.size());
  for (auto& row : r.rows_) row.assign(cols + ocols - 1, Rational(0));
  for (size_t j = 0; j < rows_.size(); ++j) {
    for (size_t i = 0; i < rows_[j].size(); ++i) {
      const Rational& a = rows_[j][i];
      if (a.is_zero()) continue;
      for (size_t oj = 0; oj < o.rows_.size(); ++oj) {
        for (size_t oi = 0; oi < o.rows_[oj].size(); ++oi) {
          const Rational& b = o.rows_[oj][oi];
          if (b.is_zero()) continue;
          r.rows_[j + oj][i + oi] += a * b;
        }
      }
    }
  }
  r.trim();
  return r;
}

BiPoly BiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return BiPoly();
  BiPoly r = *this;
  for (auto& row : r.rows_)
    for (auto& v : row) v *= c;
  return r;
}

BiPoly BiPoly::eval_lambda(const Rational& v) const {
  BiPoly r;
  for (size_t j = 0; j < rows_.size(); ++j) {
    const auto& row = rows_[j];
    Rational acc(0);
    for (size_t i = row.size(); i-- > 0;) acc = acc * v + row[i];
    r += monomial(acc, 0, static_cast<int>(j));
  }
  return r;
}

BiPoly BiPoly::eval_x(const Rational& v) const {
  // Horner over the x-major rows; each row is a polynomial in lambda.
  std::vector<Rational> acc;
  for (size_t j = rows_.size(); j-- > 0;) {
    const auto& row = rows_[j];
    std::vector<Rational> next(std::max(acc.size(), row.size()), Rational(0));
    for (size_t i = 0; i < acc.size(); ++i) next[i] = acc[i] * v;
    for (size_t i = 0; i < row.size(); ++i) next[i] += row[i];
    acc = std::move(next);
  }
  BiPoly r;
  for (size_t i = 0; i < acc.size(); ++i) r += monomial(acc[i], static_cast<int>(i), 0);
  return r;
}

BiPoly BiPoly::div_lambda() const {
  BiPoly r;
  r.rows_.resize(rows_.size());
  for (size_t j = 0; j < rows_.size(); ++j) {
    const auto& row = rows_[j];
    if (row.empty()) continue;
    if (!row[0].is_zero()) throw std::domain_error("BiPoly: not divisible by lambda: " + to_string());
    r.rows_[j].assign(row.begin() + 1, row.end());
  }
  r.trim();
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t j = 0; j < rows_.size(); ++j) {
    for (size_t i = 0; i < rows_[j].size(); ++i) {
      const Rational& c = rows_[j][i];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c.to_string();
      if (i > 0) {
        out += "*λ";
        if (i > 1) out += "^" + std::to_string(i);
      }
      if (j > 0) {
        out += "*x";
        if (j > 1) out += "^" + std::to_string(j);
      }
    }
  }
  return out;
}

namespace {

// One term of the canonical text: [rational][*λ[^i]][*x[^j]], with the
// shorthand forms "λ", "-x^2", "3*λ*x" also accepted.
struct TermParser {
  std::string_view s;
  const std::string_view full;

  [[noreturn]] void bad() const {
    throw std::invalid_argument("BiPoly: malformed text \"" + std::string(full) + "\"");
  }

  void skip_ws() {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  }

  bool eat(std::string_view tok) {
    if (s.substr(0, tok.size()) == tok) {
      s.remove_prefix(tok.size());
      return true;
    }
    return false;
  }

  unsigned parse_exponent() {
    if (!eat("^")) return 1;
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) bad();
    unsigned e = 0;
    while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
      e = e * 10 + static_cast<unsigned>(s.front() - '0');
      s.remove_prefix(1);
    }
    return e;
  }

  Rational parse_rational() {
    size_t n = 0;
    if (n < s.size() && s[n] == '-') ++n;
    while (n < s.size() && (std::isdigit(static_cast<unsigned char>(s[n])) || s[n] == '/')) ++n;
    Rational r = Rational::parse(s.substr(0, n));
    s.remove_prefix(n);
    return r;
  }
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text) {
  BiPoly result;
  size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    size_t next = text.find('+', pos);
    std::string_view piece = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;

    TermParser tp{piece, text};
    tp.skip_ws();
    if (tp.s.empty()) tp.bad();

    Rational coeff(1);
    bool coeff_seen = false;
    if (tp.s.front() == '-' && !(tp.s.size() > 1 && std::isdigit(static_cast<unsigned char>(tp.s[1])))) {
      coeff = Rational(-1);
      tp.s.remove_prefix(1);
      tp.skip_ws();
    } else if (tp.s.front() == '-' || std::isdigit(static_cast<unsigned char>(tp.s.front()))) {
      coeff = tp.parse_rational();
      coeff_seen = true;
    }

    unsigned lambda_deg = 0;
    unsigned x_deg = 0;
    bool var_seen = false;
    while (true) {
      tp.skip_ws();
      if (tp.s.empty()) break;
      if ((coeff_seen || var_seen) && !tp.eat("*")) tp.bad();
      tp.skip_ws();
      if (tp.eat("λ") || tp.eat("l")) {
        lambda_deg += tp.parse_exponent();
      } else if (tp.eat("x")) {
        x_deg += tp.parse_exponent();
      } else {
        tp.bad();
      }
      var_seen = true;
    }
    if (!(coeff_seen || var_seen)) tp.bad();

    result += monomial(coeff, static_cast<int>(lambda_deg), static_cast<int>(x_deg));
    any = true;
    if (next == std::string_view::npos) break;
  }
  if (!any) throw std::invalid_argument("BiPoly: empty text");
  return result;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

BiPoly falling_factorial(unsigned n) {
  BiPoly p = BiPoly::constant(Rational(1));
  for (unsigned j = 0; j < n; ++j) {
    p = p * (BiPoly::x() - BiPoly::constant(Rational(static_cast<long>(j))));
  }
  return p;
}

BiPoly degenerate_falling_factorial(unsigned n) {
  BiPoly p = BiPoly::constant(Rational(1));
  for (unsigned j = 0; j < n; ++j) {
    p = p * (BiPoly::x() - BiPoly::lambda().scaled(Rational(static_cast<long>(j))));
  }
  return p;
}

}  // namespace degseq
