#include "degseq/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace degseq {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("TruncSeries: order mismatch (" + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  coeff_.assign(order + 1, BiPoly());
}

TruncSeries::TruncSeries(int order, std::vector<BiPoly> coeffs) : order_(order), coeff_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  if (coeff_.size() != static_cast<size_t>(order + 1)) {
    throw std::invalid_argument("TruncSeries: coefficient count does not match order");
  }
}

TruncSeries TruncSeries::constant(int order, const BiPoly& c) {
  TruncSeries s(order);
  s.coeff_[0] = c;
  return s;
}

TruncSeries TruncSeries::t_power(int order, int k) {
  if (k < 0 || k > order) throw std::invalid_argument("TruncSeries: t^k beyond truncation");
  TruncSeries s(order);
  s.coeff_[k] = BiPoly::constant(Rational(1));
  return s;
}

const BiPoly& TruncSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("TruncSeries: coefficient index out of range");
  return coeff_[n];
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same_order(*this, o);
  TruncSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.coeff_[n] = coeff_[n] + o.coeff_[n];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  require_same_order(*this, o);
  TruncSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.coeff_[n] = coeff_[n] - o.coeff_[n];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same_order(*this, o);
  TruncSeries r(order_);
  for (int i = 0; i <= order_; ++i) {
    if (coeff_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (o.coeff_[j].is_zero()) continue;
      r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    }
  }
  return r;
}

TruncSeries TruncSeries::reciprocal() const {
  if (!coeff_[0].is_constant() || coeff_[0].is_zero()) {
    throw std::domain_error("TruncSeries: reciprocal needs a nonzero rational constant term, got " +
                            coeff_[0].to_string());
  }
  Rational inv_a0 = Rational(1) / coeff_[0].constant_value();
  TruncSeries r(order_);
  r.coeff_[0] = BiPoly::constant(inv_a0);
  for (int n = 1; n <= order_; ++n) {
    BiPoly acc;
    for (int i = 1; i <= n; ++i) {
      if (coeff_[i].is_zero() || r.coeff_[n - i].is_zero()) continue;
      acc += coeff_[i] * r.coeff_[n - i];
    }
    r.coeff_[n] = (-acc).scaled(inv_a0);
  }
  return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  require_same_order(*this, inner);
  if (!inner.coeff_[0].is_zero()) {
    throw std::domain_error("TruncSeries: compose needs a zero constant term in the inner series, got " +
                            inner.coeff_[0].to_string());
  }
  TruncSeries result = TruncSeries::constant(order_, coeff_[order_]);
  for (int i = order_ - 1; i >= 0; --i) {
    result = result * inner;
    result.coeff_[0] += coeff_[i];
  }
  return result;
}

TruncSeries TruncSeries::shift_div(int k) const {
  if (k < 1 || k > order_) throw std::invalid_argument("TruncSeries: shift_div amount out of range");
  for (int n = 0; n < k; ++n) {
    if (!coeff_[n].is_zero()) {
      throw std::domain_error("TruncSeries: coefficient of t^" + std::to_string(n) +
                              " is nonzero, cannot divide by t^" + std::to_string(k));
    }
  }
  TruncSeries r(order_ - k);
  for (int n = 0; n <= order_ - k; ++n) r.coeff_[n] = coeff_[n + k];
  return r;
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries r = TruncSeries::constant(order_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

TruncSeries TruncSeries::scaled(const BiPoly& c) const {
  TruncSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.coeff_[n] = coeff_[n] * c;
  return r;
}

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order_) throw std::invalid_argument("TruncSeries: bad truncation order");
  TruncSeries r(new_order);
  for (int n = 0; n <= new_order; ++n) r.coeff_[n] = coeff_[n];
  return r;
}

TruncSeries gf_log1p(int order) {
  std::vector<BiPoly> c(order + 1);
  for (int n = 1; n <= order; ++n) {
    Rational v = Rational(1) / Rational(static_cast<long>(n));
    if (n % 2 == 0) v = -v;
    c[n] = BiPoly::constant(v);
  }
  return TruncSeries(order, std::move(c));
}

TruncSeries gf_exp_minus_1(int order) {
  std::vector<BiPoly> c(order + 1);
  for (int n = 1; n <= order; ++n) c[n] = BiPoly::constant(Rational(1) / factorial(n));
  return TruncSeries(order, std::move(c));
}

TruncSeries gf_exp_x(int order) {
  std::vector<BiPoly> c(order + 1);
  for (int n = 0; n <= order; ++n) c[n] = BiPoly::monomial(Rational(1) / factorial(n), 0, n);
  return TruncSeries(order, std::move(c));
}

TruncSeries gf_degenerate_exp(int order, bool with_x) {
  std::vector<BiPoly> c(order + 1);
  for (int n = 0; n <= order; ++n) {
    BiPoly ff = degenerate_falling_factorial(n);
    if (!with_x) ff = ff.eval_x(Rational(1));
    c[n] = ff.scaled(Rational(1) / factorial(n));
  }
  return TruncSeries(order, std::move(c));
}

TruncSeries gf_log_lambda(int order) {
  // Coefficient of t^n is (lambda-1)(lambda-2)...(lambda-n+1)/n!, the
  // binomial series of ((1+t)^lambda - 1)/lambda.
  std::vector<BiPoly> c(order + 1);
  BiPoly prod = BiPoly::constant(Rational(1));
  for (int n = 1; n <= order; ++n) {
    c[n] = prod.scaled(Rational(1) / factorial(n));
    prod = prod * (BiPoly::lambda() - BiPoly::constant(Rational(static_cast<long>(n))));
  }
  return TruncSeries(order, std::move(c));
}

TruncSeries gf_binomial_pow_x(int order) {
  std::vector<BiPoly> c(order + 1);
  for (int n = 0; n <= order; ++n) c[n] = falling_factorial(n).scaled(Rational(1) / factorial(n));
  return TruncSeries(order, std::move(c));
}

TruncSeries gf_polyexponential(int k, int order) {
  std::vector<BiPoly> c(order + 1);
  for (int n = 1; n <= order; ++n) {
    Rational v = (Rational(1) / factorial(n - 1)) * Rational(static_cast<long>(n)).pow(-static_cast<long>(k));
    c[n] = BiPoly::constant(v);
  }
  return TruncSeries(order, std::move(c));
}

Rational cube_moment(int r, int m) {
  if (r < 1) throw std::invalid_argument("cube_moment: r must be positive");
  if (m < 0) throw std::invalid_argument("cube_moment: negative power");
  // One variable at a time: integrating (s + y)^j over y in [0,1] turns the
  // j-th moment into sum_l binom(j,l) M_prev(j-l)/(l+1).
  std::vector<Rational> moments(m + 1);
  for (int j = 0; j <= m; ++j) moments[j] = Rational(1) / Rational(static_cast<long>(j + 1));
  for (int vars = 2; vars <= r; ++vars) {
    std::vector<Rational> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      Rational acc(0);
      for (int l = 0; l <= j; ++l) {
        acc += binomial(j, l) * moments[j - l] / Rational(static_cast<long>(l + 1));
      }
      next[j] = acc;
    }
    moments = std::move(next);
  }
  return moments[m];
}

}  // namespace degseq
