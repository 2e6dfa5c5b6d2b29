#include "degseq/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace degseq {

namespace {

// Effective truncation order for a generator that shifts by one power of t.
int effective_order(int nmax, int order_param, int series_order) {
  if (nmax < 0) throw std::invalid_argument("sequence generator: negative nmax");
  int minimum = nmax + order_param + 1;
  if (series_order < 0) return minimum;
  if (series_order < minimum) {
    throw std::invalid_argument("sequence generator: series order " + std::to_string(series_order) +
                                " below required " + std::to_string(minimum));
  }
  return series_order;
}

// term[n] = n! * coeff[n] (exponential convention).
std::vector<BiPoly> exponential_terms(const TruncSeries& s, int nmax) {
  std::vector<BiPoly> terms(nmax + 1);
  for (int n = 0; n <= nmax; ++n) terms[n] = s.coeff(n).scaled(factorial(n));
  return terms;
}

std::vector<BiPoly> ordinary_terms(const TruncSeries& s, int nmax) {
  std::vector<BiPoly> terms(nmax + 1);
  for (int n = 0; n <= nmax; ++n) terms[n] = s.coeff(n);
  return terms;
}

// Exponential (binomial) convolution: c[n] = sum_i binom(n,i) a[i] b[n-i].
std::vector<BiPoly> exp_convolve(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b) {
  std::vector<BiPoly> c(std::min(a.size(), b.size()));
  for (size_t n = 0; n < c.size(); ++n) {
    BiPoly acc;
    for (size_t i = 0; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      acc += (a[i] * b[n - i]).scaled(binomial(n, i));
    }
    c[n] = std::move(acc);
  }
  return c;
}

std::vector<BiPoly> classical_falling_factorials(int nmax) {
  std::vector<BiPoly> ff(nmax + 1);
  for (int n = 0; n <= nmax; ++n) ff[n] = falling_factorial(n);
  return ff;
}

std::vector<BiPoly> degenerate_falling_factorials(int nmax) {
  std::vector<BiPoly> ff(nmax + 1);
  for (int n = 0; n <= nmax; ++n) ff[n] = degenerate_falling_factorial(n);
  return ff;
}

// t/(e^t - 1) ... the classical Bernoulli kernel at the given order.
TruncSeries bernoulli_kernel(int order) { return gf_exp_minus_1(order + 1).shift_div(1).reciprocal(); }

// t/(e_lambda(t) - 1), the degenerate kernel.
TruncSeries degen_bernoulli_kernel(int order) {
  TruncSeries em1 = gf_degenerate_exp(order + 1, false) - TruncSeries::constant(order + 1, Rational(1));
  return em1.shift_div(1).reciprocal();
}

// log(1+t)/t with constant term 1.
TruncSeries daehee_kernel(int order) { return gf_log1p(order + 1).shift_div(1); }

// log_lambda(1+t)/t with constant term 1.
TruncSeries degen_daehee_kernel(int order) { return gf_log_lambda(order + 1).shift_div(1); }

// Classical Bernoulli numbers by the standard triangular recurrence,
// independent of the series reciprocal.
std::vector<BiPoly> bernoulli_numbers_closed(int nmax) {
  std::vector<Rational> b(nmax + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= nmax; ++n) {
    Rational acc(0);
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * b[k];
    b[n] = -acc / Rational(n + 1);
  }
  std::vector<BiPoly> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n) out[n] = BiPoly::constant(b[n]);
  return out;
}

// Carlitz-style recurrence for the degenerate Bernoulli numbers: matching
// coefficients in t = (e_lambda(t) - 1) * sum beta_n t^n/n! gives, for
// j >= 0,
//   beta_j = (delta_{j,0} - sum_{m=2}^{j+1} binom(j+1,m)(1)_{m,lambda} beta_{j+1-m}) / (j+1).
std::vector<BiPoly> degen_bernoulli_numbers_closed(int nmax) {
  std::vector<BiPoly> ones(nmax + 2);
  for (int m = 0; m <= nmax + 1; ++m) ones[m] = degenerate_falling_factorial(m).eval_x(Rational(1));
  std::vector<BiPoly> beta(nmax + 1);
  for (int j = 0; j <= nmax; ++j) {
    BiPoly acc = (j == 0) ? BiPoly::constant(Rational(1)) : BiPoly();
    for (int m = 2; m <= j + 1; ++m) {
      acc -= (ones[m] * beta[j + 1 - m]).scaled(binomial(j + 1, m));
    }
    beta[j] = acc.scaled(Rational(1) / Rational(j + 1));
  }
  return beta;
}

std::vector<BiPoly> power_list(int nmax) {
  std::vector<BiPoly> p(nmax + 1);
  for (int n = 0; n <= nmax; ++n) p[n] = BiPoly::monomial(Rational(1), 0, n);
  return p;
}

long integral_exponent(const Rational& e) {
  if (!e.is_integer()) throw std::invalid_argument("norlund_second: non-integer exponent rejected");
  if (!e.num().fits_slong_p()) throw std::invalid_argument("norlund_second: exponent out of range");
  return e.num().get_si();
}

}  // namespace

SeqConvention family_convention(Family f) {
  return f == Family::norlund_second ? SeqConvention::ordinary : SeqConvention::exponential;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::bernoulli: return "bernoulli";
    case Family::bernoulli_higher: return "bernoulli-higher";
    case Family::daehee: return "daehee";
    case Family::daehee_higher: return "daehee-higher";
    case Family::degen_bernoulli: return "degen-bernoulli";
    case Family::degen_bernoulli_higher: return "degen-bernoulli-higher";
    case Family::degen_daehee: return "degen-daehee";
    case Family::degen_daehee_higher: return "degen-daehee-higher";
    case Family::multiple_degen_daehee: return "multiple-degen-daehee";
    case Family::norlund_second: return "norlund-second";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::bernoulli, Family::bernoulli_higher, Family::daehee, Family::daehee_higher,
                   Family::degen_bernoulli, Family::degen_bernoulli_higher, Family::degen_daehee,
                   Family::degen_daehee_higher, Family::multiple_degen_daehee, Family::norlund_second}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

bool family_is_degenerate(Family f) {
  switch (f) {
    case Family::degen_bernoulli:
    case Family::degen_bernoulli_higher:
    case Family::degen_daehee:
    case Family::degen_daehee_higher:
    case Family::multiple_degen_daehee:
      return true;
    default:
      return false;
  }
}

bool family_takes_r(Family f) {
  return f == Family::bernoulli_higher || f == Family::degen_bernoulli_higher ||
         f == Family::degen_daehee_higher;
}

bool family_takes_k(Family f) { return f == Family::daehee_higher || f == Family::multiple_degen_daehee; }

std::vector<BiPoly> bernoulli_poly(int alpha, int nmax, ArgumentMode argument, int series_order) {
  if (alpha < 1) throw std::invalid_argument("bernoulli_poly: order must be positive");
  int n = effective_order(nmax, alpha, series_order);
  TruncSeries s = bernoulli_kernel(n).pow(alpha);
  if (argument == ArgumentMode::polynomial) s = s * gf_exp_x(n);
  return exponential_terms(s, nmax);
}

std::vector<BiPoly> daehee_poly(int k, int nmax, ArgumentMode argument, int series_order) {
  if (k < 1) throw std::invalid_argument("daehee_poly: order must be positive");
  int n = effective_order(nmax, k, series_order);
  TruncSeries s = daehee_kernel(n).pow(k);
  if (argument == ArgumentMode::polynomial) s = s * gf_binomial_pow_x(n);
  return exponential_terms(s, nmax);
}

std::vector<BiPoly> degen_bernoulli(int r, int nmax, ArgumentMode argument, int series_order) {
  if (r < 1) throw std::invalid_argument("degen_bernoulli: order must be positive");
  int n = effective_order(nmax, r, series_order);
  TruncSeries s = degen_bernoulli_kernel(n).pow(r);
  if (argument == ArgumentMode::polynomial) s = s * gf_degenerate_exp(n, true);
  return exponential_terms(s, nmax);
}

std::vector<BiPoly> degen_daehee(int nmax, ArgumentMode argument, int series_order) {
  int n = effective_order(nmax, 1, series_order);
  TruncSeries s = degen_daehee_kernel(n);
  if (argument == ArgumentMode::polynomial) s = s * gf_binomial_pow_x(n);
  return exponential_terms(s, nmax);
}

std::vector<BiPoly> multiple_degen_daehee(int k, int nmax, int series_order) {
  if (k < 1) throw std::invalid_argument("multiple_degen_daehee: index must be positive");
  int n = effective_order(nmax, 1, series_order);
  // (1/(lambda t)) Ei_k(lambda log(1+t)): every composed coefficient carries
  // lambda^m with m >= 1, so the division by lambda stays inside Q[lambda].
  TruncSeries inner = gf_log1p(n + 1).scaled(BiPoly::lambda());
  TruncSeries composed = gf_polyexponential(k, n + 1).compose(inner);
  std::vector<BiPoly> coeffs(n + 2);
  for (int i = 0; i <= n + 1; ++i) coeffs[i] = composed.coeff(i).div_lambda();
  TruncSeries s = TruncSeries(n + 1, std::move(coeffs)).shift_div(1);
  return exponential_terms(s, nmax);
}

std::vector<BiPoly> higher_degen_daehee(int r, int nmax, ArgumentMode argument, int series_order) {
  if (r < 1) throw std::invalid_argument("higher_degen_daehee: order must be positive");
  int n = effective_order(nmax, r, series_order);
  TruncSeries s = degen_daehee_kernel(n).pow(r);
  if (argument == ArgumentMode::polynomial) s = s * gf_binomial_pow_x(n);
  return exponential_terms(s, nmax);
}

std::vector<BiPoly> norlund_second(const std::optional<Rational>& exponent, int nmax, int series_order) {
  int n = effective_order(nmax, 1, series_order);
  TruncSeries core = daehee_kernel(n);  // log(1+t)/t, the reciprocal of the target kernel
  if (exponent) {
    long e = integral_exponent(*exponent);
    TruncSeries s = e >= 0 ? core.reciprocal().pow(static_cast<unsigned>(e))
                           : core.pow(static_cast<unsigned>(-e));
    return ordinary_terms(s, nmax);
  }

  // Symbolic exponent: b_n^{(x)} is a polynomial of degree <= n in x, so the
  // n+1 integer-exponent columns e = 0..n determine it; the columns up to 2n
  // validate the interpolation.
  int emax = 2 * nmax;
  std::vector<std::vector<BiPoly>> by_exponent(emax + 1);
  TruncSeries rec = core.reciprocal();
  TruncSeries power = TruncSeries::constant(n, Rational(1));
  for (int e = 0; e <= emax; ++e) {
    by_exponent[e] = ordinary_terms(power, nmax);
    if (e < emax) power = power * rec;
  }

  std::vector<BiPoly> out(nmax + 1);
  for (int m = 0; m <= nmax; ++m) {
    BiPoly interp;
    for (int e = 0; e <= m; ++e) {
      // Lagrange basis through the nodes 0..m.
      BiPoly basis = BiPoly::constant(Rational(1));
      Rational denom(1);
      for (int j = 0; j <= m; ++j) {
        if (j == e) continue;
        basis = basis * (BiPoly::x() - BiPoly::constant(Rational(j)));
        denom *= Rational(e - j);
      }
      interp += basis.scaled(by_exponent[e][m].constant_value() / denom);
    }
    for (int e = m + 1; e <= 2 * m; ++e) {
      if (interp.eval_x(Rational(e)) != by_exponent[e][m]) {
        throw std::logic_error("norlund_second: interpolation failed validation at e=" + std::to_string(e));
      }
    }
    out[m] = std::move(interp);
  }
  return out;
}

std::vector<BiPoly> bernoulli_poly_closed(int alpha, int nmax, ArgumentMode argument) {
  if (alpha < 1) throw std::invalid_argument("bernoulli_poly_closed: order must be positive");
  std::vector<BiPoly> acc = bernoulli_numbers_closed(nmax);
  std::vector<BiPoly> base = acc;
  for (int i = 1; i < alpha; ++i) acc = exp_convolve(acc, base);
  if (argument == ArgumentMode::polynomial) acc = exp_convolve(acc, power_list(nmax));
  return acc;
}

std::vector<BiPoly> daehee_poly_closed(int k, int nmax, ArgumentMode argument) {
  if (k < 1) throw std::invalid_argument("daehee_poly_closed: order must be positive");
  StirlingTable s1 = StirlingTable::first(nmax + k);
  std::vector<BiPoly> numbers(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    numbers[n] = s1.at(n + k, k).scaled(Rational(1) / binomial(n + k, n));
  }
  if (argument == ArgumentMode::polynomial) numbers = exp_convolve(numbers, classical_falling_factorials(nmax));
  return numbers;
}

std::vector<BiPoly> degen_bernoulli_closed(int r, int nmax, ArgumentMode argument) {
  if (r < 1) throw std::invalid_argument("degen_bernoulli_closed: order must be positive");
  std::vector<BiPoly> acc = degen_bernoulli_numbers_closed(nmax);
  std::vector<BiPoly> base = acc;
  for (int i = 1; i < r; ++i) acc = exp_convolve(acc, base);
  if (argument == ArgumentMode::polynomial) acc = exp_convolve(acc, degenerate_falling_factorials(nmax));
  return acc;
}

std::vector<BiPoly> degen_daehee_closed(int nmax, ArgumentMode argument) {
  // D_{n,lambda}(x) = (1/(n+1)) sum_{m=0}^{n} (m+1)(x)_{m,lambda} S_{1,lambda}(n+1, m+1);
  // at x = 0 only the m = 0 term survives.
  StirlingTable s1l = StirlingTable::first_degenerate(nmax + 1);
  std::vector<BiPoly> ff = degenerate_falling_factorials(nmax);
  std::vector<BiPoly> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    BiPoly acc;
    int mtop = argument == ArgumentMode::polynomial ? n : 0;
    for (int m = 0; m <= mtop; ++m) {
      acc += (ff[m] * s1l.at(n + 1, m + 1)).scaled(Rational(m + 1));
    }
    out[n] = acc.scaled(Rational(1) / Rational(n + 1));
    if (argument == ArgumentMode::number) out[n] = out[n].eval_x(Rational(0));
  }
  return out;
}

std::vector<BiPoly> multiple_degen_daehee_closed(int k, int nmax) {
  if (k < 1) throw std::invalid_argument("multiple_degen_daehee_closed: index must be positive");
  StirlingTable s1 = StirlingTable::first(nmax + 1);
  std::vector<BiPoly> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    BiPoly acc;
    for (int m = 1; m <= n + 1; ++m) {
      Rational scale = Rational(m).pow(1 - static_cast<long>(k));
      acc += (BiPoly::monomial(scale, m - 1, 0) * s1.at(n + 1, m));
    }
    out[n] = acc.scaled(Rational(1) / Rational(n + 1));
  }
  return out;
}

std::vector<BiPoly> higher_degen_daehee_closed(int r, int nmax, ArgumentMode argument) {
  if (r < 1) throw std::invalid_argument("higher_degen_daehee_closed: order must be positive");
  StirlingTable s1l = StirlingTable::first_degenerate(nmax + r);
  std::vector<BiPoly> numbers(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    numbers[n] = s1l.at(n + r, r).scaled(Rational(1) / binomial(n + r, n));
  }
  if (argument == ArgumentMode::polynomial) numbers = exp_convolve(numbers, classical_falling_factorials(nmax));
  return numbers;
}

std::vector<BiPoly> norlund_second_closed(long exponent, int nmax) {
  std::vector<BiPoly> out(nmax + 1);
  if (exponent == 0) {
    out[0] = BiPoly::constant(Rational(1));
    return out;
  }
  if (exponent > 0) {
    // b_n^{(e)} = (1/n!) sum_l S_1(n,l) * integral of (y_1+...+y_e)^l over
    // the unit cube, from (t/log(1+t))^e = integral of (1+t)^{y_1+...+y_e}.
    StirlingTable s1 = StirlingTable::first(nmax);
    for (int n = 0; n <= nmax; ++n) {
      BiPoly acc;
      for (int l = 0; l <= n; ++l) {
        acc += s1.at(n, l).scaled(cube_moment(static_cast<int>(exponent), l));
      }
      out[n] = acc.scaled(Rational(1) / factorial(n));
    }
    return out;
  }
  // (t/log(1+t))^{-k} = (log(1+t)/t)^k, so b_n^{(-k)} = D_n^{(k)}/n!.
  std::vector<BiPoly> daehee = daehee_poly_closed(static_cast<int>(-exponent), nmax, ArgumentMode::number);
  for (int n = 0; n <= nmax; ++n) out[n] = daehee[n].scaled(Rational(1) / factorial(n));
  return out;
}

std::vector<BiPoly> generate(const SeqFamily& fam, int nmax, int series_order) {
  switch (fam.family) {
    case Family::bernoulli: return bernoulli_poly(1, nmax, fam.argument, series_order);
    case Family::bernoulli_higher: return bernoulli_poly(fam.order, nmax, fam.argument, series_order);
    case Family::daehee: return daehee_poly(1, nmax, fam.argument, series_order);
    case Family::daehee_higher: return daehee_poly(fam.order, nmax, fam.argument, series_order);
    case Family::degen_bernoulli: return degen_bernoulli(1, nmax, fam.argument, series_order);
    case Family::degen_bernoulli_higher: return degen_bernoulli(fam.order, nmax, fam.argument, series_order);
    case Family::degen_daehee: return degen_daehee(nmax, fam.argument, series_order);
    case Family::degen_daehee_higher: return higher_degen_daehee(fam.order, nmax, fam.argument, series_order);
    case Family::multiple_degen_daehee: return multiple_degen_daehee(fam.order, nmax, series_order);
    case Family::norlund_second: return norlund_second(fam.exponent, nmax, series_order);
  }
  throw std::invalid_argument("generate: unknown family");
}

std::vector<BiPoly> generate_closed(const SeqFamily& fam, int nmax) {
  switch (fam.family) {
    case Family::bernoulli: return bernoulli_poly_closed(1, nmax, fam.argument);
    case Family::bernoulli_higher: return bernoulli_poly_closed(fam.order, nmax, fam.argument);
    case Family::daehee: return daehee_poly_closed(1, nmax, fam.argument);
    case Family::daehee_higher: return daehee_poly_closed(fam.order, nmax, fam.argument);
    case Family::degen_bernoulli: return degen_bernoulli_closed(1, nmax, fam.argument);
    case Family::degen_bernoulli_higher: return degen_bernoulli_closed(fam.order, nmax, fam.argument);
    case Family::degen_daehee: return degen_daehee_closed(nmax, fam.argument);
    case Family::degen_daehee_higher: return higher_degen_daehee_closed(fam.order, nmax, fam.argument);
    case Family::multiple_degen_daehee: return multiple_degen_daehee_closed(fam.order, nmax);
    case Family::norlund_second:
      if (!fam.exponent) throw std::invalid_argument("generate_closed: symbolic norlund exponent unsupported");
      return norlund_second_closed(integral_exponent(*fam.exponent), nmax);
  }
  throw std::invalid_argument("generate_closed: unknown family");
}

E6Readings eldesouky_mustafa_rhs(int k, int m) {
  if (k < 1) throw std::invalid_argument("eldesouky_mustafa_rhs: k must be positive");
  if (m < 0) throw std::invalid_argument("eldesouky_mustafa_rhs: negative index");
  std::vector<BiPoly> b = norlund_second_closed(-static_cast<long>(k), m);
  std::vector<BiPoly> binom_z(m + 1);
  for (int j = 0; j <= m; ++j) binom_z[j] = falling_factorial(j).scaled(Rational(1) / factorial(j));

  BiPoly fixed;
  BiPoly varying;
  for (int n = 0; n <= m; ++n) {
    fixed += binom_z[m - n] * b[m];
    varying += binom_z[m - n] * b[n];
  }
  Rational mfact = factorial(m);
  return E6Readings{fixed.scaled(mfact), varying.scaled(mfact)};
}

}  // namespace degseq
