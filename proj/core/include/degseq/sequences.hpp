#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/series.hpp"
#include "degseq/stirling.hpp"

namespace degseq {

enum class Family {
  bernoulli,
  bernoulli_higher,
  daehee,
  daehee_higher,
  degen_bernoulli,
  degen_bernoulli_higher,
  degen_daehee,
  degen_daehee_higher,
  multiple_degen_daehee,
  norlund_second,
};

enum class ArgumentMode { number, polynomial };

// A sequence family instance: which family, its order r (or index k), and
// whether the x argument is fixed at 0 (number) or kept symbolic
// (polynomial). norlund_second instead carries an exponent: an integer
// rational, or nullopt for the symbolic-x exponent.
struct SeqFamily {
  Family family = Family::daehee;
  int order = 1;
  ArgumentMode argument = ArgumentMode::number;
  std::optional<Rational> exponent;
};

SeqConvention family_convention(Family f);  // ordinary for norlund_second only
std::string family_name(Family f);          // kebab-case CLI/JSON name
std::optional<Family> family_from_name(std::string_view name);
bool family_is_degenerate(Family f);
bool family_takes_r(Family f);
bool family_takes_k(Family f);

// ---------------------------------------------------------------------------
// Series-expansion paths. Each generator expands the family's generating
// function with the truncated-series engine and returns the values
// normalized to sequence terms (index n = term n). series_order < 0 picks a
// sufficient default; an explicit override below nmax + order + 1 is
// rejected.
// ---------------------------------------------------------------------------
std::vector<BiPoly> bernoulli_poly(int alpha, int nmax, ArgumentMode argument, int series_order = -1);
std::vector<BiPoly> daehee_poly(int k, int nmax, ArgumentMode argument, int series_order = -1);
std::vector<BiPoly> degen_bernoulli(int r, int nmax, ArgumentMode argument, int series_order = -1);
std::vector<BiPoly> degen_daehee(int nmax, ArgumentMode argument, int series_order = -1);
std::vector<BiPoly> multiple_degen_daehee(int k, int nmax, int series_order = -1);
std::vector<BiPoly> higher_degen_daehee(int r, int nmax, ArgumentMode argument, int series_order = -1);
// Nörlund numbers of the second kind, ordinary convention. Integer exponents
// are computed by direct powering; the symbolic exponent (nullopt) by
// interpolating the integer-exponent values (degree <= n in x), validated at
// 2n+1 points. Non-integer rational exponents are rejected.
std::vector<BiPoly> norlund_second(const std::optional<Rational>& exponent, int nmax, int series_order = -1);

// ---------------------------------------------------------------------------
// Closed-form / recurrence paths. These share nothing with the series engine
// above beyond the scalar and polynomial layers, so agreement between the
// two paths is evidence rather than tautology.
// ---------------------------------------------------------------------------
std::vector<BiPoly> bernoulli_poly_closed(int alpha, int nmax, ArgumentMode argument);
std::vector<BiPoly> daehee_poly_closed(int k, int nmax, ArgumentMode argument);
std::vector<BiPoly> degen_bernoulli_closed(int r, int nmax, ArgumentMode argument);
std::vector<BiPoly> degen_daehee_closed(int nmax, ArgumentMode argument);
std::vector<BiPoly> multiple_degen_daehee_closed(int k, int nmax);
std::vector<BiPoly> higher_degen_daehee_closed(int r, int nmax, ArgumentMode argument);
std::vector<BiPoly> norlund_second_closed(long exponent, int nmax);

// Dispatch through a SeqFamily descriptor.
std::vector<BiPoly> generate(const SeqFamily& fam, int nmax, int series_order = -1);
std::vector<BiPoly> generate_closed(const SeqFamily& fam, int nmax);

// The two index readings of the EI-Desouky–Mustafa style formula
// m! sum_{n=0}^{m} binom(z, m-n) b^{(-k)}: as printed the Nörlund factor is
// pinned to index m; the alternative lets it vary with n. Both are returned
// (z symbolic, carried by the x variable) so a probe can decide which one
// reproduces the order-k Daehee polynomial.
struct E6Readings {
  BiPoly printed_fixed_index;
  BiPoly varying_index;
};
E6Readings eldesouky_mustafa_rhs(int k, int m);

}  // namespace degseq
