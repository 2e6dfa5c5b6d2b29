#include "degseq/stirling.hpp"

#include <stdexcept>

namespace degseq {

namespace {

const BiPoly kZero{};

// Shared triangle builder: next(n, k) = prev(n, k-1) + weight(n, k) * prev(n, k).
template <typename WeightFn>
std::vector<std::vector<BiPoly>> build_triangle(int nmax, WeightFn weight) {
  std::vector<std::vector<BiPoly>> t(nmax + 1);
  t[0] = {BiPoly::constant(Rational(1))};
  for (int n = 0; n < nmax; ++n) {
    t[n + 1].assign(n + 2, BiPoly());
    for (int k = 0; k <= n + 1; ++k) {
      BiPoly v;
      if (k >= 1) v += t[n][k - 1];
      if (k <= n) v += weight(n, k) * t[n][k];
      t[n + 1][k] = std::move(v);
    }
  }
  return t;
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, int nmax) : kind_(kind), nmax_(nmax) {
  if (nmax < 0) throw std::invalid_argument("StirlingTable: negative nmax");
  switch (kind) {
    case StirlingKind::first:
      // S1(n+1,k) = S1(n,k-1) - n*S1(n,k)
      entries_ = build_triangle(nmax, [](int n, int) { return BiPoly::constant(Rational(-n)); });
      break;
    case StirlingKind::second:
      // S2(n+1,k) = S2(n,k-1) + k*S2(n,k)
      entries_ = build_triangle(nmax, [](int, int k) { return BiPoly::constant(Rational(k)); });
      break;
    case StirlingKind::second_degenerate:
      // S2l(n+1,k) = S2l(n,k-1) + (k - n*lambda)*S2l(n,k), from
      // (x)_{n+1,lambda} = (x - n*lambda)(x)_{n,lambda} and
      // x*(x)_k = (x)_{k+1} + k*(x)_k.
      entries_ = build_triangle(nmax, [](int n, int k) {
        return BiPoly::constant(Rational(k)) - BiPoly::lambda().scaled(Rational(n));
      });
      break;
    case StirlingKind::first_degenerate:
      // S1l(n+1,k) = S1l(n,k-1) + (k*lambda - n)*S1l(n,k), from
      // (x)_{n+1} = (x - n)(x)_n and
      // x*(x)_{k,lambda} = (x)_{k+1,lambda} + k*lambda*(x)_{k,lambda}.
      entries_ = build_triangle(nmax, [](int n, int k) {
        return BiPoly::lambda().scaled(Rational(k)) - BiPoly::constant(Rational(n));
      });
      break;
  }
}

StirlingTable StirlingTable::first(int nmax) { return StirlingTable(StirlingKind::first, nmax); }

StirlingTable StirlingTable::second(int nmax) { return StirlingTable(StirlingKind::second, nmax); }

StirlingTable StirlingTable::first_degenerate(int nmax) {
  return StirlingTable(StirlingKind::first_degenerate, nmax);
}

StirlingTable StirlingTable::second_degenerate(int nmax) {
  return StirlingTable(StirlingKind::second_degenerate, nmax);
}

const BiPoly& StirlingTable::at(int n, int l) const {
  if (n < 0 || n > nmax_ || l < 0) throw std::out_of_range("StirlingTable: index out of range");
  if (l > n) return kZero;
  return entries_[n][l];
}

std::string stirling_kind_name(StirlingKind kind) {
  switch (kind) {
    case StirlingKind::first: return "first";
    case StirlingKind::second: return "second";
    case StirlingKind::first_degenerate: return "first-degenerate";
    case StirlingKind::second_degenerate: return "second-degenerate";
  }
  return "?";
}

}  // namespace degseq
