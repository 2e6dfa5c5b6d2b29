#include "degseq/identities.hpp"

#include <future>
#include <stdexcept>
#include <utility>

#include "degseq/sequences.hpp"

namespace degseq {

namespace {

BiPoly lambda_pow(int p) { return BiPoly::monomial(Rational(1), p, 0); }

// sum_{m=0}^{n} values[m] * table(n, m)
BiPoly stirling_transfer(const std::vector<BiPoly>& values, const StirlingTable& table, int n) {
  BiPoly acc;
  for (int m = 0; m <= n; ++m) acc += values[m] * table.at(n, m);
  return acc;
}

// (1/(n+1)) sum_{m=1}^{n+1} lambda^{m-1} m^{1-k} S_1(n+1, m); k = 1 is the
// Theorem 1 right-hand side.
BiPoly s1_lambda_power_sum(const StirlingTable& s1, int n, int k) {
  BiPoly acc;
  for (int m = 1; m <= n + 1; ++m) {
    acc += (lambda_pow(m - 1) * s1.at(n + 1, m)).scaled(Rational(m).pow(1 - static_cast<long>(k)));
  }
  return acc.scaled(Rational(1) / Rational(n + 1));
}

void for_each_composition(int total, int parts, std::vector<int>& buf, const auto& fn) {
  if (parts == 1) {
    buf.push_back(total);
    fn(buf);
    buf.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    buf.push_back(head);
    for_each_composition(total - head, parts - 1, buf, fn);
    buf.pop_back();
  }
}

Rational multinomial(int n, const std::vector<int>& parts) {
  Rational v = factorial(n);
  for (int p : parts) v /= factorial(p);
  return v;
}

int clamp_higher(const CheckConfig& cfg) { return std::min(cfg.nmax_higher, cfg.nmax); }

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::variant_matched: return "variant_matched";
  }
  return "?";
}

CheckReport evaluate_comparisons(std::string id, std::map<std::string, long> params,
                                 const std::vector<Comparison>& comparisons) {
  CheckReport report;
  report.id = std::move(id);
  report.params = std::move(params);
  for (const Comparison& c : comparisons) {
    if (c.lhs != c.rhs) {
      report.status = CheckStatus::fail;
      report.first_failure = FirstFailure{c.point, c.lhs, c.rhs};
      return report;
    }
  }
  report.status = CheckStatus::pass;
  return report;
}

CheckReport check_T1(const CheckConfig& cfg) {
  std::vector<BiPoly> series = degen_daehee(cfg.nmax, ArgumentMode::number, cfg.series_order);
  StirlingTable s1 = StirlingTable::first(cfg.nmax + 1);
  std::vector<Comparison> comps;
  for (int n = 0; n <= cfg.nmax; ++n) {
    comps.push_back({{{"n", n}}, series[n], s1_lambda_power_sum(s1, n, 1)});
  }
  return evaluate_comparisons("T1", {{"nmax", cfg.nmax}}, comps);
}

namespace {

// Shared body of the order-r transfer pair (T2/T3 at r = 1, T9/T10 for
// general r): beta^{(r)} and D^{(r)} exchange through the degenerate
// Stirling triangles, plus the round trip that feeds one transfer into the
// other. `direction_beta` selects which statement the report is about.
CheckReport check_transfer_pair(const std::string& id, const CheckConfig& cfg, int rmax, bool direction_beta) {
  StirlingTable s1l = StirlingTable::first_degenerate(cfg.nmax);
  StirlingTable s2l = StirlingTable::second_degenerate(cfg.nmax);
  std::vector<Comparison> comps;
  for (int r = 1; r <= rmax; ++r) {
    std::vector<BiPoly> daehee_closed =
        r == 1 ? degen_daehee_closed(cfg.nmax, ArgumentMode::polynomial)
               : higher_degen_daehee_closed(r, cfg.nmax, ArgumentMode::polynomial);
    std::vector<BiPoly> beta_closed = degen_bernoulli_closed(r, cfg.nmax, ArgumentMode::polynomial);

    if (direction_beta) {
      // beta^{(r)}_{n,lambda}(x) = sum_m D^{(r)}_{m,lambda}(x) S_{2,lambda}(n,m)
      std::vector<BiPoly> beta_series = degen_bernoulli(r, cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
      for (int n = 0; n <= cfg.nmax; ++n) {
        comps.push_back({{{"n", n}, {"r", r}}, beta_series[n], stirling_transfer(daehee_closed, s2l, n)});
      }
    } else {
      // D^{(r)}_{n,lambda}(x) = sum_m beta^{(r)}_{m,lambda}(x) S_{1,lambda}(n,m)
      std::vector<BiPoly> daehee_series =
          r == 1 ? degen_daehee(cfg.nmax, ArgumentMode::polynomial, cfg.series_order)
                 : higher_degen_daehee(r, cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
      for (int n = 0; n <= cfg.nmax; ++n) {
        comps.push_back({{{"n", n}, {"r", r}}, daehee_series[n], stirling_transfer(beta_closed, s1l, n)});
      }
    }

    // Round trip: transfer D -> beta -> D must reproduce the input exactly.
    std::vector<BiPoly> to_beta(cfg.nmax + 1);
    for (int n = 0; n <= cfg.nmax; ++n) to_beta[n] = stirling_transfer(daehee_closed, s2l, n);
    for (int n = 0; n <= cfg.nmax; ++n) {
      comps.push_back(
          {{{"n", n}, {"r", r}, {"roundtrip", 1}}, stirling_transfer(to_beta, s1l, n), daehee_closed[n]});
    }
  }
  std::map<std::string, long> params{{"nmax", cfg.nmax}};
  if (rmax > 1) params["rmax"] = rmax;
  return evaluate_comparisons(id, std::move(params), comps);
}

}  // namespace

CheckReport check_T2(const CheckConfig& cfg) { return check_transfer_pair("T2", cfg, 1, true); }

CheckReport check_T3(const CheckConfig& cfg) { return check_transfer_pair("T3", cfg, 1, false); }

CheckReport check_T4(const CheckConfig& cfg) {
  std::vector<BiPoly> series = degen_daehee(cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
  std::vector<BiPoly> closed = degen_daehee_closed(cfg.nmax, ArgumentMode::polynomial);
  StirlingTable s1 = StirlingTable::first(cfg.nmax + 1);
  std::vector<Comparison> comps;
  for (int n = 0; n <= cfg.nmax; ++n) {
    comps.push_back({{{"n", n}}, series[n], closed[n]});
  }
  // x = 0 collapses the statement to Theorem 1.
  for (int n = 0; n <= cfg.nmax; ++n) {
    comps.push_back({{{"n", n}, {"x0_reduction", 1}}, closed[n].eval_x(Rational(0)), s1_lambda_power_sum(s1, n, 1)});
  }
  return evaluate_comparisons("T4", {{"nmax", cfg.nmax}}, comps);
}

CheckReport check_T5(const CheckConfig& cfg) {
  std::vector<Comparison> comps;
  std::vector<BiPoly> plain = degen_daehee(cfg.nmax, ArgumentMode::number, cfg.series_order);
  for (int k = 1; k <= cfg.kmax; ++k) {
    std::vector<BiPoly> series = multiple_degen_daehee(k, cfg.nmax, cfg.series_order);
    std::vector<BiPoly> closed = multiple_degen_daehee_closed(k, cfg.nmax);
    for (int n = 0; n <= cfg.nmax; ++n) {
      comps.push_back({{{"n", n}, {"k", k}}, series[n], closed[n]});
    }
    if (k == 1) {
      // The k = 1 family must be the plain degenerate Daehee numbers.
      for (int n = 0; n <= cfg.nmax; ++n) {
        comps.push_back({{{"n", n}, {"k", 1}, {"collapse_to_T1", 1}}, series[n], plain[n]});
      }
    }
  }
  return evaluate_comparisons("T5", {{"nmax", cfg.nmax}, {"kmax", cfg.kmax}}, comps);
}

CheckReport check_T6(const CheckConfig& cfg) {
  StirlingTable s2 = StirlingTable::second(cfg.nmax);
  std::vector<BiPoly> bern = bernoulli_poly_closed(1, cfg.nmax, ArgumentMode::number);
  std::vector<Comparison> comps;
  for (int k = 1; k <= cfg.kmax; ++k) {
    std::vector<BiPoly> dhat = multiple_degen_daehee(k, cfg.nmax, cfg.series_order);
    for (int n = 0; n <= cfg.nmax; ++n) {
      BiPoly lhs = stirling_transfer(dhat, s2, n);
      BiPoly rhs;
      for (int l = 0; l <= n; ++l) {
        Rational scale = binomial(n, l) * Rational(n - l + 1).pow(-static_cast<long>(k));
        rhs += (lambda_pow(n - l) * bern[l]).scaled(scale);
      }
      comps.push_back({{{"n", n}, {"k", k}}, lhs, rhs});
    }
  }
  return evaluate_comparisons("T6", {{"nmax", cfg.nmax}, {"kmax", cfg.kmax}}, comps);
}

CheckReport check_T7(const CheckConfig& cfg) {
  int nmax = clamp_higher(cfg);
  StirlingTable s2 = StirlingTable::second(nmax + 1);

  auto range_sum = [&](const std::vector<BiPoly>& dhat, int n, int mtop) {
    BiPoly acc;
    for (int m = 1; m <= mtop; ++m) {
      acc += (dhat[m - 1] * s2.at(n + 1, m)).scaled(Rational(m));
    }
    return acc.scaled(Rational(1) / Rational(n + 1));
  };

  std::vector<Comparison> printed;
  std::vector<Comparison> derived;
  for (int k = 1; k <= cfg.kmax; ++k) {
    std::vector<BiPoly> dhat = multiple_degen_daehee(k, nmax, cfg.series_order);
    for (int n = 0; n <= nmax; ++n) {
      BiPoly target = lambda_pow(n).scaled(Rational(n + 1).pow(-static_cast<long>(k)));
      std::map<std::string, long> point{{"n", n}, {"k", k}};
      printed.push_back({point, range_sum(dhat, n, n), target});
      derived.push_back({point, range_sum(dhat, n, n + 1), target});
    }
  }

  CheckReport printed_rep = evaluate_comparisons("T7", {}, printed);
  CheckReport derived_rep = evaluate_comparisons("T7", {}, derived);

  CheckReport report;
  report.id = "T7";
  report.params = {{"nmax", nmax}, {"kmax", cfg.kmax}};
  bool printed_ok = printed_rep.status == CheckStatus::pass;
  bool derived_ok = derived_rep.status == CheckStatus::pass;
  if (printed_ok != derived_ok) {
    report.status = CheckStatus::variant_matched;
    const CheckReport& bad = printed_ok ? derived_rep : printed_rep;
    std::string good_name = printed_ok ? "m = 1..n (printed statement)" : "m = 1..n+1 (derivation range)";
    std::string bad_name = printed_ok ? "m = 1..n+1 (derivation range)" : "m = 1..n (printed statement)";
    std::string where = "n=" + std::to_string(bad.first_failure->point.at("n")) +
                        ",k=" + std::to_string(bad.first_failure->point.at("k"));
    report.variant = "summation range " + good_name + " reproduces λ^n/(n+1)^k on the full grid; " + bad_name +
                     " first fails at " + where;
  } else {
    report.status = CheckStatus::fail;
    report.variant = printed_ok ? "both summation ranges match; probe cannot discriminate"
                                : "neither summation range matches";
    if (!derived_ok) report.first_failure = derived_rep.first_failure;
  }
  return report;
}

CheckReport check_T8(const CheckConfig& cfg) {
  int nmax = clamp_higher(cfg);
  std::vector<Comparison> comps;
  for (int r = 1; r <= cfg.rmax; ++r) {
    std::vector<BiPoly> series = higher_degen_daehee(r, nmax, ArgumentMode::number, cfg.series_order);
    std::vector<BiPoly> closed = higher_degen_daehee_closed(r, nmax, ArgumentMode::number);
    for (int n = 0; n <= nmax; ++n) {
      comps.push_back({{{"n", n}, {"r", r}}, series[n], closed[n]});
    }
  }
  return evaluate_comparisons("T8", {{"nmax", nmax}, {"rmax", cfg.rmax}}, comps);
}

CheckReport check_T9(const CheckConfig& cfg) { return check_transfer_pair("T9", cfg, cfg.rmax, true); }

CheckReport check_T10(const CheckConfig& cfg) { return check_transfer_pair("T10", cfg, cfg.rmax, false); }

CheckReport check_T11(const CheckConfig& cfg) {
  int nmax = clamp_higher(cfg);
  StirlingTable s1 = StirlingTable::first(nmax + cfg.rmax);
  std::vector<BiPoly> daehee = degen_daehee_closed(nmax, ArgumentMode::number);
  std::vector<Comparison> comps;
  for (int r = 1; r <= cfg.rmax; ++r) {
    std::vector<BiPoly> series = higher_degen_daehee(r, nmax, ArgumentMode::number, cfg.series_order);
    for (int n = 0; n <= nmax; ++n) {
      // (a) multinomial convolution over compositions of n into r parts.
      BiPoly conv;
      std::vector<int> buf;
      for_each_composition(n, r, buf, [&](const std::vector<int>& parts) {
        BiPoly prod = BiPoly::constant(multinomial(n, parts));
        for (int l : parts) prod = prod * daehee[l];
        conv += prod;
      });
      comps.push_back({{{"n", n}, {"r", r}, {"form", 1}}, series[n], conv});

      // (b) lambda expansion through cube moments and S_1(n+r, m+r).
      BiPoly moments;
      for (int m = 0; m <= n; ++m) {
        Rational scale = cube_moment(r, m) * binomial(m + r, r) / binomial(n + r, r);
        moments += (lambda_pow(m) * s1.at(n + r, m + r)).scaled(scale);
      }
      comps.push_back({{{"n", n}, {"r", r}, {"form", 2}}, series[n], moments});
    }
  }
  CheckReport report =
      evaluate_comparisons("T11", {{"nmax", nmax}, {"rmax", cfg.rmax}}, comps);
  if (report.status == CheckStatus::pass) {
    report.variant =
        "checked with corrected indices: the convolution sums over l_1+...+l_r = n, and the moment form reads "
        "(l_r+1) for the printed (1_r+1)";
  }
  return report;
}

CheckReport check_C2prime(const CheckConfig& cfg) {
  Rational zero(0);
  std::vector<Comparison> comps;

  // Degenerate families specialize at lambda = 0 to the classical ones.
  std::vector<BiPoly> beta_series = degen_bernoulli(1, cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
  std::vector<BiPoly> bern_closed = bernoulli_poly_closed(1, cfg.nmax, ArgumentMode::polynomial);
  std::vector<BiPoly> ddaehee_series = degen_daehee(cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
  std::vector<BiPoly> daehee_closed = daehee_poly_closed(1, cfg.nmax, ArgumentMode::polynomial);
  for (int n = 0; n <= cfg.nmax; ++n) {
    comps.push_back({{{"n", n}, {"limit", 1}}, beta_series[n].eval_lambda(zero), bern_closed[n]});
    comps.push_back({{{"n", n}, {"limit", 2}}, ddaehee_series[n].eval_lambda(zero), daehee_closed[n]});
  }

  // Classical corollaries of T2/T3: B_n(x) = sum D_m(x) S_2(n,m) and
  // D_n(x) = sum B_m(x) S_1(n,m).
  StirlingTable s1 = StirlingTable::first(cfg.nmax);
  StirlingTable s2 = StirlingTable::second(cfg.nmax);
  std::vector<BiPoly> bern_series = bernoulli_poly(1, cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
  std::vector<BiPoly> daehee_series = daehee_poly(1, cfg.nmax, ArgumentMode::polynomial, cfg.series_order);
  for (int n = 0; n <= cfg.nmax; ++n) {
    comps.push_back({{{"n", n}, {"corollary", 2}}, bern_series[n], stirling_transfer(daehee_closed, s2, n)});
    comps.push_back({{{"n", n}, {"corollary", 3}}, daehee_series[n], stirling_transfer(bern_closed, s1, n)});
  }

  // Classical Daehee numbers have the closed form (-1)^n n!/(n+1).
  std::vector<BiPoly> daehee_numbers = daehee_poly(1, cfg.nmax, ArgumentMode::number, cfg.series_order);
  for (int n = 0; n <= cfg.nmax; ++n) {
    Rational expect = factorial(n) / Rational(n + 1);
    if (n % 2 == 1) expect = -expect;
    comps.push_back({{{"n", n}, {"closed_form", 1}}, daehee_numbers[n], BiPoly::constant(expect)});
  }

  // Classical corollary of T4 at lambda = 0, where (x)_{m,lambda} becomes
  // x^m: D_n(x) = (1/(n+1)) sum (m+1) x^m S_1(n+1,m+1).
  StirlingTable s1w = StirlingTable::first(cfg.nmax + 1);
  for (int n = 0; n <= cfg.nmax; ++n) {
    BiPoly acc;
    for (int m = 0; m <= n; ++m) {
      acc += (BiPoly::monomial(Rational(1), 0, m) * s1w.at(n + 1, m + 1)).scaled(Rational(m + 1));
    }
    comps.push_back(
        {{{"n", n}, {"corollary", 4}}, daehee_series[n], acc.scaled(Rational(1) / Rational(n + 1))});
  }

  return evaluate_comparisons("C2'", {{"nmax", cfg.nmax}}, comps);
}

CheckReport check_E6(const CheckConfig& cfg) {
  int mmax = std::min(cfg.e6_mmax, cfg.nmax);
  std::vector<Comparison> printed;
  std::vector<Comparison> varying;
  for (int k = 1; k <= cfg.e6_kmax; ++k) {
    std::vector<BiPoly> target = daehee_poly(k, mmax, ArgumentMode::polynomial, cfg.series_order);
    for (int m = 0; m <= mmax; ++m) {
      E6Readings readings = eldesouky_mustafa_rhs(k, m);
      std::map<std::string, long> point{{"m", m}, {"k", k}};
      printed.push_back({point, target[m], readings.printed_fixed_index});
      varying.push_back({point, target[m], readings.varying_index});
    }
  }

  CheckReport printed_rep = evaluate_comparisons("E6", {}, printed);
  CheckReport varying_rep = evaluate_comparisons("E6", {}, varying);

  CheckReport report;
  report.id = "E6";
  report.params = {{"mmax", mmax}, {"kmax", cfg.e6_kmax}};
  bool printed_ok = printed_rep.status == CheckStatus::pass;
  bool varying_ok = varying_rep.status == CheckStatus::pass;
  if (printed_ok != varying_ok) {
    report.status = CheckStatus::variant_matched;
    const CheckReport& bad = printed_ok ? varying_rep : printed_rep;
    std::string where = "k=" + std::to_string(bad.first_failure->point.at("k")) +
                        ",m=" + std::to_string(bad.first_failure->point.at("m"));
    if (varying_ok) {
      report.variant =
          "reading (b) with b_n^{(-k)} varying over the summation index matches D_m^{(k)}(z) on the full grid; "
          "the printed reading (a) with b_m^{(-k)} fixed first fails at " + where;
    } else {
      report.variant = "the printed fixed-index reading (a) matches; the varying-index reading (b) first fails at " +
                       where;
    }
  } else if (printed_ok && varying_ok) {
    report.status = CheckStatus::variant_matched;
    report.variant = "both readings agree on this grid; enlarge the grid to discriminate";
  } else {
    report.status = CheckStatus::fail;
    report.variant = "neither index reading matches D_m^{(k)}(z)";
    report.first_failure = varying_rep.first_failure;
  }
  return report;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {"T1", "T2", "T3", "T4",  "T5",  "T6", "T7",
                                               "T8", "T9", "T10", "T11", "C2'", "E6"};
  return ids;
}

CheckReport run_check(const std::string& id, const CheckConfig& cfg) {
  if (id == "T1") return check_T1(cfg);
  if (id == "T2") return check_T2(cfg);
  if (id == "T3") return check_T3(cfg);
  if (id == "T4") return check_T4(cfg);
  if (id == "T5") return check_T5(cfg);
  if (id == "T6") return check_T6(cfg);
  if (id == "T7") return check_T7(cfg);
  if (id == "T8") return check_T8(cfg);
  if (id == "T9") return check_T9(cfg);
  if (id == "T10") return check_T10(cfg);
  if (id == "T11") return check_T11(cfg);
  if (id == "C2'" || id == "C2") return check_C2prime(cfg);
  if (id == "E6") return check_E6(cfg);
  throw std::invalid_argument("run_check: unknown identity id \"" + id + "\"");
}

namespace {

void validate_config(const CheckConfig& cfg) {
  if (cfg.nmax < 0 || cfg.nmax > 12) throw std::invalid_argument("CheckConfig: nmax must be in 0..12");
  if (cfg.rmax < 1 || cfg.rmax > 4) throw std::invalid_argument("CheckConfig: rmax must be in 1..4");
  if (cfg.kmax < 1 || cfg.kmax > 4) throw std::invalid_argument("CheckConfig: kmax must be in 1..4");
  if (cfg.series_order >= 0 && cfg.series_order < cfg.nmax + cfg.rmax + 1) {
    throw std::invalid_argument("CheckConfig: series order below nmax + rmax + 1");
  }
}

}  // namespace

std::vector<CheckReport> run_all(const CheckConfig& cfg) {
  validate_config(cfg);
  const auto& ids = identity_ids();
  std::vector<std::future<CheckReport>> futures;
  futures.reserve(ids.size());
  for (const std::string& id : ids) {
    futures.push_back(std::async(std::launch::async, [&cfg, id] { return run_check(id, cfg); }));
  }
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.ok()) return false;
  }
  return true;
}

}  // namespace degseq
