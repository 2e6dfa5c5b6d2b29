#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degseq/bipoly.hpp"

namespace degseq {

enum class CheckStatus { pass, fail, variant_matched };

struct FirstFailure {
  std::map<std::string, long> point;  // the (n, r, k, ...) values at the first mismatch
  BiPoly lhs;
  BiPoly rhs;
};

// Outcome of one identity check over a parameter grid. variant_matched is
// reserved for the checks that probe a documented ambiguity in the source
// formulas (the T7 summation range and the E6 index); a pass may still carry
// a variant note.
struct CheckReport {
  std::string id;
  std::map<std::string, long> params;  // grid bounds, e.g. {"nmax": 12, "kmax": 4}
  CheckStatus status = CheckStatus::pass;
  std::optional<FirstFailure> first_failure;
  std::optional<std::string> variant;

  bool ok() const { return status != CheckStatus::fail; }
};

std::string check_status_name(CheckStatus s);

// Grid bounds for the harness. The wider checks (T1..T6, T9, T10 and the
// classical-limit corollaries) run to nmax; the order-r probes (T7, T8, T11)
// run to nmax_higher; the E6 probe has its own small grid.
struct CheckConfig {
  int nmax = 12;
  int rmax = 4;
  int kmax = 4;
  int nmax_higher = 10;
  int e6_kmax = 3;
  int e6_mmax = 8;
  int series_order = -1;  // -1: let each generator pick; otherwise >= nmax + rmax + 1
};

// One lhs/rhs sample of an identity at a concrete grid point.
struct Comparison {
  std::map<std::string, long> point;
  BiPoly lhs;
  BiPoly rhs;
};

// Folds samples into a report: pass when every pair agrees exactly
// (canonical structural equality, no tolerance), otherwise fail with the
// first offending point.
CheckReport evaluate_comparisons(std::string id, std::map<std::string, long> params,
                                 const std::vector<Comparison>& comparisons);

CheckReport check_T1(const CheckConfig& cfg);
CheckReport check_T2(const CheckConfig& cfg);
CheckReport check_T3(const CheckConfig& cfg);
CheckReport check_T4(const CheckConfig& cfg);
CheckReport check_T5(const CheckConfig& cfg);
CheckReport check_T6(const CheckConfig& cfg);
CheckReport check_T7(const CheckConfig& cfg);
CheckReport check_T8(const CheckConfig& cfg);
CheckReport check_T9(const CheckConfig& cfg);
CheckReport check_T10(const CheckConfig& cfg);
CheckReport check_T11(const CheckConfig& cfg);
// Classical limits at lambda = 0 of T1-T4 and of the family values.
CheckReport check_C2prime(const CheckConfig& cfg);
CheckReport check_E6(const CheckConfig& cfg);

// All identity ids in the order run_all reports them.
const std::vector<std::string>& identity_ids();

// Runs a single check by id ("T1".."T11", "C2'", "E6").
CheckReport run_check(const std::string& id, const CheckConfig& cfg);

// Runs every registered check concurrently and returns the reports in the
// identity_ids() order. Individual failures are data, not errors.
std::vector<CheckReport> run_all(const CheckConfig& cfg);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace degseq
