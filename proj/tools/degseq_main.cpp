// degseq: exact generating-function toolkit for Daehee/Bernoulli-type
// sequence families over Q[lambda, x].
//
//   degseq gen    --family <name> --nmax N [...]   emit a sequence table
//   degseq check  --all | --id <ID> [...]          run the identity suite
//   degseq limit  --family <name> --nmax N [...]   compare lambda=0 against the classical family
//
// Exit codes: 0 success, 1 identity/limit failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/identities.hpp"
#include "degseq/json_io.hpp"
#include "degseq/sequences.hpp"

namespace {

using degseq::ArgumentMode;
using degseq::BiPoly;
using degseq::Family;
using degseq::Rational;
using degseq::SeqFamily;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

Family parse_family(const std::string& name) {
  auto f = degseq::family_from_name(name);
  if (!f) throw UsageError("unknown family \"" + name + "\"");
  return *f;
}

std::string csv_cell(const BiPoly& value) {
  if (!value.is_constant()) {
    throw UsageError("csv output needs constant values; specialize with --lambda/--x (got " + value.to_string() +
                     ")");
  }
  return value.constant_value().to_string();
}

struct GenOptions {
  std::string family;
  int nmax = 0;
  int r = 1;
  int k = 1;
  bool r_given = false;
  bool k_given = false;
  std::string x;
  std::string lambda;
  std::string format = "json";
  std::string out;
  int series_order = -1;
};

// Resolves --r/--k against what the family accepts and returns the
// populated descriptor.
SeqFamily resolve_family(Family f, const GenOptions& o) {
  SeqFamily fam;
  fam.family = f;
  if (degseq::family_takes_r(f)) {
    if (o.k_given) throw UsageError("family " + degseq::family_name(f) + " takes --r, not --k");
    fam.order = o.r;
  } else if (degseq::family_takes_k(f)) {
    if (o.r_given) throw UsageError("family " + degseq::family_name(f) + " takes --k, not --r");
    fam.order = o.k;
  } else {
    if (o.r_given || o.k_given) throw UsageError("family " + degseq::family_name(f) + " has no order parameter");
    fam.order = 1;
  }
  if (fam.order < 1) throw UsageError("order must be >= 1");
  return fam;
}

int run_gen(const GenOptions& o) {
  Family f = parse_family(o.family);
  SeqFamily fam = resolve_family(f, o);

  std::optional<Rational> x_value;
  bool x_symbolic = false;
  if (!o.x.empty()) {
    if (o.x == "x") {
      x_symbolic = true;
    } else {
      x_value = Rational::parse(o.x);
    }
  }

  if (f == Family::norlund_second) {
    fam.exponent = x_value;  // nullopt means the symbolic exponent
    fam.argument = x_value ? ArgumentMode::number : ArgumentMode::polynomial;
    x_value.reset();
  } else if (f == Family::multiple_degen_daehee) {
    if (x_symbolic || x_value) throw UsageError("family multiple-degen-daehee is a number family; --x does not apply");
    fam.argument = ArgumentMode::number;
  } else {
    fam.argument = (x_symbolic || x_value) ? ArgumentMode::polynomial : ArgumentMode::number;
  }

  std::optional<Rational> lambda_value;
  if (!o.lambda.empty()) {
    if (!degseq::family_is_degenerate(f)) {
      throw UsageError("family " + degseq::family_name(f) + " has no λ parameter; --lambda does not apply");
    }
    lambda_value = Rational::parse(o.lambda);
  }

  std::vector<BiPoly> terms = degseq::generate(fam, o.nmax, o.series_order);
  if (x_value && f != Family::norlund_second) {
    for (auto& t : terms) t = t.eval_x(*x_value);
    fam.argument = ArgumentMode::number;
  }
  if (lambda_value) {
    for (auto& t : terms) t = t.eval_lambda(*lambda_value);
  }

  if (o.format == "json") {
    write_output(degseq::sequence_to_json(fam, terms), o.out);
  } else if (o.format == "csv") {
    std::string csv = "n,value\n";
    for (size_t n = 0; n < terms.size(); ++n) {
      csv += std::to_string(n) + "," + csv_cell(terms[n]) + "\n";
    }
    write_output(csv, o.out);
  } else {
    throw UsageError("unknown format \"" + o.format + "\"");
  }
  return 0;
}

struct CheckOptions {
  bool all = false;
  std::string id;
  int nmax = 12;
  int rmax = 4;
  int kmax = 4;
  std::string format = "json";
  std::string out;
  int series_order = -1;
};

int run_check_cmd(const CheckOptions& o) {
  if (o.all == !o.id.empty()) throw UsageError("check needs exactly one of --all or --id");
  if (o.format != "json") throw UsageError("check reports are json-only");

  degseq::CheckConfig cfg;
  cfg.nmax = o.nmax;
  cfg.rmax = o.rmax;
  cfg.kmax = o.kmax;
  cfg.series_order = o.series_order;

  std::vector<degseq::CheckReport> reports;
  try {
    if (o.all) {
      reports = degseq::run_all(cfg);
    } else {
      reports.push_back(degseq::run_check(o.id, cfg));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  write_output(degseq::reports_to_json(reports), o.out);
  return degseq::all_passed(reports) ? 0 : 1;
}

struct LimitOptions {
  std::string family;
  int nmax = 0;
  int r = 1;
  int k = 1;
  bool r_given = false;
  bool k_given = false;
  std::string x;
  std::string format = "json";
  std::string out;
  int series_order = -1;
};

int run_limit(const LimitOptions& o) {
  Family f = parse_family(o.family);
  if (!degseq::family_is_degenerate(f)) {
    throw UsageError("family " + degseq::family_name(f) + " has no classical counterpart to compare against");
  }
  GenOptions go;
  go.r = o.r;
  go.k = o.k;
  go.r_given = o.r_given;
  go.k_given = o.k_given;
  SeqFamily fam = resolve_family(f, go);

  std::optional<Rational> x_value;
  bool x_symbolic = false;
  if (!o.x.empty()) {
    if (f == Family::multiple_degen_daehee) throw UsageError("family multiple-degen-daehee is a number family");
    if (o.x == "x") {
      x_symbolic = true;
    } else {
      x_value = Rational::parse(o.x);
    }
  }
  fam.argument = (x_symbolic || x_value) ? ArgumentMode::polynomial : ArgumentMode::number;

  // The classical counterpart at lambda = 0. Every multiple degenerate
  // Daehee family collapses to the plain Daehee numbers in that limit.
  SeqFamily classical = fam;
  switch (f) {
    case Family::degen_bernoulli: classical.family = Family::bernoulli; break;
    case Family::degen_bernoulli_higher: classical.family = Family::bernoulli_higher; break;
    case Family::degen_daehee: classical.family = Family::daehee; break;
    case Family::degen_daehee_higher: classical.family = Family::daehee_higher; break;
    case Family::multiple_degen_daehee:
      classical.family = Family::daehee;
      classical.order = 1;
      classical.argument = ArgumentMode::number;
      break;
    default: throw UsageError("unsupported limit family");
  }

  std::vector<BiPoly> degenerate = degseq::generate(fam, o.nmax, o.series_order);
  std::vector<BiPoly> classic = degseq::generate_closed(classical, o.nmax);
  Rational zero(0);
  bool all_equal = true;
  std::vector<std::pair<BiPoly, BiPoly>> rows(degenerate.size());
  for (size_t n = 0; n < degenerate.size(); ++n) {
    BiPoly lhs = degenerate[n].eval_lambda(zero);
    BiPoly rhs = classic[n];
    if (x_value) {
      lhs = lhs.eval_x(*x_value);
      rhs = rhs.eval_x(*x_value);
    }
    all_equal = all_equal && lhs == rhs;
    rows[n] = {std::move(lhs), std::move(rhs)};
  }

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = degseq::family_name(f);
    j["classical"] = degseq::family_name(classical.family);
    j["order"] = fam.order;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (size_t n = 0; n < rows.size(); ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["degenerate_at_lambda0"] = rows[n].first.to_string();
      row["classical"] = rows[n].second.to_string();
      row["equal"] = rows[n].first == rows[n].second;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    j["all_equal"] = all_equal;
    write_output(j.dump(2) + "\n", o.out);
  } else if (o.format == "csv") {
    std::string csv = "n,degenerate_at_lambda0,classical,equal\n";
    for (size_t n = 0; n < rows.size(); ++n) {
      csv += std::to_string(n) + "," + csv_cell(rows[n].first) + "," + csv_cell(rows[n].second) + "," +
             (rows[n].first == rows[n].second ? "true" : "false") + "\n";
    }
    write_output(csv, o.out);
  } else {
    throw UsageError("unknown format \"" + o.format + "\"");
  }
  return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sequence tables and identity checks for degenerate Daehee-type families"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "emit a sequence family table (json or csv)");
  gen->add_option("--family", gen_opts.family, "family name, e.g. degen-daehee")->required();
  gen->add_option("--nmax", gen_opts.nmax, "highest index n")->required()->check(CLI::NonNegativeNumber);
  auto* gen_r = gen->add_option("--r", gen_opts.r, "order r for the *-higher families");
  auto* gen_k = gen->add_option("--k", gen_opts.k, "index k for daehee-higher / multiple-degen-daehee");
  gen->add_option("--x", gen_opts.x, "substitute x = p/q, or \"x\" to keep it symbolic (default 0; exponent for norlund-second)");
  gen->add_option("--lambda", gen_opts.lambda, "substitute λ = p/q (degenerate families only)");
  gen->add_option("--format", gen_opts.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("--out", gen_opts.out, "write to file instead of stdout");
  gen->add_option("--series-order", gen_opts.series_order, "truncation-order override (>= nmax + order + 1)");

  CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "verify the identity suite, report json");
  check->add_flag("--all", check_opts.all, "run every identity");
  check->add_option("--id", check_opts.id, "single identity id: T1..T11, C2', E6");
  check->add_option("--nmax", check_opts.nmax, "grid bound for n (default 12)")->check(CLI::NonNegativeNumber);
  check->add_option("--r,--rmax", check_opts.rmax, "grid bound for the order r (default 4)");
  check->add_option("--k,--kmax", check_opts.kmax, "grid bound for the index k (default 4)");
  check->add_option("--format", check_opts.format, "json only")->check(CLI::IsMember({"json"}));
  check->add_option("--out", check_opts.out, "write to file instead of stdout");
  check->add_option("--series-order", check_opts.series_order, "truncation-order override");

  LimitOptions limit_opts;
  CLI::App* limit = app.add_subcommand("limit", "compare a degenerate family at λ=0 with its classical counterpart");
  limit->add_option("--family", limit_opts.family, "degenerate family name")->required();
  limit->add_option("--nmax", limit_opts.nmax, "highest index n")->required()->check(CLI::NonNegativeNumber);
  auto* limit_r = limit->add_option("--r", limit_opts.r, "order r");
  auto* limit_k = limit->add_option("--k", limit_opts.k, "index k");
  limit->add_option("--x", limit_opts.x, "substitute x = p/q, or \"x\" for the symbolic polynomial comparison");
  limit->add_option("--format", limit_opts.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  limit->add_option("--out", limit_opts.out, "write to file instead of stdout");
  limit->add_option("--series-order", limit_opts.series_order, "truncation-order override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  gen_opts.r_given = gen_r->count() > 0;
  gen_opts.k_given = gen_k->count() > 0;
  limit_opts.r_given = limit_r->count() > 0;
  limit_opts.k_given = limit_k->count() > 0;

  try {
    if (gen->parsed()) return run_gen(gen_opts);
    if (check->parsed()) return run_check_cmd(check_opts);
    if (limit->parsed()) return run_limit(limit_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
