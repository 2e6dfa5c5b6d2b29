#include "degseq/json_io.hpp"

#include <json.hpp>

namespace degseq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json point_to_json(const std::map<std::string, long>& point) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : point) j[key] = value;
  return j;
}

ordered_json report_body(const CheckReport& report) {
  ordered_json j;
  j["id"] = report.id;
  j["status"] = check_status_name(report.status);
  j["params"] = point_to_json(report.params);
  if (report.variant) j["variant"] = *report.variant;
  if (report.first_failure) {
    ordered_json f;
    f["params"] = point_to_json(report.first_failure->point);
    f["lhs"] = report.first_failure->lhs.to_string();
    f["rhs"] = report.first_failure->rhs.to_string();
    j["first_failure"] = std::move(f);
  }
  return j;
}

}  // namespace

std::string series_to_json(const TruncSeries& series, SeqConvention convention) {
  ordered_json j;
  j["order"] = series.order();
  j["convention"] = convention == SeqConvention::exponential ? "exponential" : "ordinary";
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= series.order(); ++n) coeffs.push_back(series.coeff(n).to_string());
  j["coeffs"] = std::move(coeffs);
  return dump(j);
}

std::string table_to_json(const StirlingTable& table) {
  ordered_json j;
  j["kind"] = stirling_kind_name(table.kind());
  j["nmax"] = table.nmax();
  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= table.nmax(); ++n) {
    for (int l = 0; l <= n; ++l) {
      ordered_json row;
      row["n"] = n;
      row["l"] = l;
      row["value"] = table.at(n, l).to_string();
      rows.push_back(std::move(row));
    }
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string sequence_to_json(const SeqFamily& fam, const std::vector<BiPoly>& terms) {
  ordered_json j;
  j["family"] = family_name(fam.family);
  j["order"] = fam.order;
  j["argument"] = fam.argument == ArgumentMode::number ? "number" : "polynomial";
  ordered_json arr = ordered_json::array();
  for (size_t n = 0; n < terms.size(); ++n) {
    ordered_json term;
    term["n"] = n;
    term["value"] = terms[n].to_string();
    arr.push_back(std::move(term));
  }
  j["terms"] = std::move(arr);
  return dump(j);
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& report : reports) arr.push_back(report_body(report));
  return dump(arr);
}

}  // namespace degseq
