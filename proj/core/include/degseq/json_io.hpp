#pragma once

#include <string>
#include <vector>

#include "degseq/identities.hpp"
#include "degseq/sequences.hpp"
#include "degseq/series.hpp"
#include "degseq/stirling.hpp"

namespace degseq {

// Machine-readable dumps. All output is byte-deterministic for identical
// inputs: fixed key order, canonical polynomial text, two-space indentation,
// trailing newline.

// { "order": N, "convention": "exponential"|"ordinary", "coeffs": [...] }
std::string series_to_json(const TruncSeries& series, SeqConvention convention);

// { "kind": ..., "nmax": N, "rows": [ { "n": .., "l": .., "value": .. } ] }
std::string table_to_json(const StirlingTable& table);

// { "family": ..., "order": r, "argument": ..., "terms": [ { "n", "value" } ] }
std::string sequence_to_json(const SeqFamily& fam, const std::vector<BiPoly>& terms);

// [ { "id", "status", "params", "variant"?, "first_failure"? }, ... ]
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace degseq
