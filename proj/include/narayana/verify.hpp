#pragma once

#include "narayana/counting.hpp"
#include "narayana/dyck.hpp"
#include "narayana/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace narayana {

struct VerifyOptions {
  int nmax = 8;
  bool use_census = true;
  bool use_closed = true;
  bool use_lgv = true;
  bool use_gf = true;
  int census_bound = kDefaultSemilengthBound;
  int gf_bound = kDefaultGfBound;
};

// Per-oracle tables over the cells 1 <= i <= j <= n <= nmax. census and gf
// cover only n up to their bounds; exceeding a bound is reported in `notes`
// and the oracle is restricted, never fatal to the others. `strays` lists
// generating-function terms outside the cell domain; any such term is a
// disagreement.
struct OracleTables {
  std::optional<CountTable> census;
  std::optional<CountTable> closed;
  std::optional<CountTable> lgv;
  std::optional<CountTable> gf;
  int census_nmax = 0;
  int gf_nmax = 0;
  std::vector<std::string> notes;
  std::vector<std::string> strays;
};

OracleTables compute_oracle_tables(const VerifyOptions& options);

struct CellCheck {
  CellKey cell;
  std::optional<Integer> census;
  std::optional<Integer> closed;
  std::optional<Integer> lgv;
  std::optional<Integer> gf;
  bool ok = true;
};

struct VerifyReport {
  std::vector<CellCheck> cells;  // ordered by (n, i, j)
  std::vector<std::string> notes;
  std::size_t mismatches = 0;
};

// Cross-checks every oracle value present for each cell; a cell passes when
// all present values agree.
VerifyReport compare_oracle_tables(const OracleTables& tables, const VerifyOptions& options);

// Tab-separated, one line per cell, '#'-prefixed notes and summary.
std::string render_verify_report(const VerifyReport& report, const VerifyOptions& options);

}  // namespace narayana
