#pragma once

#include "narayana/counting.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace narayana {

// Row linearizations of the N_i arrays that appear in OEIS:
//   I1         classical Narayana triangle A001263 (N_1 shifted by one row),
//              rows n' >= 1, k = 1..n'
//   I2         the i = 2 array as A108838, rows n >= 2, j = 2..n
//   I3Reversed the i = 3 array with rows reversed as A281293, rows n >= 3
enum class OeisTarget { I1, I2, I3Reversed };

std::optional<OeisTarget> oeis_target_from_name(const std::string& name);
std::string oeis_target_name(OeisTarget target);

class bfile_error : public std::runtime_error {
 public:
  bfile_error(int line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct BfileEntry {
  long long index = 0;
  Integer value;
};

// OEIS b-file format: "index value" per line, '#'-prefixed comment lines and
// blank lines ignored, indices consecutive. Throws bfile_error naming the
// offending line; an empty file (no data lines) is an error.
std::vector<BfileEntry> parse_bfile(std::istream& in);

// First `min_terms` values of the target linearization. With
// drop_trailing_zeros each row is stripped of its trailing zeros before the
// I3 reversal.
std::vector<Integer> target_prefix(OeisTarget target, std::size_t min_terms,
                                   bool drop_trailing_zeros);

struct OeisCheckResult {
  bool match = false;
  std::size_t terms_compared = 0;
  long long divergence_index = -1;  // b-file index of the first divergence
  Integer expected;
  Integer found;
  std::string note;
};

// Compares the b-file against the target linearization, aligning the b-file
// index `offset` with the first generated term. Default offset: the file's
// first index.
OeisCheckResult check_bfile(const std::vector<BfileEntry>& entries, OeisTarget target,
                            std::optional<long long> offset, bool drop_trailing_zeros);

std::string render_oeis_report(OeisTarget target, const OeisCheckResult& result);

}  // namespace narayana
