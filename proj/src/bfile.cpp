#include "narayana/bfile.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace narayana {

namespace {

// Generated rows are capped well past any real b-file; hitting the cap is
// reported rather than looping.
constexpr std::size_t kMaxGeneratedTerms = 250000;

bool integer_token(const std::string& token) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  return std::all_of(token.begin() + start, token.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::vector<Integer> table_row(int i, int n, bool drop_trailing_zeros) {
  std::vector<Integer> row;
  for (int j = i; j <= n; ++j) row.push_back(gen_narayana(i, n, j));
  if (drop_trailing_zeros) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  return row;
}

}  // namespace

std::optional<OeisTarget> oeis_target_from_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "i1" || lower == "a001263" || lower == "i1_as_a001263") return OeisTarget::I1;
  if (lower == "i2" || lower == "a108838" || lower == "i2_as_a108838") return OeisTarget::I2;
  if (lower == "i3r" || lower == "a281293" || lower == "i3_reversed_as_a281293") {
    return OeisTarget::I3Reversed;
  }
  return std::nullopt;
}

std::string oeis_target_name(OeisTarget target) {
  switch (target) {
    case OeisTarget::I1: return "i1 (A001263 layout)";
    case OeisTarget::I2: return "i2 (A108838 layout)";
    case OeisTarget::I3Reversed: return "i3 reversed (A281293 layout)";
  }
  return "?";
}

std::vector<BfileEntry> parse_bfile(std::istream& in) {
  std::vector<BfileEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;

    std::string second;
    if (!integer_token(first) || !(fields >> second) || !integer_token(second)) {
      throw bfile_error(line_no, "b-file line " + std::to_string(line_no) +
                                     ": expected \"index value\", got \"" + line + "\"");
    }
    std::string extra;
    if (fields >> extra) {
      throw bfile_error(line_no, "b-file line " + std::to_string(line_no) +
                                     ": trailing content \"" + extra + "\"");
    }
    long long index = 0;
    try {
      index = std::stoll(first);
    } catch (const std::out_of_range&) {
      throw bfile_error(line_no, "b-file line " + std::to_string(line_no) +
                                     ": index \"" + first + "\" out of range");
    }
    BfileEntry entry{index, Integer(second)};
    if (!entries.empty() && entry.index != entries.back().index + 1) {
      throw bfile_error(line_no, "b-file line " + std::to_string(line_no) +
                                     ": index " + std::to_string(entry.index) +
                                     " does not follow " + std::to_string(entries.back().index));
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    throw bfile_error(0, "b-file contains no data lines");
  }
  return entries;
}

std::vector<Integer> target_prefix(OeisTarget target, std::size_t min_terms,
                                   bool drop_trailing_zeros) {
  std::vector<Integer> terms;
  const std::size_t want = std::min(min_terms, kMaxGeneratedTerms);
  if (target == OeisTarget::I1) {
    for (int n = 1; terms.size() < want; ++n) {
      for (int k = 1; k <= n; ++k) terms.push_back(narayana_classic(n, k));
    }
  } else if (target == OeisTarget::I2) {
    for (int n = 2; terms.size() < want; ++n) {
      const auto row = table_row(2, n, drop_trailing_zeros);
      terms.insert(terms.end(), row.begin(), row.end());
    }
  } else {
    for (int n = 3; terms.size() < want; ++n) {
      auto row = table_row(3, n, drop_trailing_zeros);
      std::reverse(row.begin(), row.end());
      terms.insert(terms.end(), row.begin(), row.end());
    }
  }
  return terms;
}

OeisCheckResult check_bfile(const std::vector<BfileEntry>& entries, OeisTarget target,
                            std::optional<long long> offset, bool drop_trailing_zeros) {
  const long long base = offset.value_or(entries.front().index);
  if (entries.front().index < base) {
    throw std::domain_error("oeis check: b-file starts at index " +
                            std::to_string(entries.front().index) +
                            ", before the offset " + std::to_string(base));
  }
  const std::size_t need = static_cast<std::size_t>(entries.back().index - base) + 1;
  const std::vector<Integer> expected = target_prefix(target, need, drop_trailing_zeros);

  OeisCheckResult result;
  for (const BfileEntry& entry : entries) {
    const std::size_t position = static_cast<std::size_t>(entry.index - base);
    if (position >= expected.size()) {
      result.note = "comparison truncated after " + std::to_string(result.terms_compared) +
                    " terms (generation cap)";
      break;
    }
    if (entry.value != expected[position]) {
      result.match = false;
      result.divergence_index = entry.index;
      result.expected = expected[position];
      result.found = entry.value;
      return result;
    }
    ++result.terms_compared;
  }
  result.match = true;
  return result;
}

std::string render_oeis_report(OeisTarget target, const OeisCheckResult& result) {
  std::ostringstream out;
  out << "target: " << oeis_target_name(target) << '\n';
  out << "terms compared: " << result.terms_compared << '\n';
  if (!result.note.empty()) out << "note: " << result.note << '\n';
  if (result.match) {
    out << "result: match\n";
  } else {
    out << "result: divergence at index " << result.divergence_index << ": expected "
        << result.expected.str() << ", found " << result.found.str() << '\n';
  }
  return out.str();
}

}  // namespace narayana
