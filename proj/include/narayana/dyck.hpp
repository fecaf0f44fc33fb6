#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace narayana {

enum class Step : std::uint8_t { Up, Down };

// Exhaustive enumeration refuses semilengths beyond this unless the caller
// raises the bound explicitly. Catalan(14) = 2,674,440.
inline constexpr int kDefaultSemilengthBound = 14;

class parse_error : public std::runtime_error {
 public:
  enum class Kind { ForeignChar, BelowGround, Unbalanced };

  parse_error(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  // 1-based position of the first offending character or step.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

struct PathStats {
  int semilength = 0;
  int returns = 0;
  int peaks = 0;
  int initial_ascent = 0;
  bool operator==(const PathStats&) const = default;
};

// Balanced Up/Down step word whose prefixes never dip below ground. The
// empty path is valid. Immutable after construction.
class DyckPath {
 public:
  DyckPath() = default;

  // Validates balance and prefix nonnegativity; throws parse_error.
  static DyckPath from_steps(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  bool empty() const { return steps_.empty(); }

  auto operator<=>(const DyckPath&) const = default;

 private:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

// Text form over the alphabet {U, D}, case sensitive, one char per step.
DyckPath parse_path(std::string_view text);
std::string render_path(const DyckPath& p);

// (semilength, returns, peaks, initial ascent) in one pass; all zero for the
// empty path.
PathStats path_stats(const DyckPath& p);

// Visits every Dyck path of semilength n exactly once, in lexicographic
// order with U < D. Throws when n exceeds the bound.
void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit,
                        int bound = kDefaultSemilengthBound);

std::vector<DyckPath> enumerate_dyck(int n, int bound = kDefaultSemilengthBound);

}  // namespace narayana
