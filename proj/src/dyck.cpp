#include "narayana/dyck.hpp"

namespace narayana {

namespace {

// First Up step that never gets matched by a later Down, 1-based. Scans from
// the right so the leftmost unmatched Up is the last one found.
std::size_t first_unmatched_up(const std::vector<Step>& steps) {
  std::size_t first = 0;
  long long downs_available = 0;
  for (std::size_t k = steps.size(); k-- > 0;) {
    if (steps[k] == Step::Down) {
      ++downs_available;
    } else if (downs_available > 0) {
      --downs_available;
    } else {
      first = k + 1;
    }
  }
  return first;
}

void check_bound(int n, int bound) {
  if (n < 0) throw std::domain_error("enumeration: semilength must be nonnegative");
  if (n > bound) {
    throw std::domain_error("enumeration refused: semilength " + std::to_string(n) +
                            " exceeds the configured bound " + std::to_string(bound));
  }
}

}  // namespace

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  long long height = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    height += steps[k] == Step::Up ? 1 : -1;
    if (height < 0) {
      throw parse_error(parse_error::Kind::BelowGround, k + 1,
                        "path dips below ground at position " + std::to_string(k + 1));
    }
  }
  if (height != 0) {
    const std::size_t pos = first_unmatched_up(steps);
    throw parse_error(parse_error::Kind::Unbalanced, pos,
                      "unbalanced word: " + std::to_string(height) +
                          " Up step(s) never return to ground; first at position " +
                          std::to_string(pos));
  }
  return DyckPath(std::move(steps));
}

DyckPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw parse_error(parse_error::Kind::ForeignChar, k + 1,
                          std::string("foreign character '") + text[k] +
                              "' at position " + std::to_string(k + 1) +
                              "; expected U or D");
    }
  }
  return DyckPath::from_steps(std::move(steps));
}

std::string render_path(const DyckPath& p) {
  std::string text;
  text.reserve(p.steps().size());
  for (Step s : p.steps()) text.push_back(s == Step::Up ? 'U' : 'D');
  return text;
}

PathStats path_stats(const DyckPath& p) {
  PathStats stats;
  stats.semilength = p.semilength();
  long long height = 0;
  bool in_initial_ascent = true;
  Step previous = Step::Down;
  for (std::size_t k = 0; k < p.steps().size(); ++k) {
    const Step s = p.steps()[k];
    if (s == Step::Up) {
      ++height;
      if (in_initial_ascent) ++stats.initial_ascent;
    } else {
      in_initial_ascent = false;
      --height;
      if (height == 0) ++stats.returns;
      if (k > 0 && previous == Step::Up) ++stats.peaks;
    }
    previous = s;
  }
  return stats;
}

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit,
                        int bound) {
  check_bound(n, bound);
  std::vector<Step> buffer(static_cast<std::size_t>(2) * n);
  auto recurse = [&](auto&& self, int pos, int ups, int height) -> void {
    if (pos == 2 * n) {
      visit(DyckPath::from_steps(buffer));
      return;
    }
    if (ups < n) {
      buffer[pos] = Step::Up;
      self(self, pos + 1, ups + 1, height + 1);
    }
    if (height > 0) {
      buffer[pos] = Step::Down;
      self(self, pos + 1, ups, height - 1);
    }
  };
  recurse(recurse, 0, 0, 0);
}

std::vector<DyckPath> enumerate_dyck(int n, int bound) {
  std::vector<DyckPath> paths;
  for_each_dyck_path(n, [&](const DyckPath& p) { paths.push_back(p); }, bound);
  return paths;
}

}  // namespace narayana
