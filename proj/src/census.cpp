#include "narayana/census.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace narayana {

namespace {

// Dense (returns, peaks) accumulator for a fixed semilength. Counts are
// bounded by catalan(n), far below 2^64 at any enumerable bound.
struct DenseCounts {
  explicit DenseCounts(int n) : n(n), cells(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

  std::uint64_t& at(int returns, int peaks) {
    return cells[static_cast<std::size_t>(returns) * (n + 1) + peaks];
  }

  void merge(const DenseCounts& other) {
    for (std::size_t k = 0; k < cells.size(); ++k) cells[k] += other.cells[k];
  }

  int n;
  std::vector<std::uint64_t> cells;
};

void tally(const std::vector<Step>& steps, DenseCounts& counts) {
  int returns = 0;
  int peaks = 0;
  long long height = 0;
  Step previous = Step::Down;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Step s = steps[k];
    if (s == Step::Up) {
      ++height;
    } else {
      --height;
      if (height == 0) ++returns;
      if (k > 0 && previous == Step::Up) ++peaks;
    }
    previous = s;
  }
  ++counts.at(returns, peaks);
}

// Depth-first completion of a fixed prefix, visiting every extension to a
// full Dyck word once.
void complete(std::vector<Step>& buffer, int pos, int ups, int height, int n,
              DenseCounts& counts) {
  if (pos == 2 * n) {
    tally(buffer, counts);
    return;
  }
  if (ups < n) {
    buffer[pos] = Step::Up;
    complete(buffer, pos + 1, ups + 1, height + 1, n, counts);
  }
  if (height > 0) {
    buffer[pos] = Step::Down;
    complete(buffer, pos + 1, ups, height - 1, n, counts);
  }
}

struct PrefixTask {
  std::vector<Step> steps;
  int ups = 0;
  int height = 0;
};

std::vector<PrefixTask> make_prefix_tasks(int n, int prefix_len) {
  std::vector<PrefixTask> tasks;
  PrefixTask current;
  current.steps.resize(prefix_len);
  auto recurse = [&](auto&& self, int pos, int ups, int height) -> void {
    if (pos == prefix_len) {
      tasks.push_back(PrefixTask{current.steps, ups, height});
      return;
    }
    if (ups < n) {
      current.steps[pos] = Step::Up;
      self(self, pos + 1, ups + 1, height + 1);
    }
    if (height > 0) {
      current.steps[pos] = Step::Down;
      self(self, pos + 1, ups, height - 1);
    }
  };
  recurse(recurse, 0, 0, 0);
  return tasks;
}

CountTable to_table(int n, const DenseCounts& counts) {
  CountTable table;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::uint64_t c = counts.cells[static_cast<std::size_t>(i) * (n + 1) + j];
      if (c != 0) table.set(i, n, j, Integer(c));
    }
  }
  return table;
}

void check_bound(int n, int bound) {
  if (n < 0) throw std::domain_error("census: semilength must be nonnegative");
  if (n > bound) {
    throw std::domain_error("census refused: semilength " + std::to_string(n) +
                            " exceeds the configured bound " + std::to_string(bound));
  }
}

}  // namespace

CountTable census_serial(int n, int bound) {
  check_bound(n, bound);
  DenseCounts counts(n);
  std::vector<Step> buffer(static_cast<std::size_t>(2) * n);
  complete(buffer, 0, 0, 0, n, counts);
  if (n == 0) return CountTable{};
  return to_table(n, counts);
}

CountTable census_parallel(int n, int bound) {
  check_bound(n, bound);
  if (n <= 8) return census_serial(n, bound);

#ifdef _OPENMP
  // Completions of length ~16 per task keep tasks coarse; the shorter cap
  // guarantees enough tasks for small n.
  const int prefix_len = std::min(2 * n - 2, std::max(6, 2 * n - 16));
  const std::vector<PrefixTask> tasks = make_prefix_tasks(n, prefix_len);

  DenseCounts global(n);
#pragma omp parallel
  {
    DenseCounts local(n);
    std::vector<Step> buffer(static_cast<std::size_t>(2) * n);
#pragma omp for schedule(dynamic)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      const PrefixTask& task = tasks[t];
      std::copy(task.steps.begin(), task.steps.end(), buffer.begin());
      complete(buffer, prefix_len, task.ups, task.height, n, local);
    }
#pragma omp critical
    global.merge(local);
  }
  return to_table(n, global);
#else
  return census_serial(n, bound);
#endif
}

CountTable census(int n, int bound) { return census_parallel(n, bound); }

}  // namespace narayana
