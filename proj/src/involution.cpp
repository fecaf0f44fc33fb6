#include "narayana/involution.hpp"

#include <cstddef>
#include <vector>

namespace narayana {

namespace {

// match[k] = index of the Down step closing the Up step at k.
std::vector<std::size_t> match_indices(const std::vector<Step>& steps) {
  std::vector<std::size_t> match(steps.size(), 0);
  std::vector<std::size_t> open;
  open.reserve(steps.size() / 2);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] == Step::Up) {
      open.push_back(k);
    } else {
      match[open.back()] = k;
      open.pop_back();
    }
  }
  return match;
}

}  // namespace

FirstReturnSplit first_return_split(const DyckPath& p) {
  if (p.empty()) {
    throw std::domain_error("first_return_split: the empty path has no first return");
  }
  const auto& steps = p.steps();
  long long height = 0;
  std::size_t split = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    height += steps[k] == Step::Up ? 1 : -1;
    if (height == 0) {
      split = k;
      break;
    }
  }
  std::vector<Step> inner(steps.begin() + 1, steps.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<Step> tail(steps.begin() + static_cast<std::ptrdiff_t>(split) + 1, steps.end());
  return FirstReturnSplit{DyckPath::from_steps(std::move(inner)),
                          DyckPath::from_steps(std::move(tail))};
}

DyckPath assemble_first_return(const DyckPath& inner, const DyckPath& tail) {
  std::vector<Step> steps;
  steps.reserve(inner.steps().size() + tail.steps().size() + 2);
  steps.push_back(Step::Up);
  steps.insert(steps.end(), inner.steps().begin(), inner.steps().end());
  steps.push_back(Step::Down);
  steps.insert(steps.end(), tail.steps().begin(), tail.steps().end());
  return DyckPath::from_steps(std::move(steps));
}

DyckPath phi(const DyckPath& p) {
  const auto& steps = p.steps();
  const std::vector<std::size_t> match = match_indices(steps);

  // A task either emits one literal step or rewrites a segment [begin, end)
  // of the original word. Segments are always contiguous in the input, so
  // the precomputed match array locates every first return in O(1).
  struct Task {
    std::size_t begin = 0;
    std::size_t end = 0;
    int emit = -1;  // -1: segment, otherwise a Step value
  };

  std::vector<Step> output;
  output.reserve(steps.size());
  std::vector<Task> stack;
  stack.push_back(Task{0, steps.size(), -1});

  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    if (task.emit >= 0) {
      output.push_back(static_cast<Step>(task.emit));
      continue;
    }
    if (task.begin == task.end) continue;
    const std::size_t ret = match[task.begin];
    // phi(U P1 D P2) = U phi(P2) D phi(P1); pushed in reverse emission order.
    stack.push_back(Task{task.begin + 1, ret, -1});
    stack.push_back(Task{0, 0, static_cast<int>(Step::Down)});
    stack.push_back(Task{ret + 1, task.end, -1});
    stack.push_back(Task{0, 0, static_cast<int>(Step::Up)});
  }
  return DyckPath::from_steps(std::move(output));
}

}  // namespace narayana
