#include "narayana/polyomino.hpp"

#include <algorithm>
#include <utility>

namespace narayana {

namespace {

std::pair<int, int> displacement(const BoundaryWord& word) {
  int east = 0;
  int north = 0;
  for (GridStep s : word) (s == GridStep::East ? east : north)++;
  return {east, north};
}

// Ascent/descent run lengths of a nonempty Dyck path; the two sequences
// alternate starting with an ascent, so they have equal length.
std::pair<std::vector<int>, std::vector<int>> run_lengths(const DyckPath& p) {
  std::vector<int> ascents;
  std::vector<int> descents;
  for (Step s : p.steps()) {
    if (s == Step::Up) {
      if (descents.size() == ascents.size()) {
        ascents.push_back(1);
      } else {
        ++ascents.back();
      }
    } else {
      if (descents.size() < ascents.size()) {
        descents.push_back(1);
      } else {
        ++descents.back();
      }
    }
  }
  return {std::move(ascents), std::move(descents)};
}

}  // namespace

BoundaryWord parse_boundary(std::string_view text) {
  BoundaryWord word;
  word.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'N': word.push_back(GridStep::North); break;
      case 'E': word.push_back(GridStep::East); break;
      default:
        throw std::invalid_argument(std::string("boundary word: foreign character '") +
                                    text[k] + "' at position " + std::to_string(k + 1) +
                                    "; expected N or E");
    }
  }
  return word;
}

std::string render_boundary(const BoundaryWord& word) {
  std::string text;
  text.reserve(word.size());
  for (GridStep s : word) text.push_back(s == GridStep::North ? 'N' : 'E');
  return text;
}

std::vector<GridPoint> boundary_vertices(GridPoint start, const BoundaryWord& word) {
  std::vector<GridPoint> points;
  points.reserve(word.size() + 1);
  points.push_back(start);
  GridPoint at = start;
  for (GridStep s : word) {
    if (s == GridStep::North) {
      ++at.y;
    } else {
      ++at.x;
    }
    points.push_back(at);
  }
  return points;
}

ParallelogramPolyomino ParallelogramPolyomino::from_boundaries(BoundaryWord upper,
                                                               BoundaryWord lower) {
  using Clause = polyomino_error::Clause;
  if (upper.empty() || lower.empty()) {
    throw polyomino_error(Clause::EmptyBoundary, "polyomino: boundary word is empty");
  }
  if (upper.front() != GridStep::North || upper.back() != GridStep::East) {
    throw polyomino_error(Clause::UpperBoundarySteps,
                          "polyomino: upper boundary must start North and end East");
  }
  if (lower.front() != GridStep::East || lower.back() != GridStep::North) {
    throw polyomino_error(Clause::LowerBoundarySteps,
                          "polyomino: lower boundary must start East and end North");
  }
  const auto [east_u, north_u] = displacement(upper);
  const auto [east_l, north_l] = displacement(lower);
  if (east_u != east_l || north_u != north_l) {
    throw polyomino_error(Clause::DisplacementMismatch,
                          "polyomino: boundary displacements differ: upper ends at (" +
                              std::to_string(east_u) + "," + std::to_string(north_u) +
                              "), lower at (" + std::to_string(east_l) + "," +
                              std::to_string(north_l) + ")");
  }

  // Strictly-above check at every abscissa between the corners. The upper
  // boundary only rises after arriving at an abscissa, so its minimum there
  // is its arrival height; the lower's maximum is its departure height.
  const int width = east_u;
  std::vector<long long> upper_min(width + 1, 0);
  std::vector<long long> lower_max(width + 1, 0);
  {
    long long x = 0, y = 0;
    for (GridStep s : upper) {
      if (s == GridStep::North) {
        ++y;
      } else {
        ++x;
        upper_min[x] = y;
      }
    }
    x = 0;
    y = 0;
    for (GridStep s : lower) {
      if (s == GridStep::North) {
        ++y;
        lower_max[x] = std::max(lower_max[x], y);
      } else {
        ++x;
        lower_max[x] = y;
      }
    }
  }
  for (int x = 1; x < width; ++x) {
    if (upper_min[x] <= lower_max[x]) {
      throw polyomino_error(Clause::BoundariesTouch,
                            "polyomino: boundaries meet at abscissa " + std::to_string(x) +
                                " (upper reaches " + std::to_string(upper_min[x]) +
                                ", lower reaches " + std::to_string(lower_max[x]) + ")");
    }
  }
  return ParallelogramPolyomino(std::move(upper), std::move(lower), width, north_u);
}

ParallelogramPolyomino to_polyomino(const DyckPath& p) {
  if (p.empty()) {
    throw std::domain_error("to_polyomino: the empty path has no polyomino");
  }
  const auto [ascents, descents] = run_lengths(p);

  BoundaryWord upper;
  upper.push_back(GridStep::North);
  for (int a : ascents) {
    upper.insert(upper.end(), a - 1, GridStep::North);
    upper.push_back(GridStep::East);
  }

  BoundaryWord lower;
  for (int d : descents) {
    lower.push_back(GridStep::East);
    lower.insert(lower.end(), d - 1, GridStep::North);
  }
  lower.push_back(GridStep::North);

  return ParallelogramPolyomino::from_boundaries(std::move(upper), std::move(lower));
}

DyckPath from_polyomino(const ParallelogramPolyomino& q) {
  // Upper decodes as North . (North^{a-1} East)*, lower as
  // (East North^{d-1})* . North; the runs interleave back into the path.
  std::vector<int> ascents;
  {
    const BoundaryWord& upper = q.upper();
    int norths = 0;
    for (std::size_t k = 1; k < upper.size(); ++k) {
      if (upper[k] == GridStep::North) {
        ++norths;
      } else {
        ascents.push_back(norths + 1);
        norths = 0;
      }
    }
  }
  std::vector<int> descents;
  {
    const BoundaryWord& lower = q.lower();
    for (std::size_t k = 0; k + 1 < lower.size(); ++k) {
      if (lower[k] == GridStep::East) {
        descents.push_back(1);
      } else {
        ++descents.back();
      }
    }
  }

  std::vector<Step> steps;
  steps.reserve(q.upper().size() + q.lower().size() - 2);
  for (std::size_t k = 0; k < ascents.size(); ++k) {
    steps.insert(steps.end(), ascents[k], Step::Up);
    steps.insert(steps.end(), descents[k], Step::Down);
  }
  return DyckPath::from_steps(std::move(steps));
}

LatticePathPair to_lattice_pair(const ParallelogramPolyomino& q) {
  LatticePathPair pair;
  const BoundaryWord& upper = q.upper();
  const BoundaryWord& lower = q.lower();

  int initial_north_run = 0;
  while (initial_north_run < static_cast<int>(upper.size()) &&
         upper[initial_north_run] == GridStep::North) {
    ++initial_north_run;
  }
  pair.i = initial_north_run;
  pair.n = q.width() + q.height() - 1;
  pair.j = q.height();

  const CellEndpoints endpoints = cell_endpoints(pair.i, pair.n, pair.j);
  pair.a1 = endpoints.a1;
  pair.b1 = endpoints.b1;
  pair.a2 = endpoints.a2;
  pair.b2 = endpoints.b2;

  pair.degenerate = q.width() == 1;
  if (!pair.degenerate) {
    // Drop the initial North run, the East step right after it, and the
    // final East step.
    pair.upper_path.assign(upper.begin() + initial_north_run + 1, upper.end() - 1);
  }
  // Drop the first East step and the final North step.
  pair.lower_path.assign(lower.begin() + 1, lower.end() - 1);

  if (!pair.degenerate) {
    const GridPoint end1 = boundary_vertices(pair.a1, pair.upper_path).back();
    const GridPoint end2 = boundary_vertices(pair.a2, pair.lower_path).back();
    if (end1 != pair.b1 || end2 != pair.b2) {
      throw std::logic_error("to_lattice_pair: trimmed paths miss the cell endpoints");
    }
  }
  return pair;
}

}  // namespace narayana
