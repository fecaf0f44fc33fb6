#pragma once

#include "narayana/counting.hpp"
#include "narayana/dyck.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace narayana {

enum class GridStep : std::uint8_t { North, East };

// Monotone boundary word over {North, East}; text form over {N, E}.
using BoundaryWord = std::vector<GridStep>;

BoundaryWord parse_boundary(std::string_view text);
std::string render_boundary(const BoundaryWord& word);

// All lattice points visited by the word starting at `start`, endpoints
// included.
std::vector<GridPoint> boundary_vertices(GridPoint start, const BoundaryWord& word);

class polyomino_error : public std::runtime_error {
 public:
  enum class Clause {
    EmptyBoundary,         // boundaries of a nonempty polyomino are nonempty
    UpperBoundarySteps,    // upper must start North and end East
    LowerBoundarySteps,    // lower must start East and end North
    DisplacementMismatch,  // boundaries must share total North and East counts
    BoundariesTouch,       // upper must stay strictly above lower between corners
  };

  polyomino_error(Clause clause, const std::string& message)
      : std::runtime_error(message), clause_(clause) {}

  Clause clause() const { return clause_; }

 private:
  Clause clause_;
};

// Region between two monotone boundary words from (0,0) to (width, height)
// that meet only at the two corners; the upper boundary starts North and
// ends East, the lower starts East and ends North.
class ParallelogramPolyomino {
 public:
  // Validates every invariant; throws polyomino_error naming the violated
  // clause.
  static ParallelogramPolyomino from_boundaries(BoundaryWord upper, BoundaryWord lower);

  const BoundaryWord& upper() const { return upper_; }
  const BoundaryWord& lower() const { return lower_; }
  int width() const { return width_; }    // shared East count
  int height() const { return height_; }  // shared North count

  bool operator==(const ParallelogramPolyomino&) const = default;

 private:
  ParallelogramPolyomino(BoundaryWord upper, BoundaryWord lower, int width, int height)
      : upper_(std::move(upper)), lower_(std::move(lower)), width_(width), height_(height) {}

  BoundaryWord upper_;
  BoundaryWord lower_;
  int width_ = 0;
  int height_ = 0;
};

// Ascents become North runs with the top step rotated East; descents
// likewise on the lower boundary with the bottom step rotated. A path with
// m peaks and semilength n maps to a polyomino with upper-right vertex
// (m, n+1-m). Rejects the empty path.
ParallelogramPolyomino to_polyomino(const DyckPath& p);

// Exact inverse of to_polyomino.
DyckPath from_polyomino(const ParallelogramPolyomino& q);

// The polyomino trimmed to a pair of lattice paths between the cell
// endpoints. (i, n, j) are recovered from the polyomino itself: i is the
// initial North run of the upper boundary, n = width + height - 1,
// j = height. When j = n the upper boundary has a single East step, the two
// upper deletions coincide, and the pair is flagged degenerate with an
// empty upper path.
struct LatticePathPair {
  int i = 0;
  int n = 0;
  int j = 0;
  GridPoint a1, b1, a2, b2;
  BoundaryWord upper_path;  // runs a1 -> b1; empty when degenerate
  BoundaryWord lower_path;  // runs a2 -> b2
  bool degenerate = false;
};

LatticePathPair to_lattice_pair(const ParallelogramPolyomino& q);

}  // namespace narayana
