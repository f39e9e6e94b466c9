// Reversing grids: elementary tiles, exhaustive grid enumeration from a
// source pair, replay-based validation, and horizontal composition and
// splitting of grids.
//
// A grid from (u, v) is a rectangle whose left edge spells u (top to bottom)
// and whose top edge spells v (left to right).  Every cell joins one left
// segment and one top segment and emits a right word and a bottom word.
// Cells are stored in the canonical fill order of the recursion
//
//   rev(s·u', t·v') = cell(s, t) -> (a, b);  rev(a, v') -> (a1, c);
//                     rev(u', b·c) -> (u1, v1);  target (a1·u1, v1)
//
// so two grids with the same source are equal iff their cell sequences are.
// Empty segments produced by cancellation (and by relation sides of length
// one) are kept as Letter::epsilon() markers and pass through pass/empty
// cells, matching the way grids are drawn.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reversal/budget.hpp"
#include "reversal/congruence.hpp"
#include "reversal/presentation.hpp"

namespace reversal {

enum class TileKind { relation, cancel, pass_left, pass_top, empty };

std::string_view to_string(TileKind kind);

struct Tile {
  TileKind kind = TileKind::empty;
  // relation tiles: the relation index, and whether its rhs is the side that
  // starts with `left`
  std::size_t relation = 0;
  bool reversed = false;
  Letter left = Letter::epsilon();
  Letter top = Letter::epsilon();
  // at least one segment each; {epsilon} for an empty output
  Word right;
  Word bottom;

  friend bool operator==(Tile const&, Tile const&) = default;
};

/// Every tile that fits a cell with the given left and top labels: the
/// cancellation tile first when left == top, then relation tiles by relation
/// index and orientation.  An empty result is a stuck cell.
std::vector<Tile> tiles(Presentation const& p, Letter left, Letter top);

class Grid {
 public:
  Grid() = default;
  // Unchecked; see validate_grid.
  Grid(Word left, Word top, std::vector<Tile> cells, Word right, Word bottom);

  // Edge words, segment by segment (may contain epsilon markers).
  Word const& left_edge() const { return left_; }
  Word const& top_edge() const { return top_; }
  Word const& right_edge() const { return right_; }
  Word const& bottom_edge() const { return bottom_; }

  WordPair source() const;
  WordPair target() const;

  std::vector<Tile> const& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }

  friend bool operator==(Grid const&, Grid const&) = default;

 private:
  Word left_;
  Word top_;
  std::vector<Tile> cells_;
  Word right_;
  Word bottom_;
};

bool canonical_less(Grid const& a, Grid const& b);

/// The grid from (left, top) made of `cells` in canonical order, with its
/// target edges computed by replay.  Only the labels are checked: throws
/// Error when a cell's labels differ from the segments it meets or when the
/// cell count is wrong.
Grid assemble_grid(Word left, Word top, std::vector<Tile> cells);

struct ReversalOutcome {
  enum class Status { completed, budget_exceeded };

  Status status = Status::completed;
  std::vector<Grid> grids;                       // canonical order
  std::vector<std::pair<Letter, Letter>> stuck;  // labels of stuck cells
  std::size_t cells_placed = 0;

  bool completed() const { return status == Status::completed; }
  // The search terminated and every branch got stuck: no grid exists.
  bool stuck_only() const { return completed() && grids.empty(); }
};

/// All grids from (u, v).  u and v may carry epsilon segments (as produced
/// on the right edge of another grid).  Throws Error if p has an ε-relation.
ReversalOutcome reverse_enumerate(Presentation const& p, Word const& u,
                                  Word const& v, Budget const& b = {});

/// Deterministic reversing; throws Error unless p is right complemented.
ReversalOutcome reverse_complemented(Presentation const& p, Word const& u,
                                     Word const& v, Budget const& b = {});

struct GridCheck {
  bool valid = false;
  std::optional<std::size_t> failing_cell;
  std::string reason;
  // u·v1 against v·u1, when requested and the grid is structurally valid
  std::optional<EquivalenceOutcome> equivalence;
};

/// Replays the cells from the source, checking that each one is a tile of p
/// fitting the current labels and that the replay ends on the stored target.
GridCheck validate_grid(Presentation const& p, Grid const& g,
                        Budget const& b = {}, bool check_equivalence = true);

/// Grid from (u, v'·v'') out of g1 from (u, v') and g2 from (u', v''), where
/// g1's right edge equals g2's left edge segment by segment.
Grid compose_h(Grid const& g1, Grid const& g2);

/// Splits g after its first `columns` top segments; compose_h inverts it.
std::pair<Grid, Grid> split_h(Grid const& g, std::size_t columns);

struct TargetSet {
  enum class Status { completed, budget_exceeded };

  Status status = Status::completed;
  std::vector<WordPair> targets;  // sorted, distinct
  std::size_t subproblems = 0;

  bool completed() const { return status == Status::completed; }
};

/// The distinct targets of all grids from (u, v), computed by memoizing the
/// fill recursion on (left word, top word) subproblems instead of listing
/// grids.  Meets the same set as reverse_enumerate, without the
/// combinatorial blow-up of counting grids one by one.  A subproblem that
/// recursively depends on itself is reported as budget_exceeded.
TargetSet reversible_targets(Presentation const& p, Word const& u,
                             Word const& v, Budget const& b = {});

/// ASCII drawing of g with edge labels; deterministic.
std::string render_grid(Presentation const& p, Grid const& g);

}  // namespace reversal
