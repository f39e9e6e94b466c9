// Cancellativity by the completeness criterion, common right multiples and
// right lcms obtained from reversing grids.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reversal/budget.hpp"
#include "reversal/completeness.hpp"
#include "reversal/presentation.hpp"

namespace reversal {

enum class Side { left, right };

std::string_view to_string(Side s);

/// The criterion is sufficient only: a failed hypothesis is reported as
/// not_by_this_criterion, never as a proof of non-cancellativity.
struct CancellativityVerdict {
  enum class Status { cancellative, not_by_this_criterion, inconclusive };

  Side side = Side::left;
  Status status = Status::inconclusive;
  std::string reason;
  // for the right side, both refer to the mirrored presentation
  CompletenessReport completeness;
  std::vector<Relation> conflicts;
};

std::string_view to_string(CancellativityVerdict::Status s);

CancellativityVerdict check_left_cancellative(Presentation const& p,
                                              Budget const& b = {});

/// The left criterion applied to mirror(p).
CancellativityVerdict check_right_cancellative(Presentation const& p,
                                               Budget const& b = {});

struct LcmResult {
  enum class Status { found, no_common_multiple, inconclusive };

  Status status = Status::inconclusive;
  Word multiple;             // u·v1
  WordPair complements;      // (u1, v1)
  std::optional<Grid> grid;  // the grid the multiple was read from
  std::vector<std::pair<Letter, Letter>> stuck;
  std::string reason;
};

std::string_view to_string(LcmResult::Status s);

/// A common right multiple of u and v read off a grid from (u, v), choosing
/// the grid with the lightest bottom edge.  Inconclusive unless `report`
/// (computed for p) is complete.
LcmResult common_right_multiple(Presentation const& p,
                                CompletenessReport const& report, Word const& u,
                                Word const& v, Budget const& b = {});
LcmResult common_right_multiple(Presentation const& p, Word const& u,
                                Word const& v, Budget const& b = {});

/// The right lcm by deterministic reversing.  Throws Error unless p is right
/// complemented and `report` is complete.
LcmResult right_lcm(Presentation const& p, CompletenessReport const& report,
                    Word const& u, Word const& v, Budget const& b = {});
LcmResult right_lcm(Presentation const& p, Word const& u, Word const& v,
                    Budget const& b = {});

/// Every pair of distinct generators s, t has a relation s·t' = t·s' with
/// t', s' single letters.
bool has_total_lcm_shape(Presentation const& p);

}  // namespace reversal
