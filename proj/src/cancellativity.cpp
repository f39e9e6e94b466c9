#include "reversal/cancellativity.hpp"

#include <algorithm>

namespace reversal {

std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }

std::string_view to_string(CancellativityVerdict::Status s) {
  switch (s) {
    case CancellativityVerdict::Status::cancellative:
      return "cancellative";
    case CancellativityVerdict::Status::not_by_this_criterion:
      return "not_by_this_criterion";
    case CancellativityVerdict::Status::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(LcmResult::Status s) {
  switch (s) {
    case LcmResult::Status::found:
      return "found";
    case LcmResult::Status::no_common_multiple:
      return "no_common_multiple";
    case LcmResult::Status::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

CancellativityVerdict check_left_cancellative(Presentation const& p,
                                              Budget const& b) {
  CancellativityVerdict out;
  out.side = Side::left;
  out.completeness = check_completeness(p, b);
  out.conflicts = left_cancel_conflicts(p);
  using Verdict = CompletenessReport::Verdict;
  if (out.completeness.verdict == Verdict::incomplete) {
    out.status = CancellativityVerdict::Status::not_by_this_criterion;
    out.reason = "right reversing is not complete";
  } else if (!out.conflicts.empty()) {
    out.status = CancellativityVerdict::Status::not_by_this_criterion;
    out.reason = "some relation has both sides starting with the same letter";
  } else if (out.completeness.verdict == Verdict::inconclusive) {
    out.status = CancellativityVerdict::Status::inconclusive;
    out.reason = "completeness is undecided";
  } else {
    out.status = CancellativityVerdict::Status::cancellative;
  }
  return out;
}

CancellativityVerdict check_right_cancellative(Presentation const& p,
                                               Budget const& b) {
  auto out = check_left_cancellative(mirror(p), b);
  out.side = Side::right;
  return out;
}

namespace {

void fill_from_grid(LcmResult& out, Word const& u, Grid const& g) {
  out.status = LcmResult::Status::found;
  out.complements = g.target();
  out.multiple = concat(u, out.complements.second);
  out.grid = g;
}

LcmResult from_outcome(Presentation const& p, Word const& u,
                       ReversalOutcome const& r) {
  LcmResult out;
  if (!r.grids.empty()) {
    // every grid gives a common multiple; the lightest bottom edge gives the
    // lightest one
    auto best = std::min_element(
        r.grids.begin(), r.grids.end(), [&](Grid const& x, Grid const& y) {
          return weight_of(p, x.target().second) < weight_of(p, y.target().second);
        });
    fill_from_grid(out, u, *best);
  } else if (r.completed()) {
    out.status = LcmResult::Status::no_common_multiple;
    out.stuck = r.stuck;
    out.reason = "every branch of the grid search got stuck";
  } else {
    out.reason = "grid enumeration exceeded the budget";
  }
  return out;
}

}  // namespace

LcmResult common_right_multiple(Presentation const& p,
                                CompletenessReport const& report, Word const& u,
                                Word const& v, Budget const& b) {
  if (!report.complete()) {
    LcmResult out;
    out.reason = "right reversing is not known to be complete";
    return out;
  }
  return from_outcome(p, u, reverse_enumerate(p, u, v, b));
}

LcmResult common_right_multiple(Presentation const& p, Word const& u,
                                Word const& v, Budget const& b) {
  return common_right_multiple(p, check_completeness(p, b), u, v, b);
}

LcmResult right_lcm(Presentation const& p, CompletenessReport const& report,
                    Word const& u, Word const& v, Budget const& b) {
  if (!is_right_complemented(p)) {
    throw Error("right lcm needs a right complemented presentation");
  }
  if (!report.complete()) {
    throw Error("right lcm needs right reversing to be complete");
  }
  return from_outcome(p, u, reverse_complemented(p, u, v, b));
}

LcmResult right_lcm(Presentation const& p, Word const& u, Word const& v,
                    Budget const& b) {
  if (!is_right_complemented(p)) {
    throw Error("right lcm needs a right complemented presentation");
  }
  return right_lcm(p, check_completeness(p, b), u, v, b);
}

bool has_total_lcm_shape(Presentation const& p) {
  for (Letter s : p.generators()) {
    for (Letter t : p.generators()) {
      if (s == t) {
        continue;
      }
      bool const found = std::any_of(
          p.relations().begin(), p.relations().end(), [&](Relation const& r) {
            if (r.lhs.size() != 2 || r.rhs.size() != 2) {
              return false;
            }
            return (r.lhs[0] == s && r.rhs[0] == t) ||
                   (r.lhs[0] == t && r.rhs[0] == s);
          });
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace reversal
