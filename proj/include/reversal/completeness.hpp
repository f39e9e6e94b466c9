// Completeness of right reversing: the per-(generator, relation) diamond
// check, the aggregated verdict, equivalence decided by reversing, and the
// defect of a presentation.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reversal/budget.hpp"
#include "reversal/congruence.hpp"
#include "reversal/grid.hpp"
#include "reversal/presentation.hpp"

namespace reversal {

enum class Direction { lhs_to_rhs, rhs_to_lhs };

std::string_view to_string(Direction d);

/// One direction of the diamond condition for a generator s and a relation
/// w = w': every grid from (s, w) must have a grid from (s, w') with
/// ≡-equivalent targets (w is the lhs for lhs_to_rhs, the rhs otherwise).
struct DiamondReport {
  enum class Status { verified, counterexample, inconclusive };

  struct Match {
    Grid grid;     // from (s, w)
    Grid partner;  // first equivalent grid from (s, w')
    // least dist(u1, u1') + dist(v1, v1') over all equivalent partners
    std::size_t distance = 0;
  };

  Letter generator;
  std::size_t relation = 0;
  Direction direction = Direction::lhs_to_rhs;
  Status status = Status::inconclusive;
  std::vector<Match> matching;         // verified
  std::optional<Grid> counterexample;  // counterexample
  // the (s, w') side was enumerated completely and every candidate decided
  bool exhausted = false;
  std::string reason;  // inconclusive

  WordPair source(Presentation const& p) const;
  WordPair partner_source(Presentation const& p) const;
};

std::string_view to_string(DiamondReport::Status s);

/// Both directions for generator s and relation number `relation`.
std::pair<DiamondReport, DiamondReport> check_diamond(Presentation const& p,
                                                      Letter s,
                                                      std::size_t relation,
                                                      Budget const& b = {});

struct CompletenessReport {
  enum class Verdict { complete, incomplete, inconclusive };

  Verdict verdict = Verdict::inconclusive;
  std::vector<DiamondReport> pairs;  // generator-major, then relation, lhs first
  bool weight_homogeneous = false;
  std::string noetherian_witness;
  std::vector<std::string> reasons;
  // incomplete: index into pairs of the counterexample used, and the word
  // pair it yields, equivalent yet not reversible to (ε, ε)
  std::optional<std::size_t> witness;
  std::optional<WordPair> certificate;

  bool complete() const { return verdict == Verdict::complete; }
};

std::string_view to_string(CompletenessReport::Verdict v);

CompletenessReport check_completeness(Presentation const& p, Budget const& b = {});

enum class Decision { yes, no, unknown };

std::string_view to_string(Decision d);

/// yes iff some grid from (u, v) has target (ε, ε); no only when the target
/// search completed.  An equivalence decision when p is complete.
Decision decide_equiv_by_reversing(Presentation const& p, Word const& u,
                                   Word const& v, Budget const& b = {});

struct DefectWitness {
  Letter generator;
  std::size_t relation = 0;
  Direction direction = Direction::lhs_to_rhs;
  Grid grid;
  std::optional<Grid> partner;  // absent for an unmatched grid
};

struct DefectResult {
  Distance value;
  std::optional<DefectWitness> witness;
  std::string reason;
};

/// Uses the distances recorded by check_completeness; infinite when the
/// report is incomplete, unknown when inconclusive.
DefectResult defect(CompletenessReport const& report);
DefectResult defect(Presentation const& p, Budget const& b = {});

}  // namespace reversal
