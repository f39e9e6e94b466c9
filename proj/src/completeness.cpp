#include "reversal/completeness.hpp"

#include <algorithm>
#include <map>

namespace reversal {

std::string_view to_string(Direction d) {
  return d == Direction::lhs_to_rhs ? "lhs_to_rhs" : "rhs_to_lhs";
}

std::string_view to_string(DiamondReport::Status s) {
  switch (s) {
    case DiamondReport::Status::verified:
      return "verified";
    case DiamondReport::Status::counterexample:
      return "counterexample";
    case DiamondReport::Status::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(CompletenessReport::Verdict v) {
  switch (v) {
    case CompletenessReport::Verdict::complete:
      return "complete";
    case CompletenessReport::Verdict::incomplete:
      return "incomplete";
    case CompletenessReport::Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    case Decision::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

Word const& from_side(Relation const& r, Direction d) {
  return d == Direction::lhs_to_rhs ? r.lhs : r.rhs;
}

Word const& to_side(Relation const& r, Direction d) {
  return d == Direction::lhs_to_rhs ? r.rhs : r.lhs;
}

Relation const& relation_at(Presentation const& p, std::size_t index) {
  if (index >= p.relations().size()) {
    throw Error("relation index out of range");
  }
  return p.relations()[index];
}

class DiamondChecker {
 public:
  DiamondChecker(Presentation const& p, Budget const& b)
      : p_(&p), budget_(b), cache_(p, b) {}

  DiamondReport check(Letter s, std::size_t relation, Direction d) {
    Relation const& r = relation_at(*p_, relation);
    DiamondReport out;
    out.generator = s;
    out.relation = relation;
    out.direction = d;
    auto const& from = grids_from(s, from_side(r, d));
    auto const& to = grids_from(s, to_side(r, d));
    out.exhausted = to.completed();
    bool undecided = false;
    for (auto const& g : from.grids) {
      auto const [u1, v1] = g.target();
      Grid const* first = nullptr;
      std::size_t best = 0;
      bool open = !to.completed();
      for (auto const& h : to.grids) {
        auto const [u2, v2] = h.target();
        auto const du = cache_.distance(u1, u2);
        if (du.kind == Distance::Kind::infinite) {
          continue;
        }
        auto const dv = cache_.distance(v1, v2);
        if (du.is_finite() && dv.is_finite()) {
          if (first == nullptr || du.value + dv.value < best) {
            best = du.value + dv.value;
          }
          if (first == nullptr) {
            first = &h;
          }
        } else if (dv.kind != Distance::Kind::infinite) {
          open = true;
        }
      }
      if (first != nullptr) {
        out.matching.push_back({g, *first, best});
      } else if (open) {
        out.exhausted = false;
        undecided = true;
      } else {
        out.status = DiamondReport::Status::counterexample;
        out.counterexample = g;
        out.matching.clear();
        return out;
      }
    }
    if (undecided) {
      out.reason = to.completed()
                       ? "an equivalence check exceeded the budget"
                       : "grid enumeration from the second source exceeded the budget";
    } else if (!from.completed()) {
      out.reason = "grid enumeration from the first source exceeded the budget";
    } else {
      out.status = DiamondReport::Status::verified;
      return out;
    }
    out.matching.clear();
    return out;
  }

  CongruenceCache& cache() { return cache_; }

 private:
  ReversalOutcome const& grids_from(Letter s, Word const& w) {
    auto key = std::pair{s, w};
    auto it = grids_.find(key);
    if (it == grids_.end()) {
      it = grids_.emplace(key, reverse_enumerate(*p_, Word{s}, w, budget_)).first;
    }
    return it->second;
  }

  Presentation const* p_;
  Budget budget_;
  CongruenceCache cache_;
  std::map<std::pair<Letter, Word>, ReversalOutcome> grids_;
};

}  // namespace

WordPair DiamondReport::source(Presentation const& p) const {
  return {Word{generator}, from_side(relation_at(p, relation), direction)};
}

WordPair DiamondReport::partner_source(Presentation const& p) const {
  return {Word{generator}, to_side(relation_at(p, relation), direction)};
}

std::pair<DiamondReport, DiamondReport> check_diamond(Presentation const& p,
                                                      Letter s,
                                                      std::size_t relation,
                                                      Budget const& b) {
  b.check();
  if (s.is_epsilon() || s.id >= p.size()) {
    throw Error("generator outside the alphabet");
  }
  DiamondChecker checker(p, b);
  return {checker.check(s, relation, Direction::lhs_to_rhs),
          checker.check(s, relation, Direction::rhs_to_lhs)};
}

Decision decide_equiv_by_reversing(Presentation const& p, Word const& u,
                                   Word const& v, Budget const& b) {
  auto const t = reversible_targets(p, u, v, b);
  if (!t.completed()) {
    return Decision::unknown;
  }
  return std::binary_search(t.targets.begin(), t.targets.end(), WordPair{})
             ? Decision::yes
             : Decision::no;
}

CompletenessReport check_completeness(Presentation const& p, Budget const& b) {
  b.check();
  CompletenessReport out;
  out.weight_homogeneous = p.is_weight_homogeneous();
  if (p.has_epsilon_relation()) {
    out.reasons.emplace_back("the presentation has an ε-relation");
    out.noetherian_witness = "none: an ε-relation rules out positive weights";
    return out;
  }
  if (out.weight_homogeneous) {
    out.noetherian_witness =
        "generator weights are positive and every relation is weight-balanced";
  } else {
    out.noetherian_witness = "none: some relation is not weight-balanced";
    out.reasons.emplace_back("no integer weight witness of noetherianity");
  }

  DiamondChecker checker(p, b);
  for (Letter s : p.generators()) {
    for (auto const& r : p.relations()) {
      for (auto d : {Direction::lhs_to_rhs, Direction::rhs_to_lhs}) {
        out.pairs.push_back(checker.check(s, r.index, d));
      }
    }
  }

  bool all_verified = true;
  bool failed = false;
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    auto const& rep = out.pairs[i];
    if (rep.status == DiamondReport::Status::verified) {
      continue;
    }
    all_verified = false;
    if (rep.status != DiamondReport::Status::counterexample) {
      continue;
    }
    failed = true;
    if (out.certificate) {
      continue;
    }
    // Γ from (s, w) to (u1, v1) with no partner from (s, w') makes
    // w'·u1 ≡ s·v1; completeness fails iff some such pair does not reverse
    // to (ε, ε)
    auto const [u1, v1] = rep.counterexample->target();
    Word const& w2 = to_side(p.relations()[rep.relation], rep.direction);
    WordPair pair{concat(w2, u1), concat(Word{rep.generator}, v1)};
    if (checker.cache().equivalent(pair.first, pair.second).is_equivalent() &&
        decide_equiv_by_reversing(p, pair.first, pair.second, b) == Decision::no) {
      out.witness = i;
      out.certificate = std::move(pair);
    }
  }

  if (out.certificate) {
    out.verdict = CompletenessReport::Verdict::incomplete;
  } else if (all_verified && out.weight_homogeneous) {
    out.verdict = CompletenessReport::Verdict::complete;
  } else {
    if (failed) {
      out.reasons.emplace_back(
          "the diamond condition fails but no counterexample pair was certified");
    }
    if (!all_verified && !failed) {
      out.reasons.emplace_back("some diamond check was inconclusive");
    }
  }
  return out;
}

DefectResult defect(CompletenessReport const& report) {
  DefectResult out;
  switch (report.verdict) {
    case CompletenessReport::Verdict::incomplete: {
      auto const& rep = report.pairs[*report.witness];
      out.value = Distance::infinite();
      out.witness = DefectWitness{rep.generator, rep.relation, rep.direction,
                                  *rep.counterexample, std::nullopt};
      out.reason = "a grid has no equivalent partner";
      return out;
    }
    case CompletenessReport::Verdict::inconclusive:
      out.value = Distance::unknown();
      out.reason = "completeness is undecided";
      return out;
    case CompletenessReport::Verdict::complete:
      break;
  }
  std::size_t best = 0;
  for (auto const& rep : report.pairs) {
    for (auto const& m : rep.matching) {
      if (!out.witness || m.distance > best) {
        best = m.distance;
        out.witness =
            DefectWitness{rep.generator, rep.relation, rep.direction, m.grid, m.partner};
      }
    }
  }
  out.value = Distance::finite(best);
  return out;
}

DefectResult defect(Presentation const& p, Budget const& b) {
  return defect(check_completeness(p, b));
}

}  // namespace reversal
