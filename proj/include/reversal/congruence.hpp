// Breadth-first exploration of ≡_R classes: the congruence oracle every
// reversing-based verdict is checked against.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "reversal/budget.hpp"
#include "reversal/presentation.hpp"

namespace reversal {

struct EquivalenceOutcome {
  enum class Status { equivalent, not_equivalent, budget_exhausted };

  Status status = Status::budget_exhausted;
  // dist_R(u, v); meaningful only for Status::equivalent
  std::size_t distance = 0;
  // words visited
  std::size_t explored = 0;

  bool is_equivalent() const { return status == Status::equivalent; }
  bool is_decided() const { return status != Status::budget_exhausted; }
};

struct EquivalenceClass {
  std::vector<Word> words;  // sorted
  bool complete = false;
};

/// Combinatorial distance, or one of the two markers.
struct Distance {
  enum class Kind { finite, infinite, unknown };

  Kind kind = Kind::unknown;
  std::size_t value = 0;

  static Distance finite(std::size_t d) { return {Kind::finite, d}; }
  static Distance infinite() { return {Kind::infinite, 0}; }
  static Distance unknown() { return {Kind::unknown, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  friend bool operator==(Distance const&, Distance const&) = default;
};

/// Calls f(word) for every single application of a relation, in either
/// orientation, at every position of w.  Duplicates are possible.
class Rewriter {
 public:
  explicit Rewriter(Presentation const& p);

  template <typename F>
  void for_each_neighbour(Word const& w, F&& f) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos].id >= by_first_.size()) {
        continue;
      }
      for (auto const& rule : by_first_[w[pos].id]) {
        auto const& from = rule.first;
        if (pos + from.size() > w.size() ||
            !std::equal(from.begin(), from.end(), w.begin() + pos)) {
          continue;
        }
        Word next;
        next.reserve(w.size() - from.size() + rule.second.size());
        next.insert(next.end(), w.begin(), w.begin() + pos);
        next.insert(next.end(), rule.second.begin(), rule.second.end());
        next.insert(next.end(), w.begin() + pos + from.size(), w.end());
        f(next);
      }
    }
  }

 private:
  // oriented rules (from, to) indexed by from[0]
  std::vector<std::vector<WordPair>> by_first_;
};

/// Breadth-first closure of {w} under relation applications.  complete is
/// true iff a fixed point was reached within the budget.
EquivalenceClass equivalence_class(Presentation const& p, Word const& w,
                                   Budget const& b = {});

/// Bidirectional breadth-first search.  not_equivalent is only returned when
/// the class of one input has been exhausted.
EquivalenceOutcome are_equivalent(Presentation const& p, Word const& u,
                                  Word const& v, Budget const& b = {});

Distance comb_distance(Presentation const& p, Word const& u, Word const& v,
                       Budget const& b = {});

/// Memoizing oracle for repeated queries against one presentation: each
/// source word's class is explored once, single-directionally, and its
/// distance map reused.  Not thread-safe; meant to live inside one call.
class CongruenceCache {
 public:
  CongruenceCache(Presentation const& p, Budget const& b);

  EquivalenceOutcome equivalent(Word const& u, Word const& v);
  Distance distance(Word const& u, Word const& v);

 private:
  struct Explored {
    std::unordered_map<Word, std::size_t, WordHash> dist;
    bool complete = false;
  };

  Explored const& explore(Word const& w);

  Presentation const* presentation_;
  Budget budget_;
  Rewriter rewriter_;
  std::unordered_map<Word, Explored, WordHash> cache_;
};

}  // namespace reversal
