#pragma once

#include <cstddef>
#include <cstdint>

namespace reversal {

/// Resource bounds shared by every search.  Exceeding a bound always yields
/// an explicit inconclusive status.
struct Budget {
  // words visited by one congruence-class exploration
  std::size_t max_class_size = 100000;
  // cells on one branch of a grid enumeration (and memoized subproblems in
  // target enumeration)
  std::size_t max_cells = 10000;
  // completed grids (or distinct targets) per enumeration
  std::size_t max_grids = 10000;
  // heaviest word the congruence oracle will visit
  std::uint64_t max_word_weight = 12;

  // Throws Error unless every field is positive.
  void check() const;

  // Cells placed across all branches of one enumeration.
  std::size_t work_limit() const;
};

}  // namespace reversal
