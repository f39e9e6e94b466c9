// Letters and words over an interned alphabet.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reversal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator, interned as a dense index into the alphabet of the owning
/// Presentation.  The reserved value epsilon() marks an empty edge segment
/// inside a reversing grid; parsed words never contain it.
struct Letter {
  std::uint32_t id = 0;

  static constexpr Letter epsilon() {
    return Letter{std::numeric_limits<std::uint32_t>::max()};
  }
  constexpr bool is_epsilon() const { return id == epsilon().id; }

  friend constexpr bool operator==(Letter const&, Letter const&) = default;
  friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;
using WordPair = std::pair<Word, Word>;

Word concat(Word const& u, Word const& v);
Word concat(Word const& u, Word const& v, Word const& w);

// Drops every epsilon() marker.
Word strip_epsilon(Word const& w);

Word reversed(Word w);

// Letters w[from, from + count), clamped to the word.
Word subword(Word const& w, std::size_t from,
             std::size_t count = std::numeric_limits<std::size_t>::max());

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

struct WordPairHash {
  std::size_t operator()(WordPair const& p) const noexcept;
};

}  // namespace reversal
