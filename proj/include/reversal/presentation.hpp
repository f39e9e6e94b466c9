// Monoid presentations: alphabet, relations, generator weights, and the
// syntactic checks that the reversing-based procedures depend on.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reversal/word.hpp"

namespace reversal {

/// Raised by parse_presentation; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A relation lhs = rhs.  The pair is unordered; the stored orientation is
/// the one given at construction and every consumer treats both.
struct Relation {
  Word lhs;
  Word rhs;
  std::size_t index = 0;

  bool is_epsilon_relation() const { return lhs.empty() != rhs.empty(); }
};

struct Diagnostic {
  enum class Level { info, warning, error };

  Level level = Level::info;
  std::string code;
  std::string message;
};

std::string_view to_string(Diagnostic::Level level);

// True iff `token` matches [A-Za-z][A-Za-z0-9_.^-]*.
bool is_valid_token(std::string_view token);

class Presentation {
 public:
  Presentation() = default;

  /// Builds a presentation over `generators` (display tokens, in id order).
  /// `weights` is either empty (all weights 1) or one positive weight per
  /// generator.  Relations that repeat an earlier one as an unordered pair,
  /// or whose two sides coincide, are dropped and recorded in notes().
  /// Throws Error on an invalid or duplicate token, an out-of-range letter or
  /// a non-positive weight.
  Presentation(std::vector<std::string> generators,
               std::vector<WordPair> const& relations,
               std::vector<std::uint64_t> weights = {});

  std::size_t size() const { return names_.size(); }
  std::vector<Letter> generators() const;
  std::string const& name(Letter x) const;
  std::optional<Letter> find(std::string_view token) const;
  Letter letter(std::string_view token) const;

  std::vector<Relation> const& relations() const { return relations_; }
  std::uint64_t weight(Letter x) const;
  std::vector<std::uint64_t> const& weights() const { return weights_; }
  std::vector<Diagnostic> const& notes() const { return notes_; }

  bool has_epsilon_relation() const;
  bool is_weight_homogeneous() const;

  /// Parses space separated tokens; "1" (or an empty string) spells ε.
  Word word(std::string_view text) const;
  /// Space separated tokens, "1" for the empty word, "ε" for empty segments.
  std::string format(Word const& w) const;

  friend bool operator==(Presentation const& a, Presentation const& b);

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> weights_;
  std::vector<Relation> relations_;
  std::vector<Diagnostic> notes_;
};

/// Reads the line-oriented presentation format:
///
///   # comment
///   gens: a b c
///   weights: a=2 b=1
///   rel: a b = b a
///   rel: a = 1          <- rejected, ε-relation
Presentation parse_presentation(std::string_view source);

/// Inverse of parse_presentation for presentations without ε-relations.
std::string format_presentation(Presentation const& p);

std::uint64_t weight_of(Presentation const& p, Word const& w);

/// Every relation side letter-reversed; alphabet and weights unchanged.
Presentation mirror(Presentation const& p);

/// Relations s·w = s·w' with w, w' distinct.
std::vector<Relation> left_cancel_conflicts(Presentation const& p);

/// At most one relation s... = t... per unordered pair {s, t} with s != t,
/// and no relation s... = s....
bool is_right_complemented(Presentation const& p);

std::vector<Diagnostic> validate(Presentation const& p);

}  // namespace reversal
