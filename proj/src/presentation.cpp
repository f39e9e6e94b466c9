#include "reversal/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace reversal {

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const& what)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string_view to_string(Diagnostic::Level level) {
  switch (level) {
    case Diagnostic::Level::info:
      return "info";
    case Diagnostic::Level::warning:
      return "warning";
    case Diagnostic::Level::error:
      return "error";
  }
  return "info";
}

bool is_valid_token(std::string_view token) {
  if (token.empty() || !std::isalpha(static_cast<unsigned char>(token[0]))) {
    return false;
  }
  return std::all_of(token.begin() + 1, token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '^' || c == '-';
  });
}

namespace {

// Unordered pair key used to detect repeated relations.
std::pair<Word, Word> unordered_key(Word const& a, Word const& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<WordPair> const& relations,
                           std::vector<std::uint64_t> weights)
    : names_(std::move(generators)), weights_(std::move(weights)) {
  std::set<std::string_view> seen;
  for (auto const& name : names_) {
    if (!is_valid_token(name)) {
      throw Error("invalid generator token '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error("duplicate generator '" + name + "'");
    }
  }
  if (weights_.empty()) {
    weights_.assign(names_.size(), 1);
  }
  if (weights_.size() != names_.size()) {
    throw Error("expected one weight per generator");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) {
      throw Error("weight of '" + names_[i] + "' must be positive");
    }
  }

  std::set<std::pair<Word, Word>> keys;
  for (auto const& [lhs, rhs] : relations) {
    for (auto const* side : {&lhs, &rhs}) {
      for (Letter x : *side) {
        if (x.id >= names_.size()) {
          throw Error("relation uses a letter outside the alphabet");
        }
      }
    }
    std::string const shown = format(lhs) + " = " + format(rhs);
    if (lhs == rhs) {
      notes_.push_back({Diagnostic::Level::info, "trivial-relation",
                        "dropped trivial relation " + shown});
      continue;
    }
    if (!keys.insert(unordered_key(lhs, rhs)).second) {
      notes_.push_back({Diagnostic::Level::info, "duplicate-relation",
                        "dropped duplicate relation " + shown});
      continue;
    }
    relations_.push_back(Relation{lhs, rhs, relations_.size()});
  }
}

std::vector<Letter> Presentation::generators() const {
  std::vector<Letter> out;
  out.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    out.push_back(Letter{i});
  }
  return out;
}

std::string const& Presentation::name(Letter x) const {
  if (x.id >= names_.size()) {
    throw Error("letter id " + std::to_string(x.id) + " out of range");
  }
  return names_[x.id];
}

std::optional<Letter> Presentation::find(std::string_view token) const {
  auto it = std::find(names_.begin(), names_.end(), token);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return Letter{static_cast<std::uint32_t>(it - names_.begin())};
}

Letter Presentation::letter(std::string_view token) const {
  if (auto x = find(token)) {
    return *x;
  }
  throw Error("unknown letter '" + std::string(token) + "'");
}

std::uint64_t Presentation::weight(Letter x) const {
  if (x.id >= weights_.size()) {
    throw Error("letter id " + std::to_string(x.id) + " out of range");
  }
  return weights_[x.id];
}

bool Presentation::has_epsilon_relation() const {
  return std::any_of(relations_.begin(), relations_.end(),
                     [](Relation const& r) { return r.is_epsilon_relation(); });
}

bool Presentation::is_weight_homogeneous() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [this](Relation const& r) {
                       return weight_of(*this, r.lhs) ==
                              weight_of(*this, r.rhs);
                     });
}

Word Presentation::word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::string> tokens;
  while (in >> token) {
    tokens.push_back(token);
  }
  if (tokens.size() == 1 && tokens[0] == "1") {
    return out;
  }
  for (auto const& t : tokens) {
    out.push_back(letter(t));
  }
  return out;
}

std::string Presentation::format(Word const& w) const {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += w[i].is_epsilon() ? std::string("ε") : name(w[i]);
  }
  return out;
}

bool operator==(Presentation const& a, Presentation const& b) {
  if (a.names_ != b.names_ || a.weights_ != b.weights_ ||
      a.relations_.size() != b.relations_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.relations_.size(); ++i) {
    if (a.relations_[i].lhs != b.relations_[i].lhs ||
        a.relations_[i].rhs != b.relations_[i].rhs) {
      return false;
    }
  }
  return true;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Splits on whitespace; '=' is always a token of its own.
std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char const c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '=') {
      out.push_back({"=", offset + i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '=') {
      ++j;
    }
    out.push_back({std::string(line.substr(i, j - i)), offset + i + 1});
    i = j;
  }
  return out;
}

std::vector<Token> split_whitespace(std::string_view line,
                                    std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    out.push_back({std::string(line.substr(i, j - i)), offset + i + 1});
    i = j;
  }
  return out;
}

struct Directive {
  std::size_t line;
  std::size_t column;  // where the directive keyword starts
  std::string keyword;
  std::string_view body;
  std::size_t body_offset;  // 0-based column of body[0]
};

}  // namespace

Presentation parse_presentation(std::string_view source) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= source.size()) {
      auto end = source.find('\n', start);
      if (end == std::string_view::npos) {
        end = source.size();
      }
      std::string line(source.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      lines.push_back(std::move(line));
      start = end + 1;
    }
  }

  std::vector<Directive> directives;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      continue;
    }
    auto colon = line.find(':', first);
    if (colon == std::string_view::npos) {
      throw ParseError(n + 1, first + 1, "expected 'gens:', 'weights:' or 'rel:'");
    }
    std::string keyword(line.substr(first, colon - first));
    while (!keyword.empty() &&
           std::isspace(static_cast<unsigned char>(keyword.back()))) {
      keyword.pop_back();
    }
    if (keyword != "gens" && keyword != "weights" && keyword != "rel") {
      throw ParseError(n + 1, first + 1, "unknown directive '" + keyword + "'");
    }
    directives.push_back(
        {n + 1, first + 1, keyword, line.substr(colon + 1), colon + 1});
  }

  std::vector<std::string> names;
  std::map<std::string, Letter, std::less<>> index;
  bool have_gens = false;
  for (auto const& d : directives) {
    if (d.keyword != "gens") {
      continue;
    }
    if (have_gens) {
      throw ParseError(d.line, d.column, "'gens:' given more than once");
    }
    have_gens = true;
    for (auto const& t : split_whitespace(d.body, d.body_offset)) {
      if (!is_valid_token(t.text)) {
        throw ParseError(d.line, t.column, "invalid generator token '" + t.text + "'");
      }
      if (index.count(t.text) != 0) {
        throw ParseError(d.line, t.column, "duplicate generator '" + t.text + "'");
      }
      index.emplace(t.text, Letter{static_cast<std::uint32_t>(names.size())});
      names.push_back(t.text);
    }
  }
  if (!have_gens) {
    throw ParseError(1, 1, "missing 'gens:' line");
  }

  auto lookup = [&](Directive const& d, Token const& t) {
    auto it = index.find(t.text);
    if (it == index.end()) {
      throw ParseError(d.line, t.column, "unknown letter '" + t.text + "'");
    }
    return it->second;
  };

  std::vector<std::uint64_t> weights(names.size(), 1);
  bool have_weights = false;
  std::vector<WordPair> relations;
  for (auto const& d : directives) {
    if (d.keyword == "weights") {
      if (have_weights) {
        throw ParseError(d.line, d.column, "'weights:' given more than once");
      }
      have_weights = true;
      for (auto const& t : split_whitespace(d.body, d.body_offset)) {
        auto eq = t.text.find('=');
        if (eq == std::string::npos) {
          throw ParseError(d.line, t.column, "expected <token>=<weight>");
        }
        Token const name{t.text.substr(0, eq), t.column};
        Letter const x = lookup(d, name);
        std::string const digits = t.text.substr(eq + 1);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(),
                                         digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size() ||
            digits.empty()) {
          throw ParseError(d.line, t.column + eq + 1,
                           "malformed weight '" + digits + "'");
        }
        if (value <= 0) {
          throw ParseError(d.line, t.column + eq + 1,
                           "non-positive weight for '" + name.text + "'");
        }
        weights[x.id] = static_cast<std::uint64_t>(value);
      }
    } else if (d.keyword == "rel") {
      auto tokens = tokenize(d.body, d.body_offset);
      auto eq = std::find_if(tokens.begin(), tokens.end(),
                             [](Token const& t) { return t.text == "="; });
      if (eq == tokens.end()) {
        throw ParseError(d.line, d.column, "relation without '='");
      }
      if (std::find_if(eq + 1, tokens.end(), [](Token const& t) {
            return t.text == "=";
          }) != tokens.end()) {
        throw ParseError(d.line, d.column, "relation with more than one '='");
      }
      auto read_side = [&](auto first, auto last) {
        Word w;
        if (first == last ||
            (std::distance(first, last) == 1 && first->text == "1")) {
          return w;
        }
        for (auto it = first; it != last; ++it) {
          if (it->text == "1") {
            throw ParseError(d.line, it->column, "'1' must stand alone");
          }
          w.push_back(lookup(d, *it));
        }
        return w;
      };
      Word lhs = read_side(tokens.begin(), eq);
      Word rhs = read_side(eq + 1, tokens.end());
      if (lhs.empty() != rhs.empty()) {
        throw ParseError(d.line, d.column,
                         "ε-relation is invalid for reversing");
      }
      relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  }
  return Presentation(std::move(names), relations, std::move(weights));
}

std::string format_presentation(Presentation const& p) {
  std::ostringstream out;
  out << "gens:";
  for (Letter x : p.generators()) {
    out << ' ' << p.name(x);
  }
  out << '\n';
  bool const unit = std::all_of(p.weights().begin(), p.weights().end(),
                                [](std::uint64_t w) { return w == 1; });
  if (!unit) {
    out << "weights:";
    for (Letter x : p.generators()) {
      out << ' ' << p.name(x) << '=' << p.weight(x);
    }
    out << '\n';
  }
  for (auto const& r : p.relations()) {
    out << "rel: " << p.format(r.lhs) << " = " << p.format(r.rhs) << '\n';
  }
  return out.str();
}

std::uint64_t weight_of(Presentation const& p, Word const& w) {
  std::uint64_t total = 0;
  for (Letter x : w) {
    if (!x.is_epsilon()) {
      total += p.weight(x);
    }
  }
  return total;
}

Presentation mirror(Presentation const& p) {
  std::vector<std::string> names;
  for (Letter x : p.generators()) {
    names.push_back(p.name(x));
  }
  std::vector<WordPair> relations;
  for (auto const& r : p.relations()) {
    relations.emplace_back(reversed(r.lhs), reversed(r.rhs));
  }
  return Presentation(std::move(names), relations, p.weights());
}

std::vector<Relation> left_cancel_conflicts(Presentation const& p) {
  std::vector<Relation> out;
  for (auto const& r : p.relations()) {
    if (!r.lhs.empty() && !r.rhs.empty() && r.lhs[0] == r.rhs[0] &&
        r.lhs != r.rhs) {
      out.push_back(r);
    }
  }
  return out;
}

bool is_right_complemented(Presentation const& p) {
  std::set<std::pair<Letter, Letter>> pairs;
  for (auto const& r : p.relations()) {
    if (r.lhs.empty() || r.rhs.empty()) {
      continue;
    }
    Letter s = r.lhs[0];
    Letter t = r.rhs[0];
    if (s == t) {
      return false;
    }
    if (t < s) {
      std::swap(s, t);
    }
    if (!pairs.emplace(s, t).second) {
      return false;
    }
  }
  return true;
}

std::vector<Diagnostic> validate(Presentation const& p) {
  std::vector<Diagnostic> out = p.notes();
  for (auto const& r : p.relations()) {
    if (r.is_epsilon_relation()) {
      out.push_back({Diagnostic::Level::error, "epsilon-relation",
                     "relation " + std::to_string(r.index) + " (" +
                         p.format(r.lhs) + " = " + p.format(r.rhs) +
                         ") is an ε-relation; reversing does not apply"});
    }
  }
  if (p.is_weight_homogeneous()) {
    out.push_back({Diagnostic::Level::info, "weight-homogeneous",
                   "every relation is weight-balanced; the weight map "
                   "witnesses right noetherianity"});
  } else {
    for (auto const& r : p.relations()) {
      if (weight_of(p, r.lhs) != weight_of(p, r.rhs)) {
        out.push_back({Diagnostic::Level::warning, "not-homogeneous",
                       "relation " + std::to_string(r.index) + " (" +
                           p.format(r.lhs) + " = " + p.format(r.rhs) +
                           ") is not weight-balanced; no noetherianity "
                           "witness"});
      }
    }
  }
  for (auto const& r : left_cancel_conflicts(p)) {
    out.push_back({Diagnostic::Level::warning, "left-cancel-conflict",
                   "relation " + std::to_string(r.index) + " (" +
                       p.format(r.lhs) + " = " + p.format(r.rhs) +
                       ") has both sides starting with the same letter"});
  }
  if (is_right_complemented(p)) {
    out.push_back({Diagnostic::Level::info, "complemented",
                   "right complemented: reversing is deterministic"});
  } else {
    out.push_back({Diagnostic::Level::info, "not-complemented",
                   "not right complemented: reversing may branch"});
  }
  return out;
}

}  // namespace reversal
