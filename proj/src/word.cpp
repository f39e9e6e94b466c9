#include "reversal/word.hpp"

#include <algorithm>

namespace reversal {

Word concat(Word const& u, Word const& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word concat(Word const& u, Word const& v, Word const& w) {
  Word out;
  out.reserve(u.size() + v.size() + w.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word strip_epsilon(Word const& w) {
  Word out;
  out.reserve(w.size());
  std::copy_if(w.begin(), w.end(), std::back_inserter(out),
               [](Letter x) { return !x.is_epsilon(); });
  return out;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word subword(Word const& w, std::size_t from, std::size_t count) {
  if (from >= w.size()) {
    return {};
  }
  auto const last = from + std::min(count, w.size() - from);
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(last));
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  // FNV-1a over the letter ids
  std::size_t h = 1469598103934665603ULL;
  for (Letter x : w) {
    h ^= x.id;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

std::size_t WordPairHash::operator()(WordPair const& p) const noexcept {
  WordHash hw;
  auto const a = hw(p.first);
  return a ^ (hw(p.second) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace reversal
