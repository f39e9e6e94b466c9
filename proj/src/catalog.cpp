#include "reversal/catalog.hpp"

#include <string>

namespace reversal::catalog {

namespace {

void check_strands(std::size_t n) {
  if (n < 2) {
    throw Error("a braid-like presentation needs at least 2 strands");
  }
}

Presentation colored(std::size_t n, std::size_t k, bool restricted) {
  check_strands(n);
  if (k == 0) {
    throw Error("the color set must be nonempty");
  }
  auto const colors = color_names(k);
  std::vector<std::string> gens;
  for (std::size_t i = 1; i < n; ++i) {
    for (auto const& c : colors) {
      gens.push_back("s" + std::to_string(i) + "." + c);
    }
  }
  auto gen = [k](std::size_t i, std::size_t c) {
    return Letter{static_cast<std::uint32_t>((i - 1) * k + c)};
  };
  std::vector<WordPair> rels;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j - i == 1) {
        for (std::size_t x = 0; x < k; ++x) {
          for (std::size_t y = 0; y < k; ++y) {
            for (std::size_t z = 0; z < k; ++z) {
              if (restricted && x != y && y != z) {
                continue;
              }
              rels.push_back({{gen(i, x), gen(j, y), gen(i, z)},
                              {gen(j, z), gen(i, y), gen(j, x)}});
            }
          }
        }
      } else {
        for (std::size_t x = 0; x < k; ++x) {
          for (std::size_t y = 0; y < k; ++y) {
            rels.push_back({{gen(i, x), gen(j, y)}, {gen(j, y), gen(i, x)}});
          }
        }
      }
    }
  }
  return Presentation(std::move(gens), rels);
}

}  // namespace

Presentation braid(std::size_t n) {
  check_strands(n);
  std::vector<std::string> gens;
  for (std::size_t i = 1; i < n; ++i) {
    gens.push_back("s" + std::to_string(i));
  }
  auto s = [](std::size_t i) { return Letter{static_cast<std::uint32_t>(i - 1)}; };
  std::vector<WordPair> rels;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j - i == 1) {
        rels.push_back({{s(i), s(j), s(i)}, {s(j), s(i), s(j)}});
      } else {
        rels.push_back({{s(i), s(j)}, {s(j), s(i)}});
      }
    }
  }
  return Presentation(std::move(gens), rels);
}

std::vector<std::string> color_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < k; ++c) {
    out.push_back(c < 26 ? std::string(1, static_cast<char>('a' + c))
                         : "c" + std::to_string(c));
  }
  return out;
}

Presentation colored_braid(std::size_t n, std::size_t colors) {
  return colored(n, colors, false);
}

Presentation restricted_colored(std::size_t n, std::size_t colors) {
  return colored(n, colors, true);
}

Presentation malcev() {
  std::vector<std::string> gens{"a", "b", "c", "d", "ap", "bp", "cp", "dp"};
  auto l = [](std::uint32_t i) { return Letter{i}; };
  std::vector<WordPair> rels{
      {{l(0), l(2)}, {l(1), l(3)}},
      {{l(0), l(6)}, {l(1), l(7)}},
      {{l(4), l(2)}, {l(5), l(3)}},
  };
  return Presentation(std::move(gens), rels);
}

Presentation free_monoid(std::size_t k) {
  return Presentation(color_names(k), {});
}

std::vector<std::string> const& names() {
  static std::vector<std::string> const all{"braid", "colored-braid",
                                            "restricted-colored", "malcev", "free"};
  return all;
}

Presentation by_name(std::string_view name, std::size_t n, std::size_t colors) {
  if (name == "braid") {
    return braid(n);
  }
  if (name == "colored-braid") {
    return colored_braid(n, colors);
  }
  if (name == "restricted-colored") {
    return restricted_colored(n, colors);
  }
  if (name == "malcev") {
    return malcev();
  }
  if (name == "free") {
    return free_monoid(colors);
  }
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace reversal::catalog
