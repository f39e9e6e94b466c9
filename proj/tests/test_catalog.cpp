#include <map>
#include <set>

#include "doctest.h"

#include "reversal/catalog.hpp"

using namespace reversal;

namespace {

// relations of p with every letter renamed by `rename`, as unordered pairs
std::set<std::set<Word>> renamed(Presentation const& p,
                                 std::map<Letter, Letter> const& rename) {
  std::set<std::set<Word>> out;
  for (auto const& r : p.relations()) {
    std::set<Word> pair;
    for (auto const& w : {r.lhs, r.rhs}) {
      Word x;
      for (Letter l : w) {
        x.push_back(rename.at(l));
      }
      pair.insert(x);
    }
    out.insert(pair);
  }
  return out;
}

std::map<Letter, Letter> erase_colors(Presentation const& colored, Presentation const& plain) {
  std::map<Letter, Letter> out;
  for (Letter x : colored.generators()) {
    auto const& name = colored.name(x);
    out.emplace(x, plain.letter(name.substr(0, name.find('.'))));
  }
  return out;
}

// every relation of the colored family, written out without the catalog
std::set<std::set<Word>> brute_colored(Presentation const& p, std::size_t n,
                                       std::size_t k, bool restricted) {
  auto const colors = catalog::color_names(k);
  auto g = [&](std::size_t i, std::size_t c) {
    return p.letter("s" + std::to_string(i) + "." + colors[c]);
  };
  std::set<std::set<Word>> out;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) {
        continue;
      }
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (i + 1 == j || j + 1 == i) {
            for (std::size_t z = 0; z < k; ++z) {
              // restricted: s_i^x s_j^x s_i^y = s_j^y s_i^x s_j^x, no z
              if (restricted && z != 0) {
                continue;
              }
              Word const lhs{g(i, x), g(j, restricted ? x : y), g(i, restricted ? y : z)};
              Word const rhs = restricted ? Word{g(j, y), g(i, x), g(j, x)}
                                          : Word{g(j, z), g(i, y), g(j, x)};
              out.insert({lhs, rhs});
            }
          } else {
            out.insert({Word{g(i, x), g(j, y)}, Word{g(j, y), g(i, x)}});
          }
        }
      }
    }
  }
  return out;
}

std::set<std::set<Word>> relation_set(Presentation const& p) {
  std::set<std::set<Word>> out;
  for (auto const& r : p.relations()) {
    out.insert({r.lhs, r.rhs});
  }
  return out;
}

}  // namespace

TEST_CASE("braid") {
  CHECK(catalog::braid(2).size() == 1);
  CHECK(catalog::braid(2).relations().empty());
  CHECK(catalog::braid(3).size() == 2);
  CHECK(catalog::braid(3).relations().size() == 1);
  auto const b4 = catalog::braid(4);
  CHECK(b4.size() == 3);
  REQUIRE(b4.relations().size() == 3);
  CHECK(b4.relations()[0].lhs == b4.word("s1 s2 s1"));
  CHECK(b4.relations()[1].lhs == b4.word("s1 s3"));
  CHECK(b4.relations()[2].lhs == b4.word("s2 s3 s2"));
  CHECK_THROWS_AS(catalog::braid(1), Error);
}

TEST_CASE("colored braid") {
  auto const c = catalog::colored_braid(4, 2);
  CHECK(c.size() == 6);
  CHECK(c.relations().size() == 20);
  CHECK(c.name(Letter{0}) == "s1.a");
  CHECK(c.name(Letter{5}) == "s3.b");
  CHECK(c.notes().empty());
  auto const c3 = catalog::colored_braid(3, 2);
  CHECK(c3.size() == 4);
  CHECK(c3.relations().size() == 8);
  CHECK(catalog::colored_braid(5, 3).relations().size() == 3 * 27 + 3 * 9);
  for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}}) {
    auto const p = catalog::colored_braid(n, k);
    CHECK(relation_set(p) == brute_colored(p, n, k, false));
  }
  CHECK_THROWS_AS(catalog::colored_braid(4, 0), Error);
  CHECK_THROWS_AS(catalog::colored_braid(1, 2), Error);
}

TEST_CASE("one color gives the braid presentation") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const b = catalog::braid(n);
    for (auto const& c : {catalog::colored_braid(n, 1), catalog::restricted_colored(n, 1)}) {
      CHECK(c.relations().size() == b.relations().size());
      CHECK(renamed(c, erase_colors(c, b)) == relation_set(b));
    }
  }
}

TEST_CASE("restricted colored braid") {
  auto const r = catalog::restricted_colored(4, 2);
  auto const c = catalog::colored_braid(4, 2);
  CHECK(r.relations().size() == 16);
  CHECK(r.relations().size() < c.relations().size());
  auto const all = relation_set(c);
  for (auto const& rel : relation_set(r)) {
    CHECK(all.count(rel) == 1);
  }
  for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}}) {
    auto const p = catalog::restricted_colored(n, k);
    CHECK(relation_set(p) == brute_colored(p, n, k, true));
  }
}

TEST_CASE("malcev") {
  auto const m = catalog::malcev();
  CHECK(m.size() == 8);
  REQUIRE(m.relations().size() == 3);
  CHECK(m.relations()[0].lhs == m.word("a c"));
  CHECK(m.relations()[0].rhs == m.word("b d"));
  CHECK(m.relations()[1].lhs == m.word("a cp"));
  CHECK(m.relations()[2].rhs == m.word("bp d"));
  CHECK(m.is_weight_homogeneous());
  CHECK_FALSE(is_right_complemented(m));
}

TEST_CASE("every catalog entry is valid for reversing") {
  for (auto const& name : catalog::names()) {
    auto const p = catalog::by_name(name, 4, 2);
    CHECK_FALSE(p.has_epsilon_relation());
    CHECK(p.is_weight_homogeneous());
    CHECK(parse_presentation(format_presentation(p)) == p);
  }
  CHECK(catalog::by_name("free", 9, 3).size() == 3);
  CHECK_THROWS_AS(catalog::by_name("nope", 4, 2), Error);
  CHECK(catalog::color_names(28).back() == "c27");
}
