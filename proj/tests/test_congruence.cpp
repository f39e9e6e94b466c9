#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "reversal/catalog.hpp"
#include "reversal/congruence.hpp"

using namespace reversal;

TEST_CASE("equivalence classes") {
  auto const b4 = catalog::braid(4);
  auto const cls = equivalence_class(b4, b4.word("s1 s2 s1"));
  CHECK(cls.complete);
  CHECK(cls.words == std::vector<Word>{b4.word("s1 s2 s1"), b4.word("s2 s1 s2")});

  auto const e = equivalence_class(b4, {});
  CHECK(e.complete);
  CHECK(e.words == std::vector<Word>{Word{}});

  // the word from the incompleteness certificate has a two element class
  // when its colors differ
  auto const r = catalog::restricted_colored(4, 3);
  for (auto const& [a, b, c] : {std::tuple{"a", "b", "c"}, std::tuple{"a", "b", "b"},
                                std::tuple{"b", "a", "c"}}) {
    auto const w = r.word(std::string("s3.") + c + " s2." + a + " s1." + c +
                          " s3." + b + " s2." + b);
    auto const k = equivalence_class(r, w);
    CHECK(k.complete);
    CHECK(k.words.size() == 2);
    CHECK(k.words.size() == oracle::klass(r, w).size());
  }
}

TEST_CASE("class exploration stops at the budget") {
  auto const b4 = catalog::braid(4);
  Budget b;
  b.max_class_size = 3;
  auto const w = b4.word("s1 s2 s1 s3 s2 s1");
  auto const k = equivalence_class(b4, w, b);
  CHECK_FALSE(k.complete);
  CHECK(k.words.size() <= 3);
  b = {};
  b.max_word_weight = 4;
  CHECK_FALSE(equivalence_class(b4, w, b).complete);
  CHECK(are_equivalent(b4, w, b4.word("s3 s2 s1 s3 s2 s3"), b).status ==
        EquivalenceOutcome::Status::budget_exhausted);
  Budget zero;
  zero.max_cells = 0;
  CHECK_THROWS_AS(equivalence_class(b4, w, zero), Error);
}

TEST_CASE("are_equivalent examples") {
  auto const b4 = catalog::braid(4);
  auto const u = b4.word("s1 s2 s3");
  auto const same = are_equivalent(b4, u, u);
  CHECK(same.is_equivalent());
  CHECK(same.distance == 0);

  auto const one = are_equivalent(b4, b4.word("s1 s2 s1"), b4.word("s2 s1 s2"));
  CHECK(one.is_equivalent());
  CHECK(one.distance == 1);

  auto const c = catalog::colored_braid(4, 2);
  auto const no = are_equivalent(c, c.word("s1.a"), c.word("s1.b"));
  CHECK(no.status == EquivalenceOutcome::Status::not_equivalent);

  // the incompleteness certificate for two colors
  auto const r = catalog::restricted_colored(4, 2);
  auto const lhs = r.word("s2.b s3.b s2.b s1.a s2.b s3.a");
  auto const rhs = r.word("s1.a s3.b s2.a s1.b s3.b s2.b");
  auto const counter = are_equivalent(r, lhs, rhs);
  CHECK(counter.is_equivalent());
  CHECK(counter.distance >= 2);
  CHECK(counter.distance == *oracle::distance(r, lhs, rhs));
  CHECK(counter.distance == 5);
}

TEST_CASE("comb_distance") {
  auto const b4 = catalog::braid(4);
  auto const w = b4.word("s1 s2 s3 s1");
  CHECK(comb_distance(b4, w, w) == Distance::finite(0));
  CHECK(comb_distance(b4, b4.word("s1 s3"), b4.word("s3 s1")) == Distance::finite(1));
  CHECK(comb_distance(b4, b4.word("s1 s2 s1"), b4.word("s1 s3 s1")) ==
        Distance::infinite());
  Budget tight;
  tight.max_class_size = 2;
  CHECK(comb_distance(b4, b4.word("s1 s2 s1 s3 s2 s1"),
                      b4.word("s3 s2 s3 s1 s2 s3"), tight) == Distance::unknown());
}

TEST_CASE("oracle agreement on random pairs") {
  std::mt19937 rng(20261019);
  for (auto const& p : {catalog::braid(3), catalog::braid(4),
                        catalog::colored_braid(3, 2), catalog::malcev()}) {
    CongruenceCache cache(p, Budget{});
    for (int i = 0; i < 150; ++i) {
      auto const n = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
      auto const u = oracle::random_word(p, n, rng);
      // half of the pairs are related by construction
      Word v;
      if (i % 2 == 0) {
        auto const k = oracle::klass(p, u);
        auto it = k.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, k.size() - 1)(rng));
        v = *it;
      } else {
        v = oracle::random_word(p, n, rng);
      }
      auto const expected = oracle::distance(p, u, v);
      auto const got = are_equivalent(p, u, v);
      REQUIRE(got.is_decided());
      CHECK(got.is_equivalent() == expected.has_value());
      auto const cached = cache.equivalent(u, v);
      CHECK(cached.is_equivalent() == expected.has_value());
      if (expected) {
        CHECK(got.distance == *expected);
        CHECK(cached.distance == *expected);
        CHECK(cache.distance(v, u) == Distance::finite(*expected));
      }
    }
  }
}

TEST_CASE("congruence properties") {
  std::mt19937 rng(7);
  for (auto const& p : {catalog::braid(3), catalog::braid(4)}) {
    for (int i = 0; i < 100; ++i) {
      auto const n = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
      auto const u = oracle::random_word(p, n, rng);
      auto const k = oracle::klass(p, u);
      auto pick = [&] {
        auto it = k.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, k.size() - 1)(rng));
        return *it;
      };
      auto const v = i % 3 == 0 ? oracle::random_word(p, n, rng) : pick();
      auto const w = pick();
      auto const uv = are_equivalent(p, u, v);
      auto const vu = are_equivalent(p, v, u);
      CHECK(uv.status == vu.status);
      CHECK(uv.distance == vu.distance);
      auto const uw = are_equivalent(p, u, w);
      auto const vw = are_equivalent(p, v, w);
      if (uv.is_equivalent() && vw.is_equivalent()) {
        CHECK(uw.is_equivalent());
        CHECK(uw.distance <= uv.distance + vw.distance);
      }
      CHECK((comb_distance(p, u, v) == Distance::finite(0)) == (u == v));

      // homogeneous classes keep their weight and are closed
      auto const cls = equivalence_class(p, u);
      REQUIRE(cls.complete);
      Rewriter const rw(p);
      for (auto const& x : cls.words) {
        CHECK(weight_of(p, x) == weight_of(p, u));
        rw.for_each_neighbour(x, [&](Word const& y) {
          CHECK(std::binary_search(cls.words.begin(), cls.words.end(), y));
        });
      }
    }
  }
}
