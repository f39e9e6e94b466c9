#include "reversal/congruence.hpp"

#include <algorithm>
#include <unordered_set>

namespace reversal {

void Budget::check() const {
  if (max_class_size == 0 || max_cells == 0 || max_grids == 0 ||
      max_word_weight == 0) {
    throw Error("every budget bound must be positive");
  }
}

std::size_t Budget::work_limit() const {
  constexpr std::size_t cap = std::size_t{1} << 40;
  if (max_grids != 0 && max_cells > cap / max_grids) {
    return cap;
  }
  return max_cells * max_grids;
}

Rewriter::Rewriter(Presentation const& p) : by_first_(p.size()) {
  for (auto const& r : p.relations()) {
    for (auto const& [from, to] : {WordPair{r.lhs, r.rhs}, WordPair{r.rhs, r.lhs}}) {
      if (from.empty()) {
        continue;  // ε-relations cannot be applied at a position
      }
      by_first_[from[0].id].emplace_back(from, to);
    }
  }
}

namespace {

using DistanceMap = std::unordered_map<Word, std::size_t, WordHash>;

bool too_heavy(Presentation const& p, Word const& w, Budget const& b) {
  return weight_of(p, w) > b.max_word_weight;
}

}  // namespace

EquivalenceClass equivalence_class(Presentation const& p, Word const& w,
                                   Budget const& b) {
  b.check();
  EquivalenceClass out;
  if (too_heavy(p, w, b)) {
    out.words.push_back(w);
    return out;
  }
  Rewriter const rw(p);
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> frontier{w};
  bool exhausted = false;
  while (!frontier.empty() && !exhausted) {
    std::vector<Word> next;
    for (auto const& x : frontier) {
      rw.for_each_neighbour(x, [&](Word const& y) {
        if (exhausted || seen.count(y) != 0) {
          return;
        }
        if (seen.size() >= b.max_class_size || too_heavy(p, y, b)) {
          exhausted = true;
          return;
        }
        seen.insert(y);
        next.push_back(y);
      });
    }
    frontier = std::move(next);
  }
  out.words.assign(seen.begin(), seen.end());
  std::sort(out.words.begin(), out.words.end());
  out.complete = !exhausted;
  return out;
}

EquivalenceOutcome are_equivalent(Presentation const& p, Word const& u,
                                  Word const& v, Budget const& b) {
  b.check();
  EquivalenceOutcome out;
  if (u == v) {
    out.status = EquivalenceOutcome::Status::equivalent;
    out.distance = 0;
    out.explored = 1;
    return out;
  }
  if (too_heavy(p, u, b) || too_heavy(p, v, b)) {
    out.status = EquivalenceOutcome::Status::budget_exhausted;
    return out;
  }
  Rewriter const rw(p);
  // side 0 grows from u, side 1 from v; the two maps stay disjoint until a
  // layer expansion meets the other side
  DistanceMap dist[2] = {{{u, 0}}, {{v, 0}}};
  std::vector<Word> frontier[2] = {{u}, {v}};
  std::size_t depth[2] = {0, 0};

  while (true) {
    if (frontier[0].empty() || frontier[1].empty()) {
      out.status = EquivalenceOutcome::Status::not_equivalent;
      break;
    }
    int const side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    auto& mine = dist[side];
    auto const& other = dist[1 - side];
    std::vector<Word> next;
    std::optional<std::size_t> best;
    bool exhausted = false;
    for (auto const& x : frontier[side]) {
      rw.for_each_neighbour(x, [&](Word const& y) {
        if (exhausted || mine.count(y) != 0) {
          return;
        }
        if (mine.size() + other.size() >= b.max_class_size ||
            too_heavy(p, y, b)) {
          exhausted = true;
          return;
        }
        mine.emplace(y, depth[side] + 1);
        next.push_back(y);
        if (auto it = other.find(y); it != other.end()) {
          auto const d = depth[side] + 1 + it->second;
          if (!best || d < *best) {
            best = d;
          }
        }
      });
    }
    if (best) {
      out.status = EquivalenceOutcome::Status::equivalent;
      out.distance = *best;
      break;
    }
    if (exhausted) {
      out.status = EquivalenceOutcome::Status::budget_exhausted;
      break;
    }
    frontier[side] = std::move(next);
    ++depth[side];
  }
  out.explored = dist[0].size() + dist[1].size();
  return out;
}

Distance comb_distance(Presentation const& p, Word const& u, Word const& v,
                       Budget const& b) {
  auto const r = are_equivalent(p, u, v, b);
  switch (r.status) {
    case EquivalenceOutcome::Status::equivalent:
      return Distance::finite(r.distance);
    case EquivalenceOutcome::Status::not_equivalent:
      return Distance::infinite();
    case EquivalenceOutcome::Status::budget_exhausted:
      break;
  }
  return Distance::unknown();
}

CongruenceCache::CongruenceCache(Presentation const& p, Budget const& b)
    : presentation_(&p), budget_(b), rewriter_(p) {
  budget_.check();
}

CongruenceCache::Explored const& CongruenceCache::explore(Word const& w) {
  if (auto it = cache_.find(w); it != cache_.end()) {
    return it->second;
  }
  Explored e;
  e.dist.emplace(w, 0);
  if (too_heavy(*presentation_, w, budget_)) {
    return cache_.emplace(w, std::move(e)).first->second;
  }
  std::vector<Word> frontier{w};
  std::size_t depth = 0;
  bool exhausted = false;
  while (!frontier.empty() && !exhausted) {
    std::vector<Word> next;
    for (auto const& x : frontier) {
      rewriter_.for_each_neighbour(x, [&](Word const& y) {
        if (exhausted || e.dist.count(y) != 0) {
          return;
        }
        if (e.dist.size() >= budget_.max_class_size ||
            too_heavy(*presentation_, y, budget_)) {
          exhausted = true;
          return;
        }
        e.dist.emplace(y, depth + 1);
        next.push_back(y);
      });
    }
    frontier = std::move(next);
    ++depth;
  }
  e.complete = !exhausted;
  return cache_.emplace(w, std::move(e)).first->second;
}

EquivalenceOutcome CongruenceCache::equivalent(Word const& u, Word const& v) {
  EquivalenceOutcome out;
  if (u == v) {
    out.status = EquivalenceOutcome::Status::equivalent;
    out.explored = 1;
    return out;
  }
  // explore from whichever side is already cached, u otherwise
  Word const& from = cache_.count(v) != 0 && cache_.count(u) == 0 ? v : u;
  Word const& to = &from == &u ? v : u;
  auto const& e = explore(from);
  out.explored = e.dist.size();
  if (auto it = e.dist.find(to); it != e.dist.end()) {
    out.status = EquivalenceOutcome::Status::equivalent;
    out.distance = it->second;
  } else if (e.complete) {
    out.status = EquivalenceOutcome::Status::not_equivalent;
  } else {
    out.status = EquivalenceOutcome::Status::budget_exhausted;
  }
  return out;
}

Distance CongruenceCache::distance(Word const& u, Word const& v) {
  auto const r = equivalent(u, v);
  switch (r.status) {
    case EquivalenceOutcome::Status::equivalent:
      return Distance::finite(r.distance);
    case EquivalenceOutcome::Status::not_equivalent:
      return Distance::infinite();
    case EquivalenceOutcome::Status::budget_exhausted:
      break;
  }
  return Distance::unknown();
}

}  // namespace reversal
