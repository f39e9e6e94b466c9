#include "reversal/grid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace reversal {

std::string_view to_string(TileKind kind) {
  switch (kind) {
    case TileKind::relation:
      return "relation";
    case TileKind::cancel:
      return "cancel";
    case TileKind::pass_left:
      return "pass_left";
    case TileKind::pass_top:
      return "pass_top";
    case TileKind::empty:
      return "empty";
  }
  return "empty";
}

namespace {

Word const kEpsilonSegment{Letter::epsilon()};

Word output_segments(Word const& tail) {
  return tail.empty() ? kEpsilonSegment : tail;
}

}  // namespace

std::vector<Tile> tiles(Presentation const& p, Letter left, Letter top) {
  std::vector<Tile> out;
  if (left.is_epsilon() && top.is_epsilon()) {
    out.push_back({TileKind::empty, 0, false, left, top, kEpsilonSegment,
                   kEpsilonSegment});
    return out;
  }
  if (top.is_epsilon()) {
    out.push_back(
        {TileKind::pass_left, 0, false, left, top, Word{left}, kEpsilonSegment});
    return out;
  }
  if (left.is_epsilon()) {
    out.push_back(
        {TileKind::pass_top, 0, false, left, top, kEpsilonSegment, Word{top}});
    return out;
  }
  if (left == top) {
    out.push_back(
        {TileKind::cancel, 0, false, left, top, kEpsilonSegment, kEpsilonSegment});
  }
  for (auto const& r : p.relations()) {
    if (r.lhs.empty() || r.rhs.empty()) {
      continue;
    }
    // s·t1...tq = t·s1...sp: bottom t1...tq, right s1...sp
    for (bool const reversed : {false, true}) {
      Word const& from_left = reversed ? r.rhs : r.lhs;
      Word const& from_top = reversed ? r.lhs : r.rhs;
      if (from_left[0] == left && from_top[0] == top) {
        out.push_back({TileKind::relation, r.index, reversed, left, top,
                       output_segments(subword(from_top, 1)),
                       output_segments(subword(from_left, 1))});
      }
    }
  }
  return out;
}

Grid::Grid(Word left, Word top, std::vector<Tile> cells, Word right,
           Word bottom)
    : left_(std::move(left)),
      top_(std::move(top)),
      cells_(std::move(cells)),
      right_(std::move(right)),
      bottom_(std::move(bottom)) {}

WordPair Grid::source() const {
  return {strip_epsilon(left_), strip_epsilon(top_)};
}

WordPair Grid::target() const {
  return {strip_epsilon(right_), strip_epsilon(bottom_)};
}

namespace {

auto tile_key(Tile const& t) {
  return std::tie(t.kind, t.relation, t.reversed, t.left, t.top, t.right,
                  t.bottom);
}

}  // namespace

bool canonical_less(Grid const& a, Grid const& b) {
  if (a.left_edge() != b.left_edge()) {
    return a.left_edge() < b.left_edge();
  }
  if (a.top_edge() != b.top_edge()) {
    return a.top_edge() < b.top_edge();
  }
  return std::lexicographical_compare(
      a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(),
      [](Tile const& x, Tile const& y) { return tile_key(x) < tile_key(y); });
}

namespace {

// ---------------------------------------------------------------------------
// The fill machine.  Every edge segment carries an id: the source left
// segments are 0..|u|-1, the top ones follow, and each placed cell numbers
// its right outputs and then its bottom outputs with the next free ids.  The
// ids depend only on the canonical order, which is what lets compose_h and
// split_h match cells between grids.

struct Seg {
  Letter letter;
  std::uint32_t id;
};

using Edge = std::vector<Seg>;

struct Task {
  enum class Kind : std::uint8_t { reverse, after_top_strip, after_lower };

  Kind kind;
  // reverse: (left, top); after_top_strip: (rest of left, bottom of the
  // first cell); after_lower: (right edge of the top strip, unused)
  Edge first;
  Edge second;
};

struct Placed {
  Tile tile;
  std::uint32_t left_id;
  std::uint32_t top_id;
  std::uint32_t first_out;
};

struct Machine {
  std::vector<Task> tasks;
  std::vector<std::pair<Edge, Edge>> values;
  std::vector<Placed> cells;
  std::uint32_t next_id = 0;
};

Edge make_edge(Word const& w, std::uint32_t first_id) {
  Edge e;
  e.reserve(w.size());
  for (Letter x : w) {
    e.push_back({x, first_id++});
  }
  return e;
}

Word letters(Edge const& e) {
  Word w;
  w.reserve(e.size());
  for (auto const& s : e) {
    w.push_back(s.letter);
  }
  return w;
}

Edge tail(Edge const& e) { return Edge(e.begin() + 1, e.end()); }

Edge join(Edge a, Edge const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Machine start(Word const& left, Word const& top) {
  Machine m;
  auto const n = static_cast<std::uint32_t>(left.size());
  m.tasks.push_back({Task::Kind::reverse, make_edge(left, 0), make_edge(top, n)});
  m.next_id = n + static_cast<std::uint32_t>(top.size());
  return m;
}

void apply(Machine& m, Task const& t, Tile const& tile) {
  Placed placed{tile, t.first[0].id, t.second[0].id, m.next_id};
  Edge a = make_edge(tile.right, m.next_id);
  m.next_id += static_cast<std::uint32_t>(tile.right.size());
  Edge b = make_edge(tile.bottom, m.next_id);
  m.next_id += static_cast<std::uint32_t>(tile.bottom.size());
  m.cells.push_back(std::move(placed));
  m.tasks.push_back({Task::Kind::after_top_strip, tail(t.first), std::move(b)});
  m.tasks.push_back({Task::Kind::reverse, std::move(a), tail(t.second)});
}

struct RunLimits {
  std::size_t max_cells;
  std::size_t max_work;
};

// Depth-first over tile choices.  choose(left, top, next_id, out) fills the
// candidate tiles; on_done(machine) receives each finished machine and
// returns false to abort; on_stuck(left, top) is told about dead branches.
// Returns false iff the limits were hit.
template <typename Choose, typename OnDone, typename OnStuck>
bool run(Machine init, Choose&& choose, OnDone&& on_done, OnStuck&& on_stuck,
         RunLimits const& limits, std::size_t& work) {
  std::vector<Machine> pending;
  pending.push_back(std::move(init));
  std::vector<Tile> options;
  while (!pending.empty()) {
    Machine m = std::move(pending.back());
    pending.pop_back();
    bool alive = true;
    while (alive) {
      if (m.tasks.empty()) {
        if (!on_done(m)) {
          return false;
        }
        break;
      }
      Task t = std::move(m.tasks.back());
      m.tasks.pop_back();
      switch (t.kind) {
        case Task::Kind::reverse: {
          if (t.first.empty() || t.second.empty()) {
            m.values.emplace_back(std::move(t.first), std::move(t.second));
            break;
          }
          options.clear();
          choose(t.first[0], t.second[0], m.next_id, options);
          if (options.empty()) {
            on_stuck(t.first[0].letter, t.second[0].letter);
            alive = false;
            break;
          }
          if (m.cells.size() >= limits.max_cells ||
              work + options.size() > limits.max_work) {
            return false;
          }
          work += options.size();
          for (std::size_t i = options.size(); i-- > 1;) {
            Machine copy = m;
            apply(copy, t, options[i]);
            pending.push_back(std::move(copy));
          }
          apply(m, t, options[0]);
          break;
        }
        case Task::Kind::after_top_strip: {
          auto [a1, c] = std::move(m.values.back());
          m.values.pop_back();
          m.tasks.push_back({Task::Kind::after_lower, std::move(a1), {}});
          m.tasks.push_back(
              {Task::Kind::reverse, std::move(t.first), join(std::move(t.second), c)});
          break;
        }
        case Task::Kind::after_lower: {
          auto [u1, v1] = std::move(m.values.back());
          m.values.pop_back();
          m.values.emplace_back(join(std::move(t.first), u1), std::move(v1));
          break;
        }
      }
    }
  }
  return true;
}

Grid finish(Word const& left, Word const& top, Machine const& m) {
  std::vector<Tile> cells;
  cells.reserve(m.cells.size());
  for (auto const& c : m.cells) {
    cells.push_back(c.tile);
  }
  auto const& [right, bottom] = m.values.back();
  return Grid(left, top, std::move(cells), letters(right), letters(bottom));
}

// Per-call cache of tiles(p, ·, ·).
class TileTable {
 public:
  explicit TileTable(Presentation const& p) : p_(&p) {}

  std::vector<Tile> const& operator()(Letter left, Letter top) {
    auto key = std::pair{left, top};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, tiles(*p_, left, top)).first;
    }
    return it->second;
  }

 private:
  Presentation const* p_;
  std::map<std::pair<Letter, Letter>, std::vector<Tile>> cache_;
};

void check_letters(Presentation const& p, Word const& w) {
  for (Letter x : w) {
    if (!x.is_epsilon() && x.id >= p.size()) {
      throw Error("word uses a letter outside the alphabet");
    }
  }
}

ReversalOutcome enumerate(Presentation const& p, Word const& u, Word const& v,
                          Budget const& b) {
  b.check();
  if (p.has_epsilon_relation()) {
    throw Error("reversing requires a presentation without ε-relations");
  }
  check_letters(p, u);
  check_letters(p, v);

  ReversalOutcome out;
  TileTable table(p);
  std::set<std::pair<Letter, Letter>> stuck;
  std::size_t work = 0;
  bool const finished = run(
      start(u, v),
      [&](Seg const& l, Seg const& t, std::uint32_t, std::vector<Tile>& opts) {
        auto const& ts = table(l.letter, t.letter);
        opts.insert(opts.end(), ts.begin(), ts.end());
      },
      [&](Machine const& m) {
        if (out.grids.size() >= b.max_grids) {
          return false;
        }
        out.grids.push_back(finish(u, v, m));
        return true;
      },
      [&](Letter l, Letter t) { stuck.emplace(l, t); },
      RunLimits{b.max_cells, b.work_limit()}, work);
  out.status = finished ? ReversalOutcome::Status::completed
                        : ReversalOutcome::Status::budget_exceeded;
  out.cells_placed = work;
  std::sort(out.grids.begin(), out.grids.end(), canonical_less);
  out.grids.erase(std::unique(out.grids.begin(), out.grids.end()),
                  out.grids.end());
  out.stuck.assign(stuck.begin(), stuck.end());
  return out;
}

// Replays a grid's own cells without a presentation, recording segment ids.
// Throws Error when a cell does not fit the labels the replay reaches.
struct Replay {
  std::vector<Placed> cells;
  Edge right;
  Edge bottom;
};

Replay replay_ids(Grid const& g) {
  Replay r;
  std::size_t next = 0;
  std::size_t work = 0;
  bool mismatch = false;
  run(
      start(g.left_edge(), g.top_edge()),
      [&](Seg const& l, Seg const& t, std::uint32_t, std::vector<Tile>& opts) {
        if (next < g.cells().size() && g.cells()[next].left == l.letter &&
            g.cells()[next].top == t.letter) {
          opts.push_back(g.cells()[next++]);
        }
      },
      [&](Machine const& m) {
        r.cells = m.cells;
        r.right = m.values.back().first;
        r.bottom = m.values.back().second;
        return true;
      },
      [&](Letter, Letter) { mismatch = true; },
      RunLimits{g.cells().size() + 1, g.cells().size() + 1}, work);
  if (mismatch || next != g.cells().size() || r.cells.size() != g.cells().size()) {
    throw Error("grid cells do not fit together");
  }
  return r;
}

using CellIndex = std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t>;

CellIndex index_cells(Replay const& r) {
  CellIndex out;
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    out.emplace(std::pair{r.cells[i].left_id, r.cells[i].top_id}, i);
  }
  return out;
}

}  // namespace

Grid assemble_grid(Word left, Word top, std::vector<Tile> cells) {
  Grid const draft(std::move(left), std::move(top), std::move(cells), {}, {});
  Replay const r = replay_ids(draft);
  return Grid(draft.left_edge(), draft.top_edge(), draft.cells(),
              letters(r.right), letters(r.bottom));
}

ReversalOutcome reverse_enumerate(Presentation const& p, Word const& u,
                                  Word const& v, Budget const& b) {
  return enumerate(p, u, v, b);
}

ReversalOutcome reverse_complemented(Presentation const& p, Word const& u,
                                     Word const& v, Budget const& b) {
  if (!is_right_complemented(p)) {
    throw Error("deterministic reversing needs a right complemented presentation");
  }
  return enumerate(p, u, v, b);
}

GridCheck validate_grid(Presentation const& p, Grid const& g, Budget const& b,
                        bool check_equivalence) {
  GridCheck out;
  try {
    check_letters(p, g.left_edge());
    check_letters(p, g.top_edge());
  } catch (Error const& e) {
    out.reason = e.what();
    return out;
  }
  TileTable table(p);
  std::size_t next = 0;
  std::optional<Edge> right;
  std::optional<Edge> bottom;
  std::size_t work = 0;
  auto const& cells = g.cells();
  run(
      start(g.left_edge(), g.top_edge()),
      [&](Seg const& l, Seg const& t, std::uint32_t, std::vector<Tile>& opts) {
        if (next >= cells.size()) {
          out.failing_cell = next;
          out.reason = "grid ends before the fill does";
          return;
        }
        Tile const& cell = cells[next];
        if (cell.left != l.letter || cell.top != t.letter) {
          out.failing_cell = next;
          out.reason = "cell labels do not match the adjacent edges";
          return;
        }
        auto const& allowed = table(l.letter, t.letter);
        if (std::find(allowed.begin(), allowed.end(), cell) == allowed.end()) {
          out.failing_cell = next;
          out.reason = "cell is not a tile of the presentation";
          return;
        }
        opts.push_back(cell);
        ++next;
      },
      [&](Machine const& m) {
        right = m.values.back().first;
        bottom = m.values.back().second;
        return true;
      },
      [](Letter, Letter) {}, RunLimits{cells.size() + 1, cells.size() + 1},
      work);
  if (out.failing_cell) {
    return out;
  }
  if (!right || next != cells.size()) {
    out.failing_cell = next;
    out.reason = "grid has cells beyond the fill";
    return out;
  }
  if (letters(*right) != g.right_edge() || letters(*bottom) != g.bottom_edge()) {
    out.reason = "target does not match the replayed edges";
    return out;
  }
  out.valid = true;
  if (check_equivalence) {
    auto const [u, v] = g.source();
    auto const [u1, v1] = g.target();
    out.equivalence = are_equivalent(p, concat(u, v1), concat(v, u1), b);
  }
  return out;
}

namespace {

// Replays the canonical fill over a composite source whose segments each
// belong to one of several component grids.  owner[id] gives the component
// and the segment's id inside it; cells are looked up by component ids.
struct Component {
  Grid const* grid;
  Replay replay;
  CellIndex index;
};

struct Owner {
  std::size_t component;
  std::uint32_t id;
};

Grid replay_composite(Word const& left, Word const& top,
                      std::vector<Component> const& parts,
                      std::vector<Owner> owner,
                      std::function<Owner(Owner, std::size_t)> const& translate_left) {
  std::size_t work = 0;
  std::size_t total = 0;
  for (auto const& c : parts) {
    total += c.grid->cell_count();
  }
  bool failed = false;
  std::optional<Grid> result;
  run(
      start(left, top),
      [&](Seg const& l, Seg const& t, std::uint32_t next_id,
          std::vector<Tile>& opts) {
        Owner const ot = owner.at(t.id);
        Owner const ol = translate_left(owner.at(l.id), ot.component);
        auto const& part = parts[ot.component];
        auto it = part.index.find({ol.id, ot.id});
        if (ol.component != ot.component || it == part.index.end()) {
          failed = true;
          return;
        }
        Placed const& placed = part.replay.cells[it->second];
        auto const outputs = placed.tile.right.size() + placed.tile.bottom.size();
        owner.resize(std::max<std::size_t>(owner.size(), next_id + outputs));
        for (std::size_t k = 0; k < outputs; ++k) {
          owner[next_id + k] = {ot.component,
                                static_cast<std::uint32_t>(placed.first_out + k)};
        }
        opts.push_back(placed.tile);
      },
      [&](Machine const& m) {
        result = finish(left, top, m);
        return true;
      },
      [&](Letter, Letter) { failed = true; }, RunLimits{total + 1, total + 1},
      work);
  if (failed || !result) {
    throw Error("component grids do not fit together");
  }
  return *result;
}

}  // namespace

Grid compose_h(Grid const& g1, Grid const& g2) {
  if (g1.right_edge() != g2.left_edge()) {
    throw Error("edge mismatch: right edge of the first grid differs from "
                "the left edge of the second");
  }
  std::vector<Component> parts;
  for (Grid const* g : {&g1, &g2}) {
    Replay r = replay_ids(*g);
    CellIndex idx = index_cells(r);
    parts.push_back({g, std::move(r), std::move(idx)});
  }
  auto const n = g1.left_edge().size();
  auto const m1 = g1.top_edge().size();
  auto const n2 = g2.left_edge().size();
  std::vector<Owner> owner;
  for (std::size_t i = 0; i < n; ++i) {
    owner.push_back({0, static_cast<std::uint32_t>(i)});
  }
  for (std::size_t j = 0; j < m1; ++j) {
    owner.push_back({0, static_cast<std::uint32_t>(n + j)});
  }
  for (std::size_t j = 0; j < g2.top_edge().size(); ++j) {
    owner.push_back({1, static_cast<std::uint32_t>(n2 + j)});
  }
  // segments on g1's right edge are g2's left segments
  std::map<std::uint32_t, std::uint32_t> right_to_left;
  for (std::size_t i = 0; i < parts[0].replay.right.size(); ++i) {
    right_to_left.emplace(parts[0].replay.right[i].id, static_cast<std::uint32_t>(i));
  }
  auto translate = [&](Owner o, std::size_t component) -> Owner {
    if (o.component == 0 && component == 1) {
      auto it = right_to_left.find(o.id);
      if (it == right_to_left.end()) {
        return o;
      }
      return {1, it->second};
    }
    return o;
  };
  Grid out = replay_composite(g1.left_edge(),
                              concat(g1.top_edge(), g2.top_edge()), parts,
                              std::move(owner), translate);
  if (out.cell_count() != g1.cell_count() + g2.cell_count()) {
    throw Error("component grids do not fit together");
  }
  return out;
}

std::pair<Grid, Grid> split_h(Grid const& g, std::size_t columns) {
  if (columns > g.top_edge().size()) {
    throw Error("split position beyond the top edge");
  }
  std::vector<Component> parts;
  {
    Replay r = replay_ids(g);
    CellIndex idx = index_cells(r);
    parts.push_back({&g, std::move(r), std::move(idx)});
  }
  auto const n = g.left_edge().size();
  auto identity = [](Owner o, std::size_t) { return o; };

  Word const top1 = subword(g.top_edge(), 0, columns);
  Word const top2 = subword(g.top_edge(), columns);
  std::vector<Owner> owner1;
  for (std::size_t i = 0; i < n + columns; ++i) {
    owner1.push_back({0, static_cast<std::uint32_t>(i)});
  }
  // Record the owners of g1's right edge by replaying it a second time; the
  // replay is cheap and keeps replay_composite free of output plumbing.
  Grid g1 = replay_composite(g.left_edge(), top1, parts, owner1, identity);

  Replay const r1 = replay_ids(g1);
  // map g1 ids to g ids by walking both replays cell by cell
  std::vector<std::uint32_t> to_g(r1.cells.empty() ? n + columns
                                                   : r1.cells.back().first_out +
                                                         r1.cells.back().tile.right.size() +
                                                         r1.cells.back().tile.bottom.size(),
                                  0);
  for (std::size_t i = 0; i < n + columns; ++i) {
    to_g[i] = static_cast<std::uint32_t>(i);
  }
  for (auto const& c : r1.cells) {
    auto it = parts[0].index.find({to_g[c.left_id], to_g[c.top_id]});
    if (it == parts[0].index.end()) {
      throw Error("grid cells do not fit together");
    }
    auto const& orig = parts[0].replay.cells[it->second];
    auto const outputs = c.tile.right.size() + c.tile.bottom.size();
    for (std::size_t k = 0; k < outputs; ++k) {
      to_g[c.first_out + k] = static_cast<std::uint32_t>(orig.first_out + k);
    }
  }
  std::vector<Owner> owner2;
  for (auto const& s : r1.right) {
    owner2.push_back({0, to_g[s.id]});
  }
  for (std::size_t j = 0; j < top2.size(); ++j) {
    owner2.push_back({0, static_cast<std::uint32_t>(n + columns + j)});
  }
  Grid g2 = replay_composite(g1.right_edge(), top2, parts, owner2, identity);
  return {std::move(g1), std::move(g2)};
}

namespace {

class TargetEngine {
 public:
  TargetEngine(Presentation const& p, Budget const& b) : table_(p), budget_(b) {}

  // nullptr once the budget is exceeded
  std::vector<WordPair> const* solve(Word const& u, Word const& v) {
    if (u.empty() || v.empty()) {
      scratch_.push_back({{u, v}});
      return &scratch_.back();
    }
    WordPair key{u, v};
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second.in_progress ? nullptr : &it->second.targets;
    }
    if (memo_.size() >= budget_.max_cells) {
      return nullptr;
    }
    auto& entry = memo_[key];
    entry.in_progress = true;
    std::set<WordPair> found;
    Word const rest_u = subword(u, 1);
    Word const rest_v = subword(v, 1);
    // copy: table_ may grow during the recursion
    std::vector<Tile> const options = table_(u[0], v[0]);
    for (auto const& tile : options) {
      Word const a = strip_epsilon(tile.right);
      Word const bottom = strip_epsilon(tile.bottom);
      auto const* strip = solve(a, rest_v);
      if (strip == nullptr) {
        return nullptr;
      }
      for (auto const& [a1, c] : std::vector<WordPair>(*strip)) {
        auto const* lower = solve(rest_u, concat(bottom, c));
        if (lower == nullptr) {
          return nullptr;
        }
        for (auto const& [u1, v1] : *lower) {
          found.emplace(concat(a1, u1), v1);
          if (found.size() > budget_.max_grids) {
            return nullptr;
          }
        }
      }
    }
    entry.targets.assign(found.begin(), found.end());
    entry.in_progress = false;
    return &entry.targets;
  }

  std::size_t subproblems() const { return memo_.size(); }

 private:
  struct Entry {
    bool in_progress = false;
    std::vector<WordPair> targets;
  };

  TileTable table_;
  Budget budget_;
  std::unordered_map<WordPair, Entry, WordPairHash> memo_;
  std::deque<std::vector<WordPair>> scratch_;
};

}  // namespace

TargetSet reversible_targets(Presentation const& p, Word const& u,
                             Word const& v, Budget const& b) {
  b.check();
  if (p.has_epsilon_relation()) {
    throw Error("reversing requires a presentation without ε-relations");
  }
  check_letters(p, u);
  check_letters(p, v);
  TargetEngine engine(p, b);
  TargetSet out;
  auto const* found = engine.solve(strip_epsilon(u), strip_epsilon(v));
  out.subproblems = engine.subproblems();
  if (found == nullptr) {
    out.status = TargetSet::Status::budget_exceeded;
  } else {
    out.targets = *found;
  }
  return out;
}

namespace {

std::size_t display_width(std::string const& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    n += (c & 0xC0) != 0x80 ? 1 : 0;
  }
  return n;
}

std::vector<std::string> code_points(std::string const& s) {
  std::vector<std::string> out;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80 || out.empty()) {
      out.emplace_back();
    }
    out.back().push_back(static_cast<char>(c));
  }
  return out;
}

class Canvas {
 public:
  Canvas(std::size_t width, std::size_t height)
      : cells_(height, std::vector<std::string>(width, " ")) {}

  void put(std::size_t row, std::size_t col, std::string const& s) {
    for (auto const& cp : code_points(s)) {
      if (row < cells_.size() && col < cells_[row].size()) {
        cells_[row][col] = cp;
      }
      ++col;
    }
  }

  std::string str() const {
    std::string out;
    for (auto const& row : cells_) {
      std::string line;
      for (auto const& c : row) {
        line += c;
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> cells_;
};

std::string word_or_epsilon(Presentation const& p, Word const& w) {
  return w.empty() ? "ε" : p.format(w);
}

}  // namespace

std::string render_grid(Presentation const& p, Grid const& g) {
  auto const [u, v] = g.source();
  auto const [u1, v1] = g.target();
  std::string const summary = "(" + word_or_epsilon(p, u) + ", " +
                              word_or_epsilon(p, v) + ") -> (" +
                              word_or_epsilon(p, u1) + ", " +
                              word_or_epsilon(p, v1) + ")\n";
  if (g.cells().empty()) {
    std::string const inner = "(" + word_or_epsilon(p, u) + "," +
                              word_or_epsilon(p, v) + ")";
    std::string bar;
    for (std::size_t i = 0; i < display_width(inner) + 2; ++i) {
      bar += '-';
    }
    return "+" + bar + "+\n| " + inner + " |\n+" + bar + "+\n" + summary;
  }

  Replay const r = replay_ids(g);
  std::size_t ids = g.left_edge().size() + g.top_edge().size();
  for (auto const& c : r.cells) {
    ids = std::max(ids, c.first_out + c.tile.right.size() + c.tile.bottom.size());
  }
  // leaf counts: how many unit columns (rows) a segment spans
  std::vector<std::size_t> extent(ids, 1);
  for (auto it = r.cells.rbegin(); it != r.cells.rend(); ++it) {
    std::size_t width = 0;
    std::size_t height = 0;
    auto const nr = it->tile.right.size();
    for (std::size_t k = 0; k < nr; ++k) {
      height += extent[it->first_out + k];
    }
    for (std::size_t k = 0; k < it->tile.bottom.size(); ++k) {
      width += extent[it->first_out + nr + k];
    }
    extent[it->left_id] = height;
    extent[it->top_id] = width;
  }

  struct Span {
    Letter letter;
    std::size_t from, to, at;
  };
  std::vector<Span> horizontal;
  std::vector<Span> vertical;
  std::vector<std::pair<std::size_t, std::size_t>> span(ids);  // interval per id
  std::size_t nx = 0;
  std::size_t ny = 0;
  auto const n = g.left_edge().size();
  for (std::size_t i = 0; i < n; ++i) {
    span[i] = {ny, ny + extent[i]};
    vertical.push_back({g.left_edge()[i], ny, ny + extent[i], 0});
    ny += extent[i];
  }
  for (std::size_t j = 0; j < g.top_edge().size(); ++j) {
    span[n + j] = {nx, nx + extent[n + j]};
    horizontal.push_back({g.top_edge()[j], nx, nx + extent[n + j], 0});
    nx += extent[n + j];
  }
  for (auto const& c : r.cells) {
    auto const [y0, y1] = span[c.left_id];
    auto const [x0, x1] = span[c.top_id];
    auto id = c.first_out;
    auto y = y0;
    for (Letter x : c.tile.right) {
      span[id] = {y, y + extent[id]};
      vertical.push_back({x, y, y + extent[id], x1});
      y += extent[id++];
    }
    auto x = x0;
    for (Letter l : c.tile.bottom) {
      span[id] = {x, x + extent[id]};
      horizontal.push_back({l, x, x + extent[id], y1});
      x += extent[id++];
    }
  }

  auto label = [&](Letter x) -> std::string {
    return x.is_epsilon() ? std::string() : p.name(x);
  };
  std::size_t label_h = 0;
  std::size_t label_v = 1;
  for (auto const& s : horizontal) {
    label_h = std::max(label_h, display_width(label(s.letter)));
  }
  for (auto const& s : vertical) {
    label_v = std::max(label_v, display_width(label(s.letter)));
  }
  std::size_t const inner = std::max<std::size_t>(label_h + 2, 3);
  auto col = [&](std::size_t k) { return k * (label_v + inner) + label_v / 2; };
  auto row = [](std::size_t k) { return 2 * k; };

  Canvas canvas(col(nx) + label_v, row(ny) + 1);
  for (auto const& s : horizontal) {
    for (auto c = col(s.from); c <= col(s.to); ++c) {
      canvas.put(row(s.at), c, "-");
    }
    auto const text = label(s.letter);
    auto const w = display_width(text);
    canvas.put(row(s.at), (col(s.from) + col(s.to) + 1) / 2 - w / 2, text);
  }
  for (auto const& s : vertical) {
    for (auto rr = row(s.from); rr <= row(s.to); ++rr) {
      canvas.put(rr, col(s.at), rr == row(s.from) || rr == row(s.to) ? "+" : "|");
    }
    auto const text = label(s.letter);
    auto const k = s.from + (s.to - s.from - 1) / 2;
    canvas.put(2 * k + 1, col(s.at) - display_width(text) / 2, text);
  }
  for (auto const& s : horizontal) {
    canvas.put(row(s.at), col(s.from), "+");
    canvas.put(row(s.at), col(s.to), "+");
  }
  return canvas.str() + summary;
}

}  // namespace reversal
