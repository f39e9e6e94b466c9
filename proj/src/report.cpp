#include "reversal/report.hpp"

#include <string>

namespace reversal::report {

namespace {

std::string letter_text(Presentation const& p, Letter x) {
  return x.is_epsilon() ? std::string("1") : p.name(x);
}

Letter letter_from_text(Presentation const& p, std::string const& s) {
  return s == "1" ? Letter::epsilon() : p.letter(s);
}

json pair_json(Presentation const& p, WordPair const& w) {
  return json::array({to_json(p, w.first), to_json(p, w.second)});
}

json stuck_json(Presentation const& p,
                std::vector<std::pair<Letter, Letter>> const& stuck) {
  json out = json::array();
  for (auto const& [s, t] : stuck) {
    out.push_back({letter_text(p, s), letter_text(p, t)});
  }
  return out;
}

Word segments(Presentation const& p, json const& j) {
  Word w = word_from_json(p, j);
  return w.empty() ? Word{Letter::epsilon()} : w;
}

}  // namespace

json to_json(Presentation const& p, Word const& w) {
  json out = json::array();
  for (Letter x : w) {
    if (!x.is_epsilon()) {
      out.push_back(p.name(x));
    }
  }
  return out;
}

Word word_from_json(Presentation const& p, json const& j) {
  if (!j.is_array()) {
    throw Error("a word must be an array of tokens");
  }
  Word w;
  for (auto const& t : j) {
    if (!t.is_string()) {
      throw Error("a word must be an array of tokens");
    }
    w.push_back(p.letter(t.get<std::string>()));
  }
  return w;
}

json to_json(Presentation const& p, Tile const& t) {
  json out{{"left", letter_text(p, t.left)},
           {"top", letter_text(p, t.top)},
           {"kind", std::string(to_string(t.kind))},
           {"right", to_json(p, t.right)},
           {"bottom", to_json(p, t.bottom)}};
  if (t.kind == TileKind::relation) {
    out["rel_index"] = t.relation;
    out["orientation"] = t.reversed ? "rhs" : "lhs";
  }
  return out;
}

json to_json(Presentation const& p, Grid const& g) {
  json cells = json::array();
  for (auto const& t : g.cells()) {
    cells.push_back(to_json(p, t));
  }
  return {{"source", pair_json(p, g.source())},
          {"target", pair_json(p, g.target())},
          {"cells", std::move(cells)}};
}

Grid grid_from_json(Presentation const& p, json const& j) {
  try {
    auto const& source = j.at("source");
    if (!source.is_array() || source.size() != 2) {
      throw Error("source must be a pair of words");
    }
    std::vector<Tile> cells;
    for (auto const& c : j.at("cells")) {
      Tile t;
      auto const kind = c.at("kind").get<std::string>();
      if (kind == "relation") {
        t.kind = TileKind::relation;
        t.relation = c.at("rel_index").get<std::size_t>();
        t.reversed = c.at("orientation").get<std::string>() == "rhs";
      } else if (kind == "cancel") {
        t.kind = TileKind::cancel;
      } else if (kind == "pass_left") {
        t.kind = TileKind::pass_left;
      } else if (kind == "pass_top") {
        t.kind = TileKind::pass_top;
      } else if (kind == "empty") {
        t.kind = TileKind::empty;
      } else {
        throw Error("unknown tile kind '" + kind + "'");
      }
      t.left = letter_from_text(p, c.at("left").get<std::string>());
      t.top = letter_from_text(p, c.at("top").get<std::string>());
      t.right = segments(p, c.at("right"));
      t.bottom = segments(p, c.at("bottom"));
      cells.push_back(std::move(t));
    }
    return assemble_grid(word_from_json(p, source[0]),
                         word_from_json(p, source[1]), std::move(cells));
  } catch (json::exception const& e) {
    throw Error(std::string("malformed grid: ") + e.what());
  }
}

json to_json(Presentation const& p, std::vector<Diagnostic> const& ds) {
  (void) p;
  json out = json::array();
  for (auto const& d : ds) {
    out.push_back({{"level", std::string(to_string(d.level))},
                   {"code", d.code},
                   {"message", d.message}});
  }
  return out;
}

json to_json(EquivalenceOutcome const& e) {
  json out{{"explored", e.explored}};
  switch (e.status) {
    case EquivalenceOutcome::Status::equivalent:
      out["status"] = "equivalent";
      out["distance"] = e.distance;
      break;
    case EquivalenceOutcome::Status::not_equivalent:
      out["status"] = "not_equivalent";
      break;
    case EquivalenceOutcome::Status::budget_exhausted:
      out["status"] = "budget_exhausted";
      break;
  }
  return out;
}

json to_json(Distance const& d) {
  switch (d.kind) {
    case Distance::Kind::finite:
      return d.value;
    case Distance::Kind::infinite:
      return "infinite";
    case Distance::Kind::unknown:
      break;
  }
  return "unknown";
}

json to_json(Presentation const& p, ReversalOutcome const& r) {
  json grids = json::array();
  for (auto const& g : r.grids) {
    grids.push_back(to_json(p, g));
  }
  return {{"status", r.completed() ? "completed" : "budget_exceeded"},
          {"grids", std::move(grids)},
          {"stuck", stuck_json(p, r.stuck)},
          {"cells_placed", r.cells_placed}};
}

json to_json(Presentation const& p, DiamondReport const& r) {
  json out{{"generator", p.name(r.generator)},
           {"relation_index", r.relation},
           {"direction", std::string(to_string(r.direction))},
           {"status", std::string(to_string(r.status))}};
  switch (r.status) {
    case DiamondReport::Status::verified:
      out["matched_grids"] = r.matching.size();
      break;
    case DiamondReport::Status::counterexample:
      out["witness"] = to_json(p, *r.counterexample);
      break;
    case DiamondReport::Status::inconclusive:
      out["reason"] = r.reason;
      break;
  }
  return out;
}

json to_json(Presentation const& p, CompletenessReport const& r) {
  json pairs = json::array();
  for (auto const& d : r.pairs) {
    pairs.push_back(to_json(p, d));
  }
  json out{{"verdict", std::string(to_string(r.verdict))},
           {"pairs", std::move(pairs)},
           {"weight_homogeneous", r.weight_homogeneous},
           {"noetherian_witness", r.noetherian_witness},
           {"reasons", r.reasons}};
  if (r.witness) {
    auto const& d = r.pairs[*r.witness];
    out["witness"] = {{"generator", p.name(d.generator)},
                      {"relation_index", d.relation},
                      {"direction", std::string(to_string(d.direction))},
                      {"grid", to_json(p, *d.counterexample)},
                      {"equivalent_pair", pair_json(p, *r.certificate)}};
  }
  return out;
}

json to_json(Presentation const& p, DefectResult const& d) {
  json out{{"value", to_json(d.value)}};
  if (d.witness) {
    json w{{"generator", p.name(d.witness->generator)},
           {"relation_index", d.witness->relation},
           {"direction", std::string(to_string(d.witness->direction))},
           {"grid", to_json(p, d.witness->grid)}};
    if (d.witness->partner) {
      w["partner"] = to_json(p, *d.witness->partner);
    }
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  if (!d.reason.empty()) {
    out["reason"] = d.reason;
  }
  return out;
}

json to_json(Presentation const& p, CancellativityVerdict const& v) {
  json conflicts = json::array();
  for (auto const& r : v.conflicts) {
    conflicts.push_back(r.index);
  }
  std::size_t verified = 0;
  for (auto const& d : v.completeness.pairs) {
    verified += d.status == DiamondReport::Status::verified ? 1 : 0;
  }
  (void) p;
  return {{"side", std::string(to_string(v.side))},
          {"status", std::string(to_string(v.status))},
          {"reason", v.reason},
          {"conflicts", std::move(conflicts)},
          {"completeness",
           {{"verdict", std::string(to_string(v.completeness.verdict))},
            {"pairs", v.completeness.pairs.size()},
            {"verified", verified}}}};
}

json to_json(Presentation const& p, LcmResult const& l) {
  json out{{"status", std::string(to_string(l.status))}};
  switch (l.status) {
    case LcmResult::Status::found:
      out["multiple"] = to_json(p, l.multiple);
      out["complements"] = pair_json(p, l.complements);
      break;
    case LcmResult::Status::no_common_multiple:
      out["stuck"] = stuck_json(p, l.stuck);
      break;
    case LcmResult::Status::inconclusive:
      break;
  }
  if (!l.reason.empty()) {
    out["reason"] = l.reason;
  }
  return out;
}

}  // namespace reversal::report
