#include "reversal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "reversal/cancellativity.hpp"
#include "reversal/catalog.hpp"
#include "reversal/completeness.hpp"
#include "reversal/report.hpp"

namespace reversal::cli {

namespace {

using report::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string file;
  std::string catalog;
  std::size_t n = 4;
  std::size_t colors = 2;
  Budget budget;
  bool json = false;
  std::vector<std::string> words;
  // per-command switches
  bool by_reversing = false;
  std::string side = "both";
  bool emit = false;
  std::string entry;
};

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.file, "presentation file");
  cmd->add_option("--catalog", o.catalog, "catalog entry")
      ->check(CLI::IsMember(catalog::names()));
  cmd->add_option("--n", o.n, "strand count for braid-like entries")
      ->capture_default_str();
  cmd->add_option("--colors", o.colors, "color count (letters for free)")
      ->capture_default_str();
  cmd->add_option("--max-cells", o.budget.max_cells, "cells per grid branch")
      ->capture_default_str();
  cmd->add_option("--max-grids", o.budget.max_grids, "grids per enumeration")
      ->capture_default_str();
  cmd->add_option("--max-class-size", o.budget.max_class_size,
                  "words per class exploration")
      ->capture_default_str();
  cmd->add_option("--max-word-weight", o.budget.max_word_weight,
                  "heaviest word the oracle visits")
      ->capture_default_str();
  cmd->add_flag("--json", o.json, "emit one JSON document");
}

void add_words(CLI::App* cmd, Options& o) {
  cmd->add_option("words", o.words, "two words, quoted, 1 for the empty word")
      ->expected(2)
      ->required();
}

Presentation load(Options const& o) {
  if (o.file.empty() == o.catalog.empty()) {
    throw UsageError("exactly one of --file and --catalog is required");
  }
  try {
    o.budget.check();
  } catch (Error const& e) {
    throw UsageError(e.what());
  }
  if (!o.catalog.empty()) {
    try {
      return catalog::by_name(o.catalog, o.n, o.colors);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
  }
  std::ifstream in(o.file);
  if (!in) {
    throw UsageError("cannot read " + o.file);
  }
  std::stringstream text;
  text << in.rdbuf();
  try {
    return parse_presentation(text.str());
  } catch (ParseError const& e) {
    throw UsageError(o.file + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.what());
  }
}

Word parse_word(Presentation const& p, std::string const& text) {
  try {
    return p.word(text);
  } catch (Error const& e) {
    throw UsageError(e.what());
  }
}

std::string show(Presentation const& p, Word const& w) {
  return w.empty() ? "ε" : p.format(w);
}

std::string show(Presentation const& p, WordPair const& w) {
  return "(" + show(p, w.first) + ", " + show(p, w.second) + ")";
}

int emit(std::ostream& out, json const& j) {
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_validate(Presentation const& p, Options const& o, std::ostream& out) {
  auto const ds = validate(p);
  bool const ok = std::none_of(ds.begin(), ds.end(), [](Diagnostic const& d) {
    return d.level == Diagnostic::Level::error;
  });
  if (o.json) {
    emit(out, {{"valid", ok}, {"diagnostics", report::to_json(p, ds)}});
  } else {
    for (auto const& d : ds) {
      out << to_string(d.level) << ' ' << d.code << ": " << d.message << '\n';
    }
    out << (ok ? "valid" : "invalid") << '\n';
  }
  return ok ? exit_yes : exit_no;
}

int cmd_reverse(Presentation const& p, Options const& o, std::ostream& out) {
  Word const u = parse_word(p, o.words[0]);
  Word const v = parse_word(p, o.words[1]);
  auto const t = reversible_targets(p, u, v, o.budget);
  if (o.json) {
    json targets = json::array();
    for (auto const& w : t.targets) {
      targets.push_back({report::to_json(p, w.first), report::to_json(p, w.second)});
    }
    emit(out, {{"status", t.completed() ? "completed" : "budget_exceeded"},
               {"targets", std::move(targets)}});
  } else {
    for (auto const& w : t.targets) {
      out << show(p, WordPair{u, v}) << " -> " << show(p, w) << '\n';
    }
    if (!t.completed()) {
      out << "inconclusive: budget exceeded\n";
    } else if (t.targets.empty()) {
      out << "not reversible: every branch gets stuck\n";
    }
  }
  if (!t.completed()) {
    return exit_inconclusive;
  }
  return t.targets.empty() ? exit_no : exit_yes;
}

int cmd_grids(Presentation const& p, Options const& o, std::ostream& out) {
  Word const u = parse_word(p, o.words[0]);
  Word const v = parse_word(p, o.words[1]);
  auto const r = reverse_enumerate(p, u, v, o.budget);
  if (o.json) {
    emit(out, report::to_json(p, r));
  } else {
    for (auto const& g : r.grids) {
      out << render_grid(p, g) << '\n';
    }
    out << r.grids.size() << " grid(s)";
    if (!r.completed()) {
      out << ", inconclusive: budget exceeded";
    }
    out << '\n';
    for (auto const& [s, t] : r.stuck) {
      out << "stuck cell (" << p.name(s) << ", " << p.name(t) << ")\n";
    }
  }
  if (!r.completed()) {
    return exit_inconclusive;
  }
  return r.grids.empty() ? exit_no : exit_yes;
}

int cmd_equiv(Presentation const& p, Options const& o, std::ostream& out) {
  Word const u = parse_word(p, o.words[0]);
  Word const v = parse_word(p, o.words[1]);
  if (o.by_reversing) {
    auto const d = decide_equiv_by_reversing(p, u, v, o.budget);
    if (o.json) {
      emit(out, {{"method", "reversing"}, {"decision", std::string(to_string(d))}});
    } else {
      out << (d == Decision::yes  ? "reverses to (ε, ε)"
              : d == Decision::no ? "does not reverse to (ε, ε)"
                                  : "inconclusive: budget exceeded")
          << '\n';
    }
    return d == Decision::yes ? exit_yes
           : d == Decision::no ? exit_no
                               : exit_inconclusive;
  }
  auto const e = are_equivalent(p, u, v, o.budget);
  if (o.json) {
    auto j = report::to_json(e);
    j["method"] = "congruence";
    emit(out, j);
  } else {
    switch (e.status) {
      case EquivalenceOutcome::Status::equivalent:
        out << "equivalent, distance " << e.distance << '\n';
        break;
      case EquivalenceOutcome::Status::not_equivalent:
        out << "not equivalent\n";
        break;
      case EquivalenceOutcome::Status::budget_exhausted:
        out << "inconclusive: budget exhausted\n";
        break;
    }
  }
  switch (e.status) {
    case EquivalenceOutcome::Status::equivalent:
      return exit_yes;
    case EquivalenceOutcome::Status::not_equivalent:
      return exit_no;
    case EquivalenceOutcome::Status::budget_exhausted:
      break;
  }
  return exit_inconclusive;
}

void print_completeness(Presentation const& p, CompletenessReport const& r,
                        std::ostream& out) {
  for (auto const& d : r.pairs) {
    out << p.name(d.generator) << "  rel " << d.relation << "  "
        << to_string(d.direction) << "  " << to_string(d.status);
    if (d.status == DiamondReport::Status::inconclusive) {
      out << " (" << d.reason << ')';
    }
    out << '\n';
  }
  out << "noetherianity: " << r.noetherian_witness << '\n';
  for (auto const& reason : r.reasons) {
    out << "note: " << reason << '\n';
  }
  if (r.witness) {
    auto const& d = r.pairs[*r.witness];
    out << "counterexample grid:\n" << render_grid(p, *d.counterexample);
    out << "equivalent but not reversible to (ε, ε): "
        << show(p, *r.certificate) << '\n';
  }
  out << "verdict: " << to_string(r.verdict) << '\n';
}

int verdict_exit(CompletenessReport::Verdict v) {
  switch (v) {
    case CompletenessReport::Verdict::complete:
      return exit_yes;
    case CompletenessReport::Verdict::incomplete:
      return exit_no;
    case CompletenessReport::Verdict::inconclusive:
      break;
  }
  return exit_inconclusive;
}

int cmd_complete(Presentation const& p, Options const& o, std::ostream& out) {
  auto const r = check_completeness(p, o.budget);
  if (o.json) {
    emit(out, report::to_json(p, r));
  } else {
    print_completeness(p, r, out);
  }
  return verdict_exit(r.verdict);
}

int cmd_cancel(Presentation const& p, Options const& o, std::ostream& out) {
  std::vector<CancellativityVerdict> verdicts;
  if (o.side != "right") {
    verdicts.push_back(check_left_cancellative(p, o.budget));
  }
  if (o.side != "left") {
    verdicts.push_back(check_right_cancellative(p, o.budget));
  }
  if (o.json) {
    json j = json::object();
    json evidence = json::object();
    for (auto const& v : verdicts) {
      auto vj = report::to_json(p, v);
      evidence[std::string(to_string(v.side))] = vj["completeness"];
      vj.erase("completeness");
      j[std::string(to_string(v.side))] = std::move(vj);
    }
    j["evidence"] = std::move(evidence);
    emit(out, j);
  } else {
    for (auto const& v : verdicts) {
      out << to_string(v.side) << ": " << to_string(v.status);
      if (!v.reason.empty()) {
        out << " (" << v.reason << ')';
      }
      out << '\n';
    }
  }
  bool const all = std::all_of(verdicts.begin(), verdicts.end(), [](auto const& v) {
    return v.status == CancellativityVerdict::Status::cancellative;
  });
  // the criterion is sufficient only, so there is no negative answer
  return all ? exit_yes : exit_inconclusive;
}

int lcm_output(Presentation const& p, Options const& o, LcmResult const& l,
               char const* label, std::ostream& out) {
  if (o.json) {
    emit(out, report::to_json(p, l));
  } else {
    switch (l.status) {
      case LcmResult::Status::found:
        out << label << ": " << show(p, l.multiple) << "  complements "
            << show(p, l.complements) << '\n';
        break;
      case LcmResult::Status::no_common_multiple:
        out << "no common right multiple\n";
        for (auto const& [s, t] : l.stuck) {
          out << "stuck cell (" << p.name(s) << ", " << p.name(t) << ")\n";
        }
        break;
      case LcmResult::Status::inconclusive:
        out << "inconclusive: " << l.reason << '\n';
        break;
    }
  }
  switch (l.status) {
    case LcmResult::Status::found:
      return exit_yes;
    case LcmResult::Status::no_common_multiple:
      return exit_no;
    case LcmResult::Status::inconclusive:
      break;
  }
  return exit_inconclusive;
}

int cmd_lcm(Presentation const& p, Options const& o, std::ostream& out) {
  Word const u = parse_word(p, o.words[0]);
  Word const v = parse_word(p, o.words[1]);
  LcmResult l;
  try {
    l = right_lcm(p, u, v, o.budget);
  } catch (Error const& e) {
    l.reason = e.what();
  }
  return lcm_output(p, o, l, "right lcm", out);
}

int cmd_multiple(Presentation const& p, Options const& o, std::ostream& out) {
  Word const u = parse_word(p, o.words[0]);
  Word const v = parse_word(p, o.words[1]);
  return lcm_output(p, o, common_right_multiple(p, u, v, o.budget),
                    "common right multiple", out);
}

int cmd_defect(Presentation const& p, Options const& o, std::ostream& out) {
  auto const d = defect(p, o.budget);
  if (o.json) {
    emit(out, report::to_json(p, d));
  } else {
    out << "defect: ";
    switch (d.value.kind) {
      case Distance::Kind::finite:
        out << d.value.value;
        break;
      case Distance::Kind::infinite:
        out << "infinite";
        break;
      case Distance::Kind::unknown:
        out << "unknown";
        break;
    }
    if (!d.reason.empty()) {
      out << " (" << d.reason << ')';
    }
    out << '\n';
    if (d.witness) {
      out << "attained at " << p.name(d.witness->generator) << ", relation "
          << d.witness->relation << ", " << to_string(d.witness->direction)
          << ":\n"
          << render_grid(p, d.witness->grid);
      if (d.witness->partner) {
        out << "best partner:\n" << render_grid(p, *d.witness->partner);
      }
    }
  }
  switch (d.value.kind) {
    case Distance::Kind::finite:
      return exit_yes;
    case Distance::Kind::infinite:
      return exit_no;
    case Distance::Kind::unknown:
      break;
  }
  return exit_inconclusive;
}

int cmd_catalog(Options const& o, std::ostream& out) {
  if (o.entry.empty()) {
    for (auto const& name : catalog::names()) {
      out << name << '\n';
    }
    return exit_yes;
  }
  Presentation p;
  try {
    p = catalog::by_name(o.entry, o.n, o.colors);
  } catch (Error const& e) {
    throw UsageError(e.what());
  }
  if (o.emit) {
    out << format_presentation(p);
  } else if (o.json) {
    emit(out, {{"name", o.entry},
               {"generators", p.size()},
               {"relations", p.relations().size()}});
  } else {
    out << o.entry << ": " << p.size() << " generators, "
        << p.relations().size() << " relations\n";
  }
  return exit_yes;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decides properties of monoid presentations by subword reversing",
               "reversal"};
  app.require_subcommand(1);
  Options o;
  using Handler = std::function<int(Presentation const&, Options const&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](char const* name, char const* help, bool words, Handler h) {
    auto* cmd = app.add_subcommand(name, help);
    add_source(cmd, o);
    if (words) {
      add_words(cmd, o);
    }
    commands.emplace_back(cmd, std::move(h));
    return cmd;
  };
  add("validate", "report diagnostics for a presentation", false, cmd_validate);
  add("reverse", "targets of all grids from (u, v)", true, cmd_reverse);
  add("grids", "draw every grid from (u, v)", true, cmd_grids);
  add("equiv", "decide u ≡ v", true, cmd_equiv)
      ->add_flag("--by-reversing", o.by_reversing,
                 "decide by reversing to (ε, ε) instead of class search");
  add("complete", "check completeness of right reversing", false, cmd_complete);
  add("cancel", "cancellativity by the completeness criterion", false, cmd_cancel)
      ->add_option("--side", o.side, "left, right or both")
      ->check(CLI::IsMember({"left", "right", "both"}))
      ->capture_default_str();
  add("lcm", "right lcm in a right complemented presentation", true, cmd_lcm);
  add("multiple", "a common right multiple", true, cmd_multiple);
  add("defect", "defect of a presentation", false, cmd_defect);

  auto* cat = app.add_subcommand("catalog", "list or emit catalog presentations");
  cat->add_option("name", o.entry, "catalog entry")
      ->check(CLI::IsMember(catalog::names()));
  cat->add_option("--n", o.n, "strand count")->capture_default_str();
  cat->add_option("--colors", o.colors, "color count")->capture_default_str();
  cat->add_flag("--emit", o.emit, "write the presentation file");
  cat->add_flag("--json", o.json, "emit one JSON document");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_yes;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_yes;
  } catch (CLI::ParseError const& e) {
    err << "reversal: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (cat->parsed()) {
      return cmd_catalog(o, out);
    }
    for (auto const& [cmd, handler] : commands) {
      if (cmd->parsed()) {
        Presentation const p = load(o);
        return handler(p, o, out);
      }
    }
  } catch (UsageError const& e) {
    err << "reversal: " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    err << "reversal: " << e.what() << '\n';
    return exit_inconclusive;
  }
  return exit_usage;
}

}  // namespace reversal::cli
