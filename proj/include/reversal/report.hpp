// JSON encodings of words, grids and verdicts.  Keys are sorted, so dumps
// are byte-for-byte reproducible.

#pragma once

#include "json.hpp"

#include "reversal/cancellativity.hpp"
#include "reversal/completeness.hpp"
#include "reversal/congruence.hpp"
#include "reversal/grid.hpp"
#include "reversal/presentation.hpp"

namespace reversal::report {

using json = nlohmann::json;

/// Token array; epsilon segments are dropped.
json to_json(Presentation const& p, Word const& w);
Word word_from_json(Presentation const& p, json const& j);

json to_json(Presentation const& p, Tile const& t);
json to_json(Presentation const& p, Grid const& g);
/// Rebuilds a grid from to_json output by replaying its cells.  Throws Error
/// on malformed input.
Grid grid_from_json(Presentation const& p, json const& j);

json to_json(Presentation const& p, std::vector<Diagnostic> const& ds);
json to_json(EquivalenceOutcome const& e);
json to_json(Distance const& d);
json to_json(Presentation const& p, ReversalOutcome const& r);
json to_json(Presentation const& p, DiamondReport const& r);
json to_json(Presentation const& p, CompletenessReport const& r);
json to_json(Presentation const& p, DefectResult const& d);
json to_json(Presentation const& p, CancellativityVerdict const& v);
json to_json(Presentation const& p, LcmResult const& l);

}  // namespace reversal::report
