// Presentations used throughout the library: braid monoids, their colored
// variants, a Malcev-type example and free monoids.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reversal/presentation.hpp"

namespace reversal::catalog {

/// Positive braid monoid on n strands: generators s1 ... s(n-1).
Presentation braid(std::size_t n);

/// The first k color names: a, b, ..., z, then c26, c27, ...
std::vector<std::string> color_names(std::size_t k);

/// Colored braid monoid: generators s<i>.<color>; far pairs commute for every
/// color pair, adjacent pairs satisfy
///   s<i>.x s<j>.y s<i>.z = s<j>.z s<i>.y s<j>.x
/// for every color triple (x, y, z).
Presentation colored_braid(std::size_t n, std::size_t colors);

/// colored_braid restricted to the triples with x = y or y = z.
Presentation restricted_colored(std::size_t n, std::size_t colors);

/// a c = b d, a cp = b dp, ap c = bp d (the primed letters are spelled with a
/// trailing p).
Presentation malcev();

Presentation free_monoid(std::size_t k);

/// Names accepted by by_name.
std::vector<std::string> const& names();

/// Looks up braid, colored-braid, restricted-colored, malcev or free; n and
/// colors are ignored where they do not apply.  Throws Error on an unknown
/// name or invalid parameters.
Presentation by_name(std::string_view name, std::size_t n, std::size_t colors);

}  // namespace reversal::catalog
