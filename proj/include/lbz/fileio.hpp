#pragma once

#include "lbz/heisenberg.hpp"
#include "lbz/variety.hpp"

#include <string>

namespace lbz {

// Reads a variety description:
//   { "name": "...", "identities": [ { "name": "...",
//       "terms": [ { "coefficient": "p/q", "term": "x1(x2x3)" }, ... ] }, ... ] }
// An identity's "name" is optional (a positional one is filled in), a term's
// "coefficient" defaults to 1. Malformed files raise ParseError.
VarietySpec load_variety_file(const std::string& path);

// Reads a generator assignment, a flat map from "x<i>" to HElement text:
//   { "x1": "a", "x2": "b - 1/2*c + [t^2]" }
Assignment load_assignment_file(const std::string& path);

} // namespace lbz
