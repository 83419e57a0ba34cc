#pragma once

#include <string_view>

#include "core/group.hpp"

namespace kset {

// "cayley v1" text: '#' comments and blank lines ignored; first datum is the
// order N, then N rows of N whitespace-separated entries in [0, N); optional
// trailing "labels: s0 s1 ..." line. Delegates to Group::validate.
Group parse_cayley_text(std::string_view text);

// One generator per non-comment line, in cycle notation over 1-based points,
// e.g. "(1 2 3)(4 5)". The group is the multiplicative closure of the
// generators, re-indexed with the identity at 0; closure capped at 10000.
Group parse_perm_generators_text(std::string_view text);

} // namespace kset
