#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kset {

// One-line permutation over points 0..degree-1.
using Perm = std::vector<int32_t>;

inline Perm identity_perm(int32_t degree) {
    Perm p(degree);
    for (int32_t i = 0; i < degree; ++i) p[i] = i;
    return p;
}

// Left-to-right composition: (a*b)(x) = b(a(x)).
inline Perm compose_perm(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

// Cycle notation over 1-based points, fixed points omitted, "()" for the
// identity. Cycles start at their smallest point, listed by smallest point.
std::string perm_cycle_label(const Perm& p);

} // namespace kset
