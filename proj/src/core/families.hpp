#pragma once

#include <cstdint>
#include <vector>

#include "core/group.hpp"

namespace kset {

// Direct product of cyclic groups; mixed-radix element encoding with the
// identity at 0. Single-factor groups get plain integer labels, products get
// tuple labels.
Group make_abelian(const std::vector<int64_t>& factors);

// Z_n x| Z_q with action x -> r*x: pairs (x, y) encoded x + n*y, product
// (x1,y1)(x2,y2) = (x1 + r^y1 * x2 mod n, y1 + y2 mod q).
Group make_semidirect(int64_t n, int64_t q, int64_t r);

// Heisenberg group mod p: triples (a,b,c) encoded a + p*b + p^2*c, product
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b' mod p). Odd prime p <= 13.
Group make_heisenberg(int64_t p);

// S_m for 1 <= m <= 7, elements in lexicographic one-line order (identity at
// index 0), left-to-right composition, cycle-notation labels.
Group make_symmetric(int64_t m);

} // namespace kset
