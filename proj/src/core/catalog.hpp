#pragma once

#include <cstdint>
#include <vector>

#include "core/spec_parse.hpp"

namespace kset {

// One spec per isomorphism class of nontrivial odd-order group of order
// <= max_order, listed by order with abelian entries first. The bundled
// classification stops at 27.
std::vector<GroupSpec> odd_catalog(int32_t max_order);

constexpr int32_t kCatalogMaxOrder = 27;

} // namespace kset
