#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/group.hpp"

namespace kset {

enum class SpecKind { Cyclic, Abelian, Semidirect, Heisenberg, Symmetric, TableFile, PermFile };

// Parsed description of a group: a family with parameters, or a file
// reference. canonical_name() round-trips through parse_spec.
struct GroupSpec {
    SpecKind kind;
    std::vector<int64_t> params; // Cyclic: [n]; Abelian: factors; Semidirect: [n,q,r];
                                 // Heisenberg: [p]; Symmetric: [m]
    std::string path;            // TableFile / PermFile

    std::string canonical_name() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar: cyclic:N | abelian:N1xN2x... | semidirect:N:Q:R | heisenberg:P |
// sym:M | file:PATH | perm:PATH. Parameters are validated here with the same
// constraints the constructors enforce.
GroupSpec parse_spec(std::string_view text);

// Instantiate the group; reads the referenced file for file kinds.
Group build_group(const GroupSpec& spec);

} // namespace kset
