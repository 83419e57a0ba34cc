#include "core/catalog.hpp"

namespace kset {

// Fixed classification table: abelian types for each odd order, plus the
// three nonabelian groups that exist below 28 (Z7x|Z3 at 21, the Heisenberg
// group and Z9x|Z3 at 27).
std::vector<GroupSpec> odd_catalog(int32_t max_order) {
    if (max_order > kCatalogMaxOrder)
        throw Error(ErrorKind::InvalidParam,
                    "catalog is bundled for orders <= " + std::to_string(kCatalogMaxOrder));

    static const char* kSpecs[] = {
        "cyclic:3",
        "cyclic:5",
        "cyclic:7",
        "cyclic:9",
        "abelian:3x3",
        "cyclic:11",
        "cyclic:13",
        "cyclic:15",
        "cyclic:17",
        "cyclic:19",
        "cyclic:21",
        "semidirect:7:3:2",
        "cyclic:23",
        "cyclic:25",
        "abelian:5x5",
        "cyclic:27",
        "abelian:9x3",
        "abelian:3x3x3",
        "heisenberg:3",
        "semidirect:9:3:4",
    };

    std::vector<GroupSpec> out;
    for (const char* s : kSpecs) {
        GroupSpec spec = parse_spec(s);
        int64_t order = 1;
        switch (spec.kind) {
            case SpecKind::Cyclic: order = spec.params[0]; break;
            case SpecKind::Abelian:
                for (int64_t f : spec.params) order *= f;
                break;
            case SpecKind::Semidirect: order = spec.params[0] * spec.params[1]; break;
            case SpecKind::Heisenberg:
                order = spec.params[0] * spec.params[0] * spec.params[0];
                break;
            default: break;
        }
        if (order <= max_order) out.push_back(std::move(spec));
    }
    return out;
}

} // namespace kset
