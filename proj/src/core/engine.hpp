#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/element_set.hpp"
#include "core/group.hpp"

namespace kset {

enum class KMethod { AbelianShortcut, SubsetDP, MeetInMiddle, Sample };
enum class Certification { Exact, LowerBound };

const char* method_name(KMethod m);
const char* certification_name(Certification c);

struct KStats {
    uint64_t states = 0;     // subset states touched (exact) or samples drawn
    uint64_t peak_bytes = 0; // projected peak of the DP layer storage
    uint64_t samples = 0;
    double seconds = 0.0;
    bool covered_stop = false;               // sampler reached its stop set
    bool conditional_on_containment = false; // covered the commutant of an odd group
};

struct KSetResult {
    ElementSet kset;
    KMethod method = KMethod::SubsetDP;
    Certification certification = Certification::Exact;
    KStats stats;

    // Structural annotations of the reported set.
    bool is_subgroup = false;
    bool s1_contains_identity = false;
    bool s1_inverse_closed = false;
    bool s1_conjugation_invariant = false;
    bool s2_in_commutant = false;
};

struct EnginePolicy {
    int32_t exact_limit = 21;  // auto dispatch: largest order solved exactly
    uint64_t sample_budget = 100000;
    uint64_t seed = 0;
    uint64_t memory_cap = uint64_t(4) << 30;
    int32_t threads = 0;       // 0 = hardware concurrency
    int32_t exact_order_cap = 27;
};

// An ordering of all non-identity elements whose left-to-right product is
// 'target'.
struct Witness {
    std::vector<int32_t> ordering;
    int32_t target = 0;
};

bool verify_witness(const Group& g, const Witness& w);

// Exact K-set by layered subset reachability (SubsetDP) or by combining
// half-set product tables over complementary subsets (MeetInMiddle). Both
// methods return the same set; certification is Exact.
KSetResult kset_exact(const Group& g, KMethod method, const EnginePolicy& pol = {});

// Seeded random orderings accumulated into a lower bound of K. Deterministic
// for fixed (seed, budget, stop_when_covers): samples are drawn in fixed
// chunks whose sub-seeds depend only on the seed and the chunk index, and
// the stop set is only consulted at chunk boundaries.
KSetResult kset_sample(const Group& g, uint64_t seed, uint64_t budget,
                       const ElementSet* stop_when_covers, const EnginePolicy& pol = {});

// Dispatch: abelian groups take the order-independent shortcut, orders up to
// exact_limit run the subset DP, larger groups are sampled with the
// commutator subgroup as the stop set.
KSetResult kset_auto(const Group& g, const EnginePolicy& pol = {});

// Product masks for every subset of the non-identity elements; supports
// K-membership queries and witness extraction by backward traversal.
class FullProductDp {
public:
    FullProductDp(const Group& g, const EnginePolicy& pol);

    bool in_kset(int32_t target) const;
    std::optional<Witness> backtrace(int32_t target) const;

private:
    const Group& g_;
    int32_t m_;
    std::vector<uint32_t> dp_;
};

// Witness for target in K, recovered from the full-subset DP; Absent
// (nullopt) when target is not in K.
std::optional<Witness> find_witness(const Group& g, int32_t target, const EnginePolicy& pol = {});

} // namespace kset
