#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "core/engine.hpp"
#include "core/group.hpp"

namespace kset {

enum class Verdict { Confirmed, ConfirmedConditional, Refuted, Inconclusive, OutOfScope };

const char* verdict_name(Verdict v);

// Verdict of comparing a group's K-set against its commutator subgroup,
// together with the structural checks on the K-set itself.
struct HypothesisReport {
    std::string group;
    int32_t order = 0;
    bool odd = false;
    bool abelian = false;

    bool has_kset = false;
    KMethod method = KMethod::SubsetDP;
    Certification certification = Certification::Exact;
    int32_t kset_size = 0;
    int32_t commutant_size = 0;

    bool s1_contains_identity = false;
    bool s1_inverse_closed = false;
    bool s1_conjugation_invariant = false;
    bool s2_contained = false;
    bool equal = false;

    Verdict verdict = Verdict::Inconclusive;
    bool resource_limited = false;
    std::string note;
    KStats stats;
};

HypothesisReport verify_hypothesis(const Group& g, const EnginePolicy& pol = {});

struct LemmaReport {
    int32_t real_nonidentity_count = 0;
    bool holds = false;
    bool odd = false;
};

// Only the identity of an odd group is conjugate to its own inverse; even
// groups report their non-identity real-element count as contrast.
LemmaReport check_lemma(const Group& g);

struct TheoremReport {
    int32_t commutator_values = 0;
    int64_t pairs_checked = 0;
    int64_t member_pairs = 0;
    int64_t inconclusive_pairs = 0;
    bool all_member = false;
    bool exact_kset = false;
    bool has_counterexample = false;
    int32_t cx_left = 0, cx_right = 0, cx_product = 0;
};

// Every product of two commutator values must lie in the K-set of an odd
// group. With a lower-bound K, misses are inconclusive, not counterexamples.
TheoremReport check_theorem(const Group& g, const KSetResult& k);

// Constructs orderings of all non-identity elements realizing [a,b]*[c,d].
// Strategy: drop degenerate commutators and pad with inverse pairs; write
// disjoint-support pairs as two 4-letter words plus padding; rewrite
// overlapping pairs with the commutator identities (bounded search); fall
// back to the exact DP witness. Every returned ordering is re-verified.
class WitnessBuilder {
public:
    explicit WitnessBuilder(const Group& g, const EnginePolicy& pol = {});

    std::optional<Witness> two_commutator(int32_t a, int32_t b, int32_t c, int32_t d);

    // Which strategy produced the last witness: "padding", "single",
    // "disjoint", "rewrite" or "dp".
    const std::string& last_path() const { return last_path_; }

private:
    std::optional<Witness> build_padded(const std::vector<int32_t>& word, int32_t target);

    const Group& g_;
    EnginePolicy pol_;
    std::optional<FullProductDp> dp_;
    std::string last_path_;
};

// A +/-1 power of one of the formal symbols a1..a4.
struct SignedSymbol {
    int32_t base = 1;
    bool inverse = false;
};

constexpr int kPatternDisjoint = 0;
constexpr int kPatternCount = 16;

// Classifies the second commutator [u, v] against the fixed first commutator
// [a1, a2], canonicalizing fresh symbols to the least unused index. Returns
// 1..16, or kPatternDisjoint when no a1/a2 symbol occurs. Degenerate pairs
// (same base twice) are MalformedPair errors.
int classify_pattern(SignedSymbol u, SignedSymbol v);

std::string symbol_display(SignedSymbol s);
std::string pattern_display(int id);          // "[a1,a2][a1,a3]"
std::string pattern_second(int id);           // "[a1,a3]"

struct AtlasSurvey {
    int enumerated = 0;
    std::array<int, kPatternCount + 1> hits{}; // hits[0] unused
    bool complete = false;                     // all 16 hit, nothing else
};

// Enumerates every formally nontrivial second commutator over the symbols
// a1,a2,a3 and their inverses; each one shares a symbol with [a1,a2], and
// together they must hit exactly the 16 patterns.
AtlasSurvey survey_patterns();

// Chain of orders of the iterated K-set, expected to reach 1.
struct SeriesChain {
    std::vector<int32_t> orders;
    int32_t steps = 0;
    bool complete = false;
    bool conditional = false; // some step certified via a covered lower bound
};

SeriesChain kset_series(const Group& g, int32_t max_depth, const EnginePolicy& pol = {});

// Table restriction to a multiplicatively closed subset containing the
// identity; throws NotASubgroup otherwise.
Group restrict_to_subgroup(const Group& g, const ElementSet& sub);

} // namespace kset
