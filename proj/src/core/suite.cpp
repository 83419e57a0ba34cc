#include "core/suite.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace kset {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "confirmed";
        case Verdict::ConfirmedConditional: return "confirmed_conditional";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::OutOfScope: return "out_of_scope";
    }
    return "?";
}

HypothesisReport verify_hypothesis(const Group& g, const EnginePolicy& pol) {
    HypothesisReport rep;
    rep.group = g.name();
    rep.order = g.order();
    rep.odd = g.is_odd();
    rep.abelian = g.is_abelian();

    ElementSet commutant = g.commutator_subgroup();
    rep.commutant_size = commutant.size();

    try {
        KSetResult k = kset_auto(g, pol);
        rep.has_kset = true;
        rep.method = k.method;
        rep.certification = k.certification;
        rep.kset_size = k.kset.size();
        rep.s1_contains_identity = k.s1_contains_identity;
        rep.s1_inverse_closed = k.s1_inverse_closed;
        rep.s1_conjugation_invariant = k.s1_conjugation_invariant;
        rep.s2_contained = k.s2_in_commutant;
        rep.equal = k.kset == commutant;
        rep.stats = k.stats;

        if (!rep.odd) {
            rep.verdict = Verdict::OutOfScope;
        } else if (k.certification == Certification::Exact) {
            rep.verdict = rep.equal ? Verdict::Confirmed : Verdict::Refuted;
        } else if (!k.s2_in_commutant) {
            // A lower bound escaping the commutant cannot happen for a true
            // group table; treat as inconsistency, not as a refutation.
            rep.verdict = Verdict::Inconclusive;
            rep.note = "sampled products escaped the commutant";
        } else if (k.stats.conditional_on_containment) {
            rep.verdict = Verdict::ConfirmedConditional;
        } else {
            rep.verdict = Verdict::Inconclusive;
            rep.note = "sampling budget exhausted before covering the commutant";
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Resource) throw;
        rep.verdict = Verdict::Inconclusive;
        rep.resource_limited = true;
        rep.note = e.raw();
    }
    return rep;
}

LemmaReport check_lemma(const Group& g) {
    ElementSet real = g.real_elements();
    int32_t count = real.size() - 1; // identity is always real
    return {count, count == 0, g.is_odd()};
}

TheoremReport check_theorem(const Group& g, const KSetResult& k) {
    if (!g.is_odd())
        throw Error(ErrorKind::InvalidParam, "theorem check requires an odd-order group");

    ElementSet values(g.order());
    for (int32_t a = 0; a < g.order(); ++a)
        for (int32_t b = 0; b < g.order(); ++b) values.insert(g.commutator(a, b));

    TheoremReport rep;
    rep.exact_kset = k.certification == Certification::Exact;
    const std::vector<int32_t> vals = values.to_vector();
    rep.commutator_values = int32_t(vals.size());
    for (int32_t c1 : vals) {
        for (int32_t c2 : vals) {
            ++rep.pairs_checked;
            int32_t p = g.at(c1, c2);
            if (k.kset.contains(p)) {
                ++rep.member_pairs;
            } else if (rep.exact_kset) {
                if (!rep.has_counterexample) {
                    rep.has_counterexample = true;
                    rep.cx_left = c1;
                    rep.cx_right = c2;
                    rep.cx_product = p;
                }
            } else {
                ++rep.inconclusive_pairs;
            }
        }
    }
    rep.all_member = rep.member_pairs == rep.pairs_checked;
    return rep;
}

// ---------------------------------------------------------------------------
// Two-commutator witnesses

WitnessBuilder::WitnessBuilder(const Group& g, const EnginePolicy& pol) : g_(g), pol_(pol) {}

std::optional<Witness> WitnessBuilder::build_padded(const std::vector<int32_t>& word,
                                                    int32_t target) {
    Witness w;
    w.target = target;
    w.ordering = word;
    std::vector<char> used(g_.order(), 0);
    for (int32_t e : word) used[e] = 1;
    for (int32_t i = 1; i < g_.order(); ++i) {
        if (used[i]) continue;
        int32_t inv = g_.inverse(i);
        if (used[inv] || inv == i)
            throw Error(ErrorKind::Internal, "padding remainder is not inverse-paired");
        w.ordering.push_back(i);
        w.ordering.push_back(inv);
        used[i] = used[inv] = 1;
    }
    if (!verify_witness(g_, w))
        throw Error(ErrorKind::Internal, "constructed witness failed verification");
    return w;
}

namespace {

// [x,y] spelled as the 4-letter word x^-1 y^-1 x y.
std::vector<int32_t> commutator_word(const Group& g, int32_t x, int32_t y) {
    return {g.inverse(x), g.inverse(y), x, y};
}

std::array<int32_t, 4> support_of(const Group& g, int32_t x, int32_t y) {
    return {x, g.inverse(x), y, g.inverse(y)};
}

bool disjoint_supports(const std::array<int32_t, 4>& a, const std::array<int32_t, 4>& b) {
    for (int32_t u : a)
        for (int32_t v : b)
            if (u == v) return false;
    return true;
}

// Representations (x', y') with [x', y'] = [x, y], reachable by the two
// rewriting identities and their inverses. BFS order, bounded applications.
std::vector<std::pair<int32_t, int32_t>> commutator_reps(const Group& g, int32_t x, int32_t y,
                                                         int budget) {
    std::vector<char> visited(size_t(g.order()) * g.order(), 0);
    std::deque<std::pair<int32_t, int32_t>> queue;
    std::vector<std::pair<int32_t, int32_t>> out;

    auto push = [&](int32_t u, int32_t v) {
        char& flag = visited[size_t(u) * g.order() + v];
        if (!flag) {
            flag = 1;
            queue.emplace_back(u, v);
        }
    };

    push(x, y);
    int applications = 0;
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        out.emplace_back(u, v);
        if (applications >= budget) continue;
        int32_t uv = g.at(u, v);
        applications += 4;
        push(u, uv);                       // [u,v] = [u, uv]
        push(g.inverse(v), uv);            // [u,v] = [v^-1, uv]
        push(u, g.at(g.inverse(u), v));    // undo of the first identity
        push(g.at(v, u), g.inverse(u));    // undo of the second identity
    }
    return out;
}

} // namespace

std::optional<Witness> WitnessBuilder::two_commutator(int32_t a, int32_t b, int32_t c, int32_t d) {
    if (!g_.is_odd())
        throw Error(ErrorKind::InvalidParam, "two-commutator witnesses require an odd-order group");

    const int32_t k1 = g_.commutator(a, b);
    const int32_t k2 = g_.commutator(c, d);
    const int32_t target = g_.at(k1, k2);

    if (k1 == 0 && k2 == 0) {
        last_path_ = "padding";
        return build_padded({}, 0);
    }

    if (k1 == 0 || k2 == 0) {
        last_path_ = "single";
        int32_t x = k1 == 0 ? c : a;
        int32_t y = k1 == 0 ? d : b;
        return build_padded(commutator_word(g_, x, y), target);
    }

    if (disjoint_supports(support_of(g_, a, b), support_of(g_, c, d))) {
        last_path_ = "disjoint";
        std::vector<int32_t> word = commutator_word(g_, a, b);
        std::vector<int32_t> second = commutator_word(g_, c, d);
        word.insert(word.end(), second.begin(), second.end());
        return build_padded(word, target);
    }

    // Overlapping supports: search rewritten representations of both
    // commutators for a disjoint pair.
    constexpr int kRewriteBudget = 64;
    auto reps1 = commutator_reps(g_, a, b, kRewriteBudget / 2);
    auto reps2 = commutator_reps(g_, c, d, kRewriteBudget / 2);
    for (const auto& [x1, y1] : reps1) {
        auto s1 = support_of(g_, x1, y1);
        for (const auto& [x2, y2] : reps2) {
            if (!disjoint_supports(s1, support_of(g_, x2, y2))) continue;
            last_path_ = "rewrite";
            std::vector<int32_t> word = commutator_word(g_, x1, y1);
            std::vector<int32_t> second = commutator_word(g_, x2, y2);
            word.insert(word.end(), second.begin(), second.end());
            return build_padded(word, target);
        }
    }

    // Exact fallback: absence here would falsify the two-commutator theorem.
    last_path_ = "dp";
    if (!dp_) dp_.emplace(g_, pol_);
    return dp_->backtrace(target);
}

// ---------------------------------------------------------------------------
// Pattern atlas

namespace {

struct CanonicalPattern {
    SignedSymbol u, v;
};

// Row-major display order of the sixteen overlap patterns.
constexpr CanonicalPattern kPatterns[kPatternCount] = {
    {{1, false}, {3, false}}, // P1  [a1,a3]
    {{2, false}, {3, false}}, // P2  [a2,a3]
    {{3, false}, {2, false}}, // P3  [a3,a2]
    {{3, false}, {1, false}}, // P4  [a3,a1]
    {{3, false}, {1, true}},  // P5  [a3,a1^-1]
    {{1, true}, {3, false}},  // P6  [a1^-1,a3]
    {{2, true}, {3, false}},  // P7  [a2^-1,a3]
    {{3, false}, {2, true}},  // P8  [a3,a2^-1]
    {{2, false}, {1, false}}, // P9  [a2,a1]
    {{1, false}, {2, false}}, // P10 [a1,a2]
    {{1, false}, {2, true}},  // P11 [a1,a2^-1]
    {{1, true}, {2, false}},  // P12 [a1^-1,a2]
    {{2, false}, {1, true}},  // P13 [a2,a1^-1]
    {{2, true}, {1, false}},  // P14 [a2^-1,a1]
    {{2, true}, {1, true}},   // P15 [a2^-1,a1^-1]
    {{1, true}, {2, true}},   // P16 [a1^-1,a2^-1]
};

bool same_symbol(SignedSymbol a, SignedSymbol b) {
    return a.base == b.base && a.inverse == b.inverse;
}

} // namespace

std::string symbol_display(SignedSymbol s) {
    std::string out = "a" + std::to_string(s.base);
    if (s.inverse) out += "^-1";
    return out;
}

std::string pattern_second(int id) {
    if (id < 1 || id > kPatternCount) throw Error(ErrorKind::Range, "pattern id out of range");
    const CanonicalPattern& p = kPatterns[id - 1];
    return "[" + symbol_display(p.u) + "," + symbol_display(p.v) + "]";
}

std::string pattern_display(int id) { return "[a1,a2]" + pattern_second(id); }

int classify_pattern(SignedSymbol u, SignedSymbol v) {
    if (u.base < 1 || u.base > 4 || v.base < 1 || v.base > 4)
        throw Error(ErrorKind::Range, "symbols must be a1..a4");
    if (u.base == v.base)
        throw Error(ErrorKind::Malformed,
                    "degenerate commutator: second coordinate is the first or its inverse");

    // Fresh symbols take the least unused index, oriented so their first
    // occurrence is positive.
    int32_t next_fresh = 3;
    auto canonicalize = [&](SignedSymbol s) {
        if (s.base <= 2) return s;
        return SignedSymbol{next_fresh++, false};
    };
    SignedSymbol cu = canonicalize(u);
    SignedSymbol cv = canonicalize(v);

    if (cu.base >= 3 && cv.base >= 3) return kPatternDisjoint;

    for (int id = 1; id <= kPatternCount; ++id)
        if (same_symbol(kPatterns[id - 1].u, cu) && same_symbol(kPatterns[id - 1].v, cv))
            return id;
    throw Error(ErrorKind::Internal, "canonical pair missing from the pattern table");
}

AtlasSurvey survey_patterns() {
    AtlasSurvey s;
    SignedSymbol symbols[6] = {{1, false}, {1, true},  {2, false},
                               {2, true},  {3, false}, {3, true}};
    for (SignedSymbol u : symbols) {
        for (SignedSymbol v : symbols) {
            if (u.base == v.base) continue; // formally trivial
            int id = classify_pattern(u, v);
            ++s.enumerated;
            if (id >= 1 && id <= kPatternCount) ++s.hits[id];
        }
    }
    s.complete = s.enumerated == 24;
    for (int id = 1; id <= kPatternCount; ++id)
        if (s.hits[id] == 0) s.complete = false;
    int total = 0;
    for (int id = 1; id <= kPatternCount; ++id) total += s.hits[id];
    if (total != s.enumerated) s.complete = false; // something fell outside the atlas
    return s;
}

// ---------------------------------------------------------------------------
// Iterated K-series

Group restrict_to_subgroup(const Group& g, const ElementSet& sub) {
    const std::vector<int32_t> members = sub.to_vector();
    if (members.empty() || members[0] != 0)
        throw Error(ErrorKind::NotASubgroup, "K-set of " + g.name() + " omits the identity");

    for (int32_t x : members)
        for (int32_t y : members)
            if (!sub.contains(g.at(x, y)))
                throw Error(ErrorKind::NotASubgroup,
                            "K-set of " + g.name() + " is not closed: " + g.label(x) + " * " +
                                g.label(y) + " falls outside");

    const int32_t n = int32_t(members.size());
    std::vector<int32_t> pos(g.order(), -1);
    for (int32_t i = 0; i < n; ++i) pos[members[i]] = i;

    std::vector<int32_t> table(size_t(n) * n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int32_t i = 0; i < n; ++i) {
        labels.push_back(g.label(members[i]));
        for (int32_t j = 0; j < n; ++j)
            table[size_t(i) * n + j] = pos[g.at(members[i], members[j])];
    }
    return Group::from_structured(std::move(table), n, std::move(labels), g.name() + "/K");
}

SeriesChain kset_series(const Group& g, int32_t max_depth, const EnginePolicy& pol) {
    if (!g.is_odd())
        throw Error(ErrorKind::InvalidParam, "K-series requires an odd-order group");
    if (max_depth < 0) throw Error(ErrorKind::InvalidParam, "max_depth must be >= 0");

    SeriesChain chain;
    chain.orders.push_back(g.order());

    Group cur = g;
    bool stalled = false;
    while (cur.order() > 1 && chain.steps < max_depth) {
        KSetResult k = kset_auto(cur, pol);
        bool usable = k.certification == Certification::Exact ||
                      (k.stats.covered_stop && k.stats.conditional_on_containment);
        if (!usable) {
            stalled = true;
            break;
        }
        if (k.certification != Certification::Exact) chain.conditional = true;
        cur = restrict_to_subgroup(cur, k.kset);
        chain.orders.push_back(cur.order());
        ++chain.steps;
    }
    chain.complete = !stalled && cur.order() == 1;
    return chain;
}

} // namespace kset
