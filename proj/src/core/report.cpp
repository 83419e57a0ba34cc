#include "core/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include <json.hpp>

#include "core/catalog.hpp"
#include "core/spec_parse.hpp"

namespace kset {

namespace {

using ojson = nlohmann::ordered_json;

ojson wrap(const char* command, ojson group, ojson result) {
    ojson doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["group"] = std::move(group);
    doc["result"] = std::move(result);
    return doc;
}

std::string dump(const ojson& doc) { return doc.dump() + "\n"; }

ojson sorted_labels(const Group& g, const ElementSet& set) {
    std::vector<std::string> labels;
    for (int32_t i : set.to_vector()) labels.push_back(g.label(i));
    std::sort(labels.begin(), labels.end());
    return ojson(labels);
}

ojson stats_json(const KStats& s, const RenderOptions& opt) {
    ojson j;
    j["states"] = s.states;
    j["peak_bytes"] = s.peak_bytes;
    j["samples"] = s.samples;
    if (opt.timings) j["seconds"] = s.seconds;
    return j;
}

ojson hypothesis_body(const HypothesisReport& rep, const RenderOptions& opt) {
    ojson j;
    j["order"] = rep.order;
    j["odd"] = rep.odd;
    j["abelian"] = rep.abelian;
    j["in_hypothesis_scope"] = rep.odd;
    if (rep.has_kset) {
        j["method"] = method_name(rep.method);
        j["certification"] = certification_name(rep.certification);
        j["kset_size"] = rep.kset_size;
    } else {
        j["method"] = nullptr;
        j["certification"] = nullptr;
        j["kset_size"] = nullptr;
    }
    j["commutant_size"] = rep.commutant_size;
    j["suggestion1"] = ojson{{"contains_identity", rep.s1_contains_identity},
                             {"inverse_closed", rep.s1_inverse_closed},
                             {"conjugation_invariant", rep.s1_conjugation_invariant}};
    j["suggestion2"] = rep.s2_contained;
    j["equal"] = rep.equal;
    j["verdict"] = verdict_name(rep.verdict);
    j["resource_limited"] = rep.resource_limited;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["stats"] = stats_json(rep.stats, opt);
    return j;
}

int verify_exit_code(const HypothesisReport& rep) {
    if (rep.verdict == Verdict::Refuted) return 1;
    if (rep.verdict == Verdict::Inconclusive && rep.resource_limited) return 3;
    return 0;
}

} // namespace

SurveyReport run_survey(int32_t max_order, const EnginePolicy& pol) {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<GroupSpec> specs = odd_catalog(max_order);

    SurveyReport rep;
    rep.max_order = max_order;
    rep.entries.resize(specs.size());

    int32_t threads = pol.threads;
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? int32_t(hw) : 1;
    }
    threads = std::min<int32_t>(threads, int32_t(specs.size()));

    // Fan groups out across the pool; each worker's engine runs single
    // threaded so the pool bound is the process-wide parallelism bound.
    EnginePolicy inner = pol;
    if (threads > 1) inner.threads = 1;

    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= specs.size() || failed.load()) break;
            try {
                Group g = build_group(specs[i]);
                rep.entries[i] = verify_hypothesis(g, inner);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int32_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) std::rethrow_exception(failure);

    for (const HypothesisReport& e : rep.entries) {
        switch (e.verdict) {
            case Verdict::Confirmed: ++rep.confirmed; break;
            case Verdict::ConfirmedConditional: ++rep.conditional; break;
            case Verdict::Refuted: ++rep.refuted; break;
            default: ++rep.inconclusive; break;
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Rendered render_info(const Group& g, const RenderOptions&) {
    ojson r;
    r["order"] = g.order();
    r["odd"] = g.is_odd();
    r["abelian"] = g.is_abelian();
    r["commutant_size"] = g.commutator_subgroup().size();
    r["real_nonidentity_count"] = g.real_elements().size() - 1;
    return {dump(wrap("info", g.name(), std::move(r))), 0};
}

Rendered render_kset(const Group& g, const KSetResult& k, const RenderOptions& opt) {
    ojson r;
    r["method"] = method_name(k.method);
    r["certification"] = certification_name(k.certification);
    r["size"] = k.kset.size();
    r["members"] = sorted_labels(g, k.kset);
    r["is_subgroup"] = k.is_subgroup;
    if (k.method == KMethod::Sample) r["covered_commutant"] = k.stats.covered_stop;
    r["stats"] = stats_json(k.stats, opt);
    return {dump(wrap("kset", g.name(), std::move(r))), 0};
}

Rendered render_verify(const Group& g, const HypothesisReport& rep, const RenderOptions& opt) {
    return {dump(wrap("verify", g.name(), hypothesis_body(rep, opt))), verify_exit_code(rep)};
}

Rendered render_lemma(const Group& g, const LemmaReport& rep, const RenderOptions&) {
    ojson r;
    r["odd"] = rep.odd;
    r["real_nonidentity_count"] = rep.real_nonidentity_count;
    r["holds"] = rep.holds;
    // Only an odd group with real non-identity elements contradicts the
    // lemma; even groups are outside its scope.
    int exit_code = rep.odd && !rep.holds ? 1 : 0;
    return {dump(wrap("lemma", g.name(), std::move(r))), exit_code};
}

Rendered render_theorem(const Group& g, const TheoremReport& rep, const RenderOptions&) {
    ojson r;
    r["certification"] = rep.exact_kset ? "exact" : "lower_bound";
    r["commutator_values"] = rep.commutator_values;
    r["pairs_checked"] = rep.pairs_checked;
    r["member_pairs"] = rep.member_pairs;
    r["inconclusive_pairs"] = rep.inconclusive_pairs;
    r["all_member"] = rep.all_member;
    if (rep.has_counterexample)
        r["counterexample"] = ojson{{"left", g.label(rep.cx_left)},
                                    {"right", g.label(rep.cx_right)},
                                    {"product", g.label(rep.cx_product)}};
    else
        r["counterexample"] = nullptr;
    return {dump(wrap("theorem", g.name(), std::move(r))), rep.has_counterexample ? 1 : 0};
}

Rendered render_series(const Group& g, const SeriesChain* chain, const std::string& failure,
                       const RenderOptions&) {
    ojson r;
    int exit_code = 0;
    if (chain) {
        r["chain"] = chain->orders;
        r["steps"] = chain->steps;
        r["complete"] = chain->complete;
        r["conditional"] = chain->conditional;
        r["not_a_subgroup"] = false;
    } else {
        r["chain"] = nullptr;
        r["steps"] = nullptr;
        r["complete"] = false;
        r["conditional"] = false;
        r["not_a_subgroup"] = true;
        r["note"] = failure;
        exit_code = 1; // a K-set failing closure is a failed check
    }
    return {dump(wrap("series", g.name(), std::move(r))), exit_code};
}

Rendered render_witness(const Group& g, int32_t target, const Witness* w,
                        const RenderOptions&) {
    ojson r;
    r["target"] = g.label(target);
    r["found"] = w != nullptr;
    if (w) {
        std::vector<std::string> labels;
        for (int32_t e : w->ordering) labels.push_back(g.label(e));
        r["ordering"] = labels;
        r["verified"] = verify_witness(g, *w);
    } else {
        r["ordering"] = nullptr;
        r["verified"] = nullptr;
    }
    return {dump(wrap("witness", g.name(), std::move(r))), 0};
}

Rendered render_survey(const SurveyReport& rep, const RenderOptions& opt) {
    ojson groups = ojson::array();
    for (const HypothesisReport& e : rep.entries) {
        ojson entry;
        entry["group"] = e.group;
        entry.update(hypothesis_body(e, opt));
        groups.push_back(std::move(entry));
    }
    ojson summary;
    summary["groups"] = rep.entries.size();
    summary["confirmed"] = rep.confirmed;
    summary["confirmed_conditional"] = rep.conditional;
    summary["refuted"] = rep.refuted;
    summary["inconclusive"] = rep.inconclusive;

    ojson r;
    r["max_order"] = rep.max_order;
    r["groups"] = std::move(groups);
    r["summary"] = std::move(summary);
    if (opt.timings) r["total_seconds"] = rep.seconds;

    int exit_code = 0;
    if (rep.refuted > 0) {
        exit_code = 1;
    } else {
        for (const HypothesisReport& e : rep.entries)
            if (e.verdict == Verdict::Inconclusive && e.resource_limited) exit_code = 3;
    }
    return {dump(wrap("survey", nullptr, std::move(r))), exit_code};
}

Rendered render_cases(const RenderOptions&) {
    AtlasSurvey s = survey_patterns();
    ojson patterns = ojson::array();
    for (int id = 1; id <= kPatternCount; ++id) {
        ojson p;
        p["id"] = id;
        p["second"] = pattern_second(id);
        p["display"] = pattern_display(id);
        p["hits"] = s.hits[id];
        patterns.push_back(std::move(p));
    }
    ojson r;
    r["patterns"] = std::move(patterns);
    r["exhaustive"] = ojson{{"enumerated", s.enumerated}, {"complete", s.complete}};
    return {dump(wrap("cases", nullptr, std::move(r))), s.complete ? 0 : 1};
}

} // namespace kset
