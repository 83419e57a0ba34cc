#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/engine.hpp"
#include "core/suite.hpp"

namespace kset {

// Wall-clock fields are volatile, so the JSON documents omit them unless
// explicitly requested; everything else is byte-stable across runs and
// thread counts.
struct RenderOptions {
    bool timings = false;
};

struct SurveyReport {
    int32_t max_order = 0;
    std::vector<HypothesisReport> entries;
    int32_t confirmed = 0;
    int32_t conditional = 0;
    int32_t refuted = 0;
    int32_t inconclusive = 0;
    double seconds = 0.0;
};

// verify_hypothesis over every odd_catalog spec, fanned out over a worker
// pool bounded by pol.threads; entries keep catalog order.
SurveyReport run_survey(int32_t max_order, const EnginePolicy& pol);

// Rendered command reports: canonical JSON document plus the process exit
// code the result maps to (0 ok, 1 failed check, 3 resource limit).
struct Rendered {
    std::string json;
    int exit_code = 0;
};

Rendered render_info(const Group& g, const RenderOptions& opt);
Rendered render_kset(const Group& g, const KSetResult& k, const RenderOptions& opt);
Rendered render_verify(const Group& g, const HypothesisReport& rep, const RenderOptions& opt);
Rendered render_lemma(const Group& g, const LemmaReport& rep, const RenderOptions& opt);
Rendered render_theorem(const Group& g, const TheoremReport& rep, const RenderOptions& opt);
Rendered render_series(const Group& g, const SeriesChain* chain, const std::string& failure,
                       const RenderOptions& opt);
Rendered render_witness(const Group& g, int32_t target, const Witness* w,
                        const RenderOptions& opt);
Rendered render_survey(const SurveyReport& rep, const RenderOptions& opt);
Rendered render_cases(const RenderOptions& opt);

} // namespace kset
