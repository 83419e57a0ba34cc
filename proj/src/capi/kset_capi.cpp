#include "kset/kset.h"

#include <cstring>
#include <new>
#include <string>

#include "core/catalog.hpp"
#include "core/engine.hpp"
#include "core/report.hpp"
#include "core/spec_parse.hpp"
#include "core/suite.hpp"
#include "core/table_io.hpp"

struct kset_group {
    kset::Group g;
};

struct kset_result {
    kset::KSetResult r;
};

struct kset_report {
    kset::Rendered rendered;
};

namespace {

thread_local std::string t_last_error;

kset_status map_kind(kset::ErrorKind k) {
    using kset::ErrorKind;
    switch (k) {
        case ErrorKind::Syntax: return KSET_ERR_SYNTAX;
        case ErrorKind::InvalidParam:
        case ErrorKind::NotLatin:
        case ErrorKind::NotAssociative:
        case ErrorKind::NoIdentity:
        case ErrorKind::NotASubgroup:
        case ErrorKind::Malformed: return KSET_ERR_INVALID;
        case ErrorKind::Range: return KSET_ERR_RANGE;
        case ErrorKind::Resource: return KSET_ERR_RESOURCE;
        case ErrorKind::Io: return KSET_ERR_IO;
        case ErrorKind::Internal: return KSET_ERR_INTERNAL;
    }
    return KSET_ERR_INTERNAL;
}

kset_status fail(kset_status s, const char* msg) {
    t_last_error = msg;
    return s;
}

template <typename F>
kset_status guarded(F&& f) {
    try {
        return f();
    } catch (const kset::Error& e) {
        t_last_error = e.what();
        return map_kind(e.kind());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return KSET_ERR_RESOURCE;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return KSET_ERR_INTERNAL;
    }
}

kset::EnginePolicy engine_policy(const kset_policy* pol) {
    kset::EnginePolicy p;
    if (!pol) return p;
    p.exact_limit = pol->exact_limit;
    p.sample_budget = pol->sample_budget;
    p.seed = pol->seed;
    if (pol->memory_cap_bytes) p.memory_cap = pol->memory_cap_bytes;
    p.threads = pol->threads;
    p.exact_order_cap = pol->exact_order_cap;
    return p;
}

kset::RenderOptions render_options(const kset_policy* pol) {
    kset::RenderOptions opt;
    opt.timings = pol && pol->include_timings;
    return opt;
}

// Shared dispatch for kset_compute / cmd_kset / cmd_theorem.
kset::KSetResult compute_result(const kset::Group& g, const kset_policy* pol) {
    const kset::EnginePolicy ep = engine_policy(pol);
    const int32_t method = pol ? pol->method : KSET_METHOD_AUTO;
    switch (method) {
        case KSET_METHOD_AUTO: return kset::kset_auto(g, ep);
        case KSET_METHOD_DP: return kset::kset_exact(g, kset::KMethod::SubsetDP, ep);
        case KSET_METHOD_MITM: return kset::kset_exact(g, kset::KMethod::MeetInMiddle, ep);
        case KSET_METHOD_SAMPLE: {
            kset::ElementSet commutant = g.commutator_subgroup();
            kset::KSetResult r = kset::kset_sample(g, ep.seed, ep.sample_budget, &commutant, ep);
            if (r.stats.covered_stop && g.is_odd()) r.stats.conditional_on_containment = true;
            return r;
        }
        default: throw kset::Error(kset::ErrorKind::InvalidParam, "unknown method");
    }
}

kset_status fill_set(const kset::ElementSet& set, int32_t* buf, int32_t cap, int32_t* count) {
    if (!buf || !count) return fail(KSET_ERR_RANGE, "null output buffer");
    const std::vector<int32_t> v = set.to_vector();
    if (int32_t(v.size()) > cap) return fail(KSET_ERR_RANGE, "buffer too small");
    for (size_t i = 0; i < v.size(); ++i) buf[i] = v[i];
    *count = int32_t(v.size());
    return KSET_OK;
}

kset_status fill_witness(const std::optional<kset::Witness>& w, int32_t* ordering, int32_t cap,
                         int32_t* len, int32_t* found) {
    if (!ordering || !len || !found) return fail(KSET_ERR_RANGE, "null output buffer");
    if (!w) {
        *found = 0;
        *len = 0;
        return KSET_OK;
    }
    if (int32_t(w->ordering.size()) > cap) return fail(KSET_ERR_RANGE, "buffer too small");
    for (size_t i = 0; i < w->ordering.size(); ++i) ordering[i] = w->ordering[i];
    *len = int32_t(w->ordering.size());
    *found = 1;
    return KSET_OK;
}

kset_status make_report(kset::Rendered rendered, kset_report** out) {
    *out = new kset_report{std::move(rendered)};
    return KSET_OK;
}

} // namespace

extern "C" {

void kset_policy_defaults(kset_policy* pol) {
    if (!pol) return;
    kset::EnginePolicy def;
    pol->method = KSET_METHOD_AUTO;
    pol->exact_limit = def.exact_limit;
    pol->sample_budget = def.sample_budget;
    pol->seed = def.seed;
    pol->memory_cap_bytes = def.memory_cap;
    pol->threads = def.threads;
    pol->exact_order_cap = def.exact_order_cap;
    pol->max_depth = 16;
    pol->include_timings = 0;
}

const char* kset_version(void) { return "0.1.0"; }

const char* kset_status_name(kset_status s) {
    switch (s) {
        case KSET_OK: return "ok";
        case KSET_ERR_SYNTAX: return "syntax_error";
        case KSET_ERR_INVALID: return "invalid";
        case KSET_ERR_RANGE: return "range_error";
        case KSET_ERR_RESOURCE: return "resource_limit";
        case KSET_ERR_IO: return "io_error";
        case KSET_ERR_INTERNAL: return "internal_error";
    }
    return "?";
}

const char* kset_last_error(void) { return t_last_error.c_str(); }

kset_status kset_group_open(const char* spec, kset_group** out) {
    if (!spec || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        kset::GroupSpec s = kset::parse_spec(spec);
        *out = new kset_group{kset::build_group(s)};
        return KSET_OK;
    });
}

kset_status kset_group_from_cayley_text(const char* text, kset_group** out) {
    if (!text || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = new kset_group{kset::parse_cayley_text(text)};
        return KSET_OK;
    });
}

kset_status kset_group_from_generators_text(const char* text, kset_group** out) {
    if (!text || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = new kset_group{kset::parse_perm_generators_text(text)};
        return KSET_OK;
    });
}

void kset_group_free(kset_group* g) { delete g; }

int32_t kset_group_order(const kset_group* g) { return g ? g->g.order() : 0; }
int32_t kset_group_is_abelian(const kset_group* g) { return g && g->g.is_abelian() ? 1 : 0; }
int32_t kset_group_is_odd(const kset_group* g) { return g && g->g.is_odd() ? 1 : 0; }

const char* kset_group_name(const kset_group* g) { return g ? g->g.name().c_str() : ""; }

const char* kset_group_label(const kset_group* g, int32_t element) {
    if (!g || element < 0 || element >= g->g.order()) return nullptr;
    return g->g.label(element).c_str();
}

kset_status kset_group_find_label(const kset_group* g, const char* label, int32_t* out) {
    if (!g || !label || !out) return fail(KSET_ERR_RANGE, "null argument");
    auto idx = g->g.find_label(label);
    if (!idx) return fail(KSET_ERR_RANGE, "unknown element label");
    *out = *idx;
    return KSET_OK;
}

kset_status kset_group_multiply(const kset_group* g, int32_t x, int32_t y, int32_t* out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = g->g.multiply(x, y);
        return KSET_OK;
    });
}

kset_status kset_group_inverse(const kset_group* g, int32_t x, int32_t* out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = g->g.inverse(x);
        return KSET_OK;
    });
}

kset_status kset_group_commutator(const kset_group* g, int32_t a, int32_t b, int32_t* out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = g->g.commutator(a, b);
        return KSET_OK;
    });
}

kset_status kset_group_commutant(const kset_group* g, int32_t* buf, int32_t cap, int32_t* count) {
    if (!g) return fail(KSET_ERR_RANGE, "null group");
    return guarded([&] { return fill_set(g->g.commutator_subgroup(), buf, cap, count); });
}

kset_status kset_group_conjugacy_class(const kset_group* g, int32_t x, int32_t* buf, int32_t cap,
                                       int32_t* count) {
    if (!g) return fail(KSET_ERR_RANGE, "null group");
    return guarded([&] { return fill_set(g->g.conjugacy_class(x), buf, cap, count); });
}

kset_status kset_group_real_elements(const kset_group* g, int32_t* buf, int32_t cap,
                                     int32_t* count) {
    if (!g) return fail(KSET_ERR_RANGE, "null group");
    return guarded([&] { return fill_set(g->g.real_elements(), buf, cap, count); });
}

kset_status kset_compute(const kset_group* g, const kset_policy* pol, kset_result** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = new kset_result{compute_result(g->g, pol)};
        return KSET_OK;
    });
}

void kset_result_free(kset_result* r) { delete r; }

const char* kset_result_method_name(const kset_result* r) {
    return r ? kset::method_name(r->r.method) : "?";
}

int32_t kset_result_is_exact(const kset_result* r) {
    return r && r->r.certification == kset::Certification::Exact ? 1 : 0;
}

int32_t kset_result_is_subgroup(const kset_result* r) { return r && r->r.is_subgroup ? 1 : 0; }

kset_status kset_result_members(const kset_result* r, int32_t* buf, int32_t cap, int32_t* count) {
    if (!r) return fail(KSET_ERR_RANGE, "null result");
    return guarded([&] { return fill_set(r->r.kset, buf, cap, count); });
}

uint64_t kset_result_states(const kset_result* r) { return r ? r->r.stats.states : 0; }
uint64_t kset_result_samples(const kset_result* r) { return r ? r->r.stats.samples : 0; }
uint64_t kset_result_peak_bytes(const kset_result* r) { return r ? r->r.stats.peak_bytes : 0; }
double kset_result_seconds(const kset_result* r) { return r ? r->r.stats.seconds : 0.0; }

kset_status kset_witness(const kset_group* g, int32_t target, const kset_policy* pol,
                         int32_t* ordering, int32_t cap, int32_t* len, int32_t* found) {
    if (!g) return fail(KSET_ERR_RANGE, "null group");
    return guarded([&] {
        auto w = kset::find_witness(g->g, target, engine_policy(pol));
        return fill_witness(w, ordering, cap, len, found);
    });
}

kset_status kset_two_commutator_witness(const kset_group* g, int32_t a, int32_t b, int32_t c,
                                        int32_t d, const kset_policy* pol, int32_t* ordering,
                                        int32_t cap, int32_t* len, int32_t* found) {
    if (!g) return fail(KSET_ERR_RANGE, "null group");
    return guarded([&] {
        kset::WitnessBuilder builder(g->g, engine_policy(pol));
        auto w = builder.two_commutator(a, b, c, d);
        return fill_witness(w, ordering, cap, len, found);
    });
}

kset_status kset_cmd_info(const kset_group* g, const kset_policy* pol, kset_report** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] { return make_report(kset::render_info(g->g, render_options(pol)), out); });
}

kset_status kset_cmd_kset(const kset_group* g, const kset_policy* pol, kset_report** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        kset::KSetResult r = compute_result(g->g, pol);
        return make_report(kset::render_kset(g->g, r, render_options(pol)), out);
    });
}

kset_status kset_cmd_verify(const kset_group* g, const kset_policy* pol, kset_report** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        kset::HypothesisReport rep = kset::verify_hypothesis(g->g, engine_policy(pol));
        return make_report(kset::render_verify(g->g, rep, render_options(pol)), out);
    });
}

kset_status kset_cmd_lemma(const kset_group* g, const kset_policy* pol, kset_report** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        return make_report(kset::render_lemma(g->g, kset::check_lemma(g->g), render_options(pol)),
                           out);
    });
}

kset_status kset_cmd_theorem(const kset_group* g, const kset_policy* pol, kset_report** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        kset::KSetResult k = compute_result(g->g, pol);
        kset::TheoremReport rep = kset::check_theorem(g->g, k);
        return make_report(kset::render_theorem(g->g, rep, render_options(pol)), out);
    });
}

kset_status kset_cmd_series(const kset_group* g, const kset_policy* pol, kset_report** out) {
    if (!g || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        const int32_t depth = pol ? pol->max_depth : 16;
        try {
            kset::SeriesChain chain = kset::kset_series(g->g, depth, engine_policy(pol));
            return make_report(kset::render_series(g->g, &chain, {}, render_options(pol)), out);
        } catch (const kset::Error& e) {
            if (e.kind() != kset::ErrorKind::NotASubgroup) throw;
            return make_report(kset::render_series(g->g, nullptr, e.raw(), render_options(pol)),
                               out);
        }
    });
}

kset_status kset_cmd_witness(const kset_group* g, const char* target, const kset_policy* pol,
                             kset_report** out) {
    if (!g || !target || !out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        int32_t idx = -1;
        std::string t(target);
        bool numeric = !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
        if (numeric && t.size() <= 9) {
            idx = int32_t(std::stol(t));
            if (idx >= g->g.order())
                throw kset::Error(kset::ErrorKind::Range, "target index out of range");
        } else if (auto found = g->g.find_label(t)) {
            idx = *found;
        } else {
            throw kset::Error(kset::ErrorKind::Range, "unknown element \"" + t + "\"");
        }
        auto w = kset::find_witness(g->g, idx, engine_policy(pol));
        return make_report(
            kset::render_witness(g->g, idx, w ? &*w : nullptr, render_options(pol)), out);
    });
}

kset_status kset_cmd_survey(int32_t max_order, const kset_policy* pol, kset_report** out) {
    if (!out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] {
        kset::SurveyReport rep = kset::run_survey(max_order, engine_policy(pol));
        return make_report(kset::render_survey(rep, render_options(pol)), out);
    });
}

kset_status kset_cmd_cases(const kset_policy* pol, kset_report** out) {
    if (!out) return fail(KSET_ERR_RANGE, "null argument");
    return guarded([&] { return make_report(kset::render_cases(render_options(pol)), out); });
}

const char* kset_report_json(const kset_report* r) { return r ? r->rendered.json.c_str() : ""; }

int32_t kset_report_exit_code(const kset_report* r) { return r ? r->rendered.exit_code : 0; }

void kset_report_free(kset_report* r) { delete r; }

} // extern "C"
