// Command-line front end; all computation goes through the kset C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "kset/kset.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void print_usage(FILE* to) {
    std::fprintf(to, R"(kset — K-sets of small finite groups

Usage: kset <command> [arguments] [flags]

Commands:
  info <spec>               order, parity, abelian flag, commutant size,
                            real-element count
  kset <spec>               compute the K-set
  verify <spec>             compare the K-set against the commutant
  lemma <spec>              real-element check
  theorem <spec>            products of two commutators vs. the K-set
  series <spec>             iterated K-sets down to the trivial group
  witness <spec> --target T ordering of all non-identity elements whose
                            product is T (label or index)
  survey --max-order M      verify every odd group of order <= M (M <= 27)
  cases                     the sixteen-pattern overlap atlas

Group specs:
  cyclic:N  abelian:N1xN2x...  semidirect:N:Q:R  heisenberg:P  sym:M
  file:PATH (cayley v1 table, .tbl)  perm:PATH (cycle generators, .gens)

Flags:
  --method auto|dp|mitm|sample   K-set computation method (default auto)
  --exact-limit L                auto mode: largest order solved exactly (21)
  --budget N                     sampling budget in orderings (100000)
  --seed S                       sampling seed (0)
  --max-depth D                  series iteration bound (16)
  --max-order M                  survey bound
  --target T                     witness target (label or index)
  --threads T                    worker threads (0 = all cores)
  --memory-cap BYTES             memory budget (default 4 GiB); the
                                 KSET_MEMORY_CAP environment variable is
                                 honored when the flag is absent
  --json                         machine-readable report
  --timings                      include wall-clock fields in JSON
  --version, --help

Exit codes: 0 success/confirmed, 1 refuted or failed check, 2 input error,
3 resource limit.
)");
}

struct Options {
    std::string command;
    std::string spec;
    std::string target;
    int32_t max_order = -1;
    bool json = false;
    kset_policy policy{};
};

[[noreturn]] void usage_error(const std::string& msg) {
    std::fprintf(stderr, "kset: %s\n", msg.c_str());
    std::fprintf(stderr, "run 'kset --help' for usage\n");
    std::exit(kExitUsage);
}

int64_t parse_number(const std::string& flag, const std::string& value) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
        value.size() > 18)
        usage_error("flag " + flag + " needs a non-negative integer, got \"" + value + "\"");
    return std::stoll(value);
}

Options parse_args(int argc, char** argv) {
    Options opt;
    kset_policy_defaults(&opt.policy);
    if (const char* cap = std::getenv("KSET_MEMORY_CAP")) {
        opt.policy.memory_cap_bytes = uint64_t(parse_number("KSET_MEMORY_CAP", cap));
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        print_usage(stderr);
        std::exit(kExitUsage);
    }

    size_t i = 0;
    if (args[0] == "--help" || args[0] == "-h") {
        print_usage(stdout);
        std::exit(kExitOk);
    }
    if (args[0] == "--version") {
        std::printf("kset %s\n", kset_version());
        std::exit(kExitOk);
    }
    opt.command = args[i++];

    auto need_value = [&](const std::string& flag) -> std::string {
        if (i >= args.size()) usage_error("flag " + flag + " needs a value");
        return args[i++];
    };

    while (i < args.size()) {
        const std::string a = args[i++];
        if (a == "--json") {
            opt.json = true;
        } else if (a == "--timings") {
            opt.policy.include_timings = 1;
        } else if (a == "--method") {
            std::string m = need_value(a);
            if (m == "auto")
                opt.policy.method = KSET_METHOD_AUTO;
            else if (m == "dp")
                opt.policy.method = KSET_METHOD_DP;
            else if (m == "mitm")
                opt.policy.method = KSET_METHOD_MITM;
            else if (m == "sample")
                opt.policy.method = KSET_METHOD_SAMPLE;
            else
                usage_error("unknown method \"" + m + "\"");
        } else if (a == "--exact-limit") {
            opt.policy.exact_limit = int32_t(parse_number(a, need_value(a)));
        } else if (a == "--budget") {
            opt.policy.sample_budget = uint64_t(parse_number(a, need_value(a)));
        } else if (a == "--seed") {
            opt.policy.seed = uint64_t(parse_number(a, need_value(a)));
        } else if (a == "--threads") {
            opt.policy.threads = int32_t(parse_number(a, need_value(a)));
        } else if (a == "--memory-cap") {
            opt.policy.memory_cap_bytes = uint64_t(parse_number(a, need_value(a)));
        } else if (a == "--max-depth") {
            opt.policy.max_depth = int32_t(parse_number(a, need_value(a)));
        } else if (a == "--max-order") {
            opt.max_order = int32_t(parse_number(a, need_value(a)));
        } else if (a == "--target") {
            opt.target = need_value(a);
        } else if (!a.empty() && a[0] == '-') {
            usage_error("unknown flag \"" + a + "\"");
        } else if (opt.spec.empty()) {
            opt.spec = a;
        } else {
            usage_error("unexpected argument \"" + a + "\"");
        }
    }
    return opt;
}

int status_exit(kset_status s) {
    return s == KSET_ERR_RESOURCE ? kExitResource : kExitUsage;
}

[[noreturn]] void api_error(kset_status s) {
    std::fprintf(stderr, "kset: %s (%s)\n", kset_last_error(), kset_status_name(s));
    std::exit(status_exit(s));
}

// ------------------------------------------------------------------ output

const char* yn(const json& v) { return v.get<bool>() ? "yes" : "no"; }

std::string join(const json& array, const char* sep) {
    std::string out;
    for (const auto& v : array) {
        if (!out.empty()) out += sep;
        out += v.get<std::string>();
    }
    return out;
}

void print_stats(const json& stats) {
    std::printf("stats:        states %llu, peak bytes %llu, samples %llu",
                (unsigned long long)stats["states"].get<uint64_t>(),
                (unsigned long long)stats["peak_bytes"].get<uint64_t>(),
                (unsigned long long)stats["samples"].get<uint64_t>());
    if (stats.contains("seconds")) std::printf(", %.3fs", stats["seconds"].get<double>());
    std::printf("\n");
}

void print_verify_body(const json& r) {
    std::printf("order:        %d (%s, %s)\n", r["order"].get<int>(),
                r["odd"].get<bool>() ? "odd" : "even",
                r["abelian"].get<bool>() ? "abelian" : "nonabelian");
    if (!r["method"].is_null())
        std::printf("kset:         %d elements via %s (%s)\n", r["kset_size"].get<int>(),
                    r["method"].get<std::string>().c_str(),
                    r["certification"].get<std::string>().c_str());
    std::printf("commutant:    %d elements\n", r["commutant_size"].get<int>());
    const json& s1 = r["suggestion1"];
    std::printf("suggestion 1: identity=%s inverse-closed=%s conjugation-invariant=%s\n",
                yn(s1["contains_identity"]), yn(s1["inverse_closed"]),
                yn(s1["conjugation_invariant"]));
    std::printf("suggestion 2: K contained in commutant: %s\n", yn(r["suggestion2"]));
    std::printf("K == commutant: %s\n", yn(r["equal"]));
    if (!r["in_hypothesis_scope"].get<bool>())
        std::printf("note:         even order is outside the hypothesis scope\n");
    if (r.contains("note")) std::printf("note:         %s\n", r["note"].get<std::string>().c_str());
    std::printf("verdict:      %s\n", r["verdict"].get<std::string>().c_str());
    print_stats(r["stats"]);
}

void print_human(const json& doc) {
    const std::string cmd = doc["command"].get<std::string>();
    const json& r = doc["result"];
    if (!doc["group"].is_null())
        std::printf("group:        %s\n", doc["group"].get<std::string>().c_str());

    if (cmd == "info") {
        std::printf("order:        %d (%s)\n", r["order"].get<int>(),
                    r["odd"].get<bool>() ? "odd" : "even");
        std::printf("abelian:      %s\n", yn(r["abelian"]));
        std::printf("commutant:    %d elements\n", r["commutant_size"].get<int>());
        std::printf("real non-identity elements: %d\n", r["real_nonidentity_count"].get<int>());
    } else if (cmd == "kset") {
        std::printf("method:       %s (%s)\n", r["method"].get<std::string>().c_str(),
                    r["certification"].get<std::string>().c_str());
        std::printf("kset size:    %d\n", r["size"].get<int>());
        std::printf("members:      %s\n", join(r["members"], " ").c_str());
        std::printf("is subgroup:  %s\n", yn(r["is_subgroup"]));
        if (r.contains("covered_commutant"))
            std::printf("covered commutant: %s\n", yn(r["covered_commutant"]));
        print_stats(r["stats"]);
    } else if (cmd == "verify") {
        print_verify_body(r);
    } else if (cmd == "lemma") {
        std::printf("real non-identity elements: %d\n", r["real_nonidentity_count"].get<int>());
        std::printf("lemma holds:  %s%s\n", yn(r["holds"]),
                    r["odd"].get<bool>() ? "" : " (even order: outside the lemma's scope)");
    } else if (cmd == "theorem") {
        std::printf("kset certification: %s\n", r["certification"].get<std::string>().c_str());
        std::printf("commutator values:  %d\n", r["commutator_values"].get<int>());
        std::printf("pairs checked:      %lld (members %lld, inconclusive %lld)\n",
                    r["pairs_checked"].get<long long>(), r["member_pairs"].get<long long>(),
                    r["inconclusive_pairs"].get<long long>());
        std::printf("all products in K:  %s\n", yn(r["all_member"]));
        if (!r["counterexample"].is_null()) {
            const json& cx = r["counterexample"];
            std::printf("counterexample:     [%s]*[%s] = %s\n",
                        cx["left"].get<std::string>().c_str(),
                        cx["right"].get<std::string>().c_str(),
                        cx["product"].get<std::string>().c_str());
        }
    } else if (cmd == "series") {
        if (r["not_a_subgroup"].get<bool>()) {
            std::printf("series failed: %s\n", r["note"].get<std::string>().c_str());
        } else {
            std::string chain;
            for (const auto& v : r["chain"]) {
                if (!chain.empty()) chain += " -> ";
                chain += std::to_string(v.get<int>());
            }
            std::printf("chain:        %s\n", chain.c_str());
            std::printf("steps:        %d (%s%s)\n", r["steps"].get<int>(),
                        r["complete"].get<bool>() ? "complete" : "incomplete",
                        r["conditional"].get<bool>() ? ", conditional steps used" : "");
        }
    } else if (cmd == "witness") {
        std::printf("target:       %s\n", r["target"].get<std::string>().c_str());
        if (r["found"].get<bool>()) {
            std::printf("ordering:     %s\n", join(r["ordering"], " ").c_str());
            std::printf("verified:     %s\n", yn(r["verified"]));
        } else {
            std::printf("target is not in the K-set; no witness exists\n");
        }
    } else if (cmd == "survey") {
        std::printf("survey of odd groups with order <= %d\n", r["max_order"].get<int>());
        for (const auto& e : r["groups"]) {
            std::printf("  %-18s order %2d  %-22s", e["group"].get<std::string>().c_str(),
                        e["order"].get<int>(), e["verdict"].get<std::string>().c_str());
            if (!e["method"].is_null())
                std::printf(" (%s, %s)", e["method"].get<std::string>().c_str(),
                            e["certification"].get<std::string>().c_str());
            std::printf("\n");
        }
        const json& s = r["summary"];
        std::printf("summary: %d groups: %d confirmed, %d conditional, %d refuted, %d inconclusive\n",
                    s["groups"].get<int>(), s["confirmed"].get<int>(),
                    s["confirmed_conditional"].get<int>(), s["refuted"].get<int>(),
                    s["inconclusive"].get<int>());
        if (r.contains("total_seconds"))
            std::printf("total time: %.3fs\n", r["total_seconds"].get<double>());
    } else if (cmd == "cases") {
        std::printf("sixteen overlap patterns of [a1,a2] with a second commutator:\n");
        for (const auto& p : r["patterns"])
            std::printf("  P%-3d %s\n", p["id"].get<int>(),
                        p["display"].get<std::string>().c_str());
        const json& ex = r["exhaustive"];
        std::printf("exhaustive enumeration: %d formally nontrivial pairs, complete: %s\n",
                    ex["enumerated"].get<int>(), yn(ex["complete"]));
    }
}

int emit(kset_report* rep, const Options& opt) {
    const std::string payload = kset_report_json(rep);
    if (opt.json) {
        std::fputs(payload.c_str(), stdout);
    } else {
        print_human(json::parse(payload));
    }
    int code = kset_report_exit_code(rep);
    kset_report_free(rep);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    Options opt = parse_args(argc, argv);
    const std::string& cmd = opt.command;

    if (cmd == "survey") {
        if (opt.max_order < 0) usage_error("survey needs --max-order");
        kset_report* rep = nullptr;
        kset_status s = kset_cmd_survey(opt.max_order, &opt.policy, &rep);
        if (s != KSET_OK) api_error(s);
        return emit(rep, opt);
    }

    if (cmd == "cases") {
        kset_report* rep = nullptr;
        kset_status s = kset_cmd_cases(&opt.policy, &rep);
        if (s != KSET_OK) api_error(s);
        return emit(rep, opt);
    }

    const bool known = cmd == "info" || cmd == "kset" || cmd == "verify" || cmd == "lemma" ||
                       cmd == "theorem" || cmd == "series" || cmd == "witness";
    if (!known) usage_error("unknown command \"" + cmd + "\"");
    if (opt.spec.empty()) usage_error(cmd + " needs a group spec");

    kset_group* group = nullptr;
    kset_status s = kset_group_open(opt.spec.c_str(), &group);
    if (s != KSET_OK) api_error(s);

    kset_report* rep = nullptr;
    if (cmd == "info") {
        s = kset_cmd_info(group, &opt.policy, &rep);
    } else if (cmd == "kset") {
        s = kset_cmd_kset(group, &opt.policy, &rep);
    } else if (cmd == "verify") {
        s = kset_cmd_verify(group, &opt.policy, &rep);
    } else if (cmd == "lemma") {
        s = kset_cmd_lemma(group, &opt.policy, &rep);
    } else if (cmd == "theorem") {
        s = kset_cmd_theorem(group, &opt.policy, &rep);
    } else if (cmd == "series") {
        s = kset_cmd_series(group, &opt.policy, &rep);
    } else if (cmd == "witness") {
        if (opt.target.empty()) usage_error("witness needs --target");
        s = kset_cmd_witness(group, opt.target.c_str(), &opt.policy, &rep);
    }

    if (s != KSET_OK) {
        kset_group_free(group);
        api_error(s);
    }
    int code = emit(rep, opt);
    kset_group_free(group);
    return code;
}
