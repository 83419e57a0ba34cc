#include <doctest.h>

#include <json.hpp>

#include "core/families.hpp"
#include "core/report.hpp"
#include "core/spec_parse.hpp"

using namespace kset;
using json = nlohmann::json;

TEST_CASE("kset report is byte-stable with a fixed key order") {
    Group g = build_group(parse_spec("cyclic:3"));
    KSetResult k = kset_auto(g);
    Rendered r = render_kset(g, k, {});
    CHECK(r.json ==
          "{\"schema_version\":1,\"command\":\"kset\",\"group\":\"cyclic:3\",\"result\":"
          "{\"method\":\"abelian_shortcut\",\"certification\":\"exact\",\"size\":1,"
          "\"members\":[\"0\"],\"is_subgroup\":true,"
          "\"stats\":{\"states\":0,\"peak_bytes\":0,\"samples\":0}}}\n");
    CHECK(r.exit_code == 0);
    CHECK(render_kset(g, k, {}).json == r.json);
}

TEST_CASE("verify report carries the schema fields") {
    Group g = make_semidirect(7, 3, 2);
    Rendered r = render_verify(g, verify_hypothesis(g), {});
    json doc = json::parse(r.json);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "verify");
    CHECK(doc["group"] == "semidirect:7:3:2");
    const json& res = doc["result"];
    CHECK(res["order"] == 21);
    CHECK(res["odd"] == true);
    CHECK(res["abelian"] == false);
    CHECK(res["in_hypothesis_scope"] == true);
    CHECK(res["method"] == "subset_dp");
    CHECK(res["certification"] == "exact");
    CHECK(res["kset_size"] == 7);
    CHECK(res["commutant_size"] == 7);
    CHECK(res["suggestion1"]["contains_identity"] == true);
    CHECK(res["suggestion1"]["inverse_closed"] == true);
    CHECK(res["suggestion1"]["conjugation_invariant"] == true);
    CHECK(res["suggestion2"] == true);
    CHECK(res["equal"] == true);
    CHECK(res["verdict"] == "confirmed");
    CHECK(res["resource_limited"] == false);
    CHECK(!res["stats"].contains("seconds"));
    CHECK(r.exit_code == 0);
}

TEST_CASE("timings are opt-in") {
    Group g = make_abelian({3});
    RenderOptions opt;
    opt.timings = true;
    Rendered r = render_verify(g, verify_hypothesis(g), opt);
    json doc = json::parse(r.json);
    CHECK(doc["result"]["stats"].contains("seconds"));
}

TEST_CASE("exit codes follow the verdict") {
    Group g = make_abelian({3});
    HypothesisReport rep = verify_hypothesis(g);

    SUBCASE("confirmed is success") { CHECK(render_verify(g, rep, {}).exit_code == 0); }
    SUBCASE("refuted is a failed check") {
        rep.verdict = Verdict::Refuted;
        CHECK(render_verify(g, rep, {}).exit_code == 1);
    }
    SUBCASE("resource-limited inconclusive maps to the resource exit") {
        rep.verdict = Verdict::Inconclusive;
        rep.resource_limited = true;
        CHECK(render_verify(g, rep, {}).exit_code == 3);
    }
    SUBCASE("plain inconclusive is not a failure") {
        rep.verdict = Verdict::Inconclusive;
        rep.resource_limited = false;
        CHECK(render_verify(g, rep, {}).exit_code == 0);
    }
    SUBCASE("out of scope is not a failure") {
        Group s3 = make_symmetric(3);
        CHECK(render_verify(s3, verify_hypothesis(s3), {}).exit_code == 0);
    }
}

TEST_CASE("lemma and theorem exit codes") {
    Group s3 = make_symmetric(3);
    // Even order: outside the lemma's scope, reported but not a failure.
    CHECK(render_lemma(s3, check_lemma(s3), {}).exit_code == 0);

    Group z3 = make_abelian({3});
    CHECK(render_lemma(z3, check_lemma(z3), {}).exit_code == 0);

    TheoremReport fail;
    fail.exact_kset = true;
    fail.has_counterexample = true;
    CHECK(render_theorem(z3, fail, {}).exit_code == 1);
}

TEST_CASE("survey over the order-9 catalog") {
    EnginePolicy pol;
    pol.threads = 1;
    SurveyReport rep = run_survey(9, pol);
    CHECK(rep.entries.size() == 5);
    CHECK(rep.confirmed == 5);
    CHECK(rep.conditional + rep.refuted + rep.inconclusive == 0);

    Rendered r = render_survey(rep, {});
    json doc = json::parse(r.json);
    CHECK(doc["group"].is_null());
    CHECK(doc["result"]["groups"].size() == 5);
    CHECK(doc["result"]["summary"]["confirmed"] == 5);
    CHECK(doc["result"]["groups"][0]["group"] == "cyclic:3");
    CHECK(r.exit_code == 0);
}

TEST_CASE("survey reports are identical across thread counts") {
    EnginePolicy one;
    one.threads = 1;
    EnginePolicy eight;
    eight.threads = 8;
    std::string a = render_survey(run_survey(21, one), {}).json;
    std::string b = render_survey(run_survey(21, eight), {}).json;
    std::string c = render_survey(run_survey(21, one), {}).json;
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("witness and series reports") {
    Group g = make_abelian({5});
    auto w = find_witness(g, 0);
    REQUIRE(w.has_value());
    json doc = json::parse(render_witness(g, 0, &*w, {}).json);
    CHECK(doc["result"]["found"] == true);
    CHECK(doc["result"]["verified"] == true);
    CHECK(doc["result"]["ordering"].size() == 4);

    json absent = json::parse(render_witness(g, 1, nullptr, {}).json);
    CHECK(absent["result"]["found"] == false);
    CHECK(absent["result"]["ordering"].is_null());

    SeriesChain chain = kset_series(g, 16, {});
    json sdoc = json::parse(render_series(g, &chain, {}, {}).json);
    CHECK(sdoc["result"]["chain"] == json::array({5, 1}));
    CHECK(sdoc["result"]["complete"] == true);
    CHECK(render_series(g, &chain, {}, {}).exit_code == 0);
    CHECK(render_series(g, nullptr, "boom", {}).exit_code == 1);
}

TEST_CASE("cases report") {
    Rendered r = render_cases({});
    json doc = json::parse(r.json);
    CHECK(doc["result"]["patterns"].size() == 16);
    CHECK(doc["result"]["patterns"][0]["display"] == "[a1,a2][a1,a3]");
    CHECK(doc["result"]["exhaustive"]["enumerated"] == 24);
    CHECK(doc["result"]["exhaustive"]["complete"] == true);
    CHECK(r.exit_code == 0);
}

TEST_CASE("info report") {
    Group g = make_heisenberg(3);
    json doc = json::parse(render_info(g, {}).json);
    CHECK(doc["result"]["order"] == 27);
    CHECK(doc["result"]["odd"] == true);
    CHECK(doc["result"]["abelian"] == false);
    CHECK(doc["result"]["commutant_size"] == 3);
    CHECK(doc["result"]["real_nonidentity_count"] == 0);
}
