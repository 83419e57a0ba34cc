#include <doctest.h>

#include <fstream>
#include <set>

#include "core/catalog.hpp"
#include "core/families.hpp"
#include "core/spec_parse.hpp"
#include "core/table_io.hpp"
#include "oracles.hpp"

using namespace kset;

TEST_CASE("make_abelian") {
    SUBCASE("Z3") {
        Group g = make_abelian({3});
        CHECK(g.order() == 3);
        CHECK(g.is_abelian());
        CHECK(g.label(2) == "2");
    }
    SUBCASE("Z3 x Z3 is elementary abelian") {
        Group g = make_abelian({3, 3});
        CHECK(g.order() == 9);
        for (int32_t x = 1; x < 9; ++x) CHECK(g.element_order(x) == 3);
        CHECK(g.label(1) == "(1,0)");
    }
    SUBCASE("9x3 has exponent 9") {
        Group g = make_abelian({9, 3});
        CHECK(g.order() == 27);
        int32_t max_order = 0;
        for (int32_t x = 0; x < 27; ++x) max_order = std::max(max_order, g.element_order(x));
        CHECK(max_order == 9);
    }
    SUBCASE("rejects bad factors") {
        CHECK_THROWS_AS(make_abelian({}), Error);
        CHECK_THROWS_AS(make_abelian({0, 3}), Error);
        CHECK_THROWS_AS(make_abelian({101, 101}), Error); // order > 10000
    }
    SUBCASE("factor order only relabels: censuses agree") {
        auto censusA = testing::order_census(make_abelian({9, 3}));
        auto censusB = testing::order_census(make_abelian({3, 9}));
        CHECK(censusA == censusB);
    }
}

TEST_CASE("make_semidirect") {
    SUBCASE("7:3:2 is the nonabelian group of order 21") {
        Group g = make_semidirect(7, 3, 2);
        CHECK(g.order() == 21);
        CHECK(!g.is_abelian());
        CHECK(g.is_odd());
        CHECK(g.commutator_subgroup().size() == 7);
    }
    SUBCASE("9:3:4 is nonabelian of order 27 with exponent 9") {
        Group g = make_semidirect(9, 3, 4);
        CHECK(g.order() == 27);
        CHECK(!g.is_abelian());
        int32_t max_order = 0;
        for (int32_t x = 0; x < 27; ++x) max_order = std::max(max_order, g.element_order(x));
        CHECK(max_order == 9);
    }
    SUBCASE("rejects an action of the wrong order") {
        CHECK_THROWS_WITH_AS(make_semidirect(7, 3, 3), doctest::Contains("InvalidAction"), Error);
        CHECK_THROWS_AS(make_semidirect(7, 3, 1), Error);
        CHECK_THROWS_AS(make_semidirect(9, 3, 3), Error); // gcd != 1
    }
}

TEST_CASE("make_heisenberg") {
    Group g = make_heisenberg(3);
    CHECK(g.order() == 27);
    CHECK(!g.is_abelian());
    for (int32_t x = 1; x < 27; ++x) CHECK(g.element_order(x) == 3);
    CHECK(g.commutator_subgroup().size() == 3);
    CHECK_THROWS_AS(make_heisenberg(2), Error);
    CHECK_THROWS_AS(make_heisenberg(9), Error);
    CHECK_THROWS_AS(make_heisenberg(17), Error);
}

TEST_CASE("make_symmetric") {
    SUBCASE("S3") {
        Group g = make_symmetric(3);
        CHECK(g.order() == 6);
        CHECK(!g.is_odd());
        CHECK(!g.is_abelian());
        CHECK(g.label(0) == "()");
        CHECK(g.commutator_subgroup().size() == 3);
    }
    SUBCASE("S1 is trivial") {
        CHECK(make_symmetric(1).order() == 1);
    }
    SUBCASE("composition is left-to-right") {
        Group g = make_symmetric(3);
        int32_t t12 = *g.find_label("(1 2)");
        int32_t t13 = *g.find_label("(1 3)");
        // (1 2) then (1 3): 1->2->2, 2->1->3, 3->3->1, i.e. (1 2 3).
        CHECK(g.multiply(t12, t13) == *g.find_label("(1 2 3)"));
    }
    SUBCASE("range") {
        CHECK_THROWS_AS(make_symmetric(0), Error);
        CHECK_THROWS_AS(make_symmetric(8), Error);
    }
}

TEST_CASE("every family constructor passes full validation") {
    for (const Group& g : {make_abelian({9, 3}), make_semidirect(7, 3, 2), make_heisenberg(3),
                           make_symmetric(4)}) {
        std::vector<int32_t> table(size_t(g.order()) * g.order());
        std::vector<std::string> labels;
        for (int32_t i = 0; i < g.order(); ++i) {
            labels.push_back(g.label(i));
            for (int32_t j = 0; j < g.order(); ++j) table[size_t(i) * g.order() + j] = g.at(i, j);
        }
        CHECK_NOTHROW(Group::validate(std::move(table), g.order(), std::move(labels)));
    }
}

TEST_CASE("parse_spec grammar") {
    CHECK(parse_spec("cyclic:9").kind == SpecKind::Cyclic);
    CHECK(parse_spec("cyclic:9").params == std::vector<int64_t>{9});
    CHECK(parse_spec("abelian:3x3").params == std::vector<int64_t>{3, 3});
    CHECK(parse_spec("semidirect:7:3:2").params == std::vector<int64_t>{7, 3, 2});
    CHECK(parse_spec("heisenberg:3").kind == SpecKind::Heisenberg);
    CHECK(parse_spec("sym:5").params == std::vector<int64_t>{5});
    CHECK(parse_spec("file:some/dir/table.tbl").path == "some/dir/table.tbl");
    CHECK(parse_spec("perm:gens.gens").kind == SpecKind::PermFile);

    SUBCASE("syntax errors carry a position") {
        try {
            parse_spec("cyclic:x");
            FAIL("expected SyntaxError");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Syntax);
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_spec("nosuch:3"), Error);
        CHECK_THROWS_AS(parse_spec("cyclic"), Error);
        CHECK_THROWS_AS(parse_spec("abelian:3x"), Error);
    }
    SUBCASE("invalid parameters name the violated constraint") {
        try {
            parse_spec("semidirect:7:3:3");
            FAIL("expected InvalidParam");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidParam);
            CHECK(std::string(e.what()).find("action order") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_spec("heisenberg:4"), Error);
        CHECK_THROWS_AS(parse_spec("sym:9"), Error);
        CHECK_THROWS_AS(parse_spec("cyclic:20000"), Error);
    }
}

TEST_CASE("spec round-trips through its canonical name") {
    for (const char* text : {"cyclic:9", "abelian:3x3x3", "semidirect:7:3:2", "heisenberg:3",
                             "sym:3", "file:t.tbl", "perm:p.gens"}) {
        GroupSpec spec = parse_spec(text);
        CHECK(spec.canonical_name() == text);
        CHECK(parse_spec(spec.canonical_name()) == spec);
    }
    for (const GroupSpec& spec : odd_catalog(27))
        CHECK(parse_spec(spec.canonical_name()) == spec);
}

TEST_CASE("cayley v1 parsing") {
    SUBCASE("Z3 with comments and labels") {
        Group g = parse_cayley_text("# cyclic group\n3\n0 1 2\n1 2 0\n2 0 1\nlabels: e a b\n");
        CHECK(g.order() == 3);
        CHECK(g.label(1) == "a");
        CHECK(g.find_label("b") == 2);
    }
    SUBCASE("NotLatin with file context") {
        try {
            parse_cayley_text("2\n0 1\n1 1\n");
            FAIL("expected NotLatin");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotLatin);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SUBCASE("nonassociative table file") {
        std::string text = "5\n";
        const int32_t loop[25] = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0,
                                  1, 3, 4, 1, 2, 0, 4, 2, 0, 1, 3};
        for (int i = 0; i < 25; ++i) text += std::to_string(loop[i]) + (i % 5 == 4 ? "\n" : " ");
        try {
            parse_cayley_text(text);
            FAIL("expected NotAssociative");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAssociative);
        }
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(parse_cayley_text(""), Error);
        CHECK_THROWS_AS(parse_cayley_text("2\n0 1\n1"), Error);       // wrong count
        CHECK_THROWS_AS(parse_cayley_text("2\n0 x\n1 0"), Error);     // not a number
        CHECK_THROWS_AS(parse_cayley_text("2\n0 1\n1 0\njunk"), Error);
        CHECK_THROWS_AS(parse_cayley_text("2\n0 9\n1 0"), Error);     // entry out of range
    }
}

TEST_CASE("perm generator parsing") {
    SUBCASE("single 3-cycle gives Z3") {
        Group g = parse_perm_generators_text("(1 2 3)\n");
        CHECK(g.order() == 3);
        CHECK(g.is_abelian());
        CHECK(g.label(0) == "()");
    }
    SUBCASE("closure of a 3-cycle and a transposition is S3") {
        Group g = parse_perm_generators_text("(1 2 3)\n(1 2)\n");
        CHECK(g.order() == 6);
        CHECK(!g.is_abelian());
        CHECK(g.find_label("(1 2 3)").has_value());
    }
    SUBCASE("comments, blank lines, multi-cycle generators") {
        Group g = parse_perm_generators_text("# gens\n\n(1 2)(3 4)\n(1 3)(2 4)  # klein\n");
        CHECK(g.order() == 4);
        for (int32_t x = 1; x < 4; ++x) CHECK(g.element_order(x) == 2);
    }
    SUBCASE("syntax errors") {
        CHECK_THROWS_AS(parse_perm_generators_text("(1 2"), Error);      // unbalanced
        CHECK_THROWS_AS(parse_perm_generators_text("(1 2)(2 3)"), Error); // repeated point
        CHECK_THROWS_AS(parse_perm_generators_text("1 2 3"), Error);     // point outside ()
        CHECK_THROWS_AS(parse_perm_generators_text("(1 a)"), Error);
        CHECK_THROWS_AS(parse_perm_generators_text("(0 1)"), Error);     // points are 1-based
    }
    SUBCASE("empty input is the trivial group") {
        CHECK(parse_perm_generators_text("# nothing\n").order() == 1);
    }
}

TEST_CASE("build_group reads spec files from disk") {
    {
        std::ofstream out("z3_test.tbl");
        out << "3\n0 1 2\n1 2 0\n2 0 1\n";
    }
    Group g = build_group(parse_spec("file:z3_test.tbl"));
    CHECK(g.order() == 3);
    CHECK(g.name() == "file:z3_test.tbl");
    std::remove("z3_test.tbl");

    CHECK_THROWS_AS(build_group(parse_spec("file:definitely_missing.tbl")), Error);
}

TEST_CASE("odd catalog") {
    SUBCASE("counts at the documented cutoffs") {
        CHECK(odd_catalog(9).size() == 5);
        CHECK(odd_catalog(21).size() == 12);
        CHECK(odd_catalog(27).size() == 20);
        CHECK(odd_catalog(2).empty());
        CHECK_THROWS_AS(odd_catalog(29), Error);
    }
    SUBCASE("nonabelian counts") {
        int32_t nonabelian = 0;
        for (const GroupSpec& s : odd_catalog(21))
            if (!build_group(s).is_abelian()) ++nonabelian;
        CHECK(nonabelian == 1);
        nonabelian = 0;
        for (const GroupSpec& s : odd_catalog(27))
            if (!build_group(s).is_abelian()) ++nonabelian;
        CHECK(nonabelian == 3);
    }
    SUBCASE("every entry is odd, valid, and distinct by cheap invariants") {
        std::set<std::tuple<int32_t, bool, std::vector<int32_t>>> seen;
        for (const GroupSpec& s : odd_catalog(27)) {
            Group g = build_group(s);
            CHECK(g.is_odd());
            CHECK(g.order() > 1);
            CHECK(g.order() <= 27);
            auto key = std::make_tuple(g.order(), g.is_abelian(), testing::order_census(g));
            CHECK(seen.insert(key).second); // pairwise non-isomorphic
        }
    }
    SUBCASE("ordering is by order with abelian entries first") {
        auto specs = odd_catalog(27);
        int32_t prev_order = 0;
        bool prev_abelian = true;
        for (const GroupSpec& s : specs) {
            Group g = build_group(s);
            CHECK(g.order() >= prev_order);
            if (g.order() == prev_order) CHECK((prev_abelian || !g.is_abelian()));
            prev_order = g.order();
            prev_abelian = g.is_abelian();
        }
    }
}
