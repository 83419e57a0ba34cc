#include <doctest.h>

#include "core/families.hpp"
#include "core/group.hpp"
#include "oracles.hpp"

using namespace kset;

namespace {

// Z3 as a raw table.
const std::vector<int32_t> kZ3{0, 1, 2, 1, 2, 0, 2, 0, 1};

// Latin square of order 5 with identity row/column that is a loop, not a
// group: element 1 squares to the identity, which Lagrange forbids in a
// group of order 5.
const std::vector<int32_t> kLoop5{
    0, 1, 2, 3, 4, //
    1, 0, 3, 4, 2, //
    2, 3, 4, 0, 1, //
    3, 4, 1, 2, 0, //
    4, 2, 0, 1, 3, //
};

} // namespace

TEST_CASE("validate accepts Z3") {
    Group g = Group::validate(kZ3, 3);
    CHECK(g.order() == 3);
    CHECK(g.is_abelian());
    CHECK(g.is_odd());
    CHECK(g.inverse(1) == 2);
    CHECK(g.inverse(0) == 0);
}

TEST_CASE("validate accepts the trivial group") {
    Group g = Group::validate({0}, 1);
    CHECK(g.order() == 1);
    CHECK(g.is_abelian());
    CHECK(g.is_odd());
}

TEST_CASE("validate rejects non-groups") {
    SUBCASE("row repeats an entry") {
        std::vector<int32_t> t{0, 1, 1, 1};
        CHECK_THROWS_WITH_AS(Group::validate(t, 2), doctest::Contains("NotLatin"), Error);
    }
    SUBCASE("no identity pattern") {
        std::vector<int32_t> t{1, 0, 0, 1};
        CHECK_THROWS_WITH_AS(Group::validate(t, 2), doctest::Contains("NoIdentity"), Error);
    }
    SUBCASE("nonassociative Latin square") {
        // Oracle first: the triple scan must find a violation in the loop.
        auto triple = testing::first_nonassociative_triple(kLoop5, 5);
        REQUIRE(triple[0] >= 0);
        try {
            Group::validate(kLoop5, 5);
            FAIL("expected NotAssociative");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAssociative);
            // The diagnostic names a concrete violating triple.
            CHECK(std::string(e.what()).find("triple") != std::string::npos);
        }
    }
    SUBCASE("empty order") {
        CHECK_THROWS_AS(Group::validate({}, 0), Error);
    }
    SUBCASE("entry out of range") {
        std::vector<int32_t> t{0, 1, 1, 7};
        CHECK_THROWS_AS(Group::validate(t, 2), Error);
    }
}

TEST_CASE("multiply follows the table") {
    Group z3 = Group::validate(kZ3, 3);
    CHECK(z3.multiply(1, 2) == 0);
    CHECK(z3.multiply(0, 2) == 2);
    CHECK(z3.multiply(2, 0) == 2);
    CHECK_THROWS_AS(z3.multiply(3, 0), Error);

    // (1,0)*(6,0) = (0,0) in Z7 x| Z3 with the x + 7y encoding.
    Group g = make_semidirect(7, 3, 2);
    CHECK(g.multiply(1, 6) == 0);
}

TEST_CASE("commutator convention satisfies all three identities") {
    // [a,b] = [a,ab], [a,b] = [b^-1,ab], [a,b][b,a] = 1, exhaustively on a
    // nonabelian and an abelian group.
    for (const Group& g : {make_semidirect(7, 3, 2), make_abelian({9})}) {
        for (int32_t a = 0; a < g.order(); ++a) {
            for (int32_t b = 0; b < g.order(); ++b) {
                int32_t ab = g.multiply(a, b);
                int32_t c = g.commutator(a, b);
                CHECK(c == g.commutator(a, ab));
                CHECK(c == g.commutator(g.inverse(b), ab));
                CHECK(g.multiply(c, g.commutator(b, a)) == 0);
            }
        }
    }
}

TEST_CASE("commutator examples") {
    Group g = make_semidirect(7, 3, 2);
    // a = (0,1) -> index 7, b = (1,0) -> index 1; [a,b] = (4,0) -> index 4.
    CHECK(g.commutator(7, 1) == 4);

    Group z9 = make_abelian({9});
    for (int32_t a = 0; a < 9; ++a)
        for (int32_t b = 0; b < 9; ++b) CHECK(z9.commutator(a, b) == 0);
}

TEST_CASE("abelian flag matches vanishing commutators") {
    for (const char* what : {"abelian", "nonabelian"}) {
        Group g = what[0] == 'a' ? make_abelian({3, 3}) : make_heisenberg(3);
        bool all_zero = true;
        for (int32_t a = 0; a < g.order(); ++a)
            for (int32_t b = 0; b < g.order(); ++b)
                if (g.commutator(a, b) != 0) all_zero = false;
        CHECK(g.is_abelian() == all_zero);
    }
}

TEST_CASE("conjugacy classes") {
    SUBCASE("abelian classes are singletons") {
        Group g = make_abelian({5});
        for (int32_t x = 0; x < 5; ++x) {
            ElementSet cls = g.conjugacy_class(x);
            CHECK(cls.size() == 1);
            CHECK(cls.contains(x));
        }
    }
    SUBCASE("S3 transpositions form one class of size 3") {
        Group g = make_symmetric(3);
        int32_t t = *g.find_label("(1 2)");
        ElementSet cls = g.conjugacy_class(t);
        CHECK(cls.size() == 3);
        CHECK(cls.contains(*g.find_label("(1 3)")));
        CHECK(cls.contains(*g.find_label("(2 3)")));
    }
    SUBCASE("class of (1,0) under the action x -> 2x") {
        Group g = make_semidirect(7, 3, 2);
        ElementSet cls = g.conjugacy_class(1); // (1,0)
        CHECK(cls.to_vector() == std::vector<int32_t>{1, 2, 4}); // (1,0),(2,0),(4,0)
    }
    SUBCASE("classes partition the group") {
        Group g = make_heisenberg(3);
        std::vector<int32_t> seen(g.order(), 0);
        for (int32_t x = 0; x < g.order(); ++x) {
            ElementSet cls = g.conjugacy_class(x);
            CHECK(cls.contains(x));
            if (seen[x]) continue;
            for (int32_t y : cls.to_vector()) {
                CHECK(!seen[y]);
                seen[y] = 1;
                CHECK(g.conjugacy_class(y) == cls);
            }
        }
        for (int32_t x = 0; x < g.order(); ++x) CHECK(seen[x]);
    }
}

TEST_CASE("subgroup closure") {
    SUBCASE("empty seed gives the trivial subgroup") {
        Group g = make_abelian({9});
        CHECK(g.subgroup_closure(ElementSet(9)).to_vector() == std::vector<int32_t>{0});
    }
    SUBCASE("3 generates {0,3,6} in Z9") {
        Group g = make_abelian({9});
        CHECK(g.subgroup_closure(ElementSet::single(9, 3)).to_vector() ==
              std::vector<int32_t>{0, 3, 6});
    }
    SUBCASE("a 3-cycle generates A3 in S3") {
        Group g = make_symmetric(3);
        ElementSet a3 = g.subgroup_closure(ElementSet::single(6, *g.find_label("(1 2 3)")));
        CHECK(a3.size() == 3);
        CHECK(a3.contains(0));
        CHECK(a3.contains(*g.find_label("(1 3 2)")));
    }
}

TEST_CASE("commutator subgroup") {
    SUBCASE("abelian commutant is trivial") {
        CHECK(make_abelian({3, 3, 3}).commutator_subgroup().size() == 1);
    }
    SUBCASE("S3 commutant is A3") {
        Group g = make_symmetric(3);
        ElementSet c = g.commutator_subgroup();
        CHECK(c.size() == 3);
        CHECK(c.contains(0));
        CHECK(c.contains(*g.find_label("(1 2 3)")));
        CHECK(c.contains(*g.find_label("(1 3 2)")));
    }
    SUBCASE("semidirect:7:3:2 commutant is the Z7 factor") {
        Group g = make_semidirect(7, 3, 2);
        CHECK(g.commutator_subgroup().to_vector() ==
              std::vector<int32_t>{0, 1, 2, 3, 4, 5, 6});
    }
    SUBCASE("heisenberg:3 commutant is the center of size 3") {
        Group g = make_heisenberg(3);
        // {(0,0,c)} encodes to {0, 9, 18}.
        CHECK(g.commutator_subgroup().to_vector() == std::vector<int32_t>{0, 9, 18});
    }
}

TEST_CASE("real elements") {
    SUBCASE("odd groups have only the identity") {
        for (const Group& g : {make_abelian({3}), make_semidirect(7, 3, 2), make_heisenberg(3)}) {
            CHECK(g.real_elements().to_vector() == std::vector<int32_t>{0});
        }
    }
    SUBCASE("all of S3 is real") {
        CHECK(make_symmetric(3).real_elements().size() == 6);
    }
}

TEST_CASE("odd groups pair the non-identity elements into inverse pairs") {
    for (const Group& g : {make_abelian({15}), make_semidirect(9, 3, 4), make_heisenberg(3)}) {
        REQUIRE(g.is_odd());
        int32_t paired = 0;
        for (int32_t x = 1; x < g.order(); ++x) {
            CHECK(g.inverse(x) != x);
            if (x < g.inverse(x)) ++paired;
        }
        CHECK(paired == (g.order() - 1) / 2);
    }
}

TEST_CASE("element set basics") {
    ElementSet s(70);
    CHECK(s.empty());
    s.insert(0);
    s.insert(69);
    CHECK(s.size() == 2);
    CHECK(s.contains(69));
    CHECK(!s.contains(5));
    CHECK_THROWS_AS(s.insert(70), Error);
    ElementSet t(70);
    t.insert(69);
    CHECK(t.is_subset_of(s));
    CHECK(!s.is_subset_of(t));
    CHECK(s.intersects(t));
    t.unite(s);
    CHECK(t == s);
}
