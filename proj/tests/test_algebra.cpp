#include <catch2/catch_amalgamated.hpp>

#include "gentle/algebra.hpp"
#include "gentle/iso.hpp"
#include "test_util.hpp"

using namespace gentle;

TEST_CASE("parse and serialize round trip") {
    GentleAlgebra A = testutil::s5_algebra();
    REQUIRE(A.num_vertices() == 10);
    REQUIRE(A.num_arrows() == 10);
    REQUIRE(A.relations.size() == 6);
    std::string text = serialize_algebra(A);
    GentleAlgebra B = parse_algebra(text);
    REQUIRE(serialize_algebra(B) == text);
}

TEST_CASE("parser rejects malformed input") {
    REQUIRE_THROWS_AS(parse_algebra("arrow a: 1 -> 2\n"), ParseError);        // undeclared vertex
    REQUIRE_THROWS_AS(parse_algebra("vertex 1\nvertex 1\n"), ParseError);     // duplicate
    REQUIRE_THROWS_AS(parse_algebra("vertex 1\nrelation a b\n"), ParseError); // unknown arrow
    REQUIRE_THROWS_AS(parse_algebra("junk\n"), ParseError);
}

TEST_CASE("degenerate and small algebras are gentle") {
    GentleAlgebra one = parse_algebra("vertex v\n");
    REQUIRE(one.is_gentle());
    REQUIRE(testutil::kronecker_algebra().is_gentle());
    REQUIRE(testutil::s5_algebra().is_gentle());
    REQUIRE(testutil::annulus_algebra().is_gentle());
    REQUIRE(testutil::cycle3_algebra().is_gentle());
}

TEST_CASE("gentleness violations are reported by clause") {
    // three arrows out of one vertex
    GentleAlgebra A = parse_algebra(
        "vertices 1..4\narrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n");
    auto rep = A.validate();
    REQUIRE_FALSE(rep.empty());
    REQUIRE(rep[0].clause.find("at most two arrows out") != std::string::npos);

    // one arrow with two relation successors
    GentleAlgebra B = parse_algebra(
        "vertices 1..3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 1\n"
        "relation a b\nrelation a c\n");
    bool found = false;
    for (const auto& v : B.validate())
        if (v.clause.find("ab in I") != std::string::npos) found = true;
    REQUIRE(found);

    // relation-free directed cycle: not admissible
    GentleAlgebra C = parse_algebra(
        "vertices 1..2\narrow a: 1 -> 2\narrow b: 2 -> 1\n");
    bool adm = false;
    for (const auto& v : C.validate())
        if (v.clause.find("admissible") != std::string::npos) adm = true;
    REQUIRE(adm);

    // a loop squaring to zero is fine
    GentleAlgebra D = parse_algebra("vertex 1\narrow g: 1 -> 1\nrelation g g\n");
    REQUIRE(D.is_gentle());
}

TEST_CASE("composition with the zero result") {
    GentleAlgebra A = testutil::s5_algebra();
    Path a6 = Path::of(A, {A.arrow_index("a6")});
    Path a5 = Path::of(A, {A.arrow_index("a5")});
    Path a4 = Path::of(A, {A.arrow_index("a4")});
    auto p = compose(A, a6, a5);
    REQUIRE(p.has_value());
    REQUIRE(p->str(A) == "a6*a5");
    REQUIRE_FALSE(compose(A, a5, a4).has_value());  // a5 a4 is a relation
    Path e6 = Path::trivial(A.vertex_index("6"));
    REQUIRE(compose(A, e6, a5).value() == a5);
    REQUIRE_THROWS(compose(A, a4, a6));  // endpoints do not match
}

TEST_CASE("compose is associative with zero absorbing") {
    GentleAlgebra A = testutil::s5_algebra();
    // a8 * (a6 * a5) vs (a8 * a6) * a5: both zero through the relation a8 a6
    Path a8 = Path::of(A, {A.arrow_index("a8")});
    Path a6 = Path::of(A, {A.arrow_index("a6")});
    Path a5 = Path::of(A, {A.arrow_index("a5")});
    auto inner = compose(A, a6, a5);
    REQUIRE(inner.has_value());
    REQUIRE_FALSE(compose(A, a8, *inner).has_value());
    REQUIRE_FALSE(compose(A, a8, a6).has_value());
}

TEST_CASE("opposite is an involution and preserves gentleness") {
    GentleAlgebra A = testutil::s5_algebra();
    GentleAlgebra op = A.opposite();
    REQUIRE(op.is_gentle());
    REQUIRE(serialize_algebra(op.opposite()) == serialize_algebra(A));
    GentleAlgebra a2 = parse_algebra("vertices 1..2\narrow a: 1 -> 2\n");
    REQUIRE(a2.opposite().arrows[0].src == a2.vertex_index("2"));
}

TEST_CASE("quiver isomorphism search") {
    GentleAlgebra A = testutil::annulus_algebra();
    // same algebra with permuted vertex names
    GentleAlgebra B = parse_algebra(
        "vertices 1..3\n"
        "arrow p: 1 -> 3\n"
        "arrow q: 3 -> 2\n"
        "arrow r: 1 -> 2\n"
        "arrow s: 3 -> 1\n"
        "relation p s\n"
        "relation s p\n");
    REQUIRE(quivers_isomorphic(A, B));
    REQUIRE_FALSE(quivers_isomorphic(A, testutil::cycle3_algebra()));
}

TEST_CASE("random gentle algebras accept downstream preconditions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        GentleAlgebra A = testutil::random_gentle(rng, 6);
        REQUIRE(A.is_gentle());
        REQUIRE(A.opposite().is_gentle());
    }
}
