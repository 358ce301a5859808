#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gentle/heart.hpp"
#include "gentle/rep.hpp"
#include "test_util.hpp"

using namespace gentle;

namespace {
constexpr int64_t P = kDefaultPrime;

// Hom-vanishing conditions of a simple-minded collection, checked by the
// linear algebra oracle on the stalk objects M_i[k_i].
bool oracle_simple_minded_conditions(const SurfaceModel& M, const GradedDissection& gd) {
    const GentleAlgebra& A = M.A;
    std::vector<Representation> reps;
    for (const auto& a : gd.arcs)
        reps.push_back(string_module(A, P, curve_to_string(M, a.curve)));
    for (size_t i = 0; i < gd.arcs.size(); ++i) {
        if (ext_dim_linalg(reps[i], reps[i], 0, 1) != 1) return false;  // End = k
        for (size_t j = 0; j < gd.arcs.size(); ++j) {
            if (i == j) continue;
            int diff = gd.arcs[j].shift - gd.arcs[i].shift;
            // Hom(M_i[k_i], M_j[k_j + m]) = Ext^{diff + m}; vanishing needed
            // for every m <= 0
            for (int d = 0; d <= diff; ++d)
                if (ext_dim_linalg(reps[i], reps[j], d, d + 1) != 0) return false;
        }
    }
    return true;
}

// number of arrows i->j in Gamma must match dim Hom(M_i[k_i], M_j[k_j][1])
bool oracle_heart_quiver(const SurfaceModel& M, const GradedDissection& gd,
                         const HeartAlgebra& H) {
    const GentleAlgebra& A = M.A;
    std::vector<Representation> reps;
    for (const auto& a : gd.arcs)
        reps.push_back(string_module(A, P, curve_to_string(M, a.curve)));
    int n = static_cast<int>(gd.arcs.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int count = 0;
            for (const auto& ar : H.gamma.arrows)
                if (ar.src == i && ar.tgt == j) ++count;
            int d = gd.arcs[j].shift - gd.arcs[i].shift + 1;
            int expect = d < 0 ? 0 : ext_dim_linalg(reps[i], reps[j], d, d + 1);
            if (count != expect) return false;
        }
    return true;
}
} // namespace

TEST_CASE("standard dissections are valid and give back the algebra") {
    std::vector<GentleAlgebra> algs{testutil::s5_algebra(), testutil::annulus_algebra(),
                                    testutil::kronecker_algebra(), testutil::cycle3_algebra()};
    std::mt19937 rng(91);
    for (int t = 0; t < 10; ++t) algs.push_back(testutil::random_gentle(rng, 5));
    for (const GentleAlgebra& A : algs) {
        SurfaceModel M = surface_of_algebra(A);
        GradedDissection gd = standard_dissection(M);
        DissectionReport rep = validate_simple_minded_dissection(M, gd);
        INFO(serialize_algebra(A));
        for (auto& v : rep.violations) INFO(v);
        REQUIRE(rep.valid());
        for (const auto& ang : dissection_angles(M, gd)) REQUIRE(ang.grading == 1);
        HeartAlgebra H = heart_algebra(M, gd);
        for (int g : H.arrow_grading) REQUIRE(g == 0);
        REQUIRE(quivers_isomorphic(H.gamma, A));
        REQUIRE(H.gamma.is_gentle());
    }
}

TEST_CASE("the dual of the standard dissection is the coordinate itself") {
    for (GentleAlgebra A : {testutil::s5_algebra(), testutil::cycle3_algebra()}) {
        SurfaceModel M = surface_of_algebra(A);
        GradedDissection gd = standard_dissection(M);
        PolygonComplex dual = dual_coordinate(M, gd);
        REQUIRE(serialize_complex(dual) == serialize_complex(M.pc));
    }
}

TEST_CASE("standard heart enumeration reproduces the module category") {
    for (GentleAlgebra A : {testutil::s5_algebra(), testutil::annulus_algebra()}) {
        SurfaceModel M = surface_of_algebra(A);
        HeartAlgebra H = heart_algebra(M, standard_dissection(M));
        for (int len = 0; len <= 4; ++len) {
            auto heart = enumerate_heart_indecomposables(H, len);
            int strings = 0, bands = 0;
            for (auto& h : heart) (h.band ? bands : strings)++;
            REQUIRE(strings == static_cast<int>(enumerate_strings(A, len).size()));
            REQUIRE(bands == static_cast<int>(enumerate_bands(A, len).size()));
            for (auto& h : heart) REQUIRE(is_graded_zigzag(H, h.curve));
        }
    }
}

TEST_CASE("the worked graded dissection") {
    GentleAlgebra A = testutil::s5_algebra();
    SurfaceModel M = surface_of_algebra(A);
    std::string text =
        "arc L1: e1 grade=0\n"
        "arc L2: e2 grade=0\n"
        "arc L3: e3 grade=0\n"
        "arc L5: e5 grade=-1\n"
        "arc L6: e6 grade=0\n"
        "arc L7: e7 grade=0\n"
        "arc L8: e8 grade=0\n"
        "arc L9: e9 grade=0\n"
        "arc L10: e10 grade=0\n"
        "arc X: a4 grade=0\n";
    GradedDissection gd = parse_dissection(M, text);
    DissectionReport rep = validate_simple_minded_dissection(M, gd);
    for (auto& v : rep.violations) INFO(v);
    REQUIRE(rep.valid());
    REQUIRE(oracle_simple_minded_conditions(M, gd));

    HeartAlgebra H = heart_algebra(M, gd);
    REQUIRE(H.coordinate.A.num_vertices() == 10);
    REQUIRE(H.gamma.is_gentle());
    REQUIRE(H.gamma.num_vertices() == 10);

    // the graded arrows: 6 -> 5 carries -1; everything else degree 0,
    // in particular the arrow 7 -> 4 stays in the heart
    auto arc_of = [&](const char* name) { return H.coordinate.pc.arc_index(name); };
    std::map<std::pair<int, int>, std::vector<int>> grades;
    for (int a = 0; a < H.coordinate.A.num_arrows(); ++a)
        grades[{H.coordinate.A.arrows[a].src, H.coordinate.A.arrows[a].tgt}].push_back(
            H.arrow_grading[a]);
    REQUIRE(grades[{arc_of("L6"), arc_of("L5")}] == std::vector<int>{-1});
    REQUIRE(grades[{arc_of("L7"), arc_of("X")}] == std::vector<int>{0});
    int nonzero = 0;
    for (int a = 0; a < H.coordinate.A.num_arrows(); ++a)
        if (H.arrow_grading[a] != 0) ++nonzero;
    REQUIRE(nonzero == 1);
    REQUIRE(H.gamma.num_arrows() == H.coordinate.A.num_arrows() - 1);

    // the oracle agrees arrow-by-arrow with the heart quiver
    REQUIRE(oracle_heart_quiver(M, gd, H));

    // curves through the graded arrow are rejected as heart objects
    int graded_arrow = -1;
    for (int a = 0; a < H.coordinate.A.num_arrows(); ++a)
        if (H.arrow_grading[a] != 0) graded_arrow = a;
    Curve bad = string_to_curve(H.coordinate,
                                Walk::of(H.coordinate.A, {{graded_arrow, false}}));
    REQUIRE_FALSE(is_graded_zigzag(H, bad));
    REQUIRE(is_zigzag(H.coordinate, bad));
}

TEST_CASE("violations are reported") {
    GentleAlgebra A = testutil::s5_algebra();
    SurfaceModel M = surface_of_algebra(A);
    GradedDissection small;
    small.arcs.push_back({"only", string_to_curve(M, Walk::trivial(0)), 0});
    REQUIRE_FALSE(validate_simple_minded_dissection(M, small).valid());
    // crossing arcs: replace one dual by a longer curve
    GradedDissection gd = standard_dissection(M);
    gd.arcs[4].curve = string_to_curve(M, parse_walk(A, "a5 a7^- a6"));
    DissectionReport rep = validate_simple_minded_dissection(M, gd);
    REQUIRE_FALSE(rep.valid());
    // broken grading: shift one arc downward
    GradedDissection gd2 = standard_dissection(M);
    gd2.arcs[0].shift = 1;
    DissectionReport rep2 = validate_simple_minded_dissection(M, gd2);
    bool grading_violation = false;
    for (auto& v : rep2.violations)
        if (v.find("grading") != std::string::npos) grading_violation = true;
    REQUIRE(grading_violation);
}

TEST_CASE("coincident arcs are rejected") {
    GentleAlgebra A = testutil::s5_algebra();
    SurfaceModel M = surface_of_algebra(A);
    GradedDissection gd = standard_dissection(M);
    gd.arcs[1] = gd.arcs[0];
    gd.arcs[1].name = "copy";
    REQUIRE_FALSE(validate_simple_minded_dissection(M, gd).valid());
}

TEST_CASE("shifting one simple violates the grading inequality") {
    GentleAlgebra A = parse_algebra("vertices 1..2\narrow a: 1 -> 2\n");
    SurfaceModel M = surface_of_algebra(A);
    GradedDissection gd = standard_dissection(M);
    gd.arcs[A.vertex_index("1")].shift = -1;
    DissectionReport rep = validate_simple_minded_dissection(M, gd);
    REQUIRE_FALSE(rep.valid());
}
