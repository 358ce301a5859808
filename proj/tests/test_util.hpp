#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gentle/algebra.hpp"
#include "gentle/walk.hpp"

namespace testutil {

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(GENTLE_DATA_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline gentle::GentleAlgebra s5_algebra() {
    return gentle::parse_algebra(read_file("s5_algebra.txt"));
}

// annulus with one puncture: arrows a: 3->2, b: 2->1, c: 3->1, d: 2->3,
// relations ad, da (the smallest algebra with bands)
inline gentle::GentleAlgebra annulus_algebra() {
    return gentle::parse_algebra(
        "vertices 1..3\n"
        "arrow a: 3 -> 2\n"
        "arrow b: 2 -> 1\n"
        "arrow c: 3 -> 1\n"
        "arrow d: 2 -> 3\n"
        "relation a d\n"
        "relation d a\n");
}

inline gentle::GentleAlgebra kronecker_algebra() {
    return gentle::parse_algebra(
        "vertices 1..2\n"
        "arrow a: 1 -> 2\n"
        "arrow b: 1 -> 2\n");
}

// three-cycle with full relations (self-injective, infinite global dimension)
inline gentle::GentleAlgebra cycle3_algebra() {
    return gentle::parse_algebra(
        "vertices 1..3\n"
        "arrow x: 1 -> 2\n"
        "arrow y: 2 -> 3\n"
        "arrow z: 3 -> 1\n"
        "relation x y\n"
        "relation y z\n"
        "relation z x\n");
}

// Random gentle algebras for property tests: grow a quiver respecting the
// degree bounds, pick relations compatible with gentleness, reject
// non-admissible outcomes.
inline gentle::GentleAlgebra random_gentle(std::mt19937& rng, int max_vertices) {
    using namespace gentle;
    for (;;) {
        GentleAlgebra A;
        std::uniform_int_distribution<int> nv(1, max_vertices);
        int n = nv(rng);
        for (int i = 0; i < n; ++i) A.vertex_names.push_back(std::to_string(i + 1));
        std::uniform_int_distribution<int> na(0, 2 * n > 10 ? 10 : 2 * n);
        int alen = na(rng);
        std::vector<int> outdeg(n, 0), indeg(n, 0);
        for (int k = 0; k < alen; ++k) {
            std::uniform_int_distribution<int> pick(0, n - 1);
            int s = pick(rng), t = pick(rng);
            if (outdeg[s] >= 2 || indeg[t] >= 2) continue;
            ++outdeg[s];
            ++indeg[t];
            A.arrows.push_back({"r" + std::to_string(A.num_arrows() + 1), s, t});
        }
        // relations: per composable pair, flip a coin subject to the clause-2
        // uniqueness bounds
        std::vector<int> rel_after(A.num_arrows(), 0), rel_before(A.num_arrows(), 0);
        std::vector<int> non_after(A.num_arrows(), 0), non_before(A.num_arrows(), 0);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int a = 0; a < A.num_arrows(); ++a)
            for (int b = 0; b < A.num_arrows(); ++b) {
                if (A.arrows[a].tgt != A.arrows[b].src) continue;
                bool can_rel = rel_after[a] == 0 && rel_before[b] == 0;
                bool can_non = non_after[a] == 0 && non_before[b] == 0;
                bool rel;
                if (can_rel && can_non) rel = coin(rng) == 0;
                else if (can_rel) rel = true;
                else if (can_non) rel = false;
                else break;  // cannot stay gentle; give up on this pair order
                if (rel) {
                    A.relations.insert({a, b});
                    ++rel_after[a];
                    ++rel_before[b];
                } else {
                    ++non_after[a];
                    ++non_before[b];
                }
            }
        if (!A.validate().empty()) continue;
        A.freeze();
        return A;
    }
}

} // namespace testutil
