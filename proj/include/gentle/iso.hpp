#pragma once

// Isomorphism search for small quivers with relations: a vertex bijection
// carrying arrows to arrows and relations to relations. Backtracking with
// degree invariants; fine for the handful-of-vertices instances the tests
// use.

#include <algorithm>
#include <map>
#include <vector>

#include "algebra.hpp"

namespace gentle {

inline bool quivers_isomorphic(const GentleAlgebra& A, const GentleAlgebra& B,
                               std::vector<int>* vertex_map_out = nullptr) {
    int n = A.num_vertices();
    if (n != B.num_vertices() || A.num_arrows() != B.num_arrows() ||
        A.relations.size() != B.relations.size())
        return false;

    // multiset of directed arrows between vertex pairs
    auto arrow_count = [](const GentleAlgebra& Q) {
        std::map<std::pair<int, int>, int> m;
        for (const auto& a : Q.arrows) ++m[{a.src, a.tgt}];
        return m;
    };
    std::map<std::pair<int, int>, int> arrA = arrow_count(A), arrB = arrow_count(B);

    // invariant per vertex: sorted degree signature
    auto signature = [](const GentleAlgebra& Q) {
        std::vector<std::array<int, 4>> sig(Q.num_vertices(), {0, 0, 0, 0});
        for (const auto& a : Q.arrows) {
            ++sig[a.src][0];
            ++sig[a.tgt][1];
        }
        for (const auto& [a, b] : Q.relations) {
            ++sig[Q.arrows[a].src][2];
            ++sig[Q.arrows[b].tgt][3];
        }
        return sig;
    };
    auto sigA = signature(A), sigB = signature(B);
    {
        auto sa = sigA, sb = sigB;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // relation multiset keyed by vertex triples
    auto rel_triples = [](const GentleAlgebra& Q) {
        std::map<std::tuple<int, int, int>, int> m;
        for (const auto& [a, b] : Q.relations)
            ++m[{Q.arrows[a].src, Q.arrows[a].tgt, Q.arrows[b].tgt}];
        return m;
    };
    std::map<std::tuple<int, int, int>, int> relB = rel_triples(B);

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto consistent = [&](int v, int w) {
        if (sigA[v] != sigB[w]) return false;
        for (int u = 0; u < n; ++u) {
            if (map[u] < 0) continue;
            if (arrA[{v, u}] != arrB[{w, map[u]}]) return false;
            if (arrA[{u, v}] != arrB[{map[u], w}]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) {
            // arrows matched pairwise already; check relation triples
            std::map<std::tuple<int, int, int>, int> relA;
            for (const auto& [a, b] : A.relations)
                ++relA[{map[A.arrows[a].src], map[A.arrows[a].tgt], map[A.arrows[b].tgt]}];
            return relA == relB;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || !consistent(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    if (vertex_map_out) *vertex_map_out = map;
    return true;
}

} // namespace gentle
