#pragma once

// Extension polygons: the chain of curves realizing a boundary or puncture
// intersection of weight w as a w-fold extension, the exact sequence it
// carries, and products by gluing chains at a common marked point.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "intersect.hpp"
#include "rep.hpp"
#include "surface.hpp"

namespace gentle {

struct YonedaChain {
    int point;                 // the shared marked point
    int weight;
    std::vector<Curve> chain;  // gamma_0 = target curve, ..., gamma_{w+1} = source curve
    // per consecutive pair: the ends (on chain[i], chain[i+1]) carrying the
    // connecting weight-0 map
    std::vector<std::pair<bool, bool>> joins;
};

namespace detail {

// dual arc of the coordinate arc sitting at 1-based position `pos` of
// polygon `p`, oriented so that its target end lies at p's marked point
inline Curve dual_arc_into(const SurfaceModel& M, int p, int pos) {
    int arc = M.pc.polygons[p].edges[pos - 1];
    SlotRef here{p, pos - 1};
    Curve c;
    c.crossings.push_back({arc, M.pc.slot_id(here) == 0 ? 1 : 0});
    // entering through the other side leaves the exit at p
    if (!(exit_ref(M, c.crossings[0]).polygon == p))
        throw std::logic_error("dual_arc_into: orientation bookkeeping broke");
    return c;
}

inline int cyclic_pos(int pos, int n) { return ((pos - 1) % n + n) % n + 1; }

} // namespace detail

// The distinguished polygon of a weight-w boundary or puncture intersection
// from `src` to `tgt` anchored at the given ends.
inline YonedaChain yoneda_polygon(const SurfaceModel& M, const Curve& src, bool src_at_target,
                                  const Curve& tgt, bool tgt_at_target, int weight) {
    int p = endpoint_polygon(M, src, src_at_target);
    if (p != endpoint_polygon(M, tgt, tgt_at_target))
        throw std::invalid_argument("yoneda_polygon: ends not at a common marked point");
    if (weight < 1) throw std::invalid_argument("yoneda_polygon: weight must be positive");
    const Polygon& poly = M.pc.polygons[p];
    int n = static_cast<int>(poly.edges.size());
    int ms = end_first_position(M, src, src_at_target);
    int mt = end_first_position(M, tgt, tgt_at_target);
    if (!poly.puncture && mt - ms != weight)
        throw std::invalid_argument("yoneda_polygon: weight does not match the end positions");
    YonedaChain Y;
    Y.point = p;
    Y.weight = weight;
    auto pos = [&](int raw) { return poly.puncture ? detail::cyclic_pos(raw, n) : raw; };
    // target curve oriented to run outward from p
    Curve beta_out = tgt_at_target ? reversed(tgt) : tgt;
    Curve alpha_out = src_at_target ? reversed(src) : src;
    Y.chain.push_back(beta_out);
    if (weight == 1) {
        Y.chain.push_back(smooth_at_endpoint(M, tgt, tgt_at_target, src, src_at_target));
        Y.joins.push_back({true, false});  // beta's far end is the smoothing's start
        Y.joins.push_back({true, true});   // alpha's far end
    } else {
        int mt_raw = poly.puncture ? ms + weight : mt;  // unrolled position of the target slot
        Y.chain.push_back(smooth_at_endpoint(M, detail::dual_arc_into(M, p, pos(mt_raw - 1)),
                                             true, beta_out, false));
        Y.joins.push_back({true, true});  // beta's far end sits at gamma_1's target
        for (int i = 2; i <= weight - 1; ++i) {
            Y.chain.push_back(smooth_at_endpoint(M, detail::dual_arc_into(M, p, pos(mt_raw - i)),
                                                 true, detail::dual_arc_into(M, p, pos(mt_raw - i + 1)),
                                                 true));
            // the shared dual arc's far end: start of the previous term,
            // target of this one
            Y.joins.push_back({false, true});
        }
        Y.chain.push_back(smooth_at_endpoint(M, detail::dual_arc_into(M, p, pos(ms + 1)), true,
                                             alpha_out, false));
        Y.joins.push_back({false, false});  // both flank the shared dual arc's far end
        Y.joins.push_back({true, true});    // alpha's far end
    }
    Y.chain.push_back(alpha_out);
    if (Y.joins.size() + 1 != Y.chain.size())
        throw std::logic_error("yoneda_polygon: join bookkeeping broke");
    return Y;
}

// locate the intersection ends realizing a boundary/puncture datum from
// src to tgt at a given point, smallest weight >= min_weight
inline std::optional<YonedaChain> yoneda_polygon_at(const SurfaceModel& M, const Curve& src,
                                                    const Curve& tgt, int point,
                                                    int min_weight = 1) {
    const Polygon& poly = M.pc.polygons[point];
    std::optional<YonedaChain> best;
    for (bool es : {false, true})
        for (bool et : {false, true}) {
            if (endpoint_polygon(M, src, es) != point) continue;
            if (endpoint_polygon(M, tgt, et) != point) continue;
            int cmp = compare_ends(M, src, es, tgt, et);
            int n = static_cast<int>(poly.edges.size());
            int ms = end_first_position(M, src, es);
            int mt = end_first_position(M, tgt, et);
            int w;
            if (!poly.puncture) {
                if (cmp >= 0) continue;  // only angles from src to tgt
                w = mt - ms;
            } else {
                w = ((mt - ms) % n + n) % n;
                if (ms == mt && cmp > 0) w = n;
                if (cmp == 0) continue;
            }
            while (w < min_weight && poly.puncture) w += n;
            if (w < min_weight) continue;
            YonedaChain c = yoneda_polygon(M, src, es, tgt, et, w);
            if (!best || c.weight < best->weight) best = c;
        }
    return best;
}

// Gluing along the middle curve: the product of a in Ext^w(A,B) and b in
// Ext^d(B,C), both anchored at the same marked point.
inline YonedaChain yoneda_product(const SurfaceModel& M, const YonedaChain& a,
                                  const YonedaChain& b) {
    if (a.point != b.point)
        throw std::invalid_argument(
            "yoneda_product: only products at a common marked point are supported");
    // gluing removes the shared middle curve: the spliced sequence connects
    // b's last proper term to a's first through the composite map, anchored
    // at the ends the removed curve touched
    YonedaChain out;
    out.point = a.point;
    out.weight = a.weight + b.weight;
    out.chain = b.chain;
    out.chain.pop_back();
    for (size_t i = 1; i < a.chain.size(); ++i) out.chain.push_back(a.chain[i]);
    out.joins = b.joins;
    out.joins.pop_back();
    out.joins.push_back({b.joins.back().first, a.joins.front().second});
    for (size_t i = 1; i < a.joins.size(); ++i) out.joins.push_back(a.joins[i]);
    return out;
}

// ---------------------------------------------------------------------------
// The exact sequence carried by a chain, with oracle-checked exactness.

struct YonedaSequence {
    std::vector<Walk> terms;  // M(chain[0]), ..., M(chain[w+1])
    bool exact = false;
    std::string failure;
};

namespace detail {

// the weight-0 basis map between two string modules whose curves share an
// endpoint: identify the maximal common crossing run from the shared point
inline std::optional<RepMorphism> overlap_map(const SurfaceModel& M, const GentleAlgebra& A,
                                              int64_t prime, const Curve& x, bool x_at_target,
                                              const Curve& y, bool y_at_target,
                                              const Representation& RX,
                                              const Representation& RY) {
    DirView vx{&x, x_at_target}, vy{&y, y_at_target};
    int L = 0;
    int cap = std::min(vx.size(), vy.size());
    while (L < cap && vx.crossing(L) == vy.crossing(L)) ++L;
    if (L == 0) return std::nullopt;
    // map basis position of x (counted from the shared end) to the matching
    // position of y
    auto xpos = [&](int k) { return x_at_target ? vx.size() - 1 - k : k; };
    auto ypos = [&](int k) { return y_at_target ? vy.size() - 1 - k : k; };
    Walk wx = curve_to_string(M, x);
    std::vector<int> xverts = wx.vertex_sequence(A);
    Walk wy = curve_to_string(M, y);
    std::vector<int> yverts = wy.vertex_sequence(A);
    // per-vertex offsets in the string-module bases (positions in walk order)
    auto offsets = [&](const std::vector<int>& verts, const Representation& R) {
        std::vector<int> off(verts.size());
        std::vector<int> cnt(R.dim.size(), 0);
        for (size_t i = 0; i < verts.size(); ++i) off[i] = cnt[verts[i]]++;
        return off;
    };
    std::vector<int> offx = offsets(xverts, RX), offy = offsets(yverts, RY);
    RepMorphism f;
    for (int v = 0; v < A.num_vertices(); ++v)
        f.comp.push_back(FpMat(RX.dim[v], RY.dim[v], prime));
    for (int k = 0; k < L; ++k) {
        int iv = xverts[xpos(k)];
        f.comp[iv](offx[xpos(k)], offy[ypos(k)]) = 1;
    }
    if (!f.intertwines(RX, RY)) return std::nullopt;
    return f;
}

} // namespace detail

inline YonedaSequence yoneda_sequence(const SurfaceModel& M, const YonedaChain& Y,
                                      int64_t prime = kDefaultPrime) {
    YonedaSequence S;
    const GentleAlgebra& A = M.A;
    std::vector<Representation> reps;
    for (const auto& c : Y.chain) {
        S.terms.push_back(canonical_string(A, curve_to_string(M, c)));
        reps.push_back(string_module(A, prime, curve_to_string(M, c)));
    }
    int k = static_cast<int>(Y.chain.size());
    if (Y.joins.size() + 1 != Y.chain.size()) {
        S.failure = "chain carries no join data";
        return S;
    }
    std::vector<RepMorphism> maps;
    for (int i = 0; i + 1 < k; ++i) {
        // the chain runs target-to-source; the connecting map is the overlap
        // map at the recorded shared ends
        auto [ei, ej] = Y.joins[i];
        auto f = detail::overlap_map(M, A, prime, Y.chain[i], ei, Y.chain[i + 1], ej, reps[i],
                                     reps[i + 1]);
        if (!f) {
            S.failure = "no connecting map between terms " + std::to_string(i) + " and " +
                        std::to_string(i + 1);
            return S;
        }
        maps.push_back(*f);
    }
    // rank checks: 0 -> M_beta -> ... -> M_alpha -> 0 exact
    auto stack_rank = [&](const RepMorphism& f, const Representation& X) {
        int r = 0;
        for (int v = 0; v < A.num_vertices(); ++v) r += f.comp[v].rank();
        (void)X;
        return r;
    };
    std::vector<int> rank(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) rank[i] = stack_rank(maps[i], reps[i]);
    auto dim_total = [&](const Representation& R) { return R.total_dim(); };
    // composition of consecutive maps must vanish
    for (size_t i = 0; i + 1 < maps.size(); ++i)
        for (int v = 0; v < A.num_vertices(); ++v)
            if (!(maps[i].comp[v] * maps[i + 1].comp[v]).is_zero()) {
                S.failure = "consecutive maps do not compose to zero";
                return S;
            }
    if (rank.empty()) {
        S.failure = "empty chain";
        return S;
    }
    bool ok = rank[0] == dim_total(reps[0]);  // injective at the left
    for (size_t i = 0; i + 1 < maps.size(); ++i)
        ok = ok && (rank[i] + rank[i + 1] == dim_total(reps[i + 1]));
    ok = ok && rank.back() == dim_total(reps.back());  // surjective at the right
    if (!ok) {
        S.failure = "rank bookkeeping does not match an exact sequence";
        return S;
    }
    S.exact = true;
    return S;
}

} // namespace gentle
