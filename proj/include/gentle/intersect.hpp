#pragma once

// Weighted oriented intersections of curves and the Ext-dimension counts
// they carry.
//
// Ordering curve ends at a marked point: a strand pointing at the k-th edge
// of the polygon is clockwise-earlier than one pointing at a later edge;
// strands through the same edge are ordered at their first divergence, where
// turning to the successor corner hugs the clockwise-earlier arc end, so
//   successor turn < stop at the marked point < predecessor turn.
//
// Interior crossings: two curves cross transversally exactly where they
// share a maximal common crossing run and separate to the same side at both
// ends (the order the left end forces along the shared arcs contradicts the
// order the right end forces). The curve that takes the smaller prong at
// both ends is the quotient side of the shared run, so the weight-0 basis
// map runs from it to the other curve, and the weight-1 extension the other
// way.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "surface.hpp"

namespace gentle {

// ---------------------------------------------------------------------------
// Directed views of curves.

struct DirView {
    const Curve* c;
    bool rev = false;

    int size() const { return static_cast<int>(c->crossings.size()); }
    bool closed() const { return c->closed; }

    Crossing crossing(int k) const {
        int n = size();
        if (c->closed) k = ((k % n) + n) % n;
        if (!rev) return c->crossings[k];
        const Crossing& x = c->crossings[size() - 1 - k];
        return {x.arc, 1 - x.enter_slot};
    }
    // move after crossing k toward the far end; nullopt = the curve stops
    std::optional<MoveKind> move_after(int k) const {
        int n = size();
        if (c->closed) {
            int kk = ((k % n) + n) % n;
            if (!rev) return c->moves[kk];
            return flip(c->moves[(n - 2 - kk % n + n) % n]);
        }
        if (k >= n - 1) return std::nullopt;
        if (!rev) return c->moves[k];
        return flip(c->moves[n - 2 - k]);
    }
    std::optional<MoveKind> move_before(int k) const {
        if (c->closed) return move_after(k - 1);
        if (k <= 0) return std::nullopt;
        return move_after(k - 1);
    }
};

inline int prong_rank(std::optional<MoveKind> m) {
    if (!m) return 1;  // stop at the marked point
    return *m == MoveKind::Succ ? 0 : 2;
}

// -1: end A is clockwise-earlier than end B at their shared marked point.
// 0: identical strands (only possible when comparing a curve end with itself).
inline int compare_ends(const SurfaceModel& M, const Curve& a, bool a_at_target,
                        const Curve& b, bool b_at_target) {
    int pa = endpoint_polygon(M, a, a_at_target);
    int pb = endpoint_polygon(M, b, b_at_target);
    if (pa != pb) throw std::invalid_argument("compare_ends: different marked points");
    DirView va{&a, a_at_target}, vb{&b, b_at_target};
    int ma = end_first_position(M, a, a_at_target);
    int mb = end_first_position(M, b, b_at_target);
    if (ma != mb) return ma < mb ? -1 : +1;
    int n = std::min(va.size(), vb.size());
    for (int k = 0;; ++k) {
        if (k < n && !(va.crossing(k) == vb.crossing(k)))
            throw std::logic_error("compare_ends: strands diverged without a move difference");
        auto mva = k < va.size() ? va.move_after(k) : std::nullopt;
        auto mvb = k < vb.size() ? vb.move_after(k) : std::nullopt;
        int ra = prong_rank(k < va.size() ? mva : std::optional<MoveKind>{});
        int rb = prong_rank(k < vb.size() ? mvb : std::optional<MoveKind>{});
        if (k >= va.size()) ra = 1;
        if (k >= vb.size()) rb = 1;
        if (ra != rb) return ra < rb ? -1 : +1;
        if (!mva && !mvb) return 0;  // both stop: identical strands
        if (k + 1 >= va.size() || k + 1 >= vb.size()) {
            // one view exhausted without stopping: cannot happen for open curves
            throw std::logic_error("compare_ends: ran off a curve");
        }
    }
}

// ---------------------------------------------------------------------------
// Intersection data.

enum class IntersectionKind { Boundary, Interior, Puncture };

struct IntersectionDatum {
    IntersectionKind kind;
    bool from_first;   // direction: from the first curve of the queried pair
    int weight;        // base weight; puncture data repeat with the period
    int period = 0;    // puncture kind only: number of arcs at the puncture
    int location = -1; // marked point (polygon id) for boundary/puncture data
    std::string label;
};

struct EndRef {
    bool at_target;
};

inline std::vector<std::pair<bool, bool>> shared_end_pairs(const SurfaceModel& M, const Curve& a,
                                                           const Curve& b, bool same_curve,
                                                           bool puncture_kind) {
    std::vector<std::pair<bool, bool>> out;
    if (a.closed || b.closed) return out;
    for (bool ea : {false, true})
        for (bool eb : {false, true}) {
            if (same_curve && ea == eb) continue;  // the literal same end
            int pa = endpoint_polygon(M, a, ea);
            int pb = endpoint_polygon(M, b, eb);
            if (pa != pb) continue;
            if (M.pc.polygons[pa].puncture != puncture_kind) continue;
            out.push_back({ea, eb});
        }
    if (same_curve) {
        // unordered pairs: (start,target) and (target,start) are one point pair
        std::vector<std::pair<bool, bool>> dedup;
        for (auto [ea, eb] : out)
            if (!ea) dedup.push_back({ea, eb});
        return dedup;
    }
    return out;
}

inline std::vector<IntersectionDatum> boundary_intersections(const SurfaceModel& M,
                                                             const Curve& a, const Curve& b,
                                                             bool same_curve = false) {
    std::vector<IntersectionDatum> out;
    for (auto [ea, eb] : shared_end_pairs(M, a, b, same_curve, false)) {
        int cmp = compare_ends(M, a, ea, b, eb);
        if (cmp == 0) continue;
        int ma = end_first_position(M, a, ea);
        int mb = end_first_position(M, b, eb);
        IntersectionDatum d;
        d.kind = IntersectionKind::Boundary;
        d.location = endpoint_polygon(M, a, ea);
        if (cmp < 0) {
            d.from_first = true;
            d.weight = mb - ma;
        } else {
            d.from_first = false;
            d.weight = ma - mb;
        }
        std::ostringstream os;
        os << "boundary@" << M.pc.polygons[d.location].name;
        d.label = os.str();
        out.push_back(d);
    }
    return out;
}

inline std::vector<IntersectionDatum> puncture_intersections(const SurfaceModel& M,
                                                             const Curve& a, const Curve& b,
                                                             bool same_curve = false) {
    std::vector<IntersectionDatum> out;
    for (auto [ea, eb] : shared_end_pairs(M, a, b, same_curve, true)) {
        int poly = endpoint_polygon(M, a, ea);
        int n = static_cast<int>(M.pc.polygons[poly].edges.size());
        int ma = end_first_position(M, a, ea);
        int mb = end_first_position(M, b, eb);
        int base_ab = ((mb - ma) % n + n) % n;
        int base_ba = ((ma - mb) % n + n) % n;
        if (ma == mb) {
            int cmp = compare_ends(M, a, ea, b, eb);
            if (cmp == 0) continue;
            // the later strand's minimal angle to the earlier one wraps once
            if (cmp < 0) base_ba = n;
            else base_ab = n;
        }
        std::string loc = "puncture@" + M.pc.polygons[poly].name;
        out.push_back({IntersectionKind::Puncture, true, base_ab, n, poly, loc});
        out.push_back({IntersectionKind::Puncture, false, base_ba, n, poly, loc});
    }
    if (same_curve && !a.closed) {
        // an end wraps around its own puncture: one family of full turns
        for (bool ea : {false, true}) {
            int poly = endpoint_polygon(M, a, ea);
            if (!M.pc.polygons[poly].puncture) continue;
            int n = static_cast<int>(M.pc.polygons[poly].edges.size());
            out.push_back({IntersectionKind::Puncture, true, n, n, poly,
                           "puncture@" + M.pc.polygons[poly].name + ":wrap"});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Interior crossings.

struct InteriorCrossing {
    // aligned maximal runs: positions in the directed views
    int a_start, b_start, len;
    bool b_reversed;
    bool weight0_from_first;  // the smaller-prong curve carries the Hom map
};

namespace detail {

struct CrossKey {
    int a0, a1, b0, b1, orient;
    bool operator<(const CrossKey& o) const {
        return std::tie(a0, a1, b0, b1, orient) < std::tie(o.a0, o.a1, o.b0, o.b1, o.orient);
    }
};

inline int norm_start(int i, int n, bool closed) {
    if (!closed) return i;
    return ((i % n) + n) % n;
}

} // namespace detail

inline std::vector<InteriorCrossing> interior_crossings(const SurfaceModel& M, const Curve& a,
                                                        const Curve& b, bool same_curve = false) {
    std::vector<InteriorCrossing> out;
    std::set<detail::CrossKey> seen;
    int na = static_cast<int>(a.crossings.size());
    int nb = static_cast<int>(b.crossings.size());
    for (bool brev : {false, true}) {
        DirView va{&a, false}, vb{&b, brev};
        // candidate run starts
        int ia_max = a.closed ? na : na;
        int ib_max = b.closed ? nb : nb;
        for (int i = 0; i < ia_max; ++i)
            for (int j = 0; j < ib_max; ++j) {
                if (!(va.crossing(i) == vb.crossing(j))) continue;
                // parallel strands need equal crossings AND equal connecting
                // moves: in punctured bigons and monogons the same slot pair
                // admits two different passes around the puncture
                bool left_open_a = a.closed || i > 0;
                bool left_open_b = b.closed || j > 0;
                if (left_open_a && left_open_b &&
                    va.crossing(i - 1) == vb.crossing(j - 1) &&
                    va.move_after(i - 1) == vb.move_after(j - 1))
                    continue;  // not a run start
                // a closed curve is periodic: runs against an open curve may
                // wrap several times, and two distinct primitive closed
                // curves cannot stay parallel for na + nb steps
                int cap_a = a.closed ? na + nb : na - i;
                int cap_b = b.closed ? na + nb : nb - j;
                int cap = std::min(cap_a, cap_b);
                int len = 1;
                while (len < cap && va.crossing(i + len) == vb.crossing(j + len) &&
                       va.move_after(i + len - 1) == vb.move_after(j + len - 1))
                    ++len;
                if (same_curve && !brev && a.closed && len == na) continue;  // full identity
                if (same_curve && !brev && !a.closed && i == j && len == na) continue;
                // prongs
                auto left_a = (a.closed || i > 0) ? va.move_before(i) : std::nullopt;
                auto left_b = (b.closed || j > 0) ? vb.move_before(j) : std::nullopt;
                auto right_a = va.move_after(i + len - 1);
                auto right_b = vb.move_after(j + len - 1);
                // looking backward out of the run flips the move kinds
                int la = left_a ? (flip(*left_a) == MoveKind::Succ ? 0 : 2) : 1;
                int lb = left_b ? (flip(*left_b) == MoveKind::Succ ? 0 : 2) : 1;
                int ra = prong_rank(right_a);
                int rb = prong_rank(right_b);
                int sl = la - lb, sr = ra - rb;
                if (sl == 0 || sr == 0) continue;
                if ((sl < 0) != (sr < 0)) continue;  // opposite sides: no crossing
                InteriorCrossing x;
                x.a_start = detail::norm_start(i, na, a.closed);
                x.b_start = detail::norm_start(j, nb, b.closed);
                x.len = len;
                x.b_reversed = brev;
                x.weight0_from_first = sl < 0;
                detail::CrossKey key{x.a_start, x.len, x.b_start, x.len, brev ? 1 : 0};
                if (same_curve) {
                    // the same strand pair shows up with the roles swapped
                    int i2, j2;
                    if (!brev) {
                        i2 = x.b_start;
                        j2 = x.a_start;
                    } else {
                        // a position p of the reversed view is crossing n-1-p
                        i2 = detail::norm_start(nb - 1 - (j + len - 1), nb, b.closed);
                        j2 = detail::norm_start(na - 1 - (i + len - 1), na, a.closed);
                    }
                    detail::CrossKey alt{i2, len, j2, len, brev ? 1 : 0};
                    if (alt < key) key = alt;
                }
                if (!seen.insert(key).second) continue;
                out.push_back(x);
            }
    }
    return out;
}

// Resolving an interior self-crossing of an open curve with parallel
// same-orientation strands: the loop between the strands closes into a band
// curve and the rest rejoins into a shorter open curve.
struct SmoothedCrossing {
    Curve closed_part;
    Curve open_part;
};

inline SmoothedCrossing smooth_at_crossing(const SurfaceModel& M, const Curve& c,
                                           const InteriorCrossing& x) {
    if (c.closed || x.b_reversed)
        throw std::invalid_argument(
            "smooth_at_crossing: supported for same-orientation self-crossings of open curves");
    int i = std::min(x.a_start, x.b_start);
    int j = std::max(x.a_start, x.b_start);
    SmoothedCrossing out;
    out.closed_part.closed = true;
    for (int k = i; k < j; ++k) out.closed_part.crossings.push_back(c.crossings[k]);
    for (int k = i; k + 1 < j; ++k) out.closed_part.moves.push_back(c.moves[k]);
    out.closed_part.moves.push_back(c.moves[j - 1]);  // the strands align here
    for (int k = 0; k < i; ++k) out.open_part.crossings.push_back(c.crossings[k]);
    for (int k = 0; k + 1 < i; ++k) out.open_part.moves.push_back(c.moves[k]);
    if (i > 0) out.open_part.moves.push_back(c.moves[i - 1]);
    for (int k = j; k < static_cast<int>(c.crossings.size()); ++k)
        out.open_part.crossings.push_back(c.crossings[k]);
    for (int k = j; k + 1 < static_cast<int>(c.crossings.size()); ++k)
        out.open_part.moves.push_back(c.moves[k]);
    return out;
}

// ---------------------------------------------------------------------------
// Ext dimensions from intersection counts.

struct ExtBasisElement {
    int weight;
    std::string label;
};

struct ExtCountOptions {
    bool same_object = false;       // identical module (adds the identity at weight 0)
    bool band_same_params = false;  // identical band module (adds the AR map at weight 1)
};

inline std::vector<ExtBasisElement> ext_basis(const SurfaceModel& M, const Curve& from,
                                              const Curve& to, int max_weight,
                                              const ExtCountOptions& opt = {}) {
    std::vector<ExtBasisElement> out;
    bool same_curve = opt.same_object;
    auto push = [&](int w, const std::string& label) {
        if (w >= 0 && w <= max_weight) out.push_back({w, label});
    };
    if (!from.closed && !to.closed) {
        for (const auto& d : boundary_intersections(M, from, to, same_curve)) {
            if (d.from_first || same_curve) push(d.weight, d.label);
        }
        for (const auto& d : puncture_intersections(M, from, to, same_curve)) {
            if (!(d.from_first || same_curve)) continue;
            for (int w = d.weight; w <= max_weight; w += d.period)
                push(w, d.label + "+" + std::to_string((w - d.weight) / d.period) + "t");
        }
    }
    for (const auto& x : interior_crossings(M, from, to, same_curve)) {
        std::ostringstream os;
        os << "interior@" << (x.b_reversed ? "r" : "f") << x.a_start << "." << x.b_start;
        if (x.weight0_from_first || same_curve) push(0, os.str() + ":hom");
        if (!x.weight0_from_first || same_curve) push(1, os.str() + ":ext");
    }
    if (opt.same_object) push(0, "identity");
    if (opt.band_same_params && from.closed) push(1, "ar-self-extension");
    std::stable_sort(out.begin(), out.end(),
                     [](const ExtBasisElement& p, const ExtBasisElement& q) {
                         return p.weight < q.weight;
                     });
    return out;
}

inline int ext_dimension(const SurfaceModel& M, const Curve& from, const Curve& to, int omega,
                         const ExtCountOptions& opt = {}) {
    int count = 0;
    for (const auto& e : ext_basis(M, from, to, omega, opt))
        if (e.weight == omega) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Ordering of several curve ends around one marked point (used for the
// twisted-dissection quivers and the heart machinery). Entries are
// (curve index, at_target).
inline std::vector<std::pair<int, bool>> clockwise_ends_at(
    const SurfaceModel& M, const std::vector<const Curve*>& curves, int marked_point) {
    std::vector<std::pair<int, bool>> ends;
    for (int i = 0; i < static_cast<int>(curves.size()); ++i) {
        if (curves[i]->closed) continue;
        for (bool at : {false, true})
            if (endpoint_polygon(M, *curves[i], at) == marked_point) ends.push_back({i, at});
    }
    std::sort(ends.begin(), ends.end(), [&](const auto& x, const auto& y) {
        if (x == y) return false;
        int cmp = compare_ends(M, *curves[x.first], x.second, *curves[y.first], y.second);
        if (cmp != 0) return cmp < 0;
        return x < y;  // identical strands: stable order
    });
    return ends;
}

// The quiver on a system of pairwise compatible arcs, with one arrow per
// minimal angle between consecutive arc ends at a marked point. The two dual
// conventions:
//   * simple side (dissections representing simple objects): the arrow runs
//     from the earlier end to the later one and compositions through the
//     SAME marked point are the relations;
//   * projective side (twisted arcs representing projectives/injectives):
//     the arrow runs from the later end to the earlier one and compositions
//     through DIFFERENT marked points are the relations.
// With the twisted projective arcs as input the projective-side convention
// recovers the coordinate's algebra.
inline GentleAlgebra adjacency_algebra(const SurfaceModel& M, const std::vector<Curve>& arcs,
                                       bool projective_side,
                                       std::vector<std::pair<int, int>>* arrow_points = nullptr) {
    GentleAlgebra B;
    for (size_t i = 0; i < arcs.size(); ++i) B.vertex_names.push_back("v" + std::to_string(i + 1));
    std::vector<const Curve*> ptrs;
    for (const auto& c : arcs) ptrs.push_back(&c);
    struct ArrowAt {
        int from, to, point;
        std::pair<int, bool> u_end, v_end;  // ends on the source and target arcs
    };
    std::vector<ArrowAt> arrows;
    for (int p = 0; p < M.pc.num_polygons(); ++p) {
        auto ends = clockwise_ends_at(M, ptrs, p);
        if (ends.size() < 2 && !(M.pc.polygons[p].puncture && ends.size() == 1)) continue;
        int pairs = static_cast<int>(ends.size()) - 1 + (M.pc.polygons[p].puncture ? 1 : 0);
        for (int k = 0; k < pairs; ++k) {
            auto e1 = ends[k];
            auto e2 = ends[(k + 1) % ends.size()];
            if (projective_side)
                arrows.push_back({e2.first, e1.first, p, e2, e1});
            else
                arrows.push_back({e1.first, e2.first, p, e1, e2});
        }
    }
    for (size_t k = 0; k < arrows.size(); ++k)
        B.arrows.push_back({"t" + std::to_string(k + 1), arrows[k].from, arrows[k].to});
    // relations compare the ends on the middle arc: the simple-side rule
    // fires on the same end, the projective-side rule on different ends
    for (size_t k = 0; k < arrows.size(); ++k)
        for (size_t l = 0; l < arrows.size(); ++l) {
            if (arrows[k].to != arrows[l].from) continue;
            bool same_end = arrows[k].v_end == arrows[l].u_end;
            if (projective_side != same_end)
                B.relations.insert({static_cast<int>(k), static_cast<int>(l)});
        }
    if (arrow_points) {
        arrow_points->clear();
        for (auto& a : arrows) arrow_points->push_back({a.from, a.point});
    }
    B.freeze();
    return B;
}

} // namespace gentle
