#pragma once

// Homotopy strings, completion of a string to the homotopy string of its
// minimal projective resolution, and the associated complexes of projectives.
//
// A homotopy string is a walk split into maximal direct/inverse segments
// where consecutive same-direction segments meet in a relation. The
// completion of a string works outward from both walk ends:
//
//   * a direct last letter a is extended by the unique arrow e with ae
//     nonzero, when it exists (the projective cover of the end peak reaches
//     one step past the module along that branch);
//   * an inverse last letter b^{-1} ends on a peak; the other arrow out of
//     that peak seeds the tail;
//   * after the seed, the tail is the chain of relation-linked single arrows
//     (each the unique relation successor of the previous one), which either
//     stops or becomes periodic.
//
// The left side mirrors this through walk reversal. Summands of the complex
// sit at the walk vertices between segments; a segment's underlying path is
// the differential entry connecting its two boundary summands.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "walk.hpp"

namespace gentle {

struct HSegment {
    Path path;      // underlying path, composition order
    bool inverse;   // walk direction: direct runs s(path)->t(path), inverse the other way
};

// Relation-chained singleton tail, listed outward from the core.
struct Tail {
    std::vector<int> arrows;  // preperiod then one period
    int period = 0;           // 0: finite, the whole vector is the tail
    bool infinite() const { return period > 0; }
    int finite_length() const { return infinite() ? -1 : static_cast<int>(arrows.size()); }
};

struct HomotopyString {
    std::vector<HSegment> core;  // walk order; empty only when the input was trivial
    int anchor_vertex = -1;      // vertex of the trivial core
    Tail left;                   // inverse singletons
    Tail right;                  // direct singletons
    // whether the outer core segments absorbed the one-letter overflow
    // extension; an unextended valley end carries no summand
    bool left_extended = false;
    bool right_extended = false;

    int core_source(const GentleAlgebra& A) const {
        if (core.empty()) return anchor_vertex;
        const HSegment& s = core.front();
        return s.inverse ? s.path.target(A) : s.path.source(A);
    }
    int core_target(const GentleAlgebra& A) const {
        if (core.empty()) return anchor_vertex;
        const HSegment& s = core.back();
        return s.inverse ? s.path.source(A) : s.path.target(A);
    }

    std::string str(const GentleAlgebra& A) const {
        std::ostringstream os;
        auto seg = [&](const Path& p, bool inv) {
            os << "(";
            const auto& idx = p.arrow_indices();
            if (inv) {
                for (size_t i = idx.size(); i-- > 0;) {
                    os << A.arrows[idx[i]].name << "^-";
                    if (i) os << " ";
                }
            } else {
                for (size_t i = 0; i < idx.size(); ++i) {
                    if (i) os << " ";
                    os << A.arrows[idx[i]].name;
                }
            }
            os << ")";
        };
        if (left.infinite()) os << "[periodic] ";
        for (size_t i = left.arrows.size(); i-- > 0;)
            seg(Path::of(A, {left.arrows[i]}), true);
        for (const HSegment& s : core) seg(s.path, s.inverse);
        if (core.empty()) os << "(e" << A.vertex_names[anchor_vertex] << ")";
        for (int a : right.arrows) seg(Path::of(A, {a}), false);
        if (right.infinite()) os << " [periodic]";
        return os.str();
    }
};

// Maximal nonzero extension of a path on the right (direct strings) or, via
// reversal, on the left. Idempotent.
inline Path right_completion(const GentleAlgebra& A, const Path& p) {
    if (p.is_trivial()) return p;
    std::vector<int> arr = p.arrow_indices();
    std::set<int> seen(arr.begin(), arr.end());
    int nxt = A.next_nonzero(arr.back());
    while (nxt >= 0 && !seen.count(nxt)) {  // admissibility rules cycles out anyway
        arr.push_back(nxt);
        seen.insert(nxt);
        nxt = A.next_nonzero(nxt);
    }
    return Path::of(A, arr);
}

inline Path left_completion(const GentleAlgebra& A, const Path& p) {
    if (p.is_trivial()) return p;
    std::vector<int> arr = p.arrow_indices();
    std::set<int> seen(arr.begin(), arr.end());
    int prv = A.prev_nonzero(arr.front());
    while (prv >= 0 && !seen.count(prv)) {
        arr.insert(arr.begin(), prv);
        seen.insert(prv);
        prv = A.prev_nonzero(prv);
    }
    return Path::of(A, arr);
}

namespace detail {

// Follow next_relation from `seed` (inclusive), recording the chain and
// detecting the eventual cycle.
inline Tail relation_chain(const GentleAlgebra& A, int seed) {
    Tail t;
    if (seed < 0) return t;
    std::map<int, int> pos;
    int a = seed;
    while (a >= 0 && !pos.count(a)) {
        pos[a] = static_cast<int>(t.arrows.size());
        t.arrows.push_back(a);
        a = A.next_relation(a);
    }
    if (a >= 0) {
        int entry = pos[a];
        t.period = static_cast<int>(t.arrows.size()) - entry;
    }
    return t;
}

// Split a walk into maximal same-direction segments.
inline std::vector<HSegment> segments_of(const GentleAlgebra& A, const Walk& w) {
    std::vector<HSegment> segs;
    const auto& ls = w.letters();
    size_t i = 0;
    while (i < ls.size()) {
        size_t j = i;
        while (j + 1 < ls.size() && ls[j + 1].inverse == ls[i].inverse) ++j;
        std::vector<int> arr;
        if (!ls[i].inverse) {
            for (size_t k = i; k <= j; ++k) arr.push_back(ls[k].arrow);
        } else {
            for (size_t k = j + 1; k-- > i;) arr.push_back(ls[k].arrow);
        }
        segs.push_back({Path::of(A, arr), ls[i].inverse});
        i = j + 1;
    }
    return segs;
}

} // namespace detail

// The homotopy string whose complex is the minimal projective resolution of
// the string module M(w).
inline HomotopyString homology_completion(const GentleAlgebra& A, const Walk& w) {
    if (!is_string(A, w)) throw std::invalid_argument("homology_completion: not a string");
    HomotopyString h;
    if (w.is_trivial()) {
        h.anchor_vertex = w.trivial_vertex();
        std::vector<int> outs = A.arrows_out(h.anchor_vertex);
        std::sort(outs.begin(), outs.end());
        if (!outs.empty()) h.right = detail::relation_chain(A, outs[0]);
        if (outs.size() > 1) h.left = detail::relation_chain(A, outs[1]);
        return h;
    }
    h.core = detail::segments_of(A, w);

    // right end
    {
        Letter last = w.letters().back();
        if (!last.inverse) {
            int e = A.next_nonzero(last.arrow);
            if (e >= 0) {
                std::vector<int> arr = h.core.back().path.arrow_indices();
                arr.push_back(e);
                h.core.back().path = Path::of(A, arr);
                h.right_extended = true;
                h.right = detail::relation_chain(A, A.next_relation(e));
            }
        } else {
            int y = w.target(A);
            int d = A.other_out(y, last.arrow);
            h.right = detail::relation_chain(A, d);
        }
    }
    // left end (mirror)
    {
        Letter first = w.letters().front();
        if (first.inverse) {
            int e = A.next_nonzero(first.arrow);
            if (e >= 0) {
                std::vector<int> arr = h.core.front().path.arrow_indices();
                arr.push_back(e);  // inverse segment: path runs walk-end -> walk-start
                h.core.front().path = Path::of(A, arr);
                h.left_extended = true;
                h.left = detail::relation_chain(A, A.next_relation(e));
            }
        } else {
            int u = w.source(A);
            int c = A.other_out(u, first.arrow);
            h.left = detail::relation_chain(A, c);
        }
    }
    return h;
}

// Dual completion: the walk of DM over the opposite algebra is w with every
// letter direction flipped; injective data for M is projective data for DM.
inline Walk opposite_walk(const Walk& w, const GentleAlgebra& A_op) {
    if (w.is_trivial()) return w;
    std::vector<Letter> ls;
    for (Letter l : w.letters()) ls.push_back({l.arrow, !l.inverse});
    return Walk::of(A_op, ls);
}

inline HomotopyString cohomology_completion(const GentleAlgebra& A_op, const Walk& w_over_A) {
    return homology_completion(A_op, opposite_walk(w_over_A, A_op));
}

// ---------------------------------------------------------------------------
// Complexes of projectives.

enum class EntryTag { Plain, IdentityBlock, JordanBlock };

struct ComplexSummand {
    int degree;
    int vertex;
};

struct ComplexEntry {
    int from;   // summand index, degree d
    int to;     // summand index, degree d+1
    Path path;  // from vertex(to) to vertex(from)
    EntryTag tag = EntryTag::Plain;
};

struct ProjComplex {
    std::vector<ComplexSummand> summands;
    std::vector<ComplexEntry> entries;
    int multiplicity = 1;                  // band complexes: every summand is P^m
    std::string lambda_tag;                // band parameter label
    bool left_periodic = false, right_periodic = false;
    int left_period = 0, right_period = 0;
    int materialized_min_degree = 0;

    bool finite() const { return !left_periodic && !right_periodic; }

    std::vector<int> summands_at(int degree) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(summands.size()); ++i)
            if (summands[i].degree == degree) out.push_back(i);
        return out;
    }
    int min_degree() const {
        int m = 0;
        for (const auto& s : summands) m = std::min(m, s.degree);
        return m;
    }
    int max_degree() const {
        int m = summands.empty() ? 0 : summands[0].degree;
        for (const auto& s : summands) m = std::max(m, s.degree);
        return m;
    }
};

// Materialize the complex of a completed homotopy string with the canonical
// grading (top degree 0), truncating periodic tails at `extra_periods` copies.
inline ProjComplex complex_of(const GentleAlgebra& A, const HomotopyString& h,
                              int extra_periods = 2, int shift = 0) {
    // assemble the materialized segment list in walk order
    struct MatSeg {
        Path path;
        bool inverse;
    };
    std::vector<MatSeg> segs;
    auto left_count = h.left.infinite()
                          ? static_cast<int>(h.left.arrows.size()) + (extra_periods - 1) * h.left.period
                          : static_cast<int>(h.left.arrows.size());
    auto right_count = h.right.infinite()
                           ? static_cast<int>(h.right.arrows.size()) + (extra_periods - 1) * h.right.period
                           : static_cast<int>(h.right.arrows.size());
    auto tail_arrow = [](const Tail& t, int i) {
        int n = static_cast<int>(t.arrows.size());
        if (i < n) return t.arrows[i];
        int pre = n - t.period;
        return t.arrows[pre + (i - pre) % t.period];
    };
    for (int i = left_count; i-- > 0;)
        segs.push_back({Path::of(A, {tail_arrow(h.left, i)}), true});
    for (const HSegment& s : h.core) segs.push_back({s.path, s.inverse});
    for (int i = 0; i < right_count; ++i)
        segs.push_back({Path::of(A, {tail_arrow(h.right, i)}), false});

    ProjComplex C;
    C.left_periodic = h.left.infinite();
    C.right_periodic = h.right.infinite();
    C.left_period = h.left.period;
    C.right_period = h.right.period;

    // walk vertices and positions
    std::vector<int> verts;
    std::vector<int> pos;
    if (segs.empty()) {
        verts.push_back(h.anchor_vertex);
        pos.push_back(0);
    } else {
        int cur = segs.front().inverse ? segs.front().path.target(A) : segs.front().path.source(A);
        verts.push_back(cur);
        pos.push_back(0);
        for (const MatSeg& s : segs) {
            cur = s.inverse ? s.path.source(A) : s.path.target(A);
            verts.push_back(cur);
            pos.push_back(pos.back() + (s.inverse ? +1 : -1));
        }
    }
    // an unextended valley end of the walk carries no summand: the module
    // reaches its socle there and the peak projective already covers it
    std::vector<char> keep(verts.size(), 1);
    if (!h.core.empty()) {
        if (h.left.arrows.empty() && !h.left_extended && h.core.front().inverse)
            keep.front() = 0;
        if (h.right.arrows.empty() && !h.right_extended && !h.core.back().inverse)
            keep.back() = 0;
    }
    int top = 0;
    bool first_kept = true;
    for (size_t i = 0; i < verts.size(); ++i)
        if (keep[i]) {
            if (first_kept || pos[i] > top) top = pos[i];
            first_kept = false;
        }
    std::vector<int> index_of(verts.size(), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        if (keep[i]) {
            index_of[i] = static_cast<int>(C.summands.size());
            C.summands.push_back({pos[i] - top + shift, verts[i]});
        }
    for (size_t i = 0; i < segs.size(); ++i) {
        int left = static_cast<int>(i), right = static_cast<int>(i) + 1;
        if (!keep[left] || !keep[right]) continue;
        if (segs[i].inverse)
            C.entries.push_back({index_of[left], index_of[right], segs[i].path, EntryTag::Plain});
        else
            C.entries.push_back({index_of[right], index_of[left], segs[i].path, EntryTag::Plain});
    }
    C.materialized_min_degree = C.min_degree();
    return C;
}

inline ProjComplex minimal_projective_resolution(const GentleAlgebra& A, const Walk& w,
                                                 int extra_periods = 2) {
    return complex_of(A, homology_completion(A, w), extra_periods);
}

// Two-term complex resolving a band module: summands P^m at the band's walk
// vertices, differential entries the segment paths, the closing segment
// carrying the Jordan block tag.
inline ProjComplex band_resolution(const GentleAlgebra& A, const BandDatum& bd) {
    if (!is_band(A, bd.walk)) throw std::invalid_argument("band_resolution: not a band");
    std::vector<HSegment> segs = detail::segments_of(A, bd.walk);
    // segments are cyclic: a same-direction seam junction merges (for a band
    // the junction is never a relation, since the square is a string)
    if (segs.size() > 1 && segs.front().inverse == segs.back().inverse) {
        const Path& f = segs.front().path;
        const Path& b = segs.back().path;
        auto merged = segs.front().inverse ? compose(A, f, b) : compose(A, b, f);
        if (!merged) throw std::logic_error("band_resolution: seam junction vanished");
        segs.front().path = *merged;
        segs.pop_back();
    }
    // cyclic alternation: rotate so segment 0 is inverse
    if (!segs.front().inverse) std::rotate(segs.begin(), segs.begin() + 1, segs.end());
    int n = static_cast<int>(segs.size());
    ProjComplex C;
    C.multiplicity = bd.multiplicity;
    C.lambda_tag = bd.lambda_tag;
    // walk vertices cyclically: summand i = start of segment i
    for (int i = 0; i < n; ++i) {
        const HSegment& s = segs[i];
        int v = s.inverse ? s.path.target(A) : s.path.source(A);
        C.summands.push_back({i % 2 == 0 ? -1 : 0, v});
    }
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;  // walk boundary summands of segment i
        EntryTag tag = (i == n - 1) ? EntryTag::JordanBlock : EntryTag::IdentityBlock;
        if (segs[i].inverse)
            C.entries.push_back({a, b, segs[i].path, tag});
        else
            C.entries.push_back({b, a, segs[i].path, tag});
    }
    C.materialized_min_degree = -1;
    return C;
}

// ---------------------------------------------------------------------------
// Homological dimensions.

struct ExtendedNat {
    bool finite = true;
    int value = 0;
    static ExtendedNat infinity() { return {false, 0}; }
    bool operator==(const ExtendedNat& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    std::string str() const { return finite ? std::to_string(value) : "infinite"; }
};

// 1 when the completed core has an interior valley (a direct segment meeting
// an inverse one): a degree floor at -1 the end weights cannot see
inline int interior_valley_floor(const HomotopyString& h) {
    for (size_t i = 0; i + 1 < h.core.size(); ++i)
        if (!h.core[i].inverse && h.core[i + 1].inverse) return 1;
    return 0;
}

inline ExtendedNat projective_dimension(const GentleAlgebra& A, const Walk& w) {
    HomotopyString h = homology_completion(A, w);
    if (h.left.infinite() || h.right.infinite()) return ExtendedNat::infinity();
    ProjComplex C = complex_of(A, h);
    return {true, -C.min_degree()};
}

inline ExtendedNat injective_dimension(const GentleAlgebra& A, const GentleAlgebra& A_op,
                                       const Walk& w) {
    return projective_dimension(A_op, opposite_walk(w, A_op));
}

// The injective string at vertex v: both maximal nonzero paths ending at v,
// glued at their common socle.
inline Walk injective_string(const GentleAlgebra& A, int v) {
    std::vector<int> ins = A.arrows_in(v);
    std::sort(ins.begin(), ins.end());
    auto max_into = [&](int a) {
        return left_completion(A, Path::of(A, {a}));
    };
    if (ins.empty()) return Walk::trivial(v);
    std::vector<Letter> ls;
    Path p1 = max_into(ins[0]);
    for (int a : p1.arrow_indices()) ls.push_back({a, false});
    if (ins.size() > 1) {
        Path p2 = max_into(ins[1]);
        const auto& idx = p2.arrow_indices();
        for (size_t i = idx.size(); i-- > 0;) ls.push_back({idx[i], true});
    }
    return Walk::of(A, ls);
}

inline Walk projective_string(const GentleAlgebra& A, int v) {
    std::vector<int> outs = A.arrows_out(v);
    std::sort(outs.begin(), outs.end());
    auto max_from = [&](int a) { return right_completion(A, Path::of(A, {a})); };
    if (outs.empty()) return Walk::trivial(v);
    std::vector<Letter> ls;
    if (outs.size() > 1) {
        Path p2 = max_from(outs[1]);
        const auto& idx = p2.arrow_indices();
        for (size_t i = idx.size(); i-- > 0;) ls.push_back({idx[i], true});
    }
    Path p1 = max_from(outs[0]);
    for (int a : p1.arrow_indices()) ls.push_back({a, false});
    return Walk::of(A, ls);
}

// max pd over the indecomposable injectives with finite pd
inline int findim_via_injectives(const GentleAlgebra& A) {
    int fd = 0;
    for (int v = 0; v < A.num_vertices(); ++v) {
        ExtendedNat d = projective_dimension(A, injective_string(A, v));
        if (d.finite) fd = std::max(fd, d.value);
    }
    return fd;
}

// longest relation-linked arrow chain avoiding full-relation cycles
inline int findim_via_relation_chains(const GentleAlgebra& A) {
    int m = A.num_arrows();
    if (m == 0) return 0;
    std::vector<char> on_cycle(m, 0);
    for (int a = 0; a < m; ++a) {
        std::set<int> seen;
        int x = a;
        while (x >= 0 && !seen.count(x)) {
            seen.insert(x);
            x = A.next_relation(x);
        }
        if (x == a) on_cycle[a] = 1;
    }
    // arrows reachable into a cycle are still usable up to the cycle entry
    int best = 0;
    for (int a = 0; a < m; ++a) {
        if (on_cycle[a]) continue;
        int len = 0, x = a;
        while (x >= 0 && !on_cycle[x]) {
            ++len;
            x = A.next_relation(x);
        }
        best = std::max(best, len);
    }
    return best;
}

} // namespace gentle
