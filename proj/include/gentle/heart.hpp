#pragma once

// Graded dissections and the algebras of the hearts they generate.
//
// A dissection arc is a zigzag curve over the ambient coordinate together
// with one integer, the shift of its grading against the canonical one. The
// grading value of an arc at an endpoint is then m - n - shift, where the
// endpoint polygon has n edges and the arc first crosses edge m; for
// boundary points this is minus the weight. Angles between consecutive arc
// ends at a marked point grade by the difference of these values, corrected
// by +n when the angle wraps past the stored seam of a puncture's cyclic
// edge list.
//
// The dual coordinate of a dissection needs no cutting: its polygons are the
// marked points themselves, with the clockwise-ordered arc ends as edges.
// Cutting is still performed, as a face trace, to validate that the
// complement consists of polygons carrying exactly one dark vertex each: the
// trace walks wedges between consecutive strands around each marked point
// and boundary pieces between consecutive used marked points, and an Euler
// count rules out non-disk complement pieces.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "intersect.hpp"
#include "iso.hpp"
#include "surface.hpp"

namespace gentle {

struct GradedArc {
    std::string name;
    Curve curve;
    int shift = 0;
};

struct GradedDissection {
    std::vector<GradedArc> arcs;
};

// grading value f(s^alpha_q) of an arc at one of its ends
inline int end_grading_value(const SurfaceModel& M, const GradedArc& a, bool at_target) {
    int poly = endpoint_polygon(M, a.curve, at_target);
    int n = static_cast<int>(M.pc.polygons[poly].edges.size());
    int m = end_first_position(M, a.curve, at_target);
    return m - n - a.shift;
}

// One minimal clockwise angle between consecutive arc ends at a marked point.
struct DissectionAngle {
    int from_arc, to_arc;          // indices into the dissection
    bool from_at_target, to_at_target;
    int point;                     // marked point = ambient polygon id
    bool wraps;                    // cyclic wrap at a puncture's stored seam
    int grading;                   // F value
};

inline std::vector<DissectionAngle> dissection_angles(const SurfaceModel& M,
                                                      const GradedDissection& gd) {
    std::vector<const Curve*> ptrs;
    for (const auto& a : gd.arcs) ptrs.push_back(&a.curve);
    std::vector<DissectionAngle> out;
    for (int p = 0; p < M.pc.num_polygons(); ++p) {
        auto ends = clockwise_ends_at(M, ptrs, p);
        if (ends.empty()) continue;
        bool punct = M.pc.polygons[p].puncture;
        int n_arcs_at_p = static_cast<int>(M.pc.polygons[p].edges.size());
        int pairs = static_cast<int>(ends.size()) - 1 + (punct ? 1 : 0);
        for (int k = 0; k < pairs; ++k) {
            auto [i, iat] = ends[k];
            auto [j, jat] = ends[(k + 1) % ends.size()];
            DissectionAngle ang;
            ang.from_arc = i;
            ang.to_arc = j;
            ang.from_at_target = iat;
            ang.to_at_target = jat;
            ang.point = p;
            ang.wraps = punct && (k + 1 == static_cast<int>(ends.size()));
            int fi = end_grading_value(M, gd.arcs[i], iat);
            int fj = end_grading_value(M, gd.arcs[j], jat);
            ang.grading = fj - fi + (ang.wraps ? n_arcs_at_p : 0);
            out.push_back(ang);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation.

struct DissectionReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

namespace detail {

// The complement faces of the dissection, as connected components of the
// wedge graph. A wedge is the angular region between consecutive strand
// ends at a marked point (with the boundary directions padding the two
// flanks at boundary points). Two wedges are glued when they flank the same
// bank of a strand (index sides swap across a strand, since the clockwise
// rotations at its two ends look at it from opposite directions) or when a
// boundary piece runs from one to the other. Returns one dark-vertex count
// per face; nullopt with an error message when the structure is broken.
inline std::optional<std::vector<int>> trace_faces(const SurfaceModel& M,
                                                   const std::vector<const Curve*>& arcs,
                                                   std::string* error) {
    const PolygonComplex& pc = M.pc;
    std::vector<std::vector<std::pair<int, bool>>> at_point(pc.num_polygons());
    for (int p = 0; p < pc.num_polygons(); ++p) at_point[p] = clockwise_ends_at(M, arcs, p);

    // wedge ids: at point p with k strands, wedges j = 0..k for boundary
    // points (j between strand j-1 and strand j, the flanks being the
    // outgoing and incoming boundary directions), j = 0..k-1 cyclic at
    // punctures.
    std::vector<int> wedge_base(pc.num_polygons() + 1, 0);
    for (int p = 0; p < pc.num_polygons(); ++p) {
        int k = static_cast<int>(at_point[p].size());
        int count = k == 0 ? 0 : (pc.polygons[p].puncture ? k : k + 1);
        wedge_base[p + 1] = wedge_base[p] + count;
    }
    int nw = wedge_base[pc.num_polygons()];
    std::vector<int> parent(nw);
    for (int i = 0; i < nw; ++i) parent[i] = i;
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    auto unite = [&](int a, int b) { parent[find(find, a)] = find(find, b); };
    auto wedge = [&](int p, int j) {
        int k = static_cast<int>(at_point[p].size());
        if (pc.polygons[p].puncture) j = ((j % k) + k) % k;
        return wedge_base[p] + j;
    };
    auto strand_index = [&](int p, int arc, bool end) {
        const auto& v = at_point[p];
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[i] == std::make_pair(arc, end)) return i;
        return -1;
    };
    // bank gluings: across a strand the lower wedge at one end meets the
    // upper wedge at the other
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        int px = endpoint_polygon(M, *arcs[a], false);
        int py = endpoint_polygon(M, *arcs[a], true);
        int ix = strand_index(px, a, false);
        int iy = strand_index(py, a, true);
        if (ix < 0 || iy < 0) {
            if (error) *error = "strand index bookkeeping broke";
            return std::nullopt;
        }
        unite(wedge(px, ix), wedge(py, iy + 1));
        unite(wedge(px, ix + 1), wedge(py, iy));
    }
    // boundary pieces between consecutive used boundary points, walking the
    // ordered gap cycle of each component; fan steps count dark vertices
    std::map<ArcEnd, int> source_corner;
    for (int c = 0; c < static_cast<int>(pc.corners().size()); ++c)
        source_corner[pc.corner_source_end(c)] = c;
    auto next_gap = [&](int p) -> int {
        ArcEnd e = pc.traversal_start({p, 0});
        while (source_corner.count(e)) e = pc.corner_target_end(source_corner.at(e));
        for (int q = 0; q < pc.num_polygons(); ++q) {
            if (pc.polygons[q].puncture) continue;
            int n = static_cast<int>(pc.polygons[q].edges.size());
            if (pc.traversal_end({q, n - 1}) == e) return q;
        }
        return -1;
    };
    std::vector<int> dark_of_piece;  // parallel to piece_edges
    std::vector<std::pair<int, int>> piece_edges;  // wedge ids glued by a piece
    std::set<int> seen;
    for (int p0 = 0; p0 < pc.num_polygons(); ++p0) {
        if (pc.polygons[p0].puncture || seen.count(p0)) continue;
        std::vector<int> cyc;
        int q = p0;
        do {
            cyc.push_back(q);
            seen.insert(q);
            q = next_gap(q);
            if (q < 0) {
                if (error) *error = "boundary walk broke";
                return std::nullopt;
            }
        } while (q != p0);
        std::vector<int> used_pos;
        for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
            if (!at_point[cyc[i]].empty()) used_pos.push_back(i);
        if (used_pos.empty()) {
            if (error) *error = "a boundary component carries no arc end";
            return std::nullopt;
        }
        int m = static_cast<int>(cyc.size());
        for (size_t t = 0; t < used_pos.size(); ++t) {
            int i = used_pos[t];
            int j = used_pos[(t + 1) % used_pos.size()];
            int steps = ((j - i) % m + m) % m;
            if (steps == 0) steps = m;  // single used point: full loop
            int x = cyc[i];
            int y = cyc[(i + steps) % m];
            piece_edges.push_back({wedge(x, 0),
                                   wedge(y, static_cast<int>(at_point[y].size()))});
            dark_of_piece.push_back(steps);  // one dark fan per gap step
        }
    }
    for (auto& [u, v] : piece_edges) unite(u, v);
    std::map<int, int> dark_count;
    for (int w = 0; w < nw; ++w) dark_count[find(find, w)];  // touch every face
    for (size_t e = 0; e < piece_edges.size(); ++e)
        dark_count[find(find, piece_edges[e].first)] += dark_of_piece[e];
    std::vector<int> out;
    for (auto& [root, dk] : dark_count) out.push_back(dk);
    return out;
}

} // namespace detail

inline DissectionReport validate_simple_minded_dissection(const SurfaceModel& M,
                                                          const GradedDissection& gd) {
    DissectionReport rep;
    auto& errs = rep.violations;
    int n = M.pc.num_arcs();
    if (static_cast<int>(gd.arcs.size()) != n)
        errs.push_back("expected " + std::to_string(n) + " arcs, got " +
                       std::to_string(gd.arcs.size()));
    for (const auto& a : gd.arcs) {
        if (a.curve.closed) errs.push_back("arc " + a.name + " is a closed curve");
        else if (!is_zigzag(M, a.curve)) errs.push_back("arc " + a.name + " is not zigzag");
    }
    if (!errs.empty()) return rep;
    for (size_t i = 0; i < gd.arcs.size(); ++i)
        if (!interior_crossings(M, gd.arcs[i].curve, gd.arcs[i].curve, true).empty())
            errs.push_back("arc " + gd.arcs[i].name + " crosses itself");
    for (size_t i = 0; i < gd.arcs.size(); ++i)
        for (size_t j = i + 1; j < gd.arcs.size(); ++j) {
            if (curve_to_string(M, gd.arcs[i].curve) == curve_to_string(M, gd.arcs[j].curve) ||
                curve_to_string(M, gd.arcs[i].curve) ==
                    curve_to_string(M, reversed(gd.arcs[j].curve)))
                errs.push_back("arcs " + gd.arcs[i].name + " and " + gd.arcs[j].name +
                               " coincide");
            else if (!interior_crossings(M, gd.arcs[i].curve, gd.arcs[j].curve).empty())
                errs.push_back("arcs " + gd.arcs[i].name + " and " + gd.arcs[j].name +
                               " cross in the interior");
        }
    if (!errs.empty()) return rep;
    for (int p = 0; p < M.pc.num_polygons(); ++p) {
        if (!M.pc.polygons[p].puncture) continue;
        std::vector<const Curve*> ptrs;
        for (const auto& a : gd.arcs) ptrs.push_back(&a.curve);
        if (clockwise_ends_at(M, ptrs, p).empty())
            errs.push_back("puncture " + M.pc.polygons[p].name + " carries no arc end");
    }
    if (!errs.empty()) return rep;
    // complement must consist of polygons with exactly one dark vertex each
    std::vector<const Curve*> ptrs;
    for (const auto& a : gd.arcs) ptrs.push_back(&a.curve);
    std::string terr;
    auto faces = detail::trace_faces(M, ptrs, &terr);
    if (!faces) {
        errs.push_back("face trace failed: " + terr);
        return rep;
    }
    int expected_faces = M.pc.euler_characteristic() - M.pc.num_punctures() +
                         static_cast<int>(gd.arcs.size());
    if (static_cast<int>(faces->size()) != expected_faces)
        errs.push_back("complement is not a union of polygons (got " +
                       std::to_string(faces->size()) + " boundary walks, expected " +
                       std::to_string(expected_faces) + ")");
    for (int dk : *faces)
        if (dk != 1) {
            errs.push_back("a complement polygon has " + std::to_string(dk) +
                           " dark vertices, expected 1");
            break;
        }
    if (!errs.empty()) return rep;
    // grading condition: every minimal clockwise angle grades >= 1
    for (const auto& ang : dissection_angles(M, gd))
        if (ang.grading < 1) {
            std::ostringstream os;
            os << "grading violated at " << M.pc.polygons[ang.point].name << ": f("
               << gd.arcs[ang.from_arc].name << ") < f(" << gd.arcs[ang.to_arc].name
               << ") fails";
            errs.push_back(os.str());
        }
    return rep;
}

// Cutting the surface along the arcs: the complement polygons with their
// dark-vertex counts, plus the dual coordinate.
struct CutResult {
    std::vector<int> face_dark_counts;
    PolygonComplex dual;
    std::string error;
    bool ok() const { return error.empty(); }
};

inline CutResult cut_surface(const SurfaceModel& M, const GradedDissection& gd);

// ---------------------------------------------------------------------------
// The dual coordinate of a dissection: one polygon per marked point, edges
// the clockwise-ordered arc ends there.
inline PolygonComplex dual_coordinate(const SurfaceModel& M, const GradedDissection& gd) {
    PolygonComplex out;
    for (const auto& a : gd.arcs) out.arc_names.push_back(a.name);
    std::vector<const Curve*> ptrs;
    for (const auto& a : gd.arcs) ptrs.push_back(&a.curve);
    for (int p = 0; p < M.pc.num_polygons(); ++p) {
        auto ends = clockwise_ends_at(M, ptrs, p);
        if (ends.empty()) continue;  // only possible for untouched boundary points
        Polygon poly;
        poly.name = M.pc.polygons[p].name;
        poly.puncture = M.pc.polygons[p].puncture;
        for (auto [i, at] : ends) poly.edges.push_back(i);
        out.polygons.push_back(std::move(poly));
    }
    // untouched boundary marked points become edgeless polygons only in
    // degenerate inputs; validation rejects those dissections beforehand
    out.freeze();
    return out;
}

inline CutResult cut_surface(const SurfaceModel& M, const GradedDissection& gd) {
    CutResult out;
    std::vector<const Curve*> ptrs;
    for (const auto& a : gd.arcs) ptrs.push_back(&a.curve);
    auto faces = detail::trace_faces(M, ptrs, &out.error);
    if (!faces) return out;
    out.face_dark_counts = *faces;
    out.dual = dual_coordinate(M, gd);
    return out;
}

// ---------------------------------------------------------------------------
// Heart algebra.

struct HeartAlgebra {
    SurfaceModel coordinate;        // the dual coordinate with its algebra Gamma-tilde
    std::vector<int> arrow_grading; // F* per arrow of coordinate.A
    GentleAlgebra gamma;            // degree-zero subalgebra
    std::vector<int> gamma_arrow;   // gamma arrow -> arrow of coordinate.A
    std::vector<DissectionAngle> angles;  // aligned with coordinate.A arrow order
};

inline HeartAlgebra heart_algebra(const SurfaceModel& M, const GradedDissection& gd) {
    HeartAlgebra H;
    PolygonComplex dual = dual_coordinate(M, gd);
    H.coordinate = algebra_of_coordinate(dual);
    // dissection angles align with the dual complex corners: polygon p's
    // consecutive end pairs are exactly the corners of its dual polygon
    std::vector<DissectionAngle> angles = dissection_angles(M, gd);
    // both enumerations run over marked points in ambient polygon order and
    // positions in clockwise order, so they match one to one
    if (angles.size() != H.coordinate.pc.corners().size())
        throw std::logic_error("heart_algebra: angle/corner mismatch");
    H.angles = angles;
    H.arrow_grading.assign(H.coordinate.A.num_arrows(), 0);
    for (size_t c = 0; c < angles.size(); ++c) {
        int arrow = H.coordinate.arrow_of_corner[c];
        H.arrow_grading[arrow] = 1 - angles[c].grading;  // F* = 1 - F
    }
    // degree-zero part: drop graded arrows and the relations through them
    GentleAlgebra& G = H.gamma;
    G.vertex_names = H.coordinate.A.vertex_names;
    std::vector<int> new_index(H.coordinate.A.num_arrows(), -1);
    for (int a = 0; a < H.coordinate.A.num_arrows(); ++a) {
        if (H.arrow_grading[a] != 0) continue;
        new_index[a] = static_cast<int>(G.arrows.size());
        G.arrows.push_back(H.coordinate.A.arrows[a]);
        H.gamma_arrow.push_back(a);
    }
    for (const auto& [a, b] : H.coordinate.A.relations)
        if (new_index[a] >= 0 && new_index[b] >= 0)
            G.relations.insert({new_index[a], new_index[b]});
    G.freeze();
    return H;
}

// Zigzag compatibility with the grading: every traversed corner is degree 0.
inline bool is_graded_zigzag(const HeartAlgebra& H, const Curve& c) {
    if (!is_zigzag(H.coordinate, c)) return false;
    Walk w = curve_to_string(H.coordinate, c);
    for (Letter l : w.letters())
        if (H.arrow_grading[l.arrow] != 0) return false;
    return true;
}

struct HeartIndecomposable {
    bool band;
    Walk gamma_walk;   // over Gamma
    Walk ambient_walk; // the same walk over Gamma-tilde
    Curve curve;       // over the dual coordinate
};

inline std::vector<HeartIndecomposable> enumerate_heart_indecomposables(const HeartAlgebra& H,
                                                                        int max_len) {
    std::vector<HeartIndecomposable> out;
    auto lift = [&](const Walk& gw, bool band) {
        HeartIndecomposable hi;
        hi.band = band;
        hi.gamma_walk = gw;
        if (gw.is_trivial()) {
            hi.ambient_walk = gw;
        } else {
            std::vector<Letter> ls;
            for (Letter l : gw.letters()) ls.push_back({H.gamma_arrow[l.arrow], l.inverse});
            hi.ambient_walk = Walk::of(H.coordinate.A, ls);
        }
        hi.curve = string_to_curve(H.coordinate, hi.ambient_walk, band);
        return hi;
    };
    for (const Walk& w : enumerate_strings(H.gamma, max_len)) out.push_back(lift(w, false));
    for (const Walk& w : enumerate_bands(H.gamma, max_len)) out.push_back(lift(w, true));
    return out;
}

// ---------------------------------------------------------------------------
// Dissection text format:
//   arc <name>: <walk spec> grade=<int>
// where <walk spec> is a string (or e<vertex>) over the ambient coordinate's
// algebra; the arc is the corresponding zigzag curve.
inline GradedDissection parse_dissection(const SurfaceModel& M, const std::string& text) {
    GradedDissection gd;
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::strip(line);
        if (line.empty()) continue;
        auto toks = detail::tokens(line);
        if (toks[0] != "arc" || toks.size() < 3)
            throw ParseError(lineno, "expected: arc <name>: <walk> grade=<int>");
        std::string name = toks[1];
        if (!name.empty() && name.back() == ':') name.pop_back();
        if (name.empty()) throw ParseError(lineno, "missing arc name");
        std::string gradetok = toks.back();
        if (gradetok.rfind("grade=", 0) != 0) throw ParseError(lineno, "missing grade=");
        int shift;
        try {
            shift = std::stoi(gradetok.substr(6));
        } catch (...) {
            throw ParseError(lineno, "bad grade value");
        }
        std::string walktext;
        for (size_t i = 2; i + 1 < toks.size(); ++i) {
            if (i > 2) walktext += " ";
            walktext += toks[i];
        }
        Walk w;
        try {
            w = parse_walk(M.A, walktext);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (!is_string(M.A, w)) throw ParseError(lineno, "walk is not a string");
        gd.arcs.push_back({name, string_to_curve(M, w), shift});
    }
    return gd;
}

// standard dissection: the dual arcs with canonical gradings
inline GradedDissection standard_dissection(const SurfaceModel& M) {
    GradedDissection gd;
    for (int a = 0; a < M.pc.num_arcs(); ++a)
        gd.arcs.push_back({M.pc.arc_names[a], string_to_curve(M, Walk::trivial(a)), 0});
    return gd;
}

} // namespace gentle
