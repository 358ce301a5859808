#pragma once

// Combinatorial marked surfaces carrying a coordinate system of arcs, and
// curves encoded by their crossing sequences.
//
// The surface is stored as a polygon complex: every arc occurs in exactly two
// edge slots across all polygons (possibly twice in one polygon), each
// polygon lists its edges clockwise, and each polygon owns exactly one marked
// point. Boundary polygons keep the marked point on their boundary segment,
// located between the last and the first listed edge, so the list "starts
// clockwise after the marked point". Puncture polygons keep it in their
// interior and their edge list is cyclic.
//
// Everything else is derived:
//   * each slot traverses its arc from one formal end to the other, the two
//     slots of an arc in opposite directions (this is orientability);
//   * a corner is a pair of consecutive slots of a polygon; corners are the
//     arrows of the coordinate's algebra, directed along the clockwise list;
//   * a composition of two arrows is a relation exactly when the two corners
//     touch the shared arc at different formal ends;
//   * corner chains glue arc ends into the fan of a boundary vertex; fans
//     must be paths, a cyclic fan would be an interior vertex, which the
//     model excludes.
//
// A curve is an endpoint-anchored crossing sequence: per crossing the arc
// and the slot it enters through, plus the corner move used between
// consecutive crossings. Adjacent-corner moves are the zigzag curves; the
// marked points at the two ends are implicit (they belong to the polygons on
// the far side of the first and last crossing). Closed curves carry a cyclic
// sequence. Homotopy is equality of these sequences, nothing more.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homotopy.hpp"
#include "walk.hpp"

namespace gentle {

struct Polygon {
    std::string name;
    bool puncture = false;
    std::vector<int> edges;  // arc ids, clockwise
};

struct SlotRef {
    int polygon = -1;
    int position = -1;
    bool operator==(const SlotRef& o) const {
        return polygon == o.polygon && position == o.position;
    }
};

struct ArcEnd {
    int arc;
    int end;  // 0 or 1
    bool operator<(const ArcEnd& o) const {
        return arc != o.arc ? arc < o.arc : end < o.end;
    }
    bool operator==(const ArcEnd& o) const { return arc == o.arc && end == o.end; }
};

struct Corner {
    int polygon;
    int from_pos;  // consecutive positions, to_pos = (from_pos + 1) mod size for punctures
    int to_pos;
};

class PolygonComplex {
public:
    std::vector<std::string> arc_names;
    std::vector<Polygon> polygons;

    int num_arcs() const { return static_cast<int>(arc_names.size()); }
    int num_polygons() const { return static_cast<int>(polygons.size()); }
    int arc_index(const std::string& name) const {
        for (int i = 0; i < num_arcs(); ++i)
            if (arc_names[i] == name) return i;
        return -1;
    }

    // slot 0 of an arc = first occurrence in declaration order; it traverses
    // the arc end0 -> end1, slot 1 traverses end1 -> end0.
    const std::vector<SlotRef>& slots(int arc) const { return slots_[arc]; }
    int slot_id(const SlotRef& s) const {
        const auto& sl = slots_[polygons[s.polygon].edges[s.position]];
        return (sl[0] == s) ? 0 : 1;
    }
    SlotRef other_slot(const SlotRef& s) const {
        int arc = polygons[s.polygon].edges[s.position];
        return slots_[arc][1 - slot_id(s)];
    }
    // formal ends of the traversal of a slot
    ArcEnd traversal_start(const SlotRef& s) const {
        int arc = polygons[s.polygon].edges[s.position];
        return {arc, slot_id(s) == 0 ? 0 : 1};
    }
    ArcEnd traversal_end(const SlotRef& s) const {
        int arc = polygons[s.polygon].edges[s.position];
        return {arc, slot_id(s) == 0 ? 1 : 0};
    }

    const std::vector<Corner>& corners() const { return corners_; }
    // corner indexed by its (polygon, from position), -1 if none
    int corner_at(int poly, int from_pos) const {
        auto it = corner_by_from_.find({poly, from_pos});
        return it == corner_by_from_.end() ? -1 : it->second;
    }
    ArcEnd corner_source_end(int c) const {  // end on the corner's first arc
        const Corner& k = corners_[c];
        return traversal_end({k.polygon, k.from_pos});
    }
    ArcEnd corner_target_end(int c) const {  // end on the corner's second arc
        const Corner& k = corners_[c];
        return traversal_start({k.polygon, k.to_pos});
    }

    // vertex classes (boundary points of the black colour): arc ends glued
    // by corners
    int num_vertex_classes() const { return num_vertex_classes_; }
    int vertex_class(ArcEnd e) const { return vclass_.at(e); }

    std::vector<std::string> validate() const {
        std::vector<std::string> errors;
        for (int p = 0; p < num_polygons(); ++p) {
            if (polygons[p].edges.empty())
                errors.push_back("polygon " + polygons[p].name + " has no edges");
            for (int a : polygons[p].edges)
                if (a < 0 || a >= num_arcs())
                    errors.push_back("polygon " + polygons[p].name + " uses an unknown arc");
        }
        if (!errors.empty()) return errors;
        std::vector<int> count(num_arcs(), 0);
        for (const auto& poly : polygons)
            for (int a : poly.edges) ++count[a];
        for (int a = 0; a < num_arcs(); ++a)
            if (count[a] != 2)
                errors.push_back("arc " + arc_names[a] + " occurs " + std::to_string(count[a]) +
                                 " times, expected 2");
        if (!errors.empty()) return errors;
        // fans must be paths: per end, count incident corner links; a
        // component with as many links as ends is a cycle
        std::map<ArcEnd, std::vector<int>> incident;
        for (int c = 0; c < static_cast<int>(corners_.size()); ++c) {
            incident[corner_source_end(c)].push_back(c);
            incident[corner_target_end(c)].push_back(c);
        }
        // union-find over ends was built in freeze(); detect cycles by edge count
        std::map<int, std::pair<int, int>> comp_stats;  // class -> (ends, links)
        for (int a = 0; a < num_arcs(); ++a)
            for (int e = 0; e < 2; ++e) comp_stats[vertex_class({a, e})].first++;
        for (int c = 0; c < static_cast<int>(corners_.size()); ++c)
            comp_stats[vertex_class(corner_source_end(c))].second++;
        for (auto& [cls, st] : comp_stats)
            if (st.second != st.first - 1)
                errors.push_back("arc ends glue into a cyclic fan (interior vertex)");
        return errors;
    }

    void freeze() {
        slots_.assign(num_arcs(), {});
        for (int p = 0; p < num_polygons(); ++p)
            for (int i = 0; i < static_cast<int>(polygons[p].edges.size()); ++i)
                slots_[polygons[p].edges[i]].push_back({p, i});
        corners_.clear();
        corner_by_from_.clear();
        for (int p = 0; p < num_polygons(); ++p) {
            int n = static_cast<int>(polygons[p].edges.size());
            int limit = polygons[p].puncture ? n : n - 1;
            for (int i = 0; i < limit; ++i) {
                Corner c{p, i, (i + 1) % n};
                corner_by_from_[{p, i}] = static_cast<int>(corners_.size());
                corners_.push_back(c);
            }
        }
        // vertex classes by union-find on ends
        std::map<ArcEnd, int> id;
        std::vector<ArcEnd> ends;
        for (int a = 0; a < num_arcs(); ++a)
            for (int e = 0; e < 2; ++e) {
                id[{a, e}] = static_cast<int>(ends.size());
                ends.push_back({a, e});
            }
        std::vector<int> parent(ends.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](auto&& self, int x) -> int {
            return parent[x] == x ? x : parent[x] = self(self, parent[x]);
        };
        for (int c = 0; c < static_cast<int>(corners_.size()); ++c) {
            int u = find(find, id[corner_source_end(c)]);
            int v = find(find, id[corner_target_end(c)]);
            parent[u] = v;
        }
        vclass_.clear();
        std::map<int, int> rename;
        for (size_t i = 0; i < ends.size(); ++i) {
            int r = find(find, static_cast<int>(i));
            if (!rename.count(r)) {
                int next = static_cast<int>(rename.size());
                rename[r] = next;
            }
            vclass_[ends[i]] = rename[r];
        }
        num_vertex_classes_ = static_cast<int>(rename.size());
    }

    int num_boundary_polygons() const {
        int k = 0;
        for (const auto& p : polygons)
            if (!p.puncture) ++k;
        return k;
    }
    int num_punctures() const { return num_polygons() - num_boundary_polygons(); }

    // Euler characteristic of the underlying surface: faces are the polygons,
    // edges the arcs plus one boundary segment per boundary polygon, vertices
    // the glued arc ends.
    int euler_characteristic() const {
        return num_polygons() - (num_arcs() + num_boundary_polygons()) + num_vertex_classes_;
    }

    // Boundary components: each is the set of boundary polygons (equivalently
    // the marked points of the light colour) on that component, plus the
    // count of dark vertex classes it carries. Components are connected
    // groups in the bipartite graph linking each boundary polygon's gap to
    // the vertex fans at its two flanks.
    struct BoundaryComponent {
        std::vector<int> gap_polygons;
        std::vector<int> vertex_classes;
    };
    std::vector<BoundaryComponent> boundary_components() const {
        int ng = num_polygons(), nv = num_vertex_classes_;
        std::vector<int> parent(ng + nv);
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](auto&& self, int x) -> int {
            return parent[x] == x ? x : parent[x] = self(self, parent[x]);
        };
        auto unite = [&](int a, int b) { parent[find(find, a)] = find(find, b); };
        for (int p = 0; p < ng; ++p) {
            if (polygons[p].puncture) continue;
            int n = static_cast<int>(polygons[p].edges.size());
            unite(p, ng + vertex_class(traversal_start({p, 0})));
            unite(p, ng + vertex_class(traversal_end({p, n - 1})));
        }
        std::map<int, BoundaryComponent> by_root;
        for (int p = 0; p < ng; ++p)
            if (!polygons[p].puncture) by_root[find(find, p)].gap_polygons.push_back(p);
        for (int v = 0; v < nv; ++v) {
            int r = find(find, ng + v);
            if (by_root.count(r)) by_root[r].vertex_classes.push_back(v);
        }
        std::vector<BoundaryComponent> out;
        for (auto& [r, c] : by_root) out.push_back(std::move(c));
        return out;
    }

private:
    std::vector<std::vector<SlotRef>> slots_;
    std::vector<Corner> corners_;
    std::map<std::pair<int, int>, int> corner_by_from_;
    std::map<ArcEnd, int> vclass_;
    int num_vertex_classes_ = 0;
};

// ---------------------------------------------------------------------------
// Surface text format:
//   arc <id>
//   polygon <id> kind=<boundary|puncture> edges=<arcId:side,...>
// The side letter marks the first (:a) and second (:b) slot of each arc; it
// is redundant given the declaration order but serves as a consistency check.

inline PolygonComplex parse_complex(const std::string& text) {
    PolygonComplex pc;
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    std::map<int, int> slot_seen;
    std::vector<std::tuple<int, int, char>> tagged;  // (lineno, arc, tag)
    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::strip(line);
        if (line.empty()) continue;
        auto toks = detail::tokens(line);
        if (toks[0] == "arc") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: arc <id>");
            if (pc.arc_index(toks[1]) >= 0) throw ParseError(lineno, "duplicate arc " + toks[1]);
            pc.arc_names.push_back(toks[1]);
        } else if (toks[0] == "polygon") {
            if (toks.size() < 3) throw ParseError(lineno, "expected: polygon <id> kind=... edges=...");
            Polygon poly;
            poly.name = toks[1];
            bool have_kind = false, have_edges = false;
            for (size_t t = 2; t < toks.size(); ++t) {
                const std::string& tk = toks[t];
                if (tk.rfind("kind=", 0) == 0) {
                    std::string k = tk.substr(5);
                    if (k == "boundary") poly.puncture = false;
                    else if (k == "puncture") poly.puncture = true;
                    else throw ParseError(lineno, "unknown kind '" + k + "'");
                    have_kind = true;
                } else if (tk.rfind("edges=", 0) == 0) {
                    std::string list = tk.substr(6);
                    std::string item;
                    std::istringstream ls(list);
                    while (std::getline(ls, item, ',')) {
                        if (item.empty()) continue;
                        char tag = 0;
                        size_t colon = item.find(':');
                        std::string aname = item;
                        if (colon != std::string::npos) {
                            std::string tg = item.substr(colon + 1);
                            if (tg != "a" && tg != "b")
                                throw ParseError(lineno, "side tag must be a or b");
                            tag = tg[0];
                            aname = item.substr(0, colon);
                        }
                        int ai = pc.arc_index(aname);
                        if (ai < 0) throw ParseError(lineno, "undeclared arc " + aname);
                        poly.edges.push_back(ai);
                        ++slot_seen[ai];
                        if (tag) tagged.emplace_back(lineno, ai, tag);
                    }
                    have_edges = true;
                } else {
                    throw ParseError(lineno, "unexpected token '" + tk + "'");
                }
            }
            if (!have_kind || !have_edges)
                throw ParseError(lineno, "polygon line needs kind= and edges=");
            pc.polygons.push_back(std::move(poly));
        } else {
            throw ParseError(lineno, "unknown keyword '" + toks[0] + "'");
        }
    }
    // tags, when present, must mark first occurrence a and second b
    std::map<int, int> occurrence;
    for (auto& [ln, arc, tag] : tagged) {
        int occ = occurrence[arc]++;
        char expect = occ == 0 ? 'a' : 'b';
        if (tag != expect)
            throw ParseError(ln, "side tag mismatch on arc " + pc.arc_names[arc] +
                                     " (non-orientable gluing)");
    }
    pc.freeze();
    return pc;
}

inline std::string serialize_complex(const PolygonComplex& pc) {
    std::ostringstream os;
    for (const auto& a : pc.arc_names) os << "arc " << a << "\n";
    std::map<int, int> occ;
    for (const auto& poly : pc.polygons) {
        os << "polygon " << poly.name << " kind=" << (poly.puncture ? "puncture" : "boundary")
           << " edges=";
        for (size_t i = 0; i < poly.edges.size(); ++i) {
            if (i) os << ",";
            os << pc.arc_names[poly.edges[i]] << ":" << (occ[poly.edges[i]]++ == 0 ? 'a' : 'b');
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Coordinate <-> algebra.

// The bundle used by curve operations: a complex, its algebra, and the
// corner <-> arrow correspondence.
struct SurfaceModel {
    PolygonComplex pc;
    GentleAlgebra A;
    std::vector<int> arrow_of_corner;  // corner index -> arrow index
    std::vector<int> corner_of_arrow;  // arrow index -> corner index

    int arrow_at(int poly, int from_pos) const {
        int c = pc.corner_at(poly, from_pos);
        return c < 0 ? -1 : arrow_of_corner[c];
    }
};

inline SurfaceModel algebra_of_coordinate(const PolygonComplex& pc) {
    SurfaceModel M;
    M.pc = pc;
    M.pc.freeze();
    GentleAlgebra& A = M.A;
    A.vertex_names = pc.arc_names;
    const auto& corners = M.pc.corners();
    M.arrow_of_corner.resize(corners.size());
    M.corner_of_arrow.resize(corners.size());
    for (int c = 0; c < static_cast<int>(corners.size()); ++c) {
        const Corner& k = corners[c];
        const Polygon& poly = M.pc.polygons[k.polygon];
        A.arrows.push_back({"x" + std::to_string(c + 1), poly.edges[k.from_pos],
                            poly.edges[k.to_pos]});
        M.arrow_of_corner[c] = c;
        M.corner_of_arrow[c] = c;
    }
    for (int c1 = 0; c1 < static_cast<int>(corners.size()); ++c1)
        for (int c2 = 0; c2 < static_cast<int>(corners.size()); ++c2) {
            if (A.arrows[c1].tgt != A.arrows[c2].src) continue;
            if (!(M.pc.corner_target_end(c1) == M.pc.corner_source_end(c2)))
                A.relations.insert({c1, c2});
        }
    A.freeze();
    return M;
}

// Assemble a coordinate complex realizing a gentle algebra: distribute the
// arrows at each vertex onto the two formal ends of its arc (relations force
// opposite ends, nonzero compositions the same end), then read the polygons
// off as the orbits of the corner-successor map on traversal slots.
inline SurfaceModel surface_of_algebra(const GentleAlgebra& A_in) {
    GentleAlgebra A = A_in;
    if (!A.frozen()) A.freeze();
    int n = A.num_vertices(), m = A.num_arrows();
    // u_end[a]: end of the source arc where arrow a starts;
    // v_end[a]: end of the target arc where it lands.
    std::vector<int> u_end(m, -1), v_end(m, -1);
    for (int v = 0; v < n; ++v) {
        std::vector<int> ins = A.arrows_in(v), outs = A.arrows_out(v);
        std::sort(ins.begin(), ins.end());
        std::sort(outs.begin(), outs.end());
        for (size_t i = 0; i < ins.size(); ++i) v_end[ins[i]] = static_cast<int>(i);
        std::vector<char> out_used(2, 0);
        std::vector<int> unplaced;
        for (int b : outs) {
            int forced = -1;
            int pn = A.prev_nonzero(b);
            int pr = A.prev_relation(b);
            if (pn >= 0 && A.arrows[pn].tgt == v && v_end[pn] >= 0) forced = v_end[pn];
            else if (pr >= 0 && A.arrows[pr].tgt == v && v_end[pr] >= 0) forced = 1 - v_end[pr];
            if (forced >= 0) {
                u_end[b] = forced;
                out_used[forced] = 1;
            } else {
                unplaced.push_back(b);
            }
        }
        for (int b : unplaced) {
            int e = out_used[0] ? 1 : 0;
            u_end[b] = e;
            out_used[e] = 1;
        }
    }
    // slot = (arc, direction); direction d traverses end d -> end 1-d.
    // After finishing a slot at end e, the next edge clockwise is reached
    // through the arrow leaving (arc, e).
    auto arrow_from = [&](int arc, int e) {
        for (int b : A.arrows_out(arc))
            if (u_end[b] == e) return b;
        return -1;
    };
    struct Next {
        std::pair<int, int> slot;
        int arrow;
    };
    auto succ = [&](std::pair<int, int> slot) -> std::optional<Next> {
        auto [arc, d] = slot;
        int e = 1 - d;  // traversal ends here
        int b = arrow_from(arc, e);
        if (b < 0) return std::nullopt;
        return Next{{A.arrows[b].tgt, v_end[b]}, b};
    };
    std::set<std::pair<int, int>> has_pred;
    for (int arc = 0; arc < n; ++arc)
        for (int d = 0; d < 2; ++d) {
            auto s = succ({arc, d});
            if (s) has_pred.insert(s->slot);
        }
    PolygonComplex pc;
    pc.arc_names = A.vertex_names;
    std::vector<std::vector<int>> corner_arrows;  // per polygon: arrow between edges i, i+1
    std::set<std::pair<int, int>> visited;
    auto emit = [&](std::pair<int, int> start, bool puncture) {
        Polygon poly;
        poly.puncture = puncture;
        std::vector<int> arrows_here;
        std::pair<int, int> cur = start;
        while (true) {
            visited.insert(cur);
            poly.edges.push_back(cur.first);
            auto nxt = succ(cur);
            if (!nxt) break;
            arrows_here.push_back(nxt->arrow);
            if (puncture && nxt->slot == start) break;
            cur = nxt->slot;
        }
        poly.name = "P" + std::to_string(pc.polygons.size() + 1);
        pc.polygons.push_back(std::move(poly));
        corner_arrows.push_back(std::move(arrows_here));
    };
    for (int arc = 0; arc < n; ++arc)
        for (int d = 0; d < 2; ++d)
            if (!has_pred.count({arc, d}) && !visited.count({arc, d})) emit({arc, d}, false);
    for (int arc = 0; arc < n; ++arc)
        for (int d = 0; d < 2; ++d)
            if (!visited.count({arc, d})) emit({arc, d}, true);
    pc.freeze();
    SurfaceModel out;
    out.pc = pc;
    out.A = A;
    out.arrow_of_corner.assign(pc.corners().size(), -1);
    out.corner_of_arrow.assign(m, -1);
    for (int p = 0; p < pc.num_polygons(); ++p)
        for (int i = 0; i < static_cast<int>(corner_arrows[p].size()); ++i) {
            int c = pc.corner_at(p, i);
            if (c < 0) throw std::logic_error("surface_of_algebra: corner bookkeeping broke");
            out.arrow_of_corner[c] = corner_arrows[p][i];
            out.corner_of_arrow[corner_arrows[p][i]] = c;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Curves.

enum class MoveKind { Succ, Pred };

inline MoveKind flip(MoveKind k) { return k == MoveKind::Succ ? MoveKind::Pred : MoveKind::Succ; }

struct Crossing {
    int arc;
    int enter_slot;  // 0/1: the slot of this arc facing the previous polygon
    bool operator==(const Crossing& o) const {
        return arc == o.arc && enter_slot == o.enter_slot;
    }
};

struct Curve {
    bool closed = false;
    std::vector<Crossing> crossings;
    std::vector<MoveKind> moves;  // between consecutive crossings (cyclic when closed)
};

inline SlotRef enter_ref(const SurfaceModel& M, const Crossing& c) {
    return M.pc.slots(c.arc)[c.enter_slot];
}
inline SlotRef exit_ref(const SurfaceModel& M, const Crossing& c) {
    return M.pc.slots(c.arc)[1 - c.enter_slot];
}

// marked point (= polygon index) at an end of an open curve
inline int endpoint_polygon(const SurfaceModel& M, const Curve& c, bool at_target) {
    if (at_target) return exit_ref(M, c.crossings.back()).polygon;
    return enter_ref(M, c.crossings.front()).polygon;
}

// Structural validity of raw curve data, including the zigzag condition.
inline bool is_zigzag(const SurfaceModel& M, const Curve& c) {
    if (c.crossings.empty()) return false;
    size_t nmoves = c.closed ? c.crossings.size() : c.crossings.size() - 1;
    if (c.moves.size() != nmoves) return false;
    for (size_t i = 0; i < nmoves; ++i) {
        const Crossing& cur = c.crossings[i];
        const Crossing& nxt = c.crossings[(i + 1) % c.crossings.size()];
        SlotRef out = exit_ref(M, cur);
        SlotRef in = enter_ref(M, nxt);
        if (out.polygon != in.polygon) return false;
        const Polygon& poly = M.pc.polygons[out.polygon];
        int n = static_cast<int>(poly.edges.size());
        int want;
        if (c.moves[i] == MoveKind::Succ)
            want = poly.puncture ? (out.position + 1) % n : out.position + 1;
        else
            want = poly.puncture ? (out.position - 1 + n) % n : out.position - 1;
        if (want < 0 || want >= n) return false;
        if (in.position != want) return false;
        if (!poly.puncture && n == 1) return false;  // no corner to move through
    }
    if (!c.closed) {
        // end polygons must exist (they always do) -- nothing further
    }
    return true;
}

inline Walk curve_to_string(const SurfaceModel& M, const Curve& c) {
    if (!is_zigzag(M, c)) throw std::invalid_argument("curve_to_string: not a zigzag curve");
    std::vector<Letter> ls;
    size_t nmoves = c.closed ? c.crossings.size() : c.crossings.size() - 1;
    for (size_t i = 0; i < nmoves; ++i) {
        SlotRef out = exit_ref(M, c.crossings[i]);
        SlotRef in = enter_ref(M, c.crossings[(i + 1) % c.crossings.size()]);
        int arrow, poly = out.polygon;
        if (c.moves[i] == MoveKind::Succ) {
            arrow = M.arrow_at(poly, out.position);
            ls.push_back({arrow, false});
        } else {
            arrow = M.arrow_at(poly, in.position);
            ls.push_back({arrow, true});
        }
        if (arrow < 0) throw std::logic_error("curve_to_string: missing corner");
    }
    if (ls.empty()) return Walk::trivial(c.crossings[0].arc);
    return Walk::of(M.A, ls);
}

inline Curve string_to_curve(const SurfaceModel& M, const Walk& w, bool closed = false) {
    Curve c;
    c.closed = closed;
    if (w.is_trivial()) {
        c.crossings.push_back({w.trivial_vertex(), 0});
        return c;
    }
    const auto& ls = w.letters();
    auto letter_crossings = [&](Letter l) {
        int corner = M.corner_of_arrow[l.arrow];
        const Corner& k = M.pc.corners()[corner];
        SlotRef from{k.polygon, k.from_pos}, to{k.polygon, k.to_pos};
        // the letter's move happens in the corner's polygon: the crossing
        // before it exits through one corner slot, the one after enters
        // through the other
        SlotRef pre = l.inverse ? to : from;
        SlotRef post = l.inverse ? from : to;
        Crossing cp{M.pc.polygons[pre.polygon].edges[pre.position], 1 - M.pc.slot_id(pre)};
        Crossing cq{M.pc.polygons[post.polygon].edges[post.position], M.pc.slot_id(post)};
        return std::make_pair(cp, cq);
    };
    for (size_t i = 0; i < ls.size(); ++i) {
        auto [cp, cq] = letter_crossings(ls[i]);
        if (i == 0)
            c.crossings.push_back(cp);
        else if (!(c.crossings.back() == cp))
            throw std::logic_error("string_to_curve: inconsistent crossing slots");
        c.moves.push_back(ls[i].inverse ? MoveKind::Pred : MoveKind::Succ);
        if (closed && i + 1 == ls.size()) {
            if (!(c.crossings.front() == cq))
                throw std::logic_error("string_to_curve: band seam mismatch");
        } else {
            c.crossings.push_back(cq);
        }
    }
    return c;
}

inline Curve reversed(const Curve& c) {
    Curve r;
    r.closed = c.closed;
    if (!c.closed) {
        for (auto it = c.crossings.rbegin(); it != c.crossings.rend(); ++it)
            r.crossings.push_back({it->arc, 1 - it->enter_slot});
        for (auto it = c.moves.rbegin(); it != c.moves.rend(); ++it) r.moves.push_back(flip(*it));
    } else {
        int n = static_cast<int>(c.crossings.size());
        for (int i = n - 1; i >= 0; --i)
            r.crossings.push_back({c.crossings[i].arc, 1 - c.crossings[i].enter_slot});
        for (int i = n - 1; i >= 0; --i) r.moves.push_back(flip(c.moves[i]));
        // move k of the reversal runs between reversed crossings k, k+1,
        // i.e. original crossings n-1-k, n-2-k: shift the flipped list by one
        std::rotate(r.moves.begin(), r.moves.begin() + 1, r.moves.end());
    }
    return r;
}

// ---------------------------------------------------------------------------
// Weights.

struct WeightPair {
    bool puncture = false;
    int weight = 0;
    int coweight = 0;
};

// 1-based index of the first crossed edge slot within the endpoint polygon
inline int end_first_position(const SurfaceModel& M, const Curve& c, bool at_target) {
    SlotRef s = at_target ? exit_ref(M, c.crossings.back()) : enter_ref(M, c.crossings.front());
    return s.position + 1;
}

inline WeightPair weights_at(const SurfaceModel& M, const Curve& c, bool at_target) {
    if (c.closed) throw std::invalid_argument("weights_at: closed curve has no endpoints");
    int poly = endpoint_polygon(M, c, at_target);
    WeightPair w;
    if (M.pc.polygons[poly].puncture) {
        w.puncture = true;
        return w;
    }
    int n = static_cast<int>(M.pc.polygons[poly].edges.size());
    int m = end_first_position(M, c, at_target);
    w.weight = n - m;
    w.coweight = m - 1;
    return w;
}

// Dimensions read from the surface: the endpoint weights measure the end
// dives of the resolution, the interior valleys of the completion floor the
// depth at one.
inline ExtendedNat pd_from_weights(const SurfaceModel& M, const Curve& c) {
    if (c.closed) return {true, 1};
    WeightPair w0 = weights_at(M, c, false), w1 = weights_at(M, c, true);
    if (w0.puncture || w1.puncture) return ExtendedNat::infinity();
    int floor = interior_valley_floor(homology_completion(M.A, curve_to_string(M, c)));
    return {true, std::max({w0.weight, w1.weight, floor})};
}

inline ExtendedNat id_from_coweights(const SurfaceModel& M, const GentleAlgebra& A_op,
                                     const Curve& c) {
    if (c.closed) return {true, 1};
    WeightPair w0 = weights_at(M, c, false), w1 = weights_at(M, c, true);
    if (w0.puncture || w1.puncture) return ExtendedNat::infinity();
    int floor = interior_valley_floor(cohomology_completion(A_op, curve_to_string(M, c)));
    return {true, std::max({w0.coweight, w1.coweight, floor})};
}

inline Curve projective_arc(const SurfaceModel& M, int arc) {
    return string_to_curve(M, projective_string(M.A, arc));
}
inline Curve injective_arc(const SurfaceModel& M, int arc) {
    return string_to_curve(M, injective_string(M.A, arc));
}

// max arc-edge count over boundary polygons, minus one (0 when no arcs)
inline int findim_via_polygons(const PolygonComplex& pc) {
    int best = 0;
    for (const auto& p : pc.polygons)
        if (!p.puncture) best = std::max(best, static_cast<int>(p.edges.size()) - 1);
    return best;
}

// ---------------------------------------------------------------------------
// Smoothing at a shared endpoint: the far-to-near run of `first`, the corner
// between their first crossed slots, then `second` from the shared point
// outward. The first slots must be adjacent in the endpoint polygon.
inline Curve smooth_at_endpoint(const SurfaceModel& M, const Curve& first, bool first_at_target,
                                const Curve& second, bool second_at_target) {
    if (first.closed || second.closed)
        throw std::invalid_argument("smooth_at_endpoint: closed curve");
    int p1 = endpoint_polygon(M, first, first_at_target);
    int p2 = endpoint_polygon(M, second, second_at_target);
    if (p1 != p2) throw std::invalid_argument("smooth_at_endpoint: endpoints not shared");
    const Polygon& poly = M.pc.polygons[p1];
    int n = static_cast<int>(poly.edges.size());
    int m1 = end_first_position(M, first, first_at_target) - 1;
    int m2 = end_first_position(M, second, second_at_target) - 1;
    MoveKind kind;
    if (poly.puncture ? (m2 == (m1 + 1) % n) : (m2 == m1 + 1)) kind = MoveKind::Succ;
    else if (poly.puncture ? (m2 == (m1 - 1 + n) % n) : (m2 == m1 - 1)) kind = MoveKind::Pred;
    else throw std::invalid_argument("smooth_at_endpoint: slots not adjacent");
    Curve a = first_at_target ? first : reversed(first);      // runs far -> shared point
    Curve b = second_at_target ? reversed(second) : second;   // runs shared point -> far
    Curve out;
    out.crossings = a.crossings;
    out.moves = a.moves;
    out.moves.push_back(kind);
    out.crossings.insert(out.crossings.end(), b.crossings.begin(), b.crossings.end());
    out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
    return out;
}

} // namespace gentle
