#pragma once

// Quivers with length-2 monomial relations, validated gentle, and path
// arithmetic in kQ/I. This is the base layer every other header builds on.
//
// Conventions (fixed once here, used everywhere):
//   - paths compose left to right: for arrows a: x->y and b: y->z the word
//     "a b" is the path x->z, and it is zero iff (a,b) is a relation;
//   - modules elsewhere are right modules, matching that orientation.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

struct GentleViolation {
    std::string clause;   // which clause of the gentleness definition failed
    std::string detail;
};

using ValidationReport = std::vector<GentleViolation>;

class GentleAlgebra {
public:
    std::vector<std::string> vertex_names;
    std::vector<Arrow> arrows;
    std::set<std::pair<int, int>> relations;  // (a,b): the path "a then b" is zero

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& name) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertex_names[i] == name) return i;
        return -1;
    }
    int arrow_index(const std::string& name) const {
        for (int i = 0; i < num_arrows(); ++i)
            if (arrows[i].name == name) return i;
        return -1;
    }

    bool is_relation(int a, int b) const { return relations.count({a, b}) > 0; }

    // Derived partial maps; -1 means "none". Valid only after freeze().
    int next_nonzero(int a) const { return next_nonzero_[a]; }    // unique b with ab != 0
    int next_relation(int a) const { return next_relation_[a]; }  // unique b with ab in I
    int prev_nonzero(int b) const { return prev_nonzero_[b]; }
    int prev_relation(int b) const { return prev_relation_[b]; }
    const std::vector<int>& arrows_out(int v) const { return out_[v]; }
    const std::vector<int>& arrows_in(int v) const { return in_[v]; }

    // The other arrow out of v, if any.
    int other_out(int v, int a) const {
        for (int x : out_[v])
            if (x != a) return x;
        return -1;
    }
    int other_in(int v, int a) const {
        for (int x : in_[v])
            if (x != a) return x;
        return -1;
    }

    ValidationReport validate() const {
        ValidationReport rep;
        std::vector<int> outdeg(num_vertices(), 0), indeg(num_vertices(), 0);
        std::set<std::string> arrow_names;
        for (int i = 0; i < num_arrows(); ++i) {
            const Arrow& a = arrows[i];
            if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 || a.tgt >= num_vertices()) {
                rep.push_back({"well-formed", "arrow " + a.name + " references an unknown vertex"});
                continue;
            }
            if (!arrow_names.insert(a.name).second)
                rep.push_back({"well-formed", "duplicate arrow id " + a.name});
            ++outdeg[a.src];
            ++indeg[a.tgt];
        }
        if (!rep.empty()) return rep;  // structural problems mask the rest

        for (const auto& [a, b] : relations) {
            if (a < 0 || a >= num_arrows() || b < 0 || b >= num_arrows())
                rep.push_back({"well-formed", "relation references an unknown arrow"});
            else if (arrows[a].tgt != arrows[b].src)
                rep.push_back({"well-formed",
                               "relation " + arrows[a].name + " " + arrows[b].name +
                                   " is not composable"});
        }
        if (!rep.empty()) return rep;

        for (int v = 0; v < num_vertices(); ++v) {
            if (outdeg[v] > 2)
                rep.push_back({"(1) at most two arrows out",
                               "vertex " + vertex_names[v] + " is the source of " +
                                   std::to_string(outdeg[v]) + " arrows"});
            if (indeg[v] > 2)
                rep.push_back({"(1) at most two arrows in",
                               "vertex " + vertex_names[v] + " is the target of " +
                                   std::to_string(indeg[v]) + " arrows"});
        }
        for (int a = 0; a < num_arrows(); ++a) {
            int rel_after = 0, nonrel_after = 0, rel_before = 0, nonrel_before = 0;
            for (int b = 0; b < num_arrows(); ++b) {
                if (arrows[a].tgt == arrows[b].src) {
                    if (is_relation(a, b)) ++rel_after; else ++nonrel_after;
                }
                if (arrows[b].tgt == arrows[a].src) {
                    if (is_relation(b, a)) ++rel_before; else ++nonrel_before;
                }
            }
            const std::string& an = arrows[a].name;
            if (rel_after > 1)
                rep.push_back({"(2) at most one b with ab in I", "arrow " + an});
            if (nonrel_after > 1)
                rep.push_back({"(2) at most one b' with ab' not in I", "arrow " + an});
            if (rel_before > 1)
                rep.push_back({"(2) at most one c with ca in I", "arrow " + an});
            if (nonrel_before > 1)
                rep.push_back({"(2) at most one c' with c'a not in I", "arrow " + an});
        }
        // Admissibility: a directed cycle avoiding the relations would make
        // kQ/I infinite dimensional. Walk the "next nonzero" graph on arrows.
        if (rep.empty()) {
            std::vector<std::vector<int>> succ(num_arrows());
            for (int a = 0; a < num_arrows(); ++a)
                for (int b = 0; b < num_arrows(); ++b)
                    if (arrows[a].tgt == arrows[b].src && !is_relation(a, b))
                        succ[a].push_back(b);
            std::vector<int> state(num_arrows(), 0);  // 0 new, 1 on stack, 2 done
            std::vector<int> stack;
            for (int s = 0; s < num_arrows(); ++s) {
                if (state[s] != 0) continue;
                // iterative DFS
                std::vector<std::pair<int, size_t>> frames{{s, 0}};
                state[s] = 1;
                while (!frames.empty()) {
                    auto& [u, it] = frames.back();
                    if (it < succ[u].size()) {
                        int w = succ[u][it++];
                        if (state[w] == 0) {
                            state[w] = 1;
                            frames.push_back({w, 0});
                        } else if (state[w] == 1) {
                            rep.push_back({"(3) admissible ideal",
                                           "relation-free directed cycle through arrow " +
                                               arrows[w].name});
                            state[w] = 2;  // report once
                        }
                    } else {
                        state[u] = 2;
                        frames.pop_back();
                    }
                }
            }
        }
        return rep;
    }

    bool is_gentle() const { return validate().empty(); }

    // Precompute the lookup tables. Call once after validation.
    void freeze() {
        int n = num_vertices(), m = num_arrows();
        out_.assign(n, {});
        in_.assign(n, {});
        next_nonzero_.assign(m, -1);
        next_relation_.assign(m, -1);
        prev_nonzero_.assign(m, -1);
        prev_relation_.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            out_[arrows[i].src].push_back(i);
            in_[arrows[i].tgt].push_back(i);
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (arrows[a].tgt == arrows[b].src) {
                    if (is_relation(a, b)) {
                        next_relation_[a] = b;
                        prev_relation_[b] = a;
                    } else {
                        next_nonzero_[a] = b;
                        prev_nonzero_[b] = a;
                    }
                }
        frozen_ = true;
    }
    bool frozen() const { return frozen_; }

    GentleAlgebra opposite() const {
        GentleAlgebra op;
        op.vertex_names = vertex_names;
        op.arrows = arrows;
        for (Arrow& a : op.arrows) std::swap(a.src, a.tgt);
        for (const auto& [a, b] : relations) op.relations.insert({b, a});
        if (frozen_) op.freeze();
        return op;
    }

private:
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> next_nonzero_, next_relation_, prev_nonzero_, prev_relation_;
    bool frozen_ = false;
};

// A nonzero element of kQ/I: a relation-free path, or a trivial path e_v.
class Path {
public:
    Path() = default;
    static Path trivial(int vertex) {
        Path p;
        p.vertex_ = vertex;
        return p;
    }
    static Path of(const GentleAlgebra& A, std::vector<int> arrows) {
        Path p;
        p.arrows_ = std::move(arrows);
        if (!p.arrows_.empty()) p.vertex_ = A.arrows[p.arrows_[0]].src;
        p.check(A);
        return p;
    }

    bool is_trivial() const { return arrows_.empty(); }
    int length() const { return static_cast<int>(arrows_.size()); }
    const std::vector<int>& arrow_indices() const { return arrows_; }

    int source(const GentleAlgebra& A) const {
        return arrows_.empty() ? vertex_ : A.arrows[arrows_.front()].src;
    }
    int target(const GentleAlgebra& A) const {
        return arrows_.empty() ? vertex_ : A.arrows[arrows_.back()].tgt;
    }

    std::string str(const GentleAlgebra& A) const {
        if (arrows_.empty()) return "e" + A.vertex_names[vertex_];
        std::string s;
        for (size_t i = 0; i < arrows_.size(); ++i) {
            if (i) s += "*";
            s += A.arrows[arrows_[i]].name;
        }
        return s;
    }

    bool operator==(const Path& o) const {
        return arrows_ == o.arrows_ && (arrows_.empty() ? vertex_ == o.vertex_ : true);
    }

private:
    void check(const GentleAlgebra& A) const {
        for (size_t i = 0; i + 1 < arrows_.size(); ++i) {
            if (A.arrows[arrows_[i]].tgt != A.arrows[arrows_[i + 1]].src)
                throw std::invalid_argument("path letters not composable");
            if (A.is_relation(arrows_[i], arrows_[i + 1]))
                throw std::invalid_argument("path contains a relation");
        }
    }

    std::vector<int> arrows_;
    int vertex_ = -1;
};

// Concatenation in kQ/I. nullopt is the distinguished zero result.
inline std::optional<Path> compose(const GentleAlgebra& A, const Path& p, const Path& q) {
    if (p.target(A) != q.source(A))
        throw std::invalid_argument("compose: endpoints do not match");
    if (p.is_trivial()) return q;
    if (q.is_trivial()) return p;
    if (A.is_relation(p.arrow_indices().back(), q.arrow_indices().front()))
        return std::nullopt;
    std::vector<int> arr = p.arrow_indices();
    arr.insert(arr.end(), q.arrow_indices().begin(), q.arrow_indices().end());
    return Path::of(A, arr);
}

// ---------------------------------------------------------------------------
// Text format:
//   vertex <id>            (or: vertices <a>..<b> for a numeric range)
//   arrow <name>: <src> -> <tgt>
//   relation <name> <name>
// '#' starts a comment; blank lines are skipped.

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace detail {
inline std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
inline std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}
} // namespace detail

inline GentleAlgebra parse_algebra(const std::string& text) {
    GentleAlgebra A;
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    // relations may reference arrows declared later, so collect names first
    std::vector<std::tuple<int, std::string, std::string>> pending_relations;
    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::strip(line);
        if (line.empty()) continue;
        auto toks = detail::tokens(line);
        const std::string& kw = toks[0];
        if (kw == "vertex") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: vertex <id>");
            if (A.vertex_index(toks[1]) >= 0) throw ParseError(lineno, "duplicate vertex " + toks[1]);
            A.vertex_names.push_back(toks[1]);
        } else if (kw == "vertices") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: vertices <a>..<b>");
            size_t dots = toks[1].find("..");
            if (dots == std::string::npos) throw ParseError(lineno, "expected range <a>..<b>");
            int lo, hi;
            try {
                lo = std::stoi(toks[1].substr(0, dots));
                hi = std::stoi(toks[1].substr(dots + 2));
            } catch (...) { throw ParseError(lineno, "bad vertex range"); }
            if (lo > hi) throw ParseError(lineno, "empty vertex range");
            for (int v = lo; v <= hi; ++v) {
                std::string name = std::to_string(v);
                if (A.vertex_index(name) >= 0) throw ParseError(lineno, "duplicate vertex " + name);
                A.vertex_names.push_back(name);
            }
        } else if (kw == "arrow") {
            // arrow <name>: <src> -> <tgt>   (whitespace tolerant around ':'/'->')
            std::string rest = detail::strip(line.substr(5));
            size_t colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError(lineno, "expected ':' in arrow line");
            std::string name = detail::strip(rest.substr(0, colon));
            std::string ends = rest.substr(colon + 1);
            size_t ar = ends.find("->");
            if (ar == std::string::npos) throw ParseError(lineno, "expected '->' in arrow line");
            std::string src = detail::strip(ends.substr(0, ar));
            std::string tgt = detail::strip(ends.substr(ar + 2));
            if (name.empty() || src.empty() || tgt.empty())
                throw ParseError(lineno, "malformed arrow line");
            if (A.arrow_index(name) >= 0) throw ParseError(lineno, "duplicate arrow " + name);
            int si = A.vertex_index(src), ti = A.vertex_index(tgt);
            if (si < 0) throw ParseError(lineno, "undeclared vertex " + src);
            if (ti < 0) throw ParseError(lineno, "undeclared vertex " + tgt);
            A.arrows.push_back({name, si, ti});
        } else if (kw == "relation") {
            if (toks.size() != 3) throw ParseError(lineno, "expected: relation <arrow> <arrow>");
            pending_relations.emplace_back(lineno, toks[1], toks[2]);
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    for (const auto& [ln, first, second] : pending_relations) {
        int a = A.arrow_index(first), b = A.arrow_index(second);
        if (a < 0) throw ParseError(ln, "undeclared arrow " + first);
        if (b < 0) throw ParseError(ln, "undeclared arrow " + second);
        if (A.arrows[a].tgt != A.arrows[b].src)
            throw ParseError(ln, "relation " + first + " " + second + " is not composable");
        if (!A.relations.insert({a, b}).second)
            throw ParseError(ln, "duplicate relation " + first + " " + second);
    }
    A.freeze();
    return A;
}

inline std::string serialize_algebra(const GentleAlgebra& A) {
    std::ostringstream os;
    for (const auto& v : A.vertex_names) os << "vertex " << v << "\n";
    for (const auto& a : A.arrows)
        os << "arrow " << a.name << ": " << A.vertex_names[a.src] << " -> "
           << A.vertex_names[a.tgt] << "\n";
    // declaration order: by first arrow, then second
    std::vector<std::pair<int, int>> rels(A.relations.begin(), A.relations.end());
    std::sort(rels.begin(), rels.end());
    for (const auto& [a, b] : rels)
        os << "relation " << A.arrows[a].name << " " << A.arrows[b].name << "\n";
    return os.str();
}

} // namespace gentle
