#pragma once

// Walks in arrows and formal inverses; strings and bands.
//
// A letter is an arrow or its formal inverse. A walk is a composable letter
// sequence with no immediate back-tracking; a string additionally avoids the
// relations in both readings. Strings are taken up to inversion, bands up to
// inversion and rotation; the canonical forms below fix representatives.

#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace gentle {

struct Letter {
    int arrow = -1;
    bool inverse = false;

    bool operator==(const Letter& o) const { return arrow == o.arrow && inverse == o.inverse; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
    // total order: arrow declaration index, then direct < inverse
    bool operator<(const Letter& o) const {
        if (arrow != o.arrow) return arrow < o.arrow;
        return inverse < o.inverse;
    }
    Letter inv() const { return {arrow, !inverse}; }
    int code() const { return arrow * 2 + (inverse ? 1 : 0); }
};

inline int letter_source(const GentleAlgebra& A, Letter l) {
    return l.inverse ? A.arrows[l.arrow].tgt : A.arrows[l.arrow].src;
}
inline int letter_target(const GentleAlgebra& A, Letter l) {
    return l.inverse ? A.arrows[l.arrow].src : A.arrows[l.arrow].tgt;
}

class Walk {
public:
    Walk() = default;
    static Walk trivial(int vertex) {
        Walk w;
        w.vertex_ = vertex;
        return w;
    }
    static Walk of(const GentleAlgebra& A, std::vector<Letter> letters) {
        Walk w;
        w.letters_ = std::move(letters);
        if (!w.letters_.empty()) w.vertex_ = letter_source(A, w.letters_[0]);
        for (size_t i = 0; i + 1 < w.letters_.size(); ++i) {
            if (letter_target(A, w.letters_[i]) != letter_source(A, w.letters_[i + 1]))
                throw std::invalid_argument("walk letters not composable");
            if (w.letters_[i + 1] == w.letters_[i].inv())
                throw std::invalid_argument("walk backtracks");
        }
        return w;
    }

    bool is_trivial() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }
    int trivial_vertex() const { return vertex_; }

    int source(const GentleAlgebra& A) const {
        return letters_.empty() ? vertex_ : letter_source(A, letters_.front());
    }
    int target(const GentleAlgebra& A) const {
        return letters_.empty() ? vertex_ : letter_target(A, letters_.back());
    }

    Walk reversed() const {
        Walk w;
        w.vertex_ = vertex_;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(it->inv());
        return w;
    }

    // vertex sequence v_0, ..., v_n along the walk
    std::vector<int> vertex_sequence(const GentleAlgebra& A) const {
        std::vector<int> vs;
        vs.push_back(source(A));
        for (Letter l : letters_) vs.push_back(letter_target(A, l));
        return vs;
    }

    std::string str(const GentleAlgebra& A) const {
        if (letters_.empty()) return "e" + A.vertex_names[vertex_];
        std::string s;
        for (size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += " ";
            s += A.arrows[letters_[i].arrow].name;
            if (letters_[i].inverse) s += "^-";
        }
        return s;
    }

    bool operator==(const Walk& o) const {
        if (letters_ != o.letters_) return false;
        return letters_.empty() ? vertex_ == o.vertex_ : true;
    }
    bool operator<(const Walk& o) const {
        if (letters_.empty() || o.letters_.empty()) {
            if (letters_.empty() != o.letters_.empty()) return letters_.size() < o.letters_.size();
            return vertex_ < o.vertex_;
        }
        return letters_ < o.letters_;
    }

private:
    std::vector<Letter> letters_;
    int vertex_ = -1;
};

// True iff no subword of w or w^{-1} is a relation. Only consecutive pairs of
// equal direction can realize a length-2 relation.
inline bool is_string(const GentleAlgebra& A, const Walk& w) {
    const auto& ls = w.letters();
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
        if (!ls[i].inverse && !ls[i + 1].inverse && A.is_relation(ls[i].arrow, ls[i + 1].arrow))
            return false;
        if (ls[i].inverse && ls[i + 1].inverse && A.is_relation(ls[i + 1].arrow, ls[i].arrow))
            return false;
    }
    return true;
}

namespace detail {
// smallest period of a sequence (KMP failure function)
inline int smallest_period(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    std::vector<int> fail(n + 1, 0);
    fail[0] = -1;
    int k = -1;
    for (int i = 0; i < n; ++i) {
        while (k >= 0 && s[k] != s[i]) k = fail[k];
        fail[i + 1] = ++k;
    }
    int per = n - fail[n];
    return (n % per == 0) ? per : n;
}

// Booth's least-rotation algorithm; returns the starting index.
inline int least_rotation(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    std::vector<int> f(2 * n, -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        int sj = s[j % n];
        int i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}
} // namespace detail

inline bool is_band(const GentleAlgebra& A, const Walk& w) {
    if (w.is_trivial()) return false;
    if (w.source(A) != w.target(A)) return false;
    if (!is_string(A, w)) return false;
    // w.w must be a string and must not backtrack at the seam
    const auto& ls = w.letters();
    if (ls.front() == ls.back().inv()) return false;
    Letter last = ls.back(), first = ls.front();
    if (!last.inverse && !first.inverse && A.is_relation(last.arrow, first.arrow)) return false;
    if (last.inverse && first.inverse && A.is_relation(first.arrow, last.arrow)) return false;
    bool has_direct = false, has_inverse = false;
    for (Letter l : ls) (l.inverse ? has_inverse : has_direct) = true;
    if (!has_direct || !has_inverse) return false;
    std::vector<int> codes;
    for (Letter l : ls) codes.push_back(l.code());
    return detail::smallest_period(codes) == static_cast<int>(codes.size());
}

// Representative of {w, w^{-1}}: lexicographic minimum under the letter order.
inline Walk canonical_string(const GentleAlgebra& A, const Walk& w) {
    Walk r = w.reversed();
    return (r < w) ? r : w;
}

// Representative of all rotations of w and w^{-1}.
inline Walk canonical_band(const GentleAlgebra& A, const Walk& w) {
    auto rotate = [](const std::vector<Letter>& ls, int k) {
        std::vector<Letter> out;
        int n = static_cast<int>(ls.size());
        for (int i = 0; i < n; ++i) out.push_back(ls[(k + i) % n]);
        return out;
    };
    auto best_rotation = [&](const Walk& v) {
        std::vector<int> codes;
        for (Letter l : v.letters()) codes.push_back(l.code());
        int k = detail::least_rotation(codes);
        return rotate(v.letters(), k);
    };
    std::vector<Letter> a = best_rotation(w);
    std::vector<Letter> b = best_rotation(w.reversed());
    return Walk::of(A, (b < a) ? b : a);
}

// map vertex -> multiplicity of k in the string module M(w)
inline std::map<int, int> string_dimension_vector(const GentleAlgebra& A, const Walk& w) {
    std::map<int, int> dims;
    for (int v : w.vertex_sequence(A)) ++dims[v];
    return dims;
}

// Letters that may extend a walk ending at vertex v after last letter `prev`
// (prev.arrow < 0 on a trivial walk), staying a string.
inline std::vector<Letter> string_extensions(const GentleAlgebra& A, int v, Letter prev) {
    std::vector<Letter> out;
    for (int a : A.arrows_out(v)) {
        Letter l{a, false};
        if (prev.arrow >= 0) {
            if (l == prev.inv()) continue;
            if (!prev.inverse && A.is_relation(prev.arrow, a)) continue;
        }
        out.push_back(l);
    }
    for (int a : A.arrows_in(v)) {
        Letter l{a, true};
        if (prev.arrow >= 0) {
            if (l == prev.inv()) continue;
            if (prev.inverse && A.is_relation(a, prev.arrow)) continue;
        }
        out.push_back(l);
    }
    return out;
}

// One canonical representative per inversion class, length <= max_len,
// including the trivial strings. Deterministically ordered.
inline std::vector<Walk> enumerate_strings(const GentleAlgebra& A, int max_len) {
    std::set<Walk> seen;
    std::vector<Walk> result;
    auto emit = [&](const Walk& w) {
        Walk c = canonical_string(A, w);
        if (seen.insert(c).second) result.push_back(c);
    };
    for (int v = 0; v < A.num_vertices(); ++v) emit(Walk::trivial(v));
    // DFS over letter sequences
    std::vector<Letter> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(cur.size()) >= max_len) return;
        Letter prev = cur.empty() ? Letter{-1, false} : cur.back();
        for (Letter l : string_extensions(A, v, prev)) {
            cur.push_back(l);
            emit(Walk::of(A, cur));
            self(self, letter_target(A, l));
            cur.pop_back();
        }
    };
    for (int v = 0; v < A.num_vertices(); ++v) dfs(dfs, v);
    std::sort(result.begin(), result.end(), [](const Walk& a, const Walk& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    return result;
}

inline std::vector<Walk> enumerate_bands(const GentleAlgebra& A, int max_len) {
    std::set<Walk> seen;
    std::vector<Walk> result;
    std::vector<Letter> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        if (!cur.empty()) {
            Walk w = Walk::of(A, cur);
            if (is_band(A, w)) {
                Walk c = canonical_band(A, w);
                if (seen.insert(c).second) result.push_back(c);
            }
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        Letter prev = cur.empty() ? Letter{-1, false} : cur.back();
        for (Letter l : string_extensions(A, v, prev)) {
            cur.push_back(l);
            self(self, letter_target(A, l));
            cur.pop_back();
        }
    };
    for (int v = 0; v < A.num_vertices(); ++v) dfs(dfs, v);
    std::sort(result.begin(), result.end(), [](const Walk& a, const Walk& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    return result;
}

// Band datum: canonical band walk, multiplicity, and an opaque parameter tag.
// The field value behind lambda_tag is only materialized by the oracle.
struct BandDatum {
    Walk walk;
    int multiplicity = 1;
    std::string lambda_tag = "l";
};

// ---------------------------------------------------------------------------
// Walk text syntax used by the CLI: letters "a5 a7^- a6", trivial "e<vertex>".

inline Walk parse_walk(const GentleAlgebra& A, const std::string& text) {
    auto toks = detail::tokens(text);
    if (toks.empty()) throw std::invalid_argument("empty walk");
    if (toks.size() == 1 && toks[0].size() > 1 && toks[0][0] == 'e') {
        int v = A.vertex_index(toks[0].substr(1));
        if (v >= 0) return Walk::trivial(v);
        // fall through: maybe an arrow that happens to start with 'e'
    }
    std::vector<Letter> ls;
    for (const std::string& t : toks) {
        std::string name = t;
        bool inv = false;
        if (name.size() > 2 && name.substr(name.size() - 2) == "^-") {
            inv = true;
            name = name.substr(0, name.size() - 2);
        }
        int a = A.arrow_index(name);
        if (a < 0) throw std::invalid_argument("unknown arrow '" + name + "'");
        ls.push_back({a, inv});
    }
    return Walk::of(A, ls);
}

} // namespace gentle
