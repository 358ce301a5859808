#pragma once

// Brute-force verification layer: explicit quiver representations over F_p,
// projective covers, syzygies, and Ext dimensions by rank computation.
// Everything here is independent of the combinatorial resolution machinery;
// agreement between the two routes is what the test suites check.
//
// Right modules throughout: an arrow a: x->y acts by a dim(x) x dim(y)
// matrix applied to row vectors, and a path acts by the product of its
// arrow matrices in path order.

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fp.hpp"
#include "homotopy.hpp"
#include "walk.hpp"

namespace gentle {

constexpr int64_t kDefaultPrime = 32003;

struct Representation {
    const GentleAlgebra* A = nullptr;
    int64_t p = kDefaultPrime;
    std::vector<int> dim;      // per vertex
    std::vector<FpMat> mat;    // per arrow

    int total_dim() const {
        int t = 0;
        for (int d : dim) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    static Representation zero(const GentleAlgebra& A, int64_t p) {
        Representation R;
        R.A = &A;
        R.p = p;
        R.dim.assign(A.num_vertices(), 0);
        for (int a = 0; a < A.num_arrows(); ++a)
            R.mat.push_back(FpMat(0, 0, p));
        return R;
    }

    // matrix of the action of a path: dim[s(path)] x dim[t(path)]
    FpMat path_action(const Path& path) const {
        const GentleAlgebra& Q = *A;
        int s = path.source(Q);
        FpMat m = FpMat::identity(dim[s], p);
        for (int a : path.arrow_indices()) m = m * mat[a];
        return m;
    }

    bool relations_vanish() const {
        for (const auto& [a, b] : A->relations)
            if (!(mat[a] * mat[b]).is_zero()) return false;
        return true;
    }
};

inline Representation direct_sum(const Representation& X, const Representation& Y) {
    assert(X.A == Y.A && X.p == Y.p);
    Representation R = Representation::zero(*X.A, X.p);
    for (int v = 0; v < X.A->num_vertices(); ++v) R.dim[v] = X.dim[v] + Y.dim[v];
    for (int a = 0; a < X.A->num_arrows(); ++a) {
        int s = X.A->arrows[a].src, t = X.A->arrows[a].tgt;
        FpMat m(R.dim[s], R.dim[t], X.p);
        for (int i = 0; i < X.dim[s]; ++i)
            for (int j = 0; j < X.dim[t]; ++j) m(i, j) = X.mat[a](i, j);
        for (int i = 0; i < Y.dim[s]; ++i)
            for (int j = 0; j < Y.dim[t]; ++j) m(X.dim[s] + i, X.dim[t] + j) = Y.mat[a](i, j);
        R.mat[a] = m;
    }
    return R;
}

namespace detail {
// assign consecutive offsets within each vertex to a list of positions
struct PositionIndex {
    std::vector<int> vertex;   // per position
    std::vector<int> offset;   // per position, within its vertex
    std::vector<int> dims;     // per vertex

    PositionIndex(const std::vector<int>& verts, int nv, int width = 1) {
        dims.assign(nv, 0);
        for (int v : verts) {
            vertex.push_back(v);
            offset.push_back(dims[v]);
            dims[v] += width;
        }
    }
};
} // namespace detail

inline Representation string_module(const GentleAlgebra& A, int64_t p, const Walk& w) {
    if (!is_string(A, w)) throw std::invalid_argument("string_module: not a string");
    Representation R = Representation::zero(A, p);
    std::vector<int> verts = w.vertex_sequence(A);
    detail::PositionIndex ix(verts, A.num_vertices());
    R.dim = ix.dims;
    for (int a = 0; a < A.num_arrows(); ++a)
        R.mat[a] = FpMat(R.dim[A.arrows[a].src], R.dim[A.arrows[a].tgt], p);
    const auto& ls = w.letters();
    for (size_t i = 0; i < ls.size(); ++i) {
        int from = static_cast<int>(i), to = static_cast<int>(i) + 1;
        if (ls[i].inverse) std::swap(from, to);  // the arrow maps to -> from? no: see below
        // direct letter: arrow acts position i -> i+1; inverse: position i+1 -> i
        int a = ls[i].arrow;
        R.mat[a](ix.offset[from], ix.offset[to]) = 1;
    }
    return R;
}

inline Representation band_module(const GentleAlgebra& A, int64_t p, const BandDatum& bd,
                                  int64_t lambda) {
    if (!is_band(A, bd.walk)) throw std::invalid_argument("band_module: not a band");
    lambda %= p;
    if (lambda < 0) lambda += p;
    if (lambda == 0) throw std::invalid_argument("band_module: lambda must be nonzero");
    int m = bd.multiplicity;
    Representation R = Representation::zero(A, p);
    std::vector<int> verts = bd.walk.vertex_sequence(A);
    verts.pop_back();  // cyclic: last vertex repeats the first
    detail::PositionIndex ix(verts, A.num_vertices(), m);
    R.dim = ix.dims;
    for (int a = 0; a < A.num_arrows(); ++a)
        R.mat[a] = FpMat(R.dim[A.arrows[a].src], R.dim[A.arrows[a].tgt], p);
    const auto& ls = bd.walk.letters();
    int n = static_cast<int>(ls.size());
    for (int i = 0; i < n; ++i) {
        int from = i, to = (i + 1) % n;
        bool closing = (i == n - 1);
        if (ls[i].inverse) std::swap(from, to);
        int a = ls[i].arrow;
        for (int r = 0; r < m; ++r) {
            R.mat[a](ix.offset[from] + r, ix.offset[to] + r) = closing ? lambda : 1;
            if (closing && r + 1 < m)
                R.mat[a](ix.offset[from] + r, ix.offset[to] + r + 1) = 1;  // Jordan block
        }
    }
    return R;
}

inline Representation simple_module(const GentleAlgebra& A, int64_t p, int v) {
    return string_module(A, p, Walk::trivial(v));
}

// all nonzero paths starting at v, trivial path first (basis of P_v)
inline std::vector<Path> projective_basis(const GentleAlgebra& A, int v) {
    std::vector<Path> basis{Path::trivial(v)};
    std::vector<int> outs = A.arrows_out(v);
    std::sort(outs.begin(), outs.end());
    for (int a : outs) {
        std::vector<int> chain{a};
        basis.push_back(Path::of(A, chain));
        int nxt = A.next_nonzero(a);
        while (nxt >= 0) {
            chain.push_back(nxt);
            basis.push_back(Path::of(A, chain));
            nxt = A.next_nonzero(nxt);
        }
    }
    return basis;
}

inline Representation projective_module(const GentleAlgebra& A, int64_t p, int v) {
    std::vector<Path> basis = projective_basis(A, v);
    std::vector<int> verts;
    for (const Path& b : basis) verts.push_back(b.target(A));
    detail::PositionIndex ix(verts, A.num_vertices());
    Representation R = Representation::zero(A, p);
    R.dim = ix.dims;
    for (int a = 0; a < A.num_arrows(); ++a)
        R.mat[a] = FpMat(R.dim[A.arrows[a].src], R.dim[A.arrows[a].tgt], p);
    for (size_t i = 0; i < basis.size(); ++i) {
        int t = basis[i].target(A);
        for (int a : A.arrows_out(t)) {
            // b * a nonzero iff the extended word is again relation free
            if (!basis[i].is_trivial() && A.is_relation(basis[i].arrow_indices().back(), a))
                continue;
            std::vector<int> ext = basis[i].arrow_indices();
            ext.push_back(a);
            Path q = Path::of(A, ext);
            for (size_t j = 0; j < basis.size(); ++j)
                if (basis[j] == q) {
                    R.mat[a](ix.offset[i], ix.offset[j]) = 1;
                    break;
                }
        }
    }
    return R;
}

// A morphism X -> Y: one matrix per vertex, row-vector convention.
struct RepMorphism {
    std::vector<FpMat> comp;  // per vertex: dim X_v x dim Y_v

    bool intertwines(const Representation& X, const Representation& Y) const {
        for (int a = 0; a < X.A->num_arrows(); ++a) {
            int s = X.A->arrows[a].src, t = X.A->arrows[a].tgt;
            if (!(X.mat[a] * comp[t] == comp[s] * Y.mat[a])) return false;
        }
        return true;
    }
};

// per-vertex radical: row space of all incoming arrow actions
inline std::vector<FpMat> radical_rows(const Representation& R) {
    std::vector<FpMat> rad;
    for (int v = 0; v < R.A->num_vertices(); ++v) {
        FpMat rows(0, R.dim[v], R.p);
        for (int a : R.A->arrows_in(v)) rows = rows.vstack(R.mat[a]);
        rad.push_back(rows);
    }
    return rad;
}

inline std::vector<int> top_dims(const Representation& R) {
    std::vector<FpMat> rad = radical_rows(R);
    std::vector<int> t;
    for (int v = 0; v < R.A->num_vertices(); ++v) t.push_back(R.dim[v] - rad[v].rank());
    return t;
}

struct CoverStep {
    std::vector<int> summands;     // cover vertex per copy, sorted
    Representation cover;          // concrete cover representation
    std::vector<int> gen_offset;   // concrete offset of each copy's generator, within its vertex
    RepMorphism onto;              // cover -> R, surjective
    Representation kernel;         // the syzygy as a representation
    RepMorphism incl;              // kernel -> cover
};

inline CoverStep projective_cover(const Representation& R) {
    const GentleAlgebra& A = *R.A;
    int64_t p = R.p;
    CoverStep step;
    // choose top lifts: unit vectors at non-pivot columns of the radical
    std::vector<FpMat> rad = radical_rows(R);
    std::vector<std::vector<int>> lift_cols(A.num_vertices());
    for (int v = 0; v < A.num_vertices(); ++v) {
        FpMat e = rad[v];
        std::vector<int> piv = e.echelonize();
        std::vector<char> is_piv(R.dim[v], 0);
        for (int c : piv) is_piv[c] = 1;
        for (int c = 0; c < R.dim[v]; ++c)
            if (!is_piv[c]) lift_cols[v].push_back(c);
    }
    // assemble the cover
    std::vector<std::pair<int, int>> copies;  // (vertex, lift column)
    for (int v = 0; v < A.num_vertices(); ++v)
        for (int c : lift_cols[v]) copies.push_back({v, c});
    step.cover = Representation::zero(A, p);
    Representation& C = step.cover;
    std::vector<std::vector<Path>> bases;
    std::vector<int> copy_base_offset;  // concrete offset per (copy, basis elt) computed below
    // concrete layout: per vertex, copies contribute consecutive blocks
    std::vector<int> vtotal(A.num_vertices(), 0);
    std::vector<std::vector<std::pair<int, int>>> placement;  // per copy: (basis idx -> offset)
    for (auto& [v, c] : copies) {
        step.summands.push_back(v);
        bases.push_back(projective_basis(A, v));
    }
    placement.resize(copies.size());
    for (size_t k = 0; k < copies.size(); ++k)
        for (size_t b = 0; b < bases[k].size(); ++b) {
            int t = bases[k][b].target(A);
            placement[k].push_back({static_cast<int>(b), vtotal[t]});
            ++vtotal[t];
        }
    C.dim = vtotal;
    for (int a = 0; a < A.num_arrows(); ++a)
        C.mat[a] = FpMat(C.dim[A.arrows[a].src], C.dim[A.arrows[a].tgt], p);
    auto offset_of = [&](size_t k, int b) { return placement[k][b].second; };
    for (size_t k = 0; k < copies.size(); ++k) {
        step.gen_offset.push_back(offset_of(k, 0));
        for (size_t b = 0; b < bases[k].size(); ++b) {
            int t = bases[k][b].target(A);
            for (int a : A.arrows_out(t)) {
                if (!bases[k][b].is_trivial() &&
                    A.is_relation(bases[k][b].arrow_indices().back(), a))
                    continue;
                std::vector<int> ext = bases[k][b].arrow_indices();
                ext.push_back(a);
                Path q = Path::of(A, ext);
                for (size_t b2 = 0; b2 < bases[k].size(); ++b2)
                    if (bases[k][b2] == q) {
                        C.mat[a](offset_of(k, b), offset_of(k, static_cast<int>(b2))) = 1;
                        break;
                    }
            }
        }
    }
    // the surjection: generator of copy k maps to the chosen lift, the rest follow
    step.onto.comp.clear();
    for (int v = 0; v < A.num_vertices(); ++v)
        step.onto.comp.push_back(FpMat(C.dim[v], R.dim[v], p));
    for (size_t k = 0; k < copies.size(); ++k) {
        auto [v, lc] = copies[k];
        FpMat lift(1, R.dim[v], p);
        lift(0, lc) = 1;
        for (size_t b = 0; b < bases[k].size(); ++b) {
            FpMat img = lift * R.path_action(bases[k][b]);
            int t = bases[k][b].target(A);
            for (int j = 0; j < R.dim[t]; ++j)
                step.onto.comp[t](offset_of(k, static_cast<int>(b)), j) = img(0, j);
        }
    }
    // kernel
    step.kernel = Representation::zero(A, p);
    step.incl.comp.clear();
    std::vector<FpMat> kbasis;
    for (int v = 0; v < A.num_vertices(); ++v) {
        FpMat K = step.onto.comp[v].left_nullspace();
        kbasis.push_back(K);
        step.kernel.dim[v] = K.rows();
        step.incl.comp.push_back(K);
    }
    for (int a = 0; a < A.num_arrows(); ++a) {
        int s = A.arrows[a].src, t = A.arrows[a].tgt;
        FpMat img = kbasis[s] * C.mat[a];  // rows lie in the kernel at t
        FpMat resm(step.kernel.dim[s], step.kernel.dim[t], p);
        for (int i = 0; i < img.rows(); ++i) {
            FpMat row(1, img.cols(), p);
            for (int j = 0; j < img.cols(); ++j) row(0, j) = img(i, j);
            FpMat y;
            bool ok = kbasis[t].solve_left(row, y);
            if (!ok) throw std::logic_error("projective_cover: kernel is not a subrepresentation");
            for (int j = 0; j < resm.cols(); ++j) resm(i, j) = y(0, j);
        }
        step.kernel.mat[a] = resm;
    }
    return step;
}

inline Representation syzygy(const Representation& R) {
    if (R.is_zero()) return R;
    return projective_cover(R).kernel;
}

struct OracleResolution {
    // term i covers the (i-1)-st syzygy; term 0 covers R itself
    std::vector<CoverStep> steps;
    bool exhausted = false;  // syzygy became zero before the depth bound

    std::vector<std::map<int, int>> multisets() const {
        std::vector<std::map<int, int>> out;
        for (const auto& s : steps) {
            std::map<int, int> m;
            for (int v : s.summands) ++m[v];
            out.push_back(m);
        }
        return out;
    }
};

inline OracleResolution resolution_linalg(const Representation& R, int depth) {
    OracleResolution res;
    Representation cur = R;
    for (int i = 0; i <= depth; ++i) {
        if (cur.is_zero()) {
            res.exhausted = true;
            break;
        }
        res.steps.push_back(projective_cover(cur));
        cur = res.steps.back().kernel;
    }
    return res;
}

// pd by iterated covers, capped at `cap` (nullopt if not reached by then)
inline std::optional<int> pd_linalg(const Representation& R, int cap) {
    Representation cur = R;
    for (int i = 0; i <= cap; ++i) {
        if (cur.is_zero()) return i == 0 ? 0 : i - 1;
        CoverStep s = projective_cover(cur);
        cur = s.kernel;
    }
    return std::nullopt;
}

inline int hom_dim(const Representation& X, const Representation& Y) {
    const GentleAlgebra& A = *X.A;
    int64_t p = X.p;
    // unknowns: entries of comp[v] (dim X_v x dim Y_v)
    std::vector<int> var_base(A.num_vertices() + 1, 0);
    for (int v = 0; v < A.num_vertices(); ++v)
        var_base[v + 1] = var_base[v] + X.dim[v] * Y.dim[v];
    int nvars = var_base[A.num_vertices()];
    std::vector<std::vector<int64_t>> rows;
    for (int a = 0; a < A.num_arrows(); ++a) {
        int s = A.arrows[a].src, t = A.arrows[a].tgt;
        // X.mat[a] * F_t == F_s * Y.mat[a]
        for (int i = 0; i < X.dim[s]; ++i)
            for (int j = 0; j < Y.dim[t]; ++j) {
                std::vector<int64_t> row(nvars, 0);
                for (int k = 0; k < X.dim[t]; ++k)
                    row[var_base[t] + k * Y.dim[t] + j] =
                        (row[var_base[t] + k * Y.dim[t] + j] + X.mat[a](i, k)) % p;
                for (int k = 0; k < Y.dim[s]; ++k)
                    row[var_base[s] + i * Y.dim[s] + k] =
                        ((row[var_base[s] + i * Y.dim[s] + k] - Y.mat[a](k, j)) % p + p) % p;
                rows.push_back(std::move(row));
            }
    }
    if (nvars == 0) return 0;
    FpMat M(static_cast<int>(rows.size()), nvars, p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < nvars; ++j) M(static_cast<int>(i), j) = rows[i][j];
    return nvars - M.rank();
}

// Ext^i(M, N) for 0 <= i <= depth via Hom(P_., N) of the iterated-cover
// resolution; returns one dimension per degree.
inline std::vector<int> ext_dims_linalg(const Representation& M, const Representation& N,
                                        int depth) {
    const GentleAlgebra& A = *M.A;
    int64_t p = M.p;
    OracleResolution res = resolution_linalg(M, depth + 1);
    int terms = static_cast<int>(res.steps.size());
    // Hom(C_i, N) has one N_{v}-block per summand copy of C_i.
    std::vector<std::vector<int>> hom_base(terms);  // per term: block offsets
    std::vector<int> hom_dim_total(terms, 0);
    for (int i = 0; i < terms; ++i) {
        for (int v : res.steps[i].summands) {
            hom_base[i].push_back(hom_dim_total[i]);
            hom_dim_total[i] += N.dim[v];
        }
    }
    // D_i : Hom(C_i, N) -> Hom(C_{i+1}, N), phi -> phi o d_{i+1}
    // where d_{i+1} = onto_{i+1} followed by incl_i.
    std::vector<FpMat> D(terms, FpMat());
    for (int i = 0; i + 1 < terms; ++i) {
        const CoverStep& lower = res.steps[i];
        const CoverStep& upper = res.steps[i + 1];
        FpMat Dm(hom_dim_total[i], hom_dim_total[i + 1], p);
        // evaluate phi on an arbitrary concrete element of C_i: need the
        // (copy, path) decomposition of C_i's basis.
        // Rebuild the placement tables the same way projective_cover laid them out.
        std::vector<std::vector<Path>> bases;
        for (int v : lower.summands) bases.push_back(projective_basis(A, v));
        std::vector<int> vtotal(A.num_vertices(), 0);
        // concrete index per vertex -> (copy, basis index)
        std::vector<std::vector<std::pair<int, int>>> who(A.num_vertices());
        for (size_t k = 0; k < bases.size(); ++k)
            for (size_t b = 0; b < bases[k].size(); ++b) {
                int t = bases[k][b].target(A);
                who[t].push_back({static_cast<int>(k), static_cast<int>(b)});
                ++vtotal[t];
            }
        for (size_t kk = 0; kk < upper.summands.size(); ++kk) {
            int w = upper.summands[kk];
            // image of the generator of copy kk under d = onto(upper) then incl(lower)
            FpMat gen(1, upper.cover.dim[w], p);
            gen(0, upper.gen_offset[kk]) = 1;
            FpMat in_kernel = gen * upper.onto.comp[w];          // coords in kernel(lower)
            FpMat in_lower = in_kernel * lower.incl.comp[w];     // coords in C_i at vertex w
            // phi(d gen) = sum over concrete basis elts (copy j, path b):
            //   coeff * n_j * act_N(b)
            for (int cidx = 0; cidx < in_lower.cols(); ++cidx) {
                int64_t coeff = in_lower(0, cidx);
                if (coeff == 0) continue;
                auto [j, b] = who[w][cidx];
                const Path& pb = bases[j][b];
                FpMat act = N.path_action(pb);  // N_{v_j} x N_w
                int src_block = hom_base[i][j];
                int dst_block = hom_base[i + 1][static_cast<int>(kk)];
                for (int r = 0; r < act.rows(); ++r)
                    for (int c = 0; c < act.cols(); ++c)
                        Dm(src_block + r, dst_block + c) =
                            (Dm(src_block + r, dst_block + c) + coeff * act(r, c)) % p;
            }
        }
        D[i] = Dm;
    }
    std::vector<int> ext;
    for (int i = 0; i <= depth; ++i) {
        if (i >= terms) {  // resolution exhausted: everything beyond is zero
            ext.push_back(0);
            continue;
        }
        int dimH = hom_dim_total[i];
        int rank_out = (i + 1 < terms) ? D[i].rank() : 0;
        int rank_in = (i > 0 && i - 1 + 1 < terms) ? D[i - 1].rank() : 0;
        ext.push_back(dimH - rank_out - rank_in);
    }
    return ext;
}

inline int ext_dim_linalg(const Representation& M, const Representation& N, int omega,
                          int depth) {
    if (omega > depth) throw std::invalid_argument("ext_dim_linalg: omega exceeds depth");
    return ext_dims_linalg(M, N, depth)[omega];
}

// ---------------------------------------------------------------------------
// Concrete realization of a combinatorial complex, for exactness checks.

struct RealizedComplex {
    int64_t p;
    std::vector<int> degrees;                 // sorted list of materialized degrees
    std::vector<std::vector<int>> vdims;      // per degree: per-vertex dims
    std::vector<FpMat> d;                     // d[k]: C^{degrees[k]} -> C^{degrees[k+1]}
    std::vector<std::vector<FpMat>> d_blocks; // per k, per vertex block of d[k]
};

inline RealizedComplex realize_complex(const GentleAlgebra& A, int64_t p, const ProjComplex& C,
                                       int64_t lambda = 2) {
    RealizedComplex R;
    R.p = p;
    int lo = C.min_degree(), hi = C.max_degree();
    for (int dgr = lo; dgr <= hi; ++dgr) R.degrees.push_back(dgr);
    int m = C.multiplicity;
    // concrete layout per degree: summands in order, each P_v^m with basis (path, copy)
    struct Layout {
        std::vector<int> summand_ids;
        std::vector<std::vector<Path>> bases;
        std::vector<int> base_offset;            // concrete start offset per summand (global)
        std::vector<int> per_vertex;             // dims
        std::map<std::pair<int, int>, int> slot; // (summand, flat basis*copy index) -> global per-vertex offset
    };
    std::map<int, Layout> layouts;
    for (int k = 0; k < static_cast<int>(R.degrees.size()); ++k) {
        int dgr = R.degrees[k];
        Layout L;
        L.per_vertex.assign(A.num_vertices(), 0);
        for (int sid : C.summands_at(dgr)) {
            L.summand_ids.push_back(sid);
            L.bases.push_back(projective_basis(A, C.summands[sid].vertex));
        }
        for (size_t s = 0; s < L.summand_ids.size(); ++s)
            for (size_t b = 0; b < L.bases[s].size(); ++b)
                for (int cp = 0; cp < m; ++cp) {
                    int t = L.bases[s][b].target(A);
                    L.slot[{static_cast<int>(s), static_cast<int>(b) * m + cp}] = L.per_vertex[t];
                    ++L.per_vertex[t];
                }
        layouts[dgr] = std::move(L);
        R.vdims.push_back(layouts[dgr].per_vertex);
    }
    // Jordan block for the band tag
    auto tag_mat = [&](EntryTag tag) {
        FpMat J = FpMat::identity(m, p);
        if (tag == EntryTag::JordanBlock) {
            for (int i = 0; i < m; ++i) {
                J(i, i) = lambda % p;
                if (i + 1 < m) J(i, i + 1) = 1;
            }
        }
        return J;
    };
    for (size_t k = 0; k + 1 < R.degrees.size(); ++k) {
        int dgr = R.degrees[k];
        const Layout& L0 = layouts[dgr];
        const Layout& L1 = layouts[dgr + 1];
        std::vector<FpMat> blocks;
        for (int v = 0; v < A.num_vertices(); ++v)
            blocks.push_back(FpMat(L0.per_vertex[v], L1.per_vertex[v], p));
        for (const ComplexEntry& e : C.entries) {
            if (C.summands[e.from].degree != dgr) continue;
            int s0 = -1, s1 = -1;
            for (size_t s = 0; s < L0.summand_ids.size(); ++s)
                if (L0.summand_ids[s] == e.from) s0 = static_cast<int>(s);
            for (size_t s = 0; s < L1.summand_ids.size(); ++s)
                if (L1.summand_ids[s] == e.to) s1 = static_cast<int>(s);
            // left multiplication by e.path: basis path b of P_{vertex(from)}
            // maps to path(e) * b in P_{vertex(to)} when nonzero
            FpMat T = tag_mat(e.tag);
            const auto& from_basis = L0.bases[s0];
            const auto& to_basis = L1.bases[s1];
            for (size_t b = 0; b < from_basis.size(); ++b) {
                std::optional<Path> prod = compose(A, e.path, from_basis[b]);
                if (!prod) continue;
                int b2 = -1;
                for (size_t j = 0; j < to_basis.size(); ++j)
                    if (to_basis[j] == *prod) b2 = static_cast<int>(j);
                if (b2 < 0) throw std::logic_error("realize_complex: product path missing");
                int t = prod->target(A);
                for (int c0 = 0; c0 < m; ++c0)
                    for (int c1 = 0; c1 < m; ++c1) {
                        if (T(c0, c1) == 0) continue;
                        int r = L0.slot.at({s0, static_cast<int>(b) * m + c0});
                        int c = L1.slot.at({s1, b2 * m + c1});
                        blocks[t](r, c) = (blocks[t](r, c) + T(c0, c1)) % p;
                    }
            }
        }
        // stack per-vertex blocks into one matrix (block diagonal over vertices)
        int rows = 0, cols = 0;
        for (int v = 0; v < A.num_vertices(); ++v) {
            rows += L0.per_vertex[v];
            cols += L1.per_vertex[v];
        }
        FpMat D(rows, cols, p);
        int ro = 0, co = 0;
        for (int v = 0; v < A.num_vertices(); ++v) {
            for (int i = 0; i < blocks[v].rows(); ++i)
                for (int j = 0; j < blocks[v].cols(); ++j) D(ro + i, co + j) = blocks[v](i, j);
            ro += blocks[v].rows();
            co += blocks[v].cols();
        }
        R.d.push_back(D);
        R.d_blocks.push_back(blocks);
    }
    return R;
}

// d o d == 0 for every consecutive pair
inline bool realized_d_squared_zero(const RealizedComplex& R) {
    for (size_t k = 0; k + 1 < R.d.size(); ++k)
        if (!(R.d[k] * R.d[k + 1]).is_zero()) return false;
    return true;
}

} // namespace gentle
