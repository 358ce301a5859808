#pragma once

// Dense linear algebra over a prime field F_p.
//
// Everything here works on small dense matrices with entries reduced mod p
// (p fits in 32 bits, products in 64). Row vectors act on the left, so
// composing linear maps left-to-right is plain matrix multiplication, which
// matches the right-module conventions used by the representation code.

#include <cassert>
#include <cstdint>
#include <vector>

namespace gentle {

inline int64_t fp_pow(int64_t b, int64_t e, int64_t p) {
    int64_t r = 1 % p;
    b %= p;
    if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline int64_t fp_inv(int64_t a, int64_t p) {
    // p prime, a != 0 mod p
    return fp_pow(a, p - 2, p);
}

class FpMat {
public:
    FpMat() : rows_(0), cols_(0), p_(2) {}
    FpMat(int rows, int cols, int64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {
        assert(rows >= 0 && cols >= 0 && p >= 2);
    }

    static FpMat identity(int n, int64_t p) {
        FpMat m(n, n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t modulus() const { return p_; }

    int64_t& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }
    int64_t operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    void set(int r, int c, int64_t v) {
        v %= p_;
        if (v < 0) v += p_;
        (*this)(r, c) = v;
    }

    bool is_zero() const {
        for (int64_t v : a_)
            if (v != 0) return false;
        return true;
    }

    FpMat operator*(const FpMat& o) const {
        assert(cols_ == o.rows_ && p_ == o.p_);
        FpMat r(rows_, o.cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                int64_t v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = (r(i, j) + v * o(k, j)) % p_;
            }
        return r;
    }

    FpMat operator+(const FpMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
        FpMat r(rows_, cols_, p_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
        return r;
    }

    FpMat operator-(const FpMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
        FpMat r(rows_, cols_, p_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ((a_[i] - o.a_[i]) % p_ + p_) % p_;
        return r;
    }

    bool operator==(const FpMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

    // Stack o below this.
    FpMat vstack(const FpMat& o) const {
        assert(cols_ == o.cols_ && p_ == o.p_);
        FpMat r(rows_ + o.rows_, cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }

    // Row echelon form in place; returns pivot columns. Rows below the
    // returned pivot count are zero afterwards.
    std::vector<int> echelonize() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c) != 0) { sel = i; break; }
            if (sel < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
            int64_t inv = fp_inv((*this)(r, c), p_);
            for (int j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv % p_;
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                int64_t f = (*this)(i, c);
                if (f == 0) continue;
                for (int j = c; j < cols_; ++j)
                    (*this)(i, j) = (((*this)(i, j) - f * (*this)(r, j)) % p_ + p_) % p_;
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FpMat tmp = *this;
        return static_cast<int>(tmp.echelonize().size());
    }

    // Basis of the right nullspace {x : (*this) * x^T = 0}, returned as rows.
    FpMat nullspace() const {
        FpMat tmp = *this;
        std::vector<int> pivots = tmp.echelonize();
        std::vector<char> is_pivot(cols_, 0);
        for (int c : pivots) is_pivot[c] = 1;
        int free_count = cols_ - static_cast<int>(pivots.size());
        FpMat basis(free_count, cols_, p_);
        int bi = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            basis(bi, c) = 1;
            for (size_t r = 0; r < pivots.size(); ++r)
                basis(bi, pivots[r]) = (p_ - tmp(static_cast<int>(r), c)) % p_;
            ++bi;
        }
        return basis;
    }

    // Basis of {x row vector : x * (*this) = 0}.
    FpMat left_nullspace() const { return transpose().nullspace(); }

    FpMat transpose() const {
        FpMat r(cols_, rows_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Solve x * A = b for a single row vector b; returns false if inconsistent.
    bool solve_left(const FpMat& b, FpMat& x) const {
        assert(b.rows() == 1 && b.cols() == cols_);
        FpMat at = transpose();              // rows: cols_, cols: rows_
        FpMat aug(at.rows(), at.cols() + 1, p_);
        for (int i = 0; i < at.rows(); ++i) {
            for (int j = 0; j < at.cols(); ++j) aug(i, j) = at(i, j);
            aug(i, at.cols()) = b(0, i);
        }
        std::vector<int> pivots = aug.echelonize();
        for (int c : pivots)
            if (c == at.cols()) return false;
        x = FpMat(1, rows_, p_);
        for (size_t r = 0; r < pivots.size(); ++r) x(0, pivots[r]) = aug(static_cast<int>(r), at.cols());
        return true;
    }

private:
    int rows_, cols_;
    int64_t p_;
    std::vector<int64_t> a_;
};

} // namespace gentle
