#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact rational matrices and canonical subspaces.
 *
 * Subspaces are stored as reduced row echelon bases, so every subspace has a
 * unique representation and equality of subspaces is equality of matrices.
 * All operations are pure; no floating point anywhere.
 */

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "whecke/rational.hpp"

namespace whecke {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            assert(r.size() == cols_);
            for (const auto& x : r) entries_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
        return r;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rat& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    Mat operator*(const Rat& c) const {
        Mat r = *this;
        for (auto& x : r.entries_) x *= c;
        return r;
    }

    /// Matrix acting on a column vector given as a row: returns (M v^T)^T.
    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        assert(v.size() == cols_);
        std::vector<Rat> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                const Rat& a = (*this)(i, j);
                if (a != 0 && v[j] != 0) acc += a * v[j];
            }
            out[i] = std::move(acc);
        }
        return out;
    }

    std::vector<Rat> row(std::size_t i) const {
        return std::vector<Rat>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void set_row(std::size_t i, const std::vector<Rat>& v) {
        assert(v.size() == cols_);
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// nonzero row, in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap((*this)(p, j), (*this)(r, j));
            const Rat inv = (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) /= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const Rat f = (*this)(i, c);
                if (f == 0) continue;
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> entries_;
};

/// Exact rank over the rationals.
inline std::size_t rank(Mat m) { return m.rref().size(); }

/// Right kernel {v : M v = 0}, rows of the result are a canonical basis.
inline Mat kernel_basis(Mat m) {
    const std::size_t n = m.cols();
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat out(n - pivots.size(), n);
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        out(k, c) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) out(k, pivots[r]) = -m(r, c);
        ++k;
    }
    return out;
}

/**
 * A linear subspace of Q^n in canonical form: the basis matrix is in reduced
 * row echelon form with zero rows dropped, so equal subspaces compare equal.
 */
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Canonicalizes an arbitrary spanning set given as matrix rows.
    static Subspace from_rows(Mat spanning) {
        Subspace s(spanning.cols());
        const auto pivots = spanning.rref();
        Mat b(pivots.size(), spanning.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i) b.set_row(i, spanning.row(i));
        s.basis_ = std::move(b);
        s.pivots_ = pivots;
        return s;
    }

    static Subspace from_vectors(const std::vector<std::vector<Rat>>& vecs, std::size_t ambient_dim) {
        Mat m(vecs.size(), ambient_dim);
        for (std::size_t i = 0; i < vecs.size(); ++i) m.set_row(i, vecs[i]);
        return from_rows(std::move(m));
    }

    static Subspace full(std::size_t ambient_dim) { return from_rows(Mat::identity(ambient_dim)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    std::vector<Rat> basis_row(std::size_t i) const { return basis_.row(i); }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Lexicographic order on the canonical basis matrix; any fixed total
    /// order works, this one keeps set-of-subspaces output deterministic.
    bool operator<(const Subspace& o) const {
        if (dim() != o.dim()) return dim() < o.dim();
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) {
                if (basis_(i, j) != o.basis_(i, j)) return basis_(i, j) < o.basis_(i, j);
            }
        return false;
    }

    /// Coordinates of v in the canonical basis, or empty if v is outside.
    /// Because the basis is in rref, coordinates are read off pivot columns.
    bool coordinates(const std::vector<Rat>& v, std::vector<Rat>& out) const {
        assert(v.size() == ambient_);
        out.assign(dim(), Rat(0));
        std::vector<Rat> residual = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            const Rat c = residual[pivots_[i]];
            if (c == 0) continue;
            out[i] = c;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (basis_(i, j) != 0) residual[j] -= c * basis_(i, j);
        }
        for (const auto& x : residual)
            if (x != 0) return false;
        return true;
    }

    bool contains(const std::vector<Rat>& v) const {
        std::vector<Rat> tmp;
        return coordinates(v, tmp);
    }

    bool contains(const Subspace& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_row(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        assert(ambient_ == o.ambient_);
        Mat stacked(dim() + o.dim(), ambient_);
        for (std::size_t i = 0; i < dim(); ++i) stacked.set_row(i, basis_row(i));
        for (std::size_t i = 0; i < o.dim(); ++i) stacked.set_row(dim() + i, o.basis_row(i));
        return from_rows(std::move(stacked));
    }

    Subspace intersect(const Subspace& o) const {
        assert(ambient_ == o.ambient_);
        // x in both spaces: x = u A = v B; solve [A^T | -B^T] kernel.
        Mat sys(ambient_, dim() + o.dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) sys(i, j) = basis_(j, i);
        for (std::size_t j = 0; j < o.dim(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) sys(i, dim() + j) = -o.basis_(j, i);
        const Mat ker = kernel_basis(std::move(sys));
        Mat vecs(ker.rows(), ambient_);
        for (std::size_t k = 0; k < ker.rows(); ++k)
            for (std::size_t i = 0; i < ambient_; ++i) {
                Rat acc = 0;
                for (std::size_t j = 0; j < dim(); ++j) acc += ker(k, j) * basis_(j, i);
                vecs(k, i) = std::move(acc);
            }
        return from_rows(std::move(vecs));
    }

    /// Image of this subspace under a linear map (columns convention).
    Subspace image_under(const Mat& op) const {
        assert(op.cols() == ambient_);
        Mat img(dim(), op.rows());
        for (std::size_t i = 0; i < dim(); ++i) img.set_row(i, op.apply(basis_row(i)));
        return from_rows(std::move(img));
    }

private:
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Matrix of op restricted to an op-invariant subspace, in the subspace's
/// canonical basis.  Asserts invariance exactly.
inline Mat restrict_to(const Mat& op, const Subspace& s) {
    Mat out(s.dim(), s.dim());
    std::vector<Rat> coords;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        const auto img = op.apply(s.basis_row(j));
        const bool ok = s.coordinates(img, coords);
        if (!ok) throw Error("restrict_to: subspace is not invariant under the operator");
        for (std::size_t i = 0; i < s.dim(); ++i) out(i, j) = coords[i];
    }
    return out;
}

}  // namespace whecke
