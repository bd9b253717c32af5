#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmatroid/field.hpp"

namespace qmatroid {

/// Dense row-major matrix over a finite field. Entries are raw field
/// values; all arithmetic is exact.
class Matrix {
   public:
    using value_type = Field::value_type;

    Matrix() = default;
    Matrix(FieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    Matrix(FieldPtr f, int rows, int cols, std::vector<value_type> data)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
        require(a_.size() == static_cast<size_t>(rows_) * cols_, errc::invalid_range,
                "matrix data size mismatch");
        for (value_type v : a_)
            require(v < f_->order(), errc::invalid_range, "matrix entry out of field range");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return f_; }

    value_type& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    value_type at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const value_type> row(int i) const {
        return {a_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    std::span<value_type> row(int i) {
        return {a_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    const std::vector<value_type>& data() const noexcept { return a_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transposed() const {
        Matrix t(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        require(f_->same_as(*o.f_), errc::field_mismatch, "matrix product across fields");
        require(cols_ == o.rows_, errc::invalid_range, "inner dimensions disagree");
        Matrix r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                value_type x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f_->add(r.at(i, j), f_->mul(x, o.at(k, j)));
            }
        return r;
    }

    /// Vertical concatenation.
    static Matrix stacked(const Matrix& top, const Matrix& bottom) {
        require(top.f_->same_as(*bottom.f_), errc::field_mismatch, "stack across fields");
        require(top.cols_ == bottom.cols_, errc::invalid_range, "stack width mismatch");
        Matrix r(top.f_, top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
        std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + top.a_.size());
        return r;
    }

    /// In-place reduced row echelon form. Returns the pivot columns; the
    /// rank is their count. Zero rows sink to the bottom.
    std::vector<int> rref() {
        if (f_->p() == 2 && f_->degree() == 1 && cols_ <= 64) return rref_gf2();
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
            value_type inv = f_->inv(at(r, c));
            if (inv != 1)
                for (int j = c; j < cols_; ++j) at(r, j) = f_->mul(inv, at(r, j));
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                value_type x = at(i, c);
                if (x == 0) continue;
                for (int j = c; j < cols_; ++j)
                    at(i, j) = f_->sub(at(i, j), f_->mul(x, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix tmp(*this);
        return static_cast<int>(tmp.rref().size());
    }

    /// Basis of the right null space {x : M x^T = 0}, one solution per row,
    /// in RREF-derived canonical order.
    Matrix kernel() const {
        Matrix red(*this);
        std::vector<int> piv = red.rref();
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        Matrix out(f_, cols_ - static_cast<int>(piv.size()), cols_);
        int k = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            out.at(k, c) = 1;
            for (size_t i = 0; i < piv.size(); ++i)
                out.at(k, piv[i]) = f_->neg(red.at(static_cast<int>(i), c));
            ++k;
        }
        return out;
    }

   private:
    // Word-parallel elimination for F_2: rows packed into single words.
    std::vector<int> rref_gf2() {
        std::vector<std::uint64_t> w(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j)) w[i] |= std::uint64_t(1) << j;
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            const std::uint64_t bit = std::uint64_t(1) << c;
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (w[i] & bit) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(w[piv], w[r]);
            for (int i = 0; i < rows_; ++i)
                if (i != r && (w[i] & bit)) w[i] ^= w[r];
            pivots.push_back(c);
            ++r;
        }
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) at(i, j) = (w[i] >> j) & 1;
        return pivots;
    }

    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<value_type> a_;
};

/// Coordinate expansion of a vector over F_{q^m}^n along a basis of
/// F_{q^m}/F_q: row i of the result holds the base-field coordinates of
/// v_i, so that v_i = sum_j out(i,j) * basis[j]. The base field must be
/// the prime field of the extension.
inline Matrix expand_over_base(const FieldPtr& ext, const FieldPtr& base,
                               std::span<const Field::value_type> v,
                               std::span<const Field::value_type> basis) {
    require(base->degree() == 1 && base->p() == ext->p() && ext->degree() >= 1,
            errc::field_tower_mismatch,
            "base must be the prime field of the extension");
    const int m = ext->degree();
    require(static_cast<int>(basis.size()) == m, errc::dependent_basis,
            "basis must have m elements");
    // columns of B are the coordinate vectors of the basis elements
    Matrix B(base, m, m);
    for (int j = 0; j < m; ++j) {
        auto c = ext->coords(basis[j]);
        for (int i = 0; i < m; ++i) B.at(i, j) = static_cast<Field::value_type>(c[i]);
    }
    require(B.rank() == m, errc::dependent_basis, "basis elements are F_q-dependent");
    // invert by reducing [B | I]
    Matrix aug(base, m, 2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = B.at(i, j);
        aug.at(i, m + i) = 1;
    }
    aug.rref();
    Matrix Binv(base, m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) Binv.at(i, j) = aug.at(i, m + j);

    const int n = static_cast<int>(v.size());
    Matrix out(base, n, m);
    for (int i = 0; i < n; ++i) {
        require(v[i] < ext->order(), errc::field_mismatch, "vector entry outside extension");
        auto c = ext->coords(v[i]);
        for (int j = 0; j < m; ++j) {
            Field::value_type acc = 0;  // (B^{-1} c)_j
            for (int t = 0; t < m; ++t)
                acc = base->add(acc,
                                base->mul(Binv.at(j, t), static_cast<Field::value_type>(c[t])));
            out.at(i, j) = acc;
        }
    }
    return out;
}

/// Inverse of expand_over_base: rebuilds the extension-field vector.
inline std::vector<Field::value_type> recombine_over_base(
    const FieldPtr& ext, const Matrix& coords, std::span<const Field::value_type> basis) {
    std::vector<Field::value_type> v(coords.rows(), 0);
    for (int i = 0; i < coords.rows(); ++i) {
        Field::value_type acc = 0;
        for (int j = 0; j < coords.cols(); ++j)
            acc = ext->add(acc, ext->mul(coords.at(i, j), basis[j]));
        v[i] = acc;
    }
    return v;
}

}  // namespace qmatroid
