#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmatroid/matrix.hpp"

namespace qmatroid {

/// An F_q-subspace of F_q^n in reduced row echelon form.
///
/// RREF is the unique canonical representative of the row space, so two
/// Subspace values describe the same set of vectors iff their byte
/// encodings are equal. The encoding doubles as the memoization key for
/// every rank oracle in the library.
class Subspace {
   public:
    using value_type = Field::value_type;
    using Vector = std::vector<value_type>;

    Subspace() = default;

    static Subspace zero(FieldPtr f, int n) { return Subspace(Matrix(std::move(f), 0, n)); }

    static Subspace full(FieldPtr f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return Subspace(std::move(m));
    }

    static Subspace span(FieldPtr f, int n, const std::vector<Vector>& vectors) {
        Matrix m(f, static_cast<int>(vectors.size()), n);
        for (size_t i = 0; i < vectors.size(); ++i) {
            require(static_cast<int>(vectors[i].size()) == n, errc::ambient_mismatch,
                    "generating vector has wrong length");
            for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
        }
        return Subspace(std::move(m));
    }

    static Subspace line(FieldPtr f, const Vector& v) {
        return span(std::move(f), static_cast<int>(v.size()), {v});
    }

    /// Canonicalizes an arbitrary generating matrix.
    explicit Subspace(Matrix generators) : rows_(std::move(generators)) {
        auto piv = rows_.rref();
        const int k = static_cast<int>(piv.size());
        Matrix trimmed(rows_.field(), k, rows_.cols());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < rows_.cols(); ++j) trimmed.at(i, j) = rows_.at(i, j);
        rows_ = std::move(trimmed);
        pivots_ = std::move(piv);
    }

    int ambient() const noexcept { return rows_.cols(); }
    int dim() const noexcept { return rows_.rows(); }
    const FieldPtr& field() const noexcept { return rows_.field(); }
    const Matrix& basis() const noexcept { return rows_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }
    bool is_zero() const noexcept { return dim() == 0; }

    /// Canonical byte key: dim then row entries, one byte per entry when the
    /// field is small enough, two otherwise. Plain string order equals
    /// (dim, row-major entries) order.
    std::string encode() const {
        const bool wide = field()->order() > 256;
        std::string s;
        s.reserve(1 + rows_.data().size() * (wide ? 2 : 1));
        s.push_back(static_cast<char>(dim()));
        for (value_type v : rows_.data()) {
            if (wide) s.push_back(static_cast<char>(v >> 8));
            s.push_back(static_cast<char>(v & 0xff));
        }
        return s;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.rows_.data() < b.rows_.data();
    }

    bool contains_vector(const Vector& v) const {
        require(static_cast<int>(v.size()) == ambient(), errc::ambient_mismatch,
                "vector length != ambient dimension");
        Vector r = v;
        reduce(r);
        for (value_type x : r)
            if (x != 0) return false;
        return true;
    }

    /// True iff other <= this.
    bool contains(const Subspace& other) const {
        check_ambient(other);
        if (other.dim() > dim()) return false;
        for (int i = 0; i < other.dim(); ++i) {
            Vector r(other.rows_.row(i).begin(), other.rows_.row(i).end());
            reduce(r);
            for (value_type x : r)
                if (x != 0) return false;
        }
        return true;
    }

    Subspace sum(const Subspace& other) const {
        check_ambient(other);
        return Subspace(Matrix::stacked(rows_, other.rows_));
    }

    /// Smallest subspace containing this and the given vector.
    Subspace sum_vector(const Vector& v) const {
        if (contains_vector(v)) return *this;
        Matrix m(field(), dim() + 1, ambient());
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient(); ++j) m.at(i, j) = rows_.at(i, j);
        for (int j = 0; j < ambient(); ++j) m.at(dim(), j) = v[j];
        return Subspace(std::move(m));
    }

    /// Zassenhaus: rref of [A|A; B|0], rows with zero left half carry an
    /// intersection basis in the right half.
    Subspace intersect(const Subspace& other) const {
        check_ambient(other);
        const int n = ambient();
        const auto& f = field();
        Matrix big(f, dim() + other.dim(), 2 * n);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < n; ++j) {
                big.at(i, j) = rows_.at(i, j);
                big.at(i, n + j) = rows_.at(i, j);
            }
        for (int i = 0; i < other.dim(); ++i)
            for (int j = 0; j < n; ++j) big.at(dim() + i, j) = other.rows_.at(i, j);
        big.rref();
        std::vector<Vector> gens;
        for (int i = 0; i < big.rows(); ++i) {
            bool left_zero = true;
            for (int j = 0; j < n && left_zero; ++j) left_zero = big.at(i, j) == 0;
            if (!left_zero) continue;
            Vector g(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                g[j] = big.at(i, n + j);
                nonzero |= g[j] != 0;
            }
            if (nonzero) gens.push_back(std::move(g));
        }
        return span(f, n, gens);
    }

    /// Orthogonal complement under the standard dot product.
    Subspace ortho() const {
        if (dim() == 0) return full(field(), ambient());
        return Subspace(rows_.kernel());
    }

    /// Coordinates of an ambient vector with respect to the RREF basis, or
    /// nullopt if the vector lies outside the subspace.
    std::optional<Vector> coordinates_of(const Vector& v) const {
        require(static_cast<int>(v.size()) == ambient(), errc::ambient_mismatch,
                "vector length != ambient dimension");
        Vector y(dim());
        for (int i = 0; i < dim(); ++i) y[i] = v[pivots_[i]];
        // verify y . rows == v
        const auto& f = field();
        Vector acc(ambient(), 0);
        for (int i = 0; i < dim(); ++i) {
            if (y[i] == 0) continue;
            for (int j = 0; j < ambient(); ++j)
                acc[j] = f->add(acc[j], f->mul(y[i], rows_.at(i, j)));
        }
        if (acc != v) return std::nullopt;
        return y;
    }

    /// Image of coordinate vector y under the basis: y . rows.
    Vector from_coordinates(const Vector& y) const {
        require(static_cast<int>(y.size()) == dim(), errc::ambient_mismatch,
                "coordinate length != dim");
        const auto& f = field();
        Vector acc(ambient(), 0);
        for (int i = 0; i < dim(); ++i) {
            if (y[i] == 0) continue;
            for (int j = 0; j < ambient(); ++j)
                acc[j] = f->add(acc[j], f->mul(y[i], rows_.at(i, j)));
        }
        return acc;
    }

    /// Human-readable generator list in e_i notation, e.g. "<e2+e5, e3+e5>".
    std::string label() const {
        if (dim() == 0) return "<0>";
        std::string s = "<";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ", ";
            bool first = true;
            for (int j = 0; j < ambient(); ++j) {
                value_type c = rows_.at(i, j);
                if (c == 0) continue;
                if (!first) s += "+";
                first = false;
                if (c != 1) s += std::to_string(c) + "*";
                s += "e" + std::to_string(j + 1);
            }
        }
        return s + ">";
    }

    void check_ambient(const Subspace& other) const {
        require(ambient() == other.ambient() && field()->same_as(*other.field()),
                errc::ambient_mismatch, "subspaces live in different ambients");
    }

   private:
    void reduce(Vector& r) const {
        const auto& f = field();
        for (int i = 0; i < dim(); ++i) {
            value_type c = r[pivots_[i]];
            if (c == 0) continue;
            for (int j = 0; j < ambient(); ++j) r[j] = f->sub(r[j], f->mul(c, rows_.at(i, j)));
        }
    }

    Matrix rows_;
    std::vector<int> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) { return a.sum(b); }
inline Subspace intersect(const Subspace& a, const Subspace& b) { return a.intersect(b); }
inline bool contains(const Subspace& outer, const Subspace& inner) {
    return outer.contains(inner);
}

}  // namespace qmatroid
