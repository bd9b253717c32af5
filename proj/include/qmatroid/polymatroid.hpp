#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qmatroid/qmatroid.hpp"

namespace qmatroid {

/// A (q,r)-polymatroid: like a q-matroid but with 0 <= rho(A) <= r*dim(A).
/// Only what the counterexample workflow needs: construction from an
/// F_q-linear matrix code, the cyclic operator, and the rank-gap scan.
class QPolymatroid {
   public:
    using Oracle = std::function<int(const Subspace&)>;

    QPolymatroid(FieldPtr f, int n, int r_scale, Oracle oracle, std::string name = "")
        : impl_(std::make_shared<Impl>()) {
        impl_->field = std::move(f);
        impl_->n = n;
        impl_->r_scale = r_scale;
        impl_->oracle = std::move(oracle);
        impl_->name = std::move(name);
    }

    int ambient_dim() const { return impl_->n; }
    int r_scale() const { return impl_->r_scale; }
    const FieldPtr& field() const { return impl_->field; }
    Subspace ambient() const { return Subspace::full(impl_->field, impl_->n); }

    int rank(const Subspace& a) const {
        require(a.ambient() == impl_->n && a.field()->same_as(*impl_->field),
                errc::ambient_mismatch, "rank query outside the ambient space");
        const std::string key = a.encode();
        {
            std::lock_guard<std::mutex> lk(impl_->mutex);
            auto it = impl_->memo.find(key);
            if (it != impl_->memo.end()) return it->second;
        }
        int r = impl_->oracle(a);
        std::lock_guard<std::mutex> lk(impl_->mutex);
        impl_->memo.emplace(key, r);
        return r;
    }

    /// Polymatroid cyclic operator: sum of the lines x <= A that are loops
    /// or satisfy rho(B+x) - rho(B) < rho(x) for every codim-1 B <= A.
    /// The quantifier includes B containing x, where the difference is 0;
    /// that already forces rho(x) > 0, which is why loops need their own
    /// clause. For B not containing x, B+x = A, so the condition reads:
    /// every such hyperplane has rho(A) - rho(B) < rho(x).
    Subspace cyc(const Subspace& a) const {
        const int ra = rank(a);
        std::vector<std::pair<Subspace, int>> hyps;
        for (const Subspace& b : hyperplanes_of(a)) hyps.emplace_back(b, rank(b));
        Subspace cur = Subspace::zero(impl_->field, impl_->n);
        for (const Subspace& x : one_dims_of(a)) {
            const int rx = rank(x);
            bool in = true;
            if (rx > 0) {
                Subspace::Vector v(x.basis().row(0).begin(), x.basis().row(0).end());
                for (const auto& [b, rb] : hyps) {
                    if (b.contains_vector(v)) continue;
                    if (ra - rb >= rx) {
                        in = false;
                        break;
                    }
                }
            }
            if (in) cur = cur.sum(x);
        }
        return cur;
    }

    /// Builds the (q,b)-polymatroid of an F_q-linear space of a x b
    /// matrices on F_q^a: rho(A) = dim C - dim{M in C : colspace(M) <= A^perp}.
    /// That shortening is cut out by linear conditions, so rho(A) is the
    /// rank of the constraint system. Validates (rho1)-(rho3) exhaustively.
    static QPolymatroid from_matrix_code(const std::vector<Matrix>& basis_matrices,
                                         std::uint64_t guard = default_enumeration_guard) {
        require(!basis_matrices.empty(), errc::invalid_range, "need at least one matrix");
        const FieldPtr f = basis_matrices.front().field();
        const int a = basis_matrices.front().rows();
        const int b = basis_matrices.front().cols();
        const int t = static_cast<int>(basis_matrices.size());
        Matrix flat(f, t, a * b);
        for (int i = 0; i < t; ++i) {
            const Matrix& m = basis_matrices[i];
            require(m.rows() == a && m.cols() == b && m.field()->same_as(*f),
                    errc::invalid_range, "matrices must share shape and field");
            for (int r = 0; r < a; ++r)
                for (int c = 0; c < b; ++c) flat.at(i, r * b + c) = m.at(r, c);
        }
        require(flat.rank() == t, errc::dependent_basis, "basis matrices are F_q-dependent");
        std::vector<Matrix> mats = basis_matrices;
        QPolymatroid P(
            f, a, b,
            [mats, f, t, b](const Subspace& s) {
                // constraints: for each basis row u of s and column j,
                // sum_i y_i (u . col_j(M_i)) = 0
                Matrix cons(f, s.dim() * b, t);
                for (int r = 0; r < s.dim(); ++r)
                    for (int j = 0; j < b; ++j)
                        for (int i = 0; i < t; ++i) {
                            Field::value_type acc = 0;
                            for (int row = 0; row < mats[i].rows(); ++row)
                                acc = f->add(acc, f->mul(s.basis().at(r, row),
                                                         mats[i].at(row, j)));
                            cons.at(r * b + j, i) = acc;
                        }
                return cons.rank();
            },
            "matrix-code");
        P.validate(guard);
        return P;
    }

    /// A q-matroid viewed as a (q,1)-polymatroid; cyc must then agree with
    /// the matroid's cyclic operator everywhere.
    static QPolymatroid from_qmatroid(const QMatroid& M) {
        QMatroid base = M;
        return QPolymatroid(
            M.field(), M.ambient_dim(), 1,
            [base](const Subspace& s) { return base.rank(s); },
            M.name().empty() ? "as-polymatroid" : M.name());
    }

    void validate(std::uint64_t guard = default_enumeration_guard) const {
        const auto all = enumerate_all(impl_->field, impl_->n, guard);
        std::vector<int> rk(all.size());
        for (size_t i = 0; i < all.size(); ++i) {
            rk[i] = rank(all[i]);
            require(0 <= rk[i] && rk[i] <= impl_->r_scale * all[i].dim(), errc::axiom_violation,
                    "(rho1) fails at " + all[i].label());
        }
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) {
                if (all[j].contains(all[i]))
                    require(rk[i] <= rk[j], errc::axiom_violation,
                            "(rho2) fails at " + all[i].label() + " <= " + all[j].label());
                require(rank(all[i].sum(all[j])) + rank(all[i].intersect(all[j])) <=
                            rk[i] + rk[j],
                        errc::axiom_violation,
                        "(rho3) fails at " + all[i].label() + ", " + all[j].label());
            }
    }

   private:
    struct Impl {
        FieldPtr field;
        int n = 0;
        int r_scale = 1;
        Oracle oracle;
        std::string name;
        mutable std::unordered_map<std::string, int> memo;
        mutable std::mutex mutex;
    };
    std::shared_ptr<Impl> impl_;
};

/// Subspaces where the matroid rank-gap identity
/// rho(A) - rho(cyc(A)) = r (dim A - dim cyc(A)) breaks, with both sides.
struct GapEntry {
    Subspace space;
    int lhs = 0;
    int rhs = 0;
};

inline std::vector<GapEntry> gap_scan(const QPolymatroid& P,
                                      std::uint64_t guard = default_enumeration_guard) {
    std::vector<GapEntry> out;
    for (const Subspace& s : enumerate_all(P.field(), P.ambient_dim(), guard)) {
        const Subspace c = P.cyc(s);
        const int lhs = P.rank(s) - P.rank(c);
        const int rhs = P.r_scale() * (s.dim() - c.dim());
        if (lhs != rhs) out.push_back({s, lhs, rhs});
    }
    return out;
}

}  // namespace qmatroid
