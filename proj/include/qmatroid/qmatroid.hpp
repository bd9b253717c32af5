#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmatroid/enumerate.hpp"

namespace qmatroid {

enum class FamilyKind { independents, circuits, flats, open_spaces, cyclic_spaces, loops };

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::independents: return "independents";
        case FamilyKind::circuits: return "circuits";
        case FamilyKind::flats: return "flats";
        case FamilyKind::open_spaces: return "open_spaces";
        case FamilyKind::cyclic_spaces: return "cyclic_spaces";
        case FamilyKind::loops: return "loops";
    }
    return "?";
}

/// Exhaustive, duplicate-free listing of one family of a q-matroid,
/// sorted by (dim, canonical key), with the members' ranks alongside.
struct FamilyReport {
    FamilyKind kind;
    std::vector<Subspace> members;
    std::vector<int> ranks;
};

struct SpaceFlags {
    bool independent = false;
    bool dependent = false;
    bool circuit = false;
    bool flat = false;
    bool open = false;
    bool cyclic = false;
    bool loop = false;
};

/// A q-matroid (E, r): ambient F_q^n plus a memoized integer rank oracle.
/// Value-semantic handle; copies share the oracle and the memo. Derived
/// matroids (dual, minors) wrap the source handle and stay valid after it
/// goes out of scope.
class QMatroid {
   public:
    using Oracle = std::function<int(const Subspace&)>;

    QMatroid() = default;
    QMatroid(FieldPtr f, int n, Oracle oracle, std::string name = "")
        : impl_(std::make_shared<Impl>()) {
        impl_->field = std::move(f);
        impl_->n = n;
        impl_->oracle = std::move(oracle);
        impl_->name = std::move(name);
    }

    int ambient_dim() const { return impl_->n; }
    const FieldPtr& field() const { return impl_->field; }
    const std::string& name() const { return impl_->name; }
    Subspace ambient() const { return Subspace::full(impl_->field, impl_->n); }
    Subspace zero_space() const { return Subspace::zero(impl_->field, impl_->n); }

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

    int nullity(const Subspace& a) const { return a.dim() - rank(a); }
    int rank_of_ambient() const { return rank(ambient()); }

    // --- operators ----------------------------------------------------

    /// cl(A): sum of every line x with r(A + x) = r(A). Always a flat.
    Subspace closure(const Subspace& a) const {
        Subspace cur = a;
        const int ra = rank(a);
        for (const Subspace& x : one_dims_of(ambient())) {
            const auto v = line_vector(x);
            if (cur.contains_vector(v)) continue;
            if (rank(a.sum_vector(v)) == ra) cur = cur.sum_vector(v);
        }
        return cur;
    }

    /// cyc(A): sum of the lines x <= A with r(B + x) = r(B) for every
    /// codim-1 subspace B of A. For such B, B + x is either B or A, so a
    /// line qualifies iff it lies in every rank-deficient hyperplane of A;
    /// their intersection is exactly cyc(A).
    Subspace cyc(const Subspace& a) const {
        const int ra = rank(a);
        Subspace cur = a;
        for (const Subspace& b : hyperplanes_of(a))
            if (rank(b) != ra) cur = cur.intersect(b);
        return cur;
    }

    bool is_independent(const Subspace& a) const { return rank(a) == a.dim(); }

    bool is_cyclic(const Subspace& a) const {
        const int ra = rank(a);
        for (const Subspace& b : hyperplanes_of(a))
            if (rank(b) != ra) return false;
        return true;
    }

    bool is_flat(const Subspace& a) const {
        const int ra = rank(a);
        for (const Subspace& x : one_dims_of(ambient())) {
            const auto v = line_vector(x);
            if (a.contains_vector(v)) continue;
            if (rank(a.sum_vector(v)) == ra) return false;
        }
        return true;
    }

    /// Minimal dependent space test. Independence is hereditary, so it is
    /// enough that the space is dependent with all hyperplanes independent;
    /// that forces r(A) = dim(A) - 1.
    bool is_circuit(const Subspace& a) const {
        if (a.dim() == 0 || rank(a) != a.dim() - 1) return false;
        for (const Subspace& b : hyperplanes_of(a))
            if (!is_independent(b)) return false;
        return true;
    }

    bool is_loop(const Subspace& a) const { return a.dim() == 1 && rank(a) == 0; }

    SpaceFlags classify(const Subspace& a) const {
        SpaceFlags fl;
        fl.independent = is_independent(a);
        fl.dependent = !fl.independent;
        fl.circuit = is_circuit(a);
        fl.cyclic = is_cyclic(a);
        fl.open = fl.cyclic;  // open == cyclic; the sum-of-circuits witness
                              // is cross-checked separately
        fl.flat = is_flat(a);
        fl.loop = is_loop(a);
        return fl;
    }

    /// Sum of the circuits of M contained in A; equals A iff A is open.
    Subspace open_witness(const Subspace& a, const std::vector<Subspace>& circuits) const {
        Subspace cur = zero_space();
        for (const Subspace& c : circuits)
            if (a.contains(c)) cur = cur.sum(c);
        return cur;
    }

    FamilyReport family(FamilyKind kind,
                        std::uint64_t guard = default_enumeration_guard) const {
        FamilyReport rep;
        rep.kind = kind;
        if (kind == FamilyKind::loops) {
            for (const Subspace& x : one_dims_of(ambient()))
                if (rank(x) == 0) rep.members.push_back(x);
        } else {
            for (const Subspace& s : enumerate_all(impl_->field, impl_->n, guard)) {
                bool keep = false;
                switch (kind) {
                    case FamilyKind::independents: keep = is_independent(s); break;
                    case FamilyKind::circuits: keep = is_circuit(s); break;
                    case FamilyKind::flats: keep = is_flat(s); break;
                    case FamilyKind::open_spaces:
                    case FamilyKind::cyclic_spaces: keep = is_cyclic(s); break;
                    case FamilyKind::loops: break;
                }
                if (keep) rep.members.push_back(s);
            }
        }
        std::sort(rep.members.begin(), rep.members.end());
        rep.ranks.reserve(rep.members.size());
        for (const Subspace& s : rep.members) rep.ranks.push_back(rank(s));
        return rep;
    }

    /// Dual matroid r*(A) = dim(A) - r(E) + r(A^perp); a lazy wrapper with
    /// its own memo.
    QMatroid dual() const {
        QMatroid self = *this;
        const int rE = rank_of_ambient();
        return QMatroid(
            impl_->field, impl_->n,
            [self, rE](const Subspace& a) { return a.dim() - rE + self.rank(a.ortho()); },
            impl_->name.empty() ? "dual" : impl_->name + "*");
    }

    // --- constructions ------------------------------------------------

    /// Representable q-matroid of a full-row-rank k x n matrix G over
    /// F_{q^m}: r(U) = rk(G A_U^T) computed over the extension field.
    static QMatroid from_code_matrix(const Matrix& G, const FieldPtr& base_field,
                                     std::string name = "") {
        const FieldPtr ext = G.field();
        require(base_field->degree() == 1 && base_field->p() == ext->p(),
                errc::field_tower_mismatch,
                "base field must be the prime field under the matrix entries");
        require(G.rank() == G.rows(), errc::not_full_rank, "generator matrix is rank-deficient");
        const int n = G.cols();
        Matrix Gc = G;
        return QMatroid(
            base_field, n,
            [Gc, ext](const Subspace& u) {
                // lift A_U^T into the extension: base values embed verbatim
                Matrix aut(ext, u.ambient(), u.dim());
                for (int i = 0; i < u.dim(); ++i)
                    for (int j = 0; j < u.ambient(); ++j) aut.at(j, i) = u.basis().at(i, j);
                return (Gc * aut).rank();
            },
            std::move(name));
    }

    /// Uniform q-matroid U_{k,n}: r(U) = min(k, dim U).
    static QMatroid uniform(int k, int n, const FieldPtr& f) {
        require(0 <= k && k <= n, errc::invalid_range, "need 0 <= k <= n");
        return QMatroid(
            f, n, [k](const Subspace& u) { return std::min(k, u.dim()); },
            "U_{" + std::to_string(k) + "," + std::to_string(n) + "}");
    }

    /// Matroid backed by an explicit, complete rank table. The table is
    /// checked against (R1)-(R3) exhaustively before acceptance.
    static QMatroid from_rank_table(const FieldPtr& f, int n,
                                    const std::vector<std::pair<Subspace, int>>& table,
                                    std::uint64_t guard = default_enumeration_guard,
                                    std::string name = "table") {
        auto map = std::make_shared<std::unordered_map<std::string, int>>();
        for (const auto& [s, r] : table) {
            require(s.ambient() == n && s.field()->same_as(*f), errc::ambient_mismatch,
                    "table entry outside the ambient space");
            map->emplace(s.encode(), r);
        }
        const auto all = enumerate_all(f, n, guard);
        require(map->size() == all.size(), errc::incomplete_table,
                "rank table must cover every subspace exactly once");
        for (const Subspace& s : all)
            require(map->count(s.encode()) == 1, errc::incomplete_table,
                    "rank table misses " + s.label());
        auto at = [&map](const Subspace& s) { return map->at(s.encode()); };
        for (const Subspace& s : all) {
            const int r = at(s);
            require(0 <= r && r <= s.dim(), errc::axiom_violation,
                    "(R1) fails at " + s.label());
        }
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) {
                const Subspace& a = all[i];
                const Subspace& b = all[j];
                const Subspace s = a.sum(b);
                const Subspace t = a.intersect(b);
                if (b.contains(a))
                    require(at(a) <= at(b), errc::axiom_violation,
                            "(R2) fails at " + a.label() + " <= " + b.label());
                require(at(s) + at(t) <= at(a) + at(b), errc::axiom_violation,
                        "(R3) fails at " + a.label() + ", " + b.label());
            }
        return QMatroid(
            f, n, [map](const Subspace& s) { return map->at(s.encode()); }, std::move(name));
    }

   private:
    static Subspace::Vector line_vector(const Subspace& x) {
        return {x.basis().row(0).begin(), x.basis().row(0).end()};
    }

    struct Impl {
        FieldPtr field;
        int n = 0;
        Oracle oracle;
        std::string name;
        mutable std::unordered_map<std::string, int> memo;
        mutable std::mutex mutex;
    };
    std::shared_ptr<Impl> impl_;
};

/// span(T . rows): maps a subspace of the row-coordinate space into the
/// ambient the rows live in.
inline Subspace embed_through(const Matrix& rows, const Subspace& t) {
    const auto& f = rows.field();
    std::vector<Subspace::Vector> gens;
    for (int i = 0; i < t.dim(); ++i) {
        Subspace::Vector v(rows.cols(), 0);
        for (int r = 0; r < rows.rows(); ++r) {
            const Field::value_type y = t.basis().at(i, r);
            if (y == 0) continue;
            for (int j = 0; j < rows.cols(); ++j) v[j] = f->add(v[j], f->mul(y, rows.at(r, j)));
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, rows.cols(), gens);
}

/// A minor together with the coordinate change that realizes it: rows of
/// `embedding` are ambient vectors; a subspace T of the minor's ambient
/// maps to span(T . embedding) (plus the contracted space, for M/A).
struct Minor {
    QMatroid matroid;
    Matrix embedding;

    Subspace embed(const Subspace& t) const { return embed_through(embedding, t); }
};

/// M|_A realized on F_q^{dim A} through the RREF basis of A.
inline Minor restrict_to(const QMatroid& M, const Subspace& A) {
    require(A.ambient() == M.ambient_dim(), errc::ambient_mismatch, "restriction outside E");
    Matrix rows = A.basis();
    QMatroid base = M;
    QMatroid minor(
        M.field(), A.dim(),
        [base, rows](const Subspace& t) { return base.rank(embed_through(rows, t)); },
        M.name().empty() ? "restriction" : M.name() + "|A");
    return Minor{std::move(minor), std::move(rows)};
}

/// M/A on a concrete complement coordinate system for E/A: the standard
/// basis vectors missing from A's pivot columns. r(T) = r(lift(T) + A) - r(A).
inline Minor contract_by(const QMatroid& M, const Subspace& A) {
    require(A.ambient() == M.ambient_dim(), errc::ambient_mismatch, "contraction outside E");
    const int n = M.ambient_dim();
    std::vector<bool> is_piv(n, false);
    for (int c : A.pivots()) is_piv[c] = true;
    Matrix comp(M.field(), n - A.dim(), n);
    int r = 0;
    for (int j = 0; j < n; ++j)
        if (!is_piv[j]) comp.at(r++, j) = 1;
    QMatroid base = M;
    const int rA = M.rank(A);
    Subspace Acopy = A;
    QMatroid minor(
        M.field(), n - A.dim(),
        [base, comp, Acopy, rA](const Subspace& t) {
            return base.rank(embed_through(comp, t).sum(Acopy)) - rA;
        },
        M.name().empty() ? "contraction" : M.name() + "/A");
    return Minor{std::move(minor), std::move(comp)};
}

/// Image of an ambient subspace T in the contraction's coordinates:
/// coordinates of (T + A) ∩ complement over the complement basis.
inline Subspace contract_image(const Minor& contraction, const Subspace& A, const Subspace& T) {
    const Matrix& comp = contraction.embedding;
    Subspace compspace{Matrix(comp)};
    Subspace inter = T.sum(A).intersect(compspace);
    std::vector<Subspace::Vector> gens;
    for (int i = 0; i < inter.dim(); ++i) {
        Subspace::Vector g(comp.rows(), 0);
        for (int r = 0; r < comp.rows(); ++r)
            for (int j = 0; j < comp.cols(); ++j)
                if (comp.at(r, j) == 1) g[r] = inter.basis().at(i, j);
        gens.push_back(std::move(g));
    }
    return Subspace::span(comp.field(), comp.rows(), gens);
}

}  // namespace qmatroid
