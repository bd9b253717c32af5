#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmatroid/qmatroid.hpp"

namespace qmatroid {

/// An F_{q^m}-linear rank-metric code in F_{q^m}^n, held by a full-rank
/// generator matrix. The base field must be the prime field under the
/// extension (all supports and the associated q-matroid live in F_q^n).
class RankMetricCode {
   public:
    using Word = std::vector<Field::value_type>;

    static RankMetricCode make(Matrix G, FieldPtr base_field) {
        RankMetricCode c;
        c.ext_ = G.field();
        c.base_ = std::move(base_field);
        require(c.base_->degree() == 1 && c.base_->p() == c.ext_->p(),
                errc::field_tower_mismatch,
                "base field must be the prime field of the matrix entries");
        require(G.rank() == G.rows(), errc::not_full_rank, "generator matrix is rank-deficient");
        c.n_ = G.cols();
        c.k_ = G.rows();
        c.G_ = std::move(G);
        c.nondegenerate_ = c.compute_nondegenerate();
        return c;
    }

    int length() const noexcept { return n_; }
    int dimension() const noexcept { return k_; }
    int m() const noexcept { return ext_->degree(); }
    const Matrix& generator() const noexcept { return G_; }
    const FieldPtr& ext_field() const noexcept { return ext_; }
    const FieldPtr& base_field() const noexcept { return base_; }
    bool nondegenerate() const noexcept { return nondegenerate_; }

    /// Power basis 1, alpha, ..., alpha^{m-1} of the extension.
    std::vector<Field::value_type> default_gamma() const {
        std::vector<Field::value_type> g(m());
        Field::value_type v = 1;
        for (int i = 0; i < m(); ++i) {
            g[i] = v;
            v = ext_->mul(v, static_cast<Field::value_type>(ext_->p()));
        }
        if (m() == 1) g[0] = 1;
        return g;
    }

    /// Γ-support: the column space over F_q of the coordinate expansion of
    /// v. Independent of the chosen basis.
    Subspace support(const Word& v, const std::vector<Field::value_type>& gamma) const {
        require(static_cast<int>(v.size()) == n_, errc::field_mismatch,
                "word length != code length");
        Matrix exp = expand_over_base(ext_, base_, v, gamma);
        std::vector<Subspace::Vector> cols;
        for (int j = 0; j < exp.cols(); ++j) {
            Subspace::Vector col(n_);
            for (int i = 0; i < n_; ++i) col[i] = exp.at(i, j);
            cols.push_back(std::move(col));
        }
        return Subspace::span(base_, n_, cols);
    }
    Subspace support(const Word& v) const { return support(v, default_gamma()); }

    int rank_weight(const Word& v) const { return support(v).dim(); }

    /// C^⊥: generator = basis of the right null space of G.
    RankMetricCode dual() const { return make(G_.kernel(), base_); }

    /// C(U) = words orthogonal to U: solved as the left kernel of
    /// G A_U^T over F_{q^m}. Returns its dimension and a codeword basis.
    struct Shortening {
        int dim = 0;
        Matrix basis;  // dim x n, rows are codewords
    };
    Shortening code_of_space(const Subspace& u) const {
        require(u.ambient() == n_ && u.field()->same_as(*base_), errc::ambient_mismatch,
                "subspace outside F_q^n");
        Matrix aut(ext_, n_, u.dim());
        for (int i = 0; i < u.dim(); ++i)
            for (int j = 0; j < n_; ++j) aut.at(j, i) = u.basis().at(i, j);
        Matrix y = (G_ * aut).transposed().kernel();  // rows: messages with y G A_U^T = 0
        Shortening s;
        s.basis = y * G_;
        s.dim = y.rows();
        return s;
    }

    /// The representable q-matroid M_C on F_q^n.
    QMatroid matroid(std::string name = "") const {
        return QMatroid::from_code_matrix(G_, base_, std::move(name));
    }

    /// One representative per 1-dim F_{q^m}-subspace of the message space
    /// (leading nonzero message coordinate normalized to 1), in a fixed
    /// order. Scalar multiples share a support, so projective enumeration
    /// is enough for all support work.
    std::vector<Word> projective_codewords(std::uint64_t guard = 1'000'000) const {
        const std::uint64_t Q = ext_->order();
        std::uint64_t classes = 0, qp = 1;
        for (int i = 0; i < k_; ++i) {
            classes += qp;
            qp *= Q;
        }
        require(classes <= guard, errc::enumeration_too_large,
                "projective class count exceeds the guard");
        std::vector<Word> out;
        out.reserve(classes);
        std::vector<Field::value_type> y(k_, 0);
        for (int lead = 0; lead < k_; ++lead) {
            std::fill(y.begin(), y.end(), 0);
            y[lead] = 1;
            while (true) {
                Word w(n_, 0);
                for (int i = 0; i < k_; ++i) {
                    if (y[i] == 0) continue;
                    for (int j = 0; j < n_; ++j)
                        w[j] = ext_->add(w[j], ext_->mul(y[i], G_.at(i, j)));
                }
                out.push_back(std::move(w));
                int t = 0;
                while (t < lead && ++y[t] == Q) y[t++] = 0;
                if (t == lead) break;
            }
        }
        return out;
    }

   private:
    bool compute_nondegenerate() const {
        // columns of G, expanded over F_q, must span an n-dim space
        const int mm = m();
        Matrix cols(base_, n_, k_ * mm);
        const auto gamma = default_gamma();
        for (int j = 0; j < n_; ++j) {
            Word col(k_);
            for (int i = 0; i < k_; ++i) col[i] = G_.at(i, j);
            Matrix exp = expand_over_base(ext_, base_, col, gamma);
            for (int i = 0; i < k_; ++i)
                for (int t = 0; t < mm; ++t) cols.at(j, i * mm + t) = exp.at(i, t);
        }
        return cols.rank() == n_;
    }

    FieldPtr ext_, base_;
    int n_ = 0, k_ = 0;
    Matrix G_;
    bool nondegenerate_ = false;
};

/// Distinct codeword supports with one projective representative each.
struct SupportIndex {
    struct Entry {
        Subspace support;
        std::vector<RankMetricCode::Word> words;  // representatives sharing it
    };
    std::vector<Entry> entries;  // sorted by (dim, encoding) of the support
    std::size_t class_count = 0; // projective classes indexed
};

inline SupportIndex distinct_supports(const RankMetricCode& C,
                                      std::uint64_t guard = 1'000'000) {
    std::map<std::string, size_t> pos;
    SupportIndex idx;
    std::vector<std::pair<Subspace, RankMetricCode::Word>> items;
    for (const auto& w : C.projective_codewords(guard)) items.emplace_back(C.support(w), w);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, w] : items) {
        auto it = pos.find(s.encode());
        if (it == pos.end()) {
            pos.emplace(s.encode(), idx.entries.size());
            idx.entries.push_back({s, {w}});
        } else {
            idx.entries[it->second].words.push_back(w);
        }
        ++idx.class_count;
    }
    return idx;
}

/// Supports of the minimal codewords: classes whose support contains no
/// other class's support (equality included, outside the class itself).
inline SupportIndex minimal_codewords(const RankMetricCode& C, std::uint64_t guard = 1'000'000) {
    const auto words = C.projective_codewords(guard);
    std::vector<Subspace> sup;
    sup.reserve(words.size());
    for (const auto& w : words) sup.push_back(C.support(w));
    SupportIndex idx;
    std::vector<std::pair<Subspace, RankMetricCode::Word>> keep;
    for (size_t i = 0; i < words.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < words.size() && minimal; ++j)
            if (j != i && sup[i].contains(sup[j])) minimal = false;
        if (minimal) keep.emplace_back(sup[i], words[i]);
    }
    std::sort(keep.begin(), keep.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, w] : keep) {
        idx.entries.push_back({s, {w}});
        ++idx.class_count;
    }
    return idx;
}

/// F_{q^m}-independence of W <= F_q^n: map a basis through the columns of
/// G (w -> G w^T) and test independence of the images over the extension.
inline bool fqm_independent(const RankMetricCode& C, const Subspace& W) {
    require(C.nondegenerate(), errc::degenerate_code,
            "F_{q^m}-independence needs a nondegenerate code");
    require(W.ambient() == C.length() && W.field()->same_as(*C.base_field()),
            errc::ambient_mismatch, "subspace outside F_q^n");
    Matrix wt(C.ext_field(), C.length(), W.dim());
    for (int i = 0; i < W.dim(); ++i)
        for (int j = 0; j < C.length(); ++j) wt.at(j, i) = W.basis().at(i, j);
    return (C.generator() * wt).rank() == W.dim();
}

/// The four code <-> matroid bridge checks:
///  (a) supports of nonzero words of C^⊥ are dependent in M_C,
///  (b) they are cyclic in M_C,
///  (c) the circuits of M_C are exactly the supports of the minimal
///      codewords of C^⊥,
///  (d) every support of a word of C is the sum of the minimal-codeword
///      supports of C it contains.
struct BridgeReport {
    bool dependent_ok = true;
    bool cyclic_ok = true;
    bool circuits_match = true;
    bool decomposition_ok = true;
    std::string detail;
    bool all_ok() const {
        return dependent_ok && cyclic_ok && circuits_match && decomposition_ok;
    }
};

inline BridgeReport bridge_checks(const RankMetricCode& C,
                                  std::uint64_t guard = default_enumeration_guard) {
    require(C.nondegenerate(), errc::degenerate_code, "bridge checks need a nondegenerate code");
    BridgeReport rep;
    const QMatroid M = C.matroid();
    const RankMetricCode Cd = C.dual();
    for (const auto& w : Cd.projective_codewords()) {
        const Subspace s = Cd.support(w);
        if (M.is_independent(s)) {
            rep.dependent_ok = false;
            rep.detail += "independent dual support " + s.label() + "; ";
        }
        if (!M.is_cyclic(s)) {
            rep.cyclic_ok = false;
            rep.detail += "non-cyclic dual support " + s.label() + "; ";
        }
    }
    const auto circuits = M.family(FamilyKind::circuits, guard).members;
    const SupportIndex mins_dual = minimal_codewords(Cd);
    std::vector<Subspace> min_supports;
    for (const auto& e : mins_dual.entries) min_supports.push_back(e.support);
    if (circuits != min_supports) {
        rep.circuits_match = false;
        rep.detail += "circuits (" + std::to_string(circuits.size()) +
                      ") != minimal dual supports (" + std::to_string(min_supports.size()) + "); ";
    }
    const SupportIndex mins_primal = minimal_codewords(C);
    for (const auto& w : C.projective_codewords()) {
        const Subspace s = C.support(w);
        Subspace acc = Subspace::zero(C.base_field(), C.length());
        for (const auto& e : mins_primal.entries)
            if (s.contains(e.support)) acc = acc.sum(e.support);
        if (!(acc == s)) {
            rep.decomposition_ok = false;
            rep.detail += "support " + s.label() + " != sum of contained minimal supports; ";
        }
    }
    return rep;
}

}  // namespace qmatroid
