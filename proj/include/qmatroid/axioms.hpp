#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "qmatroid/cyclic_flats.hpp"

namespace qmatroid {

struct AxiomViolation {
    std::string axiom;
    std::vector<Subspace> witness;
    std::string observed;
};

/// Result of one axiom-scheme check. `passed` iff no violations; every
/// violation carries the full operand subspaces so it can be replayed.
/// `warnings` holds findings the checker reports without failing on.
struct AxiomReport {
    std::string scheme;
    bool passed = true;
    std::vector<AxiomViolation> violations;
    std::vector<std::string> warnings;

    void violate(std::string axiom, std::vector<Subspace> witness, std::string observed) {
        passed = false;
        violations.push_back({std::move(axiom), std::move(witness), std::move(observed)});
    }
};

/// Exhaustive (R1)/(R2)/(R3) verification over every subspace pair.
inline AxiomReport check_rank_axioms(const QMatroid& M,
                                     std::uint64_t guard = default_enumeration_guard) {
    AxiomReport rep;
    rep.scheme = "R";
    const auto all = enumerate_all(M.field(), M.ambient_dim(), guard);
    std::vector<int> rk(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
        rk[i] = M.rank(all[i]);
        if (!(0 <= rk[i] && rk[i] <= all[i].dim()))
            rep.violate("R1", {all[i]}, "r = " + std::to_string(rk[i]));
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            const Subspace& a = all[i];
            const Subspace& b = all[j];
            if (b.contains(a) && rk[i] > rk[j])
                rep.violate("R2", {a, b},
                            "r(A) = " + std::to_string(rk[i]) + " > r(B) = " + std::to_string(rk[j]));
            const int rs = M.rank(a.sum(b));
            const int rt = M.rank(a.intersect(b));
            if (rs + rt > rk[i] + rk[j])
                rep.violate("R3", {a, b},
                            "r(A+B) + r(A∩B) = " + std::to_string(rs + rt) + " > " +
                                std::to_string(rk[i] + rk[j]));
        }
    return rep;
}

inline AxiomReport check_open_axioms(const QMatroid& M, const std::vector<Subspace>& opens);

/// Independence axioms (I1)-(I4) or open-space axioms (O1)-(O3) for the
/// computed families.
///
/// (I4) is checked in the equivalent form r(cl(I) + cl(J)) = r(I + J) over
/// independent pairs: a space A has I as a maximal independent subspace
/// exactly when I <= A <= cl(I), and r(A + B) is monotone in both
/// arguments, so A = cl(I), B = cl(J) is the binding case.
///
/// (O3) is read as: for each open O and each hyperplane X of E with
/// O not inside X, exactly one member O' of the open family satisfies
/// O' <= O ∩ X and is covered by O in the family's inclusion order.
inline AxiomReport check_family_axioms(const QMatroid& M, char scheme,
                                       std::uint64_t guard = default_enumeration_guard) {
    require(scheme == 'I' || scheme == 'O', errc::invalid_range, "scheme must be I or O");
    AxiomReport rep;
    rep.scheme = std::string(1, scheme);
    if (scheme == 'I') {
        const auto all = enumerate_all(M.field(), M.ambient_dim(), guard);
        std::vector<char> indep(all.size());
        std::vector<Subspace> members;
        for (size_t i = 0; i < all.size(); ++i) {
            indep[i] = M.is_independent(all[i]);
            if (indep[i]) members.push_back(all[i]);
        }
        if (members.empty()) rep.violate("I1", {}, "independent family is empty");
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                if (i != j && indep[j] && !indep[i] && all[j].contains(all[i]))
                    rep.violate("I2", {all[i], all[j]}, "subspace of an independent is dependent");
        for (const Subspace& J : members) {
            const auto lines = one_dims_of(J);
            for (const Subspace& I : members) {
                if (I.dim() >= J.dim()) continue;
                bool found = false;
                for (const Subspace& x : lines) {
                    Subspace::Vector v(x.basis().row(0).begin(), x.basis().row(0).end());
                    if (I.contains_vector(v)) continue;
                    if (M.is_independent(I.sum_vector(v))) {
                        found = true;
                        break;
                    }
                }
                if (!found) rep.violate("I3", {I, J}, "no augmenting line from J");
            }
        }
        std::vector<Subspace> closures;
        closures.reserve(members.size());
        for (const Subspace& I : members) closures.push_back(M.closure(I));
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i; j < members.size(); ++j) {
                const int lhs = M.rank(closures[i].sum(closures[j]));
                const int rhs = M.rank(members[i].sum(members[j]));
                if (lhs != rhs)
                    rep.violate("I4", {members[i], members[j]},
                                "r(cl I + cl J) = " + std::to_string(lhs) +
                                    " != r(I+J) = " + std::to_string(rhs));
            }
    } else {
        rep = check_open_axioms(M, M.family(FamilyKind::open_spaces, guard).members);
    }
    return rep;
}

/// (O1)-(O3) against an explicitly supplied family, so a doctored family
/// can be checked too.
inline AxiomReport check_open_axioms(const QMatroid& M, const std::vector<Subspace>& opens) {
    AxiomReport rep;
    rep.scheme = "O";
    {
        std::unordered_set<std::string> keys;
        for (const Subspace& o : opens) keys.insert(o.encode());
        if (!keys.count(M.zero_space().encode()))
            rep.violate("O1", {}, "zero space missing from the open family");
        for (size_t i = 0; i < opens.size(); ++i)
            for (size_t j = 0; j <= i; ++j)
                if (!keys.count(opens[i].sum(opens[j]).encode()))
                    rep.violate("O2", {opens[i], opens[j]}, "sum is not open");
        // covers inside the open family
        const int N = static_cast<int>(opens.size());
        std::vector<std::vector<bool>> lt(N, std::vector<bool>(N, false));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                lt[i][j] = i != j && opens[j].contains(opens[i]);
        std::vector<std::vector<int>> covered_by(N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (!lt[i][j]) continue;
                bool cover = true;
                for (int k = 0; k < N && cover; ++k)
                    if (lt[i][k] && lt[k][j]) cover = false;
                if (cover) covered_by[j].push_back(i);
            }
        const auto walls = hyperplanes_of(M.ambient());
        for (int j = 0; j < N; ++j) {
            for (const Subspace& X : walls) {
                if (X.contains(opens[j])) continue;
                int count = 0;
                for (int i : covered_by[j])
                    if (X.contains(opens[i])) ++count;
                if (count != 1)
                    rep.violate("O3", {opens[j], X},
                                std::to_string(count) + " covered opens inside O ∩ X");
            }
        }
    }
    return rep;
}

/// (Z1)-(Z3) on a rank-decorated lattice of subspaces, plus the derived
/// checks the scheme implies. The lattice may come from data rather than
/// a matroid; meet/join then come from containment (NotALattice if that
/// structure is missing). Warnings record pairs where the two-sided
/// comparable-pair inequality fails on the left for incomparable nodes;
/// that side is not enforced.
inline AxiomReport check_Z_axioms(const CyclicFlatLattice& L) {
    AxiomReport rep;
    rep.scheme = "Z";
    const int N = L.size();
    if (L.ranks[L.bottom] != 0)
        rep.violate("Z1", {L.nodes[L.bottom]}, "r(0_Z) = " + std::to_string(L.ranks[L.bottom]));
    for (int g = 0; g < N; ++g)
        for (int f = 0; f < N; ++f) {
            if (f == g || !L.nodes[f].contains(L.nodes[g])) continue;
            const int dr = L.ranks[f] - L.ranks[g];
            const int dd = L.nodes[f].dim() - L.nodes[g].dim();
            if (!(0 < dr && dr < dd))
                rep.violate("Z2", {L.nodes[g], L.nodes[f]},
                            "r(F)-r(G) = " + std::to_string(dr) +
                                ", dim(F)-dim(G) = " + std::to_string(dd));
        }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            const Subspace inter = L.nodes[i].intersect(L.nodes[j]);
            const int m = L.meet_table[i][j];
            const int v = L.join_table[i][j];
            const int lhs = L.ranks[i] + L.ranks[j];
            const int rhs =
                L.ranks[v] + L.ranks[m] + (inter.dim() - L.nodes[m].dim());
            if (lhs < rhs)
                rep.violate("Z3", {L.nodes[i], L.nodes[j]},
                            "r(F)+r(G) = " + std::to_string(lhs) + " < " + std::to_string(rhs));
        }
    for (int f = 0; f < N; ++f)
        for (int g = 0; g < N; ++g) {
            if (f == g) continue;
            const Subspace inter = L.nodes[f].intersect(L.nodes[g]);
            const int v = L.join_table[f][g];
            if (L.ranks[v] > L.ranks[g] + L.nodes[f].dim() - inter.dim())
                rep.violate("extraZ4", {L.nodes[f], L.nodes[g]},
                            "r(F∨G) = " + std::to_string(L.ranks[v]) + " > r(G) + dim(F/(F∩G))");
            if (!L.nodes[g].contains(L.nodes[f])) {
                const int dr = L.ranks[f] - L.ranks[g];
                const int bound = L.nodes[f].dim() - inter.dim();
                if (dr >= bound)
                    rep.violate("general-right", {L.nodes[f], L.nodes[g]},
                                "r(F)-r(G) = " + std::to_string(dr) +
                                    " >= dim(F)-dim(F∩G) = " + std::to_string(bound));
                if (dr <= 0)
                    rep.warnings.push_back("left inequality 0 < r(F)-r(G) fails for F = " +
                                           L.nodes[f].label() + ", G = " + L.nodes[g].label());
            }
        }
    return rep;
}

inline AxiomReport check_Z_axioms(FieldPtr f, int n, const std::vector<Subspace>& nodes,
                                  const std::vector<int>& ranks) {
    return check_Z_axioms(CyclicFlatLattice::from_nodes(std::move(f), n, nodes, ranks));
}

/// The convolution matroid of a rank-decorated lattice:
/// r_Z(A) = min over nodes F of r(F) + dim((A+F)/F). Validates the
/// (Z1)-(Z3) scheme first; the result is a genuine q-matroid whose
/// cyclic-flat lattice is the input.
inline QMatroid convolution_matroid(const CyclicFlatLattice& L) {
    AxiomReport rep = check_Z_axioms(L);
    if (!rep.passed)
        fail(errc::invalid_z_lattice,
             "lattice fails (" + rep.violations.front().axiom + "): " +
                 rep.violations.front().observed);
    std::vector<Subspace> nodes = L.nodes;
    std::vector<int> ranks = L.ranks;
    return QMatroid(
        L.field, L.n,
        [nodes, ranks](const Subspace& a) {
            int best = -1;
            for (size_t i = 0; i < nodes.size(); ++i) {
                const int v = ranks[i] + a.sum(nodes[i]).dim() - nodes[i].dim();
                if (best < 0 || v < best) best = v;
            }
            return best;
        },
        "convolution");
}

inline QMatroid convolution_matroid(FieldPtr f, int n, const std::vector<Subspace>& nodes,
                                    const std::vector<int>& ranks) {
    return convolution_matroid(CyclicFlatLattice::from_nodes(std::move(f), n, nodes, ranks));
}

/// Full statement of the cryptomorphism on one matroid: the convolution
/// of (Z(M), r|Z) reproduces r everywhere, and its cyclic-flat lattice is
/// Z(M) again, ranks included. Reports the first divergence.
struct RoundtripReport {
    bool ok = true;
    std::string detail;
};

inline RoundtripReport roundtrip_verify(const QMatroid& M,
                                        std::uint64_t guard = default_enumeration_guard) {
    RoundtripReport out;
    const CyclicFlatLattice L = cyclic_flats(M, guard);
    const QMatroid MZ = convolution_matroid(L);
    for (const Subspace& s : enumerate_all(M.field(), M.ambient_dim(), guard)) {
        const int a = M.rank(s);
        const int b = MZ.rank(s);
        if (a != b) {
            out.ok = false;
            out.detail = "rank diverges at " + s.label() + ": " + std::to_string(a) + " vs " +
                         std::to_string(b);
            return out;
        }
    }
    const CyclicFlatLattice LZ = cyclic_flats(MZ, guard);
    if (LZ.nodes.size() != L.nodes.size()) {
        out.ok = false;
        out.detail = "lattice sizes differ: " + std::to_string(L.nodes.size()) + " vs " +
                     std::to_string(LZ.nodes.size());
        return out;
    }
    for (int i = 0; i < L.size(); ++i) {
        if (!(L.nodes[i] == LZ.nodes[i]) || L.ranks[i] != LZ.ranks[i]) {
            out.ok = false;
            out.detail = "lattice node " + std::to_string(i) + " differs: " + L.nodes[i].label() +
                         " r=" + std::to_string(L.ranks[i]) + " vs " + LZ.nodes[i].label() +
                         " r=" + std::to_string(LZ.ranks[i]);
            return out;
        }
    }
    return out;
}

}  // namespace qmatroid
