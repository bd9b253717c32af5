#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmatroid/qmatroid.hpp"

namespace qmatroid {

/// The lattice Z of cyclic flats: nodes with their ranks, extremes,
/// Hasse covers, and full meet/join tables.
///
/// Built either from a matroid (meet = cyc of intersection, join = cl of
/// sum) or from bare (subspace, rank) data, where meet/join are recovered
/// from containment: the meet is the greatest node inside F1 ∩ F2, the
/// join the least node containing F1 + F2. For a matroid's lattice the two
/// constructions agree.
class CyclicFlatLattice {
   public:
    FieldPtr field;
    int n = 0;
    std::vector<Subspace> nodes;  // sorted by (dim, encoding)
    std::vector<int> ranks;
    int bottom = -1;  // cl(0)
    int top = -1;     // cyc(E)
    std::vector<std::pair<int, int>> hasse;     // (lower, upper) cover pairs
    std::vector<std::vector<int>> meet_table;   // index pair -> node index
    std::vector<std::vector<int>> join_table;

    int size() const noexcept { return static_cast<int>(nodes.size()); }

    int index_of(const Subspace& s) const {
        for (int i = 0; i < size(); ++i)
            if (nodes[i] == s) return i;
        fail(errc::not_a_node, s.label() + " is not a node of the lattice");
    }

    const Subspace& meet(const Subspace& a, const Subspace& b) const {
        return nodes[meet_table[index_of(a)][index_of(b)]];
    }
    const Subspace& join(const Subspace& a, const Subspace& b) const {
        return nodes[join_table[index_of(a)][index_of(b)]];
    }

    /// Node discovery goes circuits -> sums of circuits (the open spaces)
    /// -> closures, then dedups; every cyclic flat arises this way and
    /// every closure of an open space is one.
    static CyclicFlatLattice from_matroid(const QMatroid& M,
                                          std::uint64_t guard = default_enumeration_guard) {
        CyclicFlatLattice L;
        L.field = M.field();
        L.n = M.ambient_dim();
        const auto circuits = M.family(FamilyKind::circuits, guard).members;
        // close {0} + circuits under pairwise sum
        std::set<std::string> seen;
        std::vector<Subspace> opens;
        auto push = [&](const Subspace& s) {
            if (seen.insert(s.encode()).second) {
                opens.push_back(s);
                return true;
            }
            return false;
        };
        push(M.zero_space());
        for (const Subspace& c : circuits) push(c);
        for (size_t i = 0; i < opens.size(); ++i)
            for (size_t j = 0; j < i; ++j) push(opens[i].sum(opens[j]));
        std::set<std::string> node_keys;
        for (const Subspace& o : opens) {
            Subspace f = M.closure(o);
            if (node_keys.insert(f.encode()).second) {
                require(M.is_flat(f) && M.is_cyclic(f), errc::invalid_z_lattice,
                        "closure of an open space failed the cyclic-flat predicates");
                L.nodes.push_back(std::move(f));
            }
        }
        std::sort(L.nodes.begin(), L.nodes.end());
        for (const Subspace& s : L.nodes) L.ranks.push_back(M.rank(s));
        L.bottom = L.index_of(M.closure(M.zero_space()));
        L.top = L.index_of(M.cyc(M.ambient()));
        const int N = L.size();
        L.meet_table.assign(N, std::vector<int>(N, -1));
        L.join_table.assign(N, std::vector<int>(N, -1));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j <= i; ++j) {
                int m = L.index_of(M.cyc(L.nodes[i].intersect(L.nodes[j])));
                int v = L.index_of(M.closure(L.nodes[i].sum(L.nodes[j])));
                L.meet_table[i][j] = L.meet_table[j][i] = m;
                L.join_table[i][j] = L.join_table[j][i] = v;
            }
        L.finish();
        return L;
    }

    /// Data-driven construction (no matroid): containment must already
    /// form a lattice, i.e. every pair needs a greatest node below the
    /// intersection and a least node above the sum.
    static CyclicFlatLattice from_nodes(FieldPtr f, int n, std::vector<Subspace> nodes,
                                        std::vector<int> ranks) {
        require(nodes.size() == ranks.size() && !nodes.empty(), errc::not_a_lattice,
                "need matching nonempty node and rank lists");
        CyclicFlatLattice L;
        L.field = std::move(f);
        L.n = n;
        std::vector<size_t> order(nodes.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return nodes[a] < nodes[b]; });
        for (size_t i : order) {
            require(nodes[i].ambient() == n && nodes[i].field()->same_as(*L.field),
                    errc::ambient_mismatch, "node outside the ambient space");
            L.nodes.push_back(nodes[i]);
            L.ranks.push_back(ranks[i]);
        }
        for (int i = 0; i + 1 < L.size(); ++i)
            require(!(L.nodes[i] == L.nodes[i + 1]), errc::not_a_lattice, "duplicate node");
        const int N = L.size();
        L.meet_table.assign(N, std::vector<int>(N, -1));
        L.join_table.assign(N, std::vector<int>(N, -1));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j <= i; ++j) {
                const Subspace inter = L.nodes[i].intersect(L.nodes[j]);
                const Subspace sum = L.nodes[i].sum(L.nodes[j]);
                int m = -1, v = -1;
                for (int k = 0; k < N; ++k) {
                    if (inter.contains(L.nodes[k]) && (m < 0 || L.nodes[k].contains(L.nodes[m])))
                        m = k;
                    if (L.nodes[k].contains(sum) && (v < 0 || L.nodes[v].contains(L.nodes[k])))
                        v = k;
                }
                require(m >= 0, errc::not_a_lattice,
                        "no node below " + L.nodes[i].label() + " ∩ " + L.nodes[j].label());
                require(v >= 0, errc::not_a_lattice,
                        "no node above " + L.nodes[i].label() + " + " + L.nodes[j].label());
                for (int k = 0; k < N; ++k) {
                    if (inter.contains(L.nodes[k]))
                        require(L.nodes[m].contains(L.nodes[k]), errc::not_a_lattice,
                                "meet of " + L.nodes[i].label() + ", " + L.nodes[j].label() +
                                    " is not unique");
                    if (L.nodes[k].contains(sum))
                        require(L.nodes[k].contains(L.nodes[v]), errc::not_a_lattice,
                                "join of " + L.nodes[i].label() + ", " + L.nodes[j].label() +
                                    " is not unique");
                }
                L.meet_table[i][j] = L.meet_table[j][i] = m;
                L.join_table[i][j] = L.join_table[j][i] = v;
            }
        int bot = 0, top = 0;
        for (int i = 0; i < N; ++i) {
            bot = L.meet_table[bot][i];
            top = L.join_table[top][i];
        }
        L.bottom = bot;
        L.top = top;
        L.finish();
        return L;
    }

    /// Join of all nodes contained in F (bottom when none) and meet of all
    /// nodes containing F (top when none): the reconstruction bounds
    /// F^v and F^^.
    std::pair<Subspace, Subspace> f_bounds(const Subspace& F) const {
        int vee = bottom, wedge = top;
        bool any_below = false, any_above = false;
        for (int i = 0; i < size(); ++i) {
            if (F.contains(nodes[i])) {
                vee = any_below ? join_table[vee][i] : i;
                any_below = true;
            }
            if (nodes[i].contains(F)) {
                wedge = any_above ? meet_table[wedge][i] : i;
                any_above = true;
            }
        }
        return {nodes[vee], nodes[wedge]};
    }

    int rank_of(const Subspace& node) const { return ranks[index_of(node)]; }

   private:
    void finish() {
        // lattice laws; a guard against bad input. The cubic associativity
        // sweep is skipped past 64 nodes.
        const int N = size();
        for (int i = 0; i < N; ++i) {
            require(meet_table[i][i] == i && join_table[i][i] == i, errc::not_a_lattice,
                    "meet/join not idempotent");
            require(nodes[bottom].dim() <= nodes[i].dim() && nodes[i].contains(nodes[bottom]),
                    errc::not_a_lattice, "bottom is not below every node");
            require(nodes[top].contains(nodes[i]), errc::not_a_lattice,
                    "top is not above every node");
            for (int j = 0; j < N; ++j) {
                require(join_table[i][meet_table[i][j]] == i &&
                            meet_table[i][join_table[i][j]] == i,
                        errc::not_a_lattice, "absorption fails");
                if (N > 64) continue;
                for (int k = 0; k < N; ++k) {
                    require(meet_table[meet_table[i][j]][k] == meet_table[i][meet_table[j][k]],
                            errc::not_a_lattice, "meet not associative");
                    require(join_table[join_table[i][j]][k] == join_table[i][join_table[j][k]],
                            errc::not_a_lattice, "join not associative");
                }
            }
        }
        // Hasse diagram: transitive reduction of containment
        std::vector<std::vector<bool>> lt(N, std::vector<bool>(N, false));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                lt[i][j] = i != j && nodes[j].contains(nodes[i]);
        hasse.clear();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (!lt[i][j]) continue;
                bool covered = true;
                for (int k = 0; k < N && covered; ++k)
                    if (lt[i][k] && lt[k][j]) covered = false;
                if (covered) hasse.emplace_back(i, j);
            }
    }
};

inline CyclicFlatLattice cyclic_flats(const QMatroid& M,
                                      std::uint64_t guard = default_enumeration_guard) {
    return CyclicFlatLattice::from_matroid(M, guard);
}

/// Plain double-predicate scan (flat and cyclic); cross-check for the
/// circuit-driven discovery above.
inline std::vector<Subspace> cyclic_flats_scan(const QMatroid& M,
                                               std::uint64_t guard = default_enumeration_guard) {
    std::vector<Subspace> out;
    for (const Subspace& s : enumerate_all(M.field(), M.ambient_dim(), guard))
        if (M.is_cyclic(s) && M.is_flat(s)) out.push_back(s);
    return out;
}

/// F^v / F^^ of the matroid's own lattice.
inline std::pair<Subspace, Subspace> f_bounds(const QMatroid& M, const Subspace& F,
                                              std::uint64_t guard = default_enumeration_guard) {
    return cyclic_flats(M, guard).f_bounds(F);
}

/// Rebuilds the flats (with ranks) of the q-matroid determined by a
/// cyclic-flat lattice, using only the lattice data: F is a flat iff
/// F^v <= F and dim(F ∩ A) - r(A) < n(F^v) for every node A with
/// F^v < A <= F^^; its rank is then r(F^v) + dim F - dim F^v.
inline FamilyReport reconstruct_flats(const CyclicFlatLattice& L,
                                      std::uint64_t guard = default_enumeration_guard) {
    FamilyReport rep;
    rep.kind = FamilyKind::flats;
    for (const Subspace& F : enumerate_all(L.field, L.n, guard)) {
        auto [vee, wedge] = L.f_bounds(F);
        if (!F.contains(vee)) continue;
        const int r_vee = L.rank_of(vee);
        const int null_vee = vee.dim() - r_vee;
        bool flat = true;
        for (int i = 0; i < L.size() && flat; ++i) {
            const Subspace& A = L.nodes[i];
            if (!(A.contains(vee) && !(A == vee) && wedge.contains(A))) continue;
            if (F.intersect(A).dim() - L.ranks[i] >= null_vee) flat = false;
        }
        if (!flat) continue;
        rep.members.push_back(F);
        rep.ranks.push_back(r_vee + F.dim() - vee.dim());
    }
    return rep;
}

/// Two-node detector for uniform q-matroids: {0} and E with r(E) = k.
inline std::optional<std::pair<int, int>> detect_uniform(const CyclicFlatLattice& L) {
    if (L.size() != 2) return std::nullopt;
    if (!(L.nodes[L.bottom].is_zero() && L.nodes[L.top] == Subspace::full(L.field, L.n)))
        return std::nullopt;
    const int k = L.ranks[L.top];
    if (L.ranks[L.bottom] != 0 || k <= 0 || k > L.n) return std::nullopt;
    return std::make_pair(k, L.n);
}

/// A finite set of subspaces with ranks and cover relations; the shape DOT
/// export works from. Nodes are kept sorted for reproducible output.
struct SubspacePoset {
    std::vector<Subspace> nodes;
    std::vector<int> ranks;
    std::vector<std::pair<int, int>> covers;  // (lower, upper)
};

inline SubspacePoset poset_of(const FamilyReport& rep) {
    SubspacePoset p;
    p.nodes = rep.members;
    p.ranks = rep.ranks;
    const int N = static_cast<int>(p.nodes.size());
    std::vector<std::vector<bool>> lt(N, std::vector<bool>(N, false));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) lt[i][j] = i != j && p.nodes[j].contains(p.nodes[i]);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (!lt[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < N && cover; ++k)
                if (lt[i][k] && lt[k][j]) cover = false;
            if (cover) p.covers.emplace_back(i, j);
        }
    return p;
}

inline SubspacePoset poset_of(const CyclicFlatLattice& L) {
    SubspacePoset p;
    p.nodes = L.nodes;
    p.ranks = L.ranks;
    p.covers = L.hasse;
    return p;
}

/// Deterministic DOT rendering: one node line per subspace labeled with
/// its generators and rank, one edge line per Hasse cover.
inline std::string to_dot(const SubspacePoset& p, const std::string& graph_name = "lattice") {
    std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + p.nodes[i].label() +
               "\\nr = " + std::to_string(p.ranks[i]) + "\"];\n";
    }
    auto covers = p.covers;
    std::sort(covers.begin(), covers.end());
    for (const auto& [lo, hi] : covers)
        out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace qmatroid
