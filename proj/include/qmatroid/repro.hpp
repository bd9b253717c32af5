#pragma once

// Regression driver replaying the bundled worked examples end to end and
// diffing every computed quantity against its pinned expected value.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qmatroid/axioms.hpp"
#include "qmatroid/json_io.hpp"
#include "qmatroid/polymatroid.hpp"
#include "qmatroid/rank_metric.hpp"
#include "qmatroid/reference_examples.hpp"

namespace qmatroid::repro {

struct Check {
    std::string name;
    bool ok;
    std::string expected;
    std::string observed;
};

struct Result {
    std::string example;
    std::vector<Check> checks;

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    }
    std::string text() const {
        std::ostringstream os;
        for (const Check& c : checks) {
            os << (c.ok ? "ok   " : "FAIL ") << example << "." << c.name;
            if (!c.ok) os << "  expected " << c.expected << ", observed " << c.observed;
            os << "\n";
        }
        os << (pass() ? "PASS " : "FAIL ") << example << " (" << checks.size() << " checks)\n";
        return os.str();
    }
    json diff() const {
        json out = json::array();
        for (const Check& c : checks)
            if (!c.ok)
                out.push_back({{"check", example + "." + c.name},
                               {"expected", c.expected},
                               {"observed", c.observed}});
        return out;
    }

    template <class T>
    void eq(const std::string& name, const T& expected, const T& observed) {
        std::ostringstream e, o;
        e << expected;
        o << observed;
        checks.push_back({name, expected == observed, e.str(), o.str()});
    }
    void yes(const std::string& name, bool observed) {
        checks.push_back({name, observed, "true", observed ? "true" : "false"});
    }
};

namespace detail {

inline std::vector<std::string> keys_of(const std::vector<Subspace>& v) {
    std::vector<std::string> k;
    k.reserve(v.size());
    for (const auto& s : v) k.push_back(s.encode());
    std::sort(k.begin(), k.end());
    return k;
}

inline bool same_set(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
    return keys_of(a) == keys_of(b);
}

}  // namespace detail

inline Result run_first(std::uint64_t guard = default_enumeration_guard) {
    using namespace refdata;
    Result res;
    res.example = "first";
    auto base = f2();
    QMatroid M = QMatroid::from_code_matrix(g_first(), base, "M[G]");
    res.eq("rank_of_E", 2, M.rank_of_ambient());
    const auto cyclic = M.family(FamilyKind::cyclic_spaces, guard);
    res.eq("cyclic_space_count", std::size_t{102}, cyclic.members.size());
    const Subspace U = sp(base, 5, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    const Subspace V = sp(base, 5, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}});
    const Subspace I = U.intersect(V);
    res.eq("U_cap_V", sp(base, 5, {{0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}}).label(), I.label());
    res.yes("U_cap_V_independent", M.is_independent(I));
    res.yes("U_cap_V_not_cyclic", !M.is_cyclic(I));
    res.yes("U_cyclic", M.is_cyclic(U));
    res.yes("V_cyclic", M.is_cyclic(V));
    return res;
}

inline Result run_2x4(std::uint64_t guard = default_enumeration_guard) {
    using namespace refdata;
    Result res;
    res.example = "2x4";
    auto base = f2();
    QMatroid M = QMatroid::from_code_matrix(g_2x4(), base, "M[G]");
    const Subspace E = M.ambient();
    const Subspace e234 = sp(base, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

    const CyclicFlatLattice L = cyclic_flats(M, guard);
    res.eq("cyclic_flat_count", 2, L.size());
    res.eq("bottom", M.zero_space().label(), L.nodes[L.bottom].label());
    res.eq("top", e234.label(), L.nodes[L.top].label());
    res.eq("bottom_rank", 0, L.ranks[L.bottom]);
    res.eq("top_rank", 1, L.ranks[L.top]);
    res.eq("hasse_edges", std::size_t{1}, L.hasse.size());
    res.eq("cyc_of_E", e234.label(), M.cyc(E).label());
    res.yes("dual_has_loop", !M.dual().family(FamilyKind::loops, guard).members.empty());

    // the eleven flats, with ranks 0 / 1 x 9 / 2
    std::vector<Subspace> expect_flats = {M.zero_space()};
    for (auto gens : std::vector<std::vector<int>>{
             {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 0},
             {1, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}})
        expect_flats.push_back(sp(base, 4, {gens}));
    expect_flats.push_back(e234);
    expect_flats.push_back(E);
    std::sort(expect_flats.begin(), expect_flats.end());
    const auto flats = M.family(FamilyKind::flats, guard);
    res.eq("flat_count", std::size_t{11}, flats.members.size());
    res.yes("flat_members", detail::same_set(expect_flats, flats.members));
    std::vector<int> expect_ranks = {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2};
    res.yes("flat_ranks", expect_ranks == flats.ranks);

    // reconstruction from (Z, ranks) alone
    const auto rebuilt = reconstruct_flats(L, guard);
    res.yes("reconstruct_members", detail::same_set(rebuilt.members, flats.members));
    res.yes("reconstruct_ranks", rebuilt.ranks == flats.ranks);

    const Subspace F = sp(base, 4, {{1, 0, 0, 0}});
    auto [fv, fw] = L.f_bounds(F);
    res.eq("e1_vee", M.zero_space().label(), fv.label());
    res.eq("e1_wedge", e234.label(), fw.label());
    const Subspace B = sp(base, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
    auto [bv, bw] = L.f_bounds(B);
    res.eq("e23_vee", M.zero_space().label(), bv.label());
    res.eq("e23_wedge", e234.label(), bw.label());
    res.yes("e1_is_flat", M.is_flat(F));
    res.yes("e23_not_flat", !M.is_flat(B));
    res.eq("rank_e234", 1, M.rank(e234));
    res.eq("rank_e1", 1, M.rank(F));

    QMatroid MZ = convolution_matroid(L);
    res.eq("convolution_rank_e1", 1, MZ.rank(F));

    RankMetricCode C = RankMetricCode::make(g_2x4(), base);
    res.eq("code_of_e234_dim", 1, C.code_of_space(e234).dim);
    res.yes("fqm_dep_e2_e3", !fqm_independent(C, B));
    res.yes("fqm_ind_e1_e2", fqm_independent(C, sp(base, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));

    const std::string dot = to_dot(poset_of(L));
    auto count_sub = [](const std::string& hay, const std::string& needle) {
        long n = 0;
        for (size_t pos = hay.find(needle); pos != std::string::npos;
             pos = hay.find(needle, pos + needle.size()))
            ++n;
        return n;
    };
    res.eq("dot_node_lines", 2L, count_sub(dot, "[label="));
    res.eq("dot_edge_lines", 1L, count_sub(dot, " -> "));
    return res;
}

inline Result run_rankfinal(std::uint64_t guard = default_enumeration_guard) {
    using namespace refdata;
    Result res;
    res.example = "rankfinal";
    auto base = f2();
    RankMetricCode C = RankMetricCode::make(g_rankfinal(), base);
    res.yes("nondegenerate", C.nondegenerate());
    QMatroid M = C.matroid("M_C");
    res.eq("rank_of_E", 3, M.rank_of_ambient());
    res.eq("nullity_of_E", 2, M.nullity(M.ambient()));

    const auto A = a_spaces(base);
    const auto cyclic = M.family(FamilyKind::cyclic_spaces, guard);
    res.eq("cyclic_space_count", std::size_t{11}, cyclic.members.size());
    res.yes("cyclic_spaces_are_A0_to_A10", detail::same_set(cyclic.members, A));
    res.eq("rank_A1", 1, M.rank(A[1]));
    res.eq("rank_A9", 2, M.rank(A[9]));
    res.eq("rank_A10", 2, M.rank(A[10]));
    res.eq("cyc_of_E_is_A10", A[10].label(), M.cyc(M.ambient()).label());

    const auto flats = M.family(FamilyKind::flats, guard);
    res.eq("flat_count", std::size_t{88}, flats.members.size());

    const CyclicFlatLattice L = cyclic_flats(M, guard);
    res.eq("cyclic_flat_count", 5, L.size());
    res.yes("cyclic_flats_are_A0_A1_A2_A3_A10",
            detail::same_set(L.nodes, {A[0], A[1], A[2], A[3], A[10]}));
    res.eq("meet_A1_A2", A[0].label(), L.meet(A[1], A[2]).label());
    res.eq("join_A1_A2", A[10].label(), L.join(A[1], A[2]).label());

    const auto circuits = M.family(FamilyKind::circuits, guard);
    res.yes("circuits_are_A1_to_A9",
            detail::same_set(circuits.members, {A.begin() + 1, A.begin() + 10}));

    const SubspacePoset cyc_poset = poset_of(cyclic);
    res.eq("cyclic_poset_nodes", std::size_t{11}, cyc_poset.nodes.size());
    res.eq("cyclic_poset_covers", std::size_t{18}, cyc_poset.covers.size());

    const RankMetricCode Cd = C.dual();
    res.eq("dual_dim", 2, Cd.dimension());
    const auto dsupp = distinct_supports(Cd);
    res.eq("dual_class_count", std::size_t{9}, dsupp.class_count);
    res.eq("dual_distinct_supports", std::size_t{9}, dsupp.entries.size());
    std::vector<Subspace> dsupports;
    for (const auto& e : dsupp.entries) dsupports.push_back(e.support);
    res.yes("dual_supports_equal_circuits", detail::same_set(dsupports, circuits.members));
    res.eq("dual_minimal_class_count", std::size_t{9}, minimal_codewords(Cd).class_count);

    // dual matroid
    QMatroid Md = Cd.matroid("M_Cperp");
    QMatroid Mstar = M.dual();
    bool dual_agrees = true;
    for (const Subspace& s : enumerate_all(base, 5, guard))
        if (Md.rank(s) != Mstar.rank(s)) dual_agrees = false;
    res.yes("dual_code_matroid_equals_dual_matroid", dual_agrees);
    res.eq("dual_rank_of_E", 2, Md.rank_of_ambient());
    const Subspace loop = sp(base, 5, {{1, 0, 1, 0, 1}});
    const auto dloops = Md.family(FamilyKind::loops, guard);
    res.eq("dual_loop_count", std::size_t{1}, dloops.members.size());
    res.eq("dual_loop", loop.label(), dloops.members.front().label());
    res.eq("dual_cl_of_zero", loop.label(), Md.closure(Md.zero_space()).label());

    const auto dcyclic = Md.family(FamilyKind::cyclic_spaces, guard);
    res.eq("dual_cyclic_space_count", std::size_t{88}, dcyclic.members.size());

    const auto F = f_spaces(base);
    const auto dflats = Md.family(FamilyKind::flats, guard);
    res.eq("dual_flat_count", std::size_t{11}, dflats.members.size());
    res.yes("dual_flats_are_F0_to_F10", detail::same_set(dflats.members, F));
    std::vector<int> expect_dflat_ranks = {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2};
    res.yes("dual_flat_ranks", expect_dflat_ranks == dflats.ranks);
    res.eq("A10_perp_is_F0", F[0].label(), A[10].ortho().label());
    res.eq("A1_perp_is_F7", F[7].label(), A[1].ortho().label());
    res.eq("A2_perp_is_F8", F[8].label(), A[2].ortho().label());
    res.eq("A3_perp_is_F9", F[9].label(), A[3].ortho().label());

    const CyclicFlatLattice Ld = cyclic_flats(Md, guard);
    std::vector<Subspace> perps;
    for (const Subspace& s : L.nodes) perps.push_back(s.ortho());
    res.yes("dual_lattice_is_perp_of_primal", detail::same_set(Ld.nodes, perps));

    const SubspacePoset dflat_poset = poset_of(dflats);
    res.eq("dual_flat_poset_nodes", std::size_t{11}, dflat_poset.nodes.size());
    res.eq("dual_flat_poset_covers", std::size_t{18}, dflat_poset.covers.size());
    res.eq("dual_flat_poset_bottom", F[0].label(), dflat_poset.nodes.front().label());

    // supports of C inside the dual matroid's cyclic spaces
    const auto csupp = distinct_supports(C);
    res.eq("primal_class_count", std::size_t{73}, csupp.class_count);
    res.eq("primal_distinct_supports", std::size_t{64}, csupp.entries.size());
    std::set<std::string> support_keys;
    support_keys.insert(Subspace::zero(base, 5).encode());  // the zero word's support
    for (const auto& e : csupp.entries) support_keys.insert(e.support.encode());
    int cyclic_supports = 0;
    for (const Subspace& s : dcyclic.members)
        if (support_keys.count(s.encode())) ++cyclic_supports;
    res.eq("dual_cyclic_spaces_that_are_supports", 65, cyclic_supports);

    res.eq("minimal_codewords_of_C", std::size_t{61}, minimal_codewords(C).class_count);

    // Z and its circuits
    const Subspace Z = z_space(base);
    res.yes("Z_cyclic_in_dual", Md.is_cyclic(Z));
    res.eq("Z_dual_rank", 2, Md.rank(Z));
    res.yes("Z_not_a_support", !support_keys.count(Z.encode()));
    const auto dcircuits = Md.family(FamilyKind::circuits, guard);
    std::vector<Subspace> inz;
    for (const Subspace& c : dcircuits.members)
        if (Z.contains(c)) inz.push_back(c);
    res.eq("circuits_inside_Z", std::size_t{9}, inz.size());
    Subspace zsum = Subspace::zero(base, 5);
    for (const Subspace& c : inz) zsum = zsum.sum(c);
    res.eq("sum_of_contained_circuits", Z.label(), zsum.label());
    Subspace named = Subspace::zero(base, 5);
    bool named_are_circuits = true;
    for (const Subspace& c : z_named_circuits(base)) {
        named = named.sum(c);
        if (!Md.is_circuit(c) || !Z.contains(c)) named_are_circuits = false;
    }
    res.yes("named_circuits_valid", named_are_circuits);
    res.eq("sum_of_named_circuits", Z.label(), named.label());

    const BridgeReport bridge = bridge_checks(C, guard);
    res.yes("bridge_dependent", bridge.dependent_ok);
    res.yes("bridge_cyclic", bridge.cyclic_ok);
    res.yes("bridge_circuits", bridge.circuits_match);
    res.yes("bridge_decomposition", bridge.decomposition_ok);

    // support basis-invariance across a second GF(8)/F_2 basis
    const auto gamma2 = std::vector<Field::value_type>{
        refdata::apow(gf8(), 3), gf8()->alpha(), refdata::apow(gf8(), 2)};
    bool gamma_invariant = true;
    for (const auto& w : C.projective_codewords())
        if (!(C.support(w) == C.support(w, gamma2))) gamma_invariant = false;
    res.yes("support_basis_invariance", gamma_invariant);

    return res;
}

inline Result run_3x3(std::uint64_t guard = default_enumeration_guard) {
    using namespace refdata;
    Result res;
    res.example = "3x3";
    auto f = f3();
    QPolymatroid P = QPolymatroid::from_matrix_code(mats_3x3(), guard);
    res.eq("r_scale", 3, P.r_scale());
    res.eq("rho_of_E", 4, P.rank(P.ambient()));
    const auto cs = c_lines_3x3(f);
    for (size_t i = 0; i < cs.size(); ++i) {
        res.eq("rho_c" + std::to_string(i + 1), 2, P.rank(cs[i]));
        res.eq("cyc_c" + std::to_string(i + 1), std::string("<0>"), P.cyc(cs[i]).label());
    }
    int rho2 = 0, rho3 = 0;
    for (const Subspace& x : one_dims_of(P.ambient())) {
        const int r = P.rank(x);
        if (r == 2) ++rho2;
        if (r == 3) ++rho3;
    }
    res.eq("lines_with_rho_2", 4, rho2);
    res.eq("lines_with_rho_3", 9, rho3);

    const auto gaps = gap_scan(P, guard);
    res.eq("gap_entries", std::size_t{4}, gaps.size());
    bool gap_values = gaps.size() == 4;
    std::vector<Subspace> gap_spaces;
    for (const auto& g : gaps) {
        gap_spaces.push_back(g.space);
        if (g.lhs != 2 || g.rhs != 3) gap_values = false;
    }
    res.yes("gap_lhs_2_rhs_3", gap_values);
    res.yes("gap_spaces_are_the_c_lines", detail::same_set(gap_spaces, cs));
    return res;
}

inline Result run(const std::string& id, std::uint64_t guard = default_enumeration_guard) {
    if (id == "first") return run_first(guard);
    if (id == "2x4") return run_2x4(guard);
    if (id == "rankfinal") return run_rankfinal(guard);
    if (id == "3x3") return run_3x3(guard);
    fail(errc::config_invalid, "unknown example \"" + id + "\" (first|2x4|rankfinal|3x3)");
}

}  // namespace qmatroid::repro
