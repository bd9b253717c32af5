#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qmatroid/cyclic_flats.hpp"
#include "qmatroid/reference_examples.hpp"

using namespace qmatroid;
using namespace qmatroid::refdata;

namespace {
const auto base = f2();
Subspace sp2(int n, const std::vector<std::vector<int>>& gens) { return sp(base, n, gens); }
}  // namespace

TEST_CASE("lattice of the 2x4 example") {
    QMatroid m = QMatroid::from_code_matrix(g_2x4(), base);
    const CyclicFlatLattice L = cyclic_flats(m);
    REQUIRE(L.size() == 2);
    CHECK(L.nodes[L.bottom] == m.zero_space());
    CHECK(L.nodes[L.top] == sp2(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(L.ranks[L.bottom] == 0);
    CHECK(L.ranks[L.top] == 1);
    REQUIRE(L.hasse.size() == 1);
    CHECK(L.hasse.front() == std::make_pair(L.bottom, L.top));
}

TEST_CASE("circuit-driven discovery equals the double-predicate scan") {
    for (QMatroid m : {QMatroid::from_code_matrix(g_2x4(), base),
                       QMatroid::from_code_matrix(g_rankfinal(), base),
                       QMatroid::uniform(2, 4, base)}) {
        const CyclicFlatLattice L = cyclic_flats(m);
        const auto scan = cyclic_flats_scan(m);
        REQUIRE(L.nodes.size() == scan.size());
        for (size_t i = 0; i < scan.size(); ++i) CHECK(L.nodes[i] == scan[i]);
    }
}

TEST_CASE("discovery equals the scan on random code matroids", "[slow]") {
    std::mt19937 rng(424243);
    for (int trial = 0; trial < 12; ++trial) {
        const int q = (trial % 2) ? 3 : 2;
        auto bf = Field::make(q, 1);
        auto ext = q == 2 ? Field::make(2, 2 + trial % 2)
                          : Field::make(3, 2, {1, 0, 1});
        const int n = 4;
        const int k = 2 + trial % 2;
        Matrix G(ext, k, n);
        do {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j)
                    G.at(i, j) = static_cast<Field::value_type>(rng() % ext->order());
        } while (G.rank() != k);
        QMatroid m = QMatroid::from_code_matrix(G, bf);
        const CyclicFlatLattice L = cyclic_flats(m);
        const auto scan = cyclic_flats_scan(m);
        REQUIRE(L.nodes.size() == scan.size());
        for (size_t i = 0; i < scan.size(); ++i) REQUIRE(L.nodes[i] == scan[i]);
        for (int i = 0; i < L.size(); ++i) REQUIRE(L.ranks[i] == m.rank(L.nodes[i]));
    }
}

TEST_CASE("meet and join on the [5,3] example") {
    QMatroid m = QMatroid::from_code_matrix(g_rankfinal(), base);
    const CyclicFlatLattice L = cyclic_flats(m);
    const auto A = a_spaces(base);
    REQUIRE(L.size() == 5);
    CHECK(L.meet(A[1], A[2]) == A[0]);
    CHECK(L.join(A[1], A[2]) == A[10]);
    CHECK(L.join(A[3], A[3]) == A[3]);
    CHECK_THROWS_MATCHES(L.index_of(A[4]), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_a_node; }));

    // displayed rank identities for meet and join
    for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j) {
            const Subspace sum = L.nodes[i].sum(L.nodes[j]);
            const Subspace inter = L.nodes[i].intersect(L.nodes[j]);
            CHECK(L.ranks[L.join_table[i][j]] == m.rank(sum));
            CHECK(L.ranks[L.meet_table[i][j]] ==
                  m.rank(inter) - (inter.dim() - L.nodes[L.meet_table[i][j]].dim()));
        }
}

TEST_CASE("matroid-derived and data-driven lattices agree") {
    QMatroid m = QMatroid::from_code_matrix(g_rankfinal(), base);
    const CyclicFlatLattice L = cyclic_flats(m);
    const CyclicFlatLattice D = CyclicFlatLattice::from_nodes(base, 5, L.nodes, L.ranks);
    CHECK(D.bottom == L.bottom);
    CHECK(D.top == L.top);
    CHECK(D.meet_table == L.meet_table);
    CHECK(D.join_table == L.join_table);
    CHECK(D.hasse == L.hasse);
}

TEST_CASE("from_nodes rejects non-lattices") {
    // two incomparable lines with no common upper node
    std::vector<Subspace> nodes = {sp2(3, {}), sp2(3, {{1, 0, 0}}), sp2(3, {{0, 1, 0}})};
    std::vector<int> ranks = {0, 1, 1};
    CHECK_THROWS_MATCHES(CyclicFlatLattice::from_nodes(base, 3, nodes, ranks), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_a_lattice; }));
}

TEST_CASE("f_bounds on the 2x4 example") {
    QMatroid m = QMatroid::from_code_matrix(g_2x4(), base);
    const CyclicFlatLattice L = cyclic_flats(m);
    const Subspace e234 = sp2(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

    auto [fv, fw] = L.f_bounds(sp2(4, {{1, 0, 0, 0}}));
    CHECK(fv == m.zero_space());
    CHECK(fw == e234);

    auto [bv, bw] = L.f_bounds(sp2(4, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK(bv == m.zero_space());
    CHECK(bw == e234);

    // a cyclic flat bounds itself
    auto [zv, zw] = L.f_bounds(e234);
    CHECK(zv == e234);
    CHECK(zw == e234);

    // f_bounds of any flat has F_vee = cyc(F)
    for (const Subspace& f : m.family(FamilyKind::flats).members) {
        auto [v, w] = L.f_bounds(f);
        CHECK(v == m.cyc(f));
    }
}

TEST_CASE("reconstruction matches the directly computed flats") {
    for (QMatroid m : {QMatroid::from_code_matrix(g_2x4(), base),
                       QMatroid::uniform(2, 4, base),
                       QMatroid::from_code_matrix(g_rankfinal(), base).dual()}) {
        const CyclicFlatLattice L = cyclic_flats(m);
        const auto direct = m.family(FamilyKind::flats);
        const auto rebuilt = reconstruct_flats(L);
        REQUIRE(rebuilt.members.size() == direct.members.size());
        for (size_t i = 0; i < rebuilt.members.size(); ++i) {
            CHECK(rebuilt.members[i] == direct.members[i]);
            CHECK(rebuilt.ranks[i] == direct.ranks[i]);
        }
    }
}

TEST_CASE("closure and cyc land inside the node set") {
    QMatroid m = QMatroid::from_code_matrix(g_rankfinal(), base);
    const CyclicFlatLattice L = cyclic_flats(m);
    for (const Subspace& s : enumerate_all(base, 5)) {
        if (m.is_cyclic(s)) CHECK_NOTHROW(L.index_of(m.closure(s)));
        if (m.is_flat(s)) CHECK_NOTHROW(L.index_of(m.cyc(s)));
    }
}

TEST_CASE("uniform detection") {
    CHECK(detect_uniform(cyclic_flats(QMatroid::uniform(2, 4, base))) ==
          std::make_pair(2, 4));
    CHECK_FALSE(detect_uniform(cyclic_flats(QMatroid::from_code_matrix(g_2x4(), base))));
    CHECK_FALSE(detect_uniform(cyclic_flats(QMatroid::from_code_matrix(g_rankfinal(), base))));
    // free and zero uniform matroids have one-node lattices
    CHECK_FALSE(detect_uniform(cyclic_flats(QMatroid::uniform(4, 4, base))));
    CHECK_FALSE(detect_uniform(cyclic_flats(QMatroid::uniform(0, 3, base))));
}

TEST_CASE("DOT export") {
    QMatroid m = QMatroid::from_code_matrix(g_2x4(), base);
    const std::string dot = to_dot(poset_of(cyclic_flats(m)));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("<0>") != std::string::npos);
    CHECK(dot.find("<e2, e3, e4>") != std::string::npos);
    CHECK(dot.find("r = 1") != std::string::npos);
    CHECK(dot == to_dot(poset_of(cyclic_flats(QMatroid::from_code_matrix(g_2x4(), base)))));

    const auto cyc = QMatroid::from_code_matrix(g_rankfinal(), base)
                         .family(FamilyKind::cyclic_spaces);
    const SubspacePoset p = poset_of(cyc);
    CHECK(p.nodes.size() == 11);
    CHECK(p.covers.size() == 18);  // nine over the bottom, nine under the top
}
