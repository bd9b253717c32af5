#include <catch2/catch_amalgamated.hpp>

#include "qmatroid/polymatroid.hpp"
#include "qmatroid/reference_examples.hpp"

using namespace qmatroid;
using namespace qmatroid::refdata;

TEST_CASE("the 3x3 matrix-code polymatroid") {
    auto f = f3();
    QPolymatroid p = QPolymatroid::from_matrix_code(mats_3x3());
    CHECK(p.ambient_dim() == 3);
    CHECK(p.r_scale() == 3);
    CHECK(p.rank(p.ambient()) == 4);
    CHECK(p.rank(Subspace::zero(f, 3)) == 0);

    const auto cs = c_lines_3x3(f);
    for (const Subspace& c : cs) {
        CHECK(p.rank(c) == 2);
        CHECK(p.cyc(c).is_zero());
    }
    CHECK(p.cyc(Subspace::zero(f, 3)).is_zero());
}

TEST_CASE("gap scan finds exactly the four low-rank lines") {
    auto f = f3();
    QPolymatroid p = QPolymatroid::from_matrix_code(mats_3x3());
    const auto gaps = gap_scan(p);
    REQUIRE(gaps.size() == 4);
    const auto cs = c_lines_3x3(f);
    for (const auto& g : gaps) {
        CHECK(g.lhs == 2);
        CHECK(g.rhs == 3);
        CHECK(std::any_of(cs.begin(), cs.end(), [&](const Subspace& c) { return c == g.space; }));
    }
}

TEST_CASE("a single full-rank matrix gives rho(E) = 1") {
    auto f = f3();
    Matrix id3(f, 3, 3);
    id3.at(0, 0) = id3.at(1, 1) = id3.at(2, 2) = 1;
    QPolymatroid p = QPolymatroid::from_matrix_code({id3});
    CHECK(p.rank(p.ambient()) == 1);
}

TEST_CASE("dependent basis matrices are rejected") {
    auto f = f3();
    Matrix a(f, 2, 2), b(f, 2, 2);
    a.at(0, 0) = 1;
    b.at(0, 0) = 2;  // b = 2a
    CHECK_THROWS_MATCHES(QPolymatroid::from_matrix_code({a, b}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::dependent_basis; }));
}

TEST_CASE("a q-matroid wrapped as a (q,1)-polymatroid") {
    const auto base = f2();
    for (QMatroid m : {QMatroid::uniform(1, 2, base), QMatroid::uniform(1, 3, base),
                       QMatroid::from_code_matrix(g_2x4(), base)}) {
        QPolymatroid p = QPolymatroid::from_qmatroid(m);
        p.validate();
        for (const Subspace& a : enumerate_all(base, m.ambient_dim())) {
            REQUIRE(p.cyc(a) == m.cyc(a));
            REQUIRE(p.rank(a) == m.rank(a));
        }
        CHECK(gap_scan(p).empty());
    }
}

TEST_CASE("wrapped matroids with loops keep loops inside cyc") {
    const auto base = f2();
    QMatroid m = QMatroid::from_code_matrix(g_rankfinal(), base).dual();
    QPolymatroid p = QPolymatroid::from_qmatroid(m);
    for (const Subspace& a : enumerate_all(base, 5)) REQUIRE(p.cyc(a) == m.cyc(a));
    CHECK(gap_scan(p).empty());
}
