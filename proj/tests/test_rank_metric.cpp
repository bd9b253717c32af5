#include <catch2/catch_amalgamated.hpp>

#include "qmatroid/rank_metric.hpp"
#include "qmatroid/reference_examples.hpp"

using namespace qmatroid;
using namespace qmatroid::refdata;

namespace {
const auto base = f2();
const auto f8 = gf8();
Subspace sp2(int n, const std::vector<std::vector<int>>& gens) { return sp(base, n, gens); }
}  // namespace

TEST_CASE("code construction") {
    RankMetricCode c = RankMetricCode::make(g_rankfinal(), base);
    CHECK(c.length() == 5);
    CHECK(c.dimension() == 3);
    CHECK(c.m() == 3);
    CHECK(c.nondegenerate());

    RankMetricCode c24 = RankMetricCode::make(g_2x4(), base);
    CHECK(c24.length() == 4);
    CHECK(c24.dimension() == 2);

    auto f4 = Field::make(2, 2);
    Matrix id2(f4, 2, 2);
    id2.at(0, 0) = id2.at(1, 1) = 1;
    RankMetricCode tiny = RankMetricCode::make(id2, base);
    CHECK(tiny.nondegenerate());

    Matrix bad(f8, 2, 5);
    for (int j = 0; j < 5; ++j) bad.at(0, j) = bad.at(1, j) = 1;
    CHECK_THROWS_MATCHES(RankMetricCode::make(bad, base), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_full_rank; }));
}

TEST_CASE("supports and rank weight") {
    RankMetricCode c = RankMetricCode::make(g_rankfinal(), base);
    const auto a = f8->alpha();
    RankMetricCode::Word v = {a, 1, 0, 0, 0};
    CHECK(c.support(v) == sp2(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));
    CHECK(c.rank_weight(v) == 2);
    CHECK(c.support(RankMetricCode::Word(5, 0)).is_zero());

    // scalar classes share a support
    for (const auto& w : c.projective_codewords()) {
        RankMetricCode::Word w2(w.size());
        for (size_t i = 0; i < w.size(); ++i) w2[i] = f8->mul(w[i], a);
        CHECK(c.support(w) == c.support(w2));
    }
}

TEST_CASE("dual code") {
    RankMetricCode c = RankMetricCode::make(g_rankfinal(), base);
    RankMetricCode cd = c.dual();
    CHECK(cd.length() == 5);
    CHECK(cd.dimension() == 2);
    // G_dual G^T = 0
    CHECK((cd.generator() * c.generator().transposed()).rank() == 0);
    // dual of dual is the same row space
    RankMetricCode cdd = cd.dual();
    CHECK(Subspace(Matrix(cdd.generator())).sum(Subspace(Matrix(c.generator()))).dim() == 3);

    CHECK(RankMetricCode::make(g_2x4(), base).dual().dimension() == 2);

    auto f4 = Field::make(2, 2);
    Matrix id2(f4, 2, 2);
    id2.at(0, 0) = id2.at(1, 1) = 1;
    CHECK(RankMetricCode::make(id2, base).dual().dimension() == 0);
}

TEST_CASE("code_of_space") {
    RankMetricCode c = RankMetricCode::make(g_2x4(), base);
    CHECK(c.code_of_space(sp2(4, {})).dim == 2);
    CHECK(c.code_of_space(Subspace::full(base, 4)).dim == 0);
    const auto s = c.code_of_space(sp2(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(s.dim == 1);
    // r(U) = k - dim C(U) agrees with the matrix formula on every subspace
    QMatroid m = c.matroid();
    for (const Subspace& u : enumerate_all(base, 4))
        REQUIRE(m.rank(u) == c.dimension() - c.code_of_space(u).dim);
    // returned basis rows are codewords orthogonal to every vector of U
    CHECK(s.basis.rank() == s.dim);
    const Subspace u = sp2(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    for (int i = 0; i < s.basis.rows(); ++i)
        for (int r = 0; r < u.dim(); ++r) {
            Field::value_type acc = 0;
            for (int j = 0; j < 4; ++j)
                if (u.basis().at(r, j)) acc = f8->add(acc, s.basis.at(i, j));
            CHECK(acc == 0);
        }
}

TEST_CASE("projective enumeration") {
    RankMetricCode c = RankMetricCode::make(g_rankfinal(), base);
    CHECK(c.projective_codewords().size() == 73);  // (8^3 - 1) / 7
    CHECK(c.dual().projective_codewords().size() == 9);
    CHECK_THROWS_MATCHES(c.projective_codewords(10), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::enumeration_too_large;
                         }));
}

TEST_CASE("minimal codewords of small codes") {
    // an [n,1] code has a single, minimal projective class
    Matrix g(f8, 1, 3);
    g.at(0, 0) = 1;
    g.at(0, 1) = f8->alpha();
    g.at(0, 2) = 0;
    RankMetricCode c = RankMetricCode::make(g, base);
    const SupportIndex idx = minimal_codewords(c);
    CHECK(idx.class_count == 1);
    CHECK(idx.entries.size() == 1);
}

TEST_CASE("fqm independence") {
    RankMetricCode c = RankMetricCode::make(g_2x4(), base);
    CHECK(fqm_independent(c, sp2(4, {})));
    CHECK_FALSE(fqm_independent(c, sp2(4, {{0, 1, 0, 0}, {0, 0, 1, 0}})));
    CHECK(fqm_independent(c, sp2(4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
    // matches matroid independence everywhere
    QMatroid m = c.matroid();
    for (const Subspace& w : enumerate_all(base, 4))
        REQUIRE(fqm_independent(c, w) == m.is_independent(w));
}

TEST_CASE("bridge checks on a [2,1] code over GF(4)") {
    auto f4 = Field::make(2, 2);
    Matrix g(f4, 1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = f4->alpha();  // omega
    RankMetricCode c = RankMetricCode::make(g, base);
    REQUIRE(c.nondegenerate());
    const BridgeReport rep = bridge_checks(c);
    CHECK(rep.dependent_ok);
    CHECK(rep.cyclic_ok);
    CHECK(rep.circuits_match);
    CHECK(rep.decomposition_ok);
}

TEST_CASE("degenerate codes are rejected where the theory needs more") {
    // both columns span only <e1+e2>-like directions over F_2: take equal columns
    Matrix g(f8, 1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = 1;
    RankMetricCode c = RankMetricCode::make(g, base);
    CHECK_FALSE(c.nondegenerate());
    CHECK_THROWS_MATCHES(fqm_independent(c, sp2(2, {{1, 0}})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::degenerate_code; }));
    CHECK_THROWS_MATCHES(bridge_checks(c), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::degenerate_code; }));
}

TEST_CASE("supports and the bridge over GF(9)/F_3") {
    auto f3 = Field::make(3, 1);
    auto f9 = Field::make(3, 2, {1, 0, 1});  // x^2 + 1
    const auto a = f9->alpha();
    Matrix g(f9, 1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = a;
    RankMetricCode c = RankMetricCode::make(g, f3);
    REQUIRE(c.nondegenerate());
    CHECK(c.rank_weight({1, a}) == 2);
    CHECK(c.rank_weight({1, 2}) == 1);
    CHECK(c.projective_codewords().size() == 1);
    const BridgeReport rep = bridge_checks(c);
    CHECK(rep.all_ok());
    // support invariance with a second basis of GF(9)/F_3
    const std::vector<Field::value_type> gamma2 = {f9->add(a, 1), a};
    for (const auto& w : c.projective_codewords())
        CHECK(c.support(w) == c.support(w, gamma2));
    QMatroid m = c.matroid();
    for (const Subspace& u : enumerate_all(f3, 2))
        REQUIRE(m.rank(u) == c.dimension() - c.code_of_space(u).dim);
}

TEST_CASE("support is basis-independent") {
    RankMetricCode c = RankMetricCode::make(g_2x4(), base);
    const auto a = f8->alpha();
    const std::vector<Field::value_type> gamma2 = {f8->pow(a, 3), a, f8->mul(a, a)};
    const std::vector<Field::value_type> gamma3 = {1, f8->add(a, 1), f8->mul(a, a)};
    for (const auto& w : c.projective_codewords()) {
        CHECK(c.support(w) == c.support(w, gamma2));
        CHECK(c.support(w) == c.support(w, gamma3));
    }
}
