#include <catch2/catch_amalgamated.hpp>

#include "qmatroid/field.hpp"
#include "qmatroid/matrix.hpp"

using namespace qmatroid;

TEST_CASE("GF(8) with alpha^3 = alpha + 1") {
    auto f = Field::make(2, 3, {1, 1, 0, 1});
    REQUIRE(f->order() == 8);
    const auto a = f->alpha();
    // alpha * alpha^2 = alpha^3 = alpha + 1
    CHECK(f->mul(a, f->mul(a, a)) == f->add(a, 1));
    CHECK(f->pow(a, 4) == f->add(f->mul(a, a), a));      // alpha^2 + alpha
    CHECK(f->pow(a, 5) == (f->add(f->add(f->mul(a, a), a), 1)));
    CHECK(f->pow(a, 7) == 1);
    CHECK(f->inv(1) == 1);
    for (Field::value_type x = 1; x < 8; ++x) CHECK(f->mul(x, f->inv(x)) == 1);
}

TEST_CASE("default moduli and validation errors") {
    CHECK(Field::make(2, 2)->order() == 4);
    CHECK(Field::make(2, 3)->order() == 8);
    CHECK(Field::make(3, 3)->order() == 27);
    CHECK(Field::make(3, 1)->order() == 3);

    CHECK_THROWS_MATCHES(Field::make(4, 1), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::non_prime;
                         }));
    // x^3 + 1 = (x+1)(x^2+x+1) over F_2
    CHECK_THROWS_MATCHES(Field::make(2, 3, {1, 0, 0, 1}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::reducible_modulus; }));
    CHECK_THROWS_MATCHES(Field::make(2, 3, {1, 1}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::degree_mismatch; }));
    CHECK_THROWS_MATCHES(Field::make(3, 2), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::degree_mismatch; }));

    // a second valid presentation of GF(8)
    auto g = Field::make(2, 3, {1, 0, 1, 1});  // x^3 + x^2 + 1
    CHECK(g->order() == 8);
    CHECK_FALSE(g->same_as(*Field::make(2, 3)));
}

TEST_CASE("field laws hold exhaustively", "[slow]") {
    for (auto f : {Field::make(2, 2), Field::make(2, 3), Field::make(3, 1, {}),
                   Field::make(3, 2, {1, 0, 1}), Field::make(5, 1), Field::make(2, 6, {1, 1, 0, 0, 0, 0, 1})}) {
        const int q = static_cast<int>(f->order());
        for (int x = 0; x < q; ++x) {
            for (int y = 0; y < q; ++y) {
                auto a = static_cast<Field::value_type>(x);
                auto b = static_cast<Field::value_type>(y);
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (int z = 0; z < q; ++z) {
                    auto c = static_cast<Field::value_type>(z);
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("FieldElement operators") {
    auto f = Field::make(2, 3);
    FieldElement a(f, f->alpha());
    FieldElement one(f, 1);
    CHECK(a * a * a == a + one);
    CHECK(a / a == one);
    CHECK(a.pow(7) == one);
    CHECK(a.pow(-1) == a.inv());
    CHECK((-a) + a == FieldElement(f, 0));
    CHECK_THROWS_MATCHES(FieldElement(f, 0).inv(), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::division_by_zero; }));
    auto g = Field::make(2, 2);
    CHECK_THROWS_MATCHES(a + FieldElement(g, 1), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::field_mismatch; }));
}

TEST_CASE("coordinate expansion over the prime field") {
    auto ext = Field::make(2, 3);
    auto base = Field::make(2, 1);
    const auto a = ext->alpha();
    std::vector<Field::value_type> gamma = {1, a, ext->mul(a, a)};

    std::vector<Field::value_type> v = {a, 1, 0, 0, 0};
    Matrix m = expand_over_base(ext, base, v, gamma);
    REQUIRE(m.rows() == 5);
    REQUIRE(m.cols() == 3);
    std::vector<Field::value_type> expect = {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK(m.data() == expect);

    std::vector<Field::value_type> zero = {0, 0, 0};
    CHECK(expand_over_base(ext, base, zero, gamma).data() ==
          std::vector<Field::value_type>(9, 0));

    const auto a2 = ext->mul(a, a);
    std::vector<Field::value_type> w = {a2, a2};
    Matrix mw = expand_over_base(ext, base, w, gamma);
    CHECK(mw.data() == std::vector<Field::value_type>{0, 0, 1, 0, 0, 1});

    // recombination is the identity, also for a non-power basis
    std::vector<Field::value_type> gamma2 = {ext->pow(a, 3), a, a2};
    for (Field::value_type x = 0; x < 8; ++x) {
        std::vector<Field::value_type> vec = {x, ext->add(x, 1)};
        for (const auto& basis : {gamma, gamma2})
            CHECK(recombine_over_base(ext, expand_over_base(ext, base, vec, basis), basis) == vec);
    }

    // dependent basis rejected: {1, a, a^2 ... with a^4 = a^2 + a}
    std::vector<Field::value_type> bad = {a, a2, ext->pow(a, 4)};
    CHECK_THROWS_MATCHES(expand_over_base(ext, base, v, bad), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::dependent_basis; }));
    CHECK_THROWS_MATCHES(expand_over_base(ext, Field::make(3, 1), v, gamma), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::field_tower_mismatch;
                         }));
}
