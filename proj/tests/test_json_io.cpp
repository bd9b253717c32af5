#include <catch2/catch_amalgamated.hpp>

#include "qmatroid/json_io.hpp"
#include "qmatroid/reference_examples.hpp"

using namespace qmatroid;
using namespace qmatroid::refdata;

TEST_CASE("field JSON") {
    auto f = field_from_json(json::parse(R"({"p": 2, "e": 3, "modulus": [1,1,0,1]})"));
    CHECK(f->order() == 8);
    CHECK(field_to_json(*f) == json::parse(R"({"p": 2, "e": 3, "modulus": [1,1,0,1]})"));
    CHECK(field_from_json(json::parse(R"({"p": 3})"))->order() == 3);
    CHECK_THROWS_MATCHES(field_from_json(json::parse(R"({"e": 2})")), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::config_invalid; }));
}

TEST_CASE("subspace JSON canonicalizes on input") {
    auto f = f2();
    const json j = json::parse(R"({"n": 5, "rows": [[0,1,0,0,1],[0,1,1,0,0]]})");
    const Subspace s = subspace_from_json(j, f);
    CHECK(s.dim() == 2);
    // output rows are RREF regardless of the input generators
    const json out = subspace_to_json(s);
    CHECK(out == json::parse(R"({"n": 5, "rows": [[0,1,0,0,1],[0,0,1,0,1]]})"));
    CHECK(subspace_from_json(out, f) == s);
    CHECK_THROWS_MATCHES(subspace_from_json(json::parse(R"({"n":2,"rows":[[5,0]]})"), f), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::config_invalid; }));
}

TEST_CASE("matrix JSON with coordinate-vector entries") {
    auto f8 = gf8();
    const json j = json::parse(R"([[[1],[0,1],[0,0,1]],[[0],[1,1],[1,0,1]]])");
    const Matrix m = matrix_from_json(j, f8);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    const auto a = f8->alpha();
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == a);
    CHECK(m.at(0, 2) == f8->mul(a, a));
    CHECK(m.at(1, 1) == f8->add(a, 1));
    // bare integers work for prime-field-valued entries
    CHECK(matrix_from_json(json::parse("[[1,0],[0,1]]"), f8).at(1, 1) == 1);
}

TEST_CASE("family report JSON") {
    QMatroid m = QMatroid::from_code_matrix(g_2x4(), f2());
    const json j = family_to_json(m.family(FamilyKind::flats));
    CHECK(j["kind"] == "flats");
    CHECK(j["members"].size() == 11);
    CHECK(j["ranks"].size() == 11);
    CHECK(j["ranks"][0] == 0);
}

TEST_CASE("axiom report JSON shape") {
    const AxiomReport rep =
        check_Z_axioms(f2(), 4, {Subspace::zero(f2(), 4), Subspace::full(f2(), 4)}, {0, 4});
    const json j = axiom_report_to_json(rep);
    CHECK(j["scheme"] == "Z");
    CHECK(j["passed"] == false);
    REQUIRE(!j["violations"].empty());
    CHECK(j["violations"][0]["axiom"] == "Z2");
    CHECK(j["violations"][0].contains("witness"));
    CHECK(j.contains("warnings"));
}

TEST_CASE("lattice JSON") {
    QMatroid m = QMatroid::from_code_matrix(g_2x4(), f2());
    const json j = lattice_to_json(cyclic_flats(m));
    CHECK(j["nodes"].size() == 2);
    CHECK(j["hasse_edges"].size() == 1);
    CHECK(j["meet"].size() == 2);
    CHECK(j["nodes"][0]["rank"] == 0);
}

TEST_CASE("job config parsing") {
    const json cfg_code = json::parse(R"({
        "field": {"p": 2, "e": 3, "modulus": [1,1,0,1]},
        "construction": {"type": "code", "G": [[[1],[0],[0],[0]],[[0],[1],[0,1],[0,0,1]]]}
    })");
    JobConfig cfg = parse_job_config(cfg_code);
    CHECK(cfg.construction == Construction::code);
    CHECK(cfg.base_field->order() == 2);
    QMatroid m = matroid_from_config(cfg);
    CHECK(m.rank_of_ambient() == 2);

    const json cfg_uniform = json::parse(R"({
        "field": {"p": 2, "e": 1},
        "construction": {"type": "uniform", "k": 2, "n": 4},
        "max_subspaces": 12345
    })");
    JobConfig u = parse_job_config(cfg_uniform);
    CHECK(u.guard == 12345);
    CHECK(matroid_from_config(u).rank_of_ambient() == 2);

    CHECK_THROWS_MATCHES(parse_job_config(json::parse(R"({"field": {"p": 2}})")), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::config_invalid; }));
    CHECK_THROWS_MATCHES(
        parse_job_config(json::parse(
            R"({"field": {"p":2}, "construction": {"type": "mystery"}})")),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return e.code() == errc::config_invalid; }));
}

TEST_CASE("z_lattice config builds the convolution matroid") {
    const json cfg_json = json::parse(R"({
        "field": {"p": 2, "e": 1},
        "construction": {"type": "z_lattice", "n": 4, "nodes": [
            {"subspace": {"n": 4, "rows": []}, "rank": 0},
            {"subspace": {"n": 4, "rows": [[0,1,0,0],[0,0,1,0],[0,0,0,1]]}, "rank": 1}
        ]}
    })");
    JobConfig cfg = parse_job_config(cfg_json);
    QMatroid mz = matroid_from_config(cfg);
    QMatroid m = QMatroid::from_code_matrix(g_2x4(), f2());
    for (const Subspace& s : enumerate_all(f2(), 4)) REQUIRE(mz.rank(s) == m.rank(s));
}
