// qmat: construct q-matroids, list their families, build the cyclic-flat
// lattice, run axiom checks, reconstruct from a Z-lattice, and analyze
// rank-metric codes. One JSON config describes the object; subcommands
// pick the computation. Identical inputs produce byte-identical output.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qmatroid/json_io.hpp"
#include "qmatroid/repro.hpp"

using namespace qmatroid;

namespace {

json load_config(const std::string& path) {
    try {
        if (path.empty() || path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) fail(errc::config_invalid, "cannot open config file " + path);
        return json::parse(in);
    } catch (const json::exception& ex) {
        fail(errc::config_invalid, std::string("config is not valid JSON: ") + ex.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) fail(errc::config_invalid, "cannot open output file " + out_path);
        out << text;
    }
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case errc::enumeration_too_large:
            return 3;
        case errc::axiom_violation:
        case errc::invalid_z_lattice:
        case errc::not_a_lattice:
            return 1;
        default:
            return 2;
    }
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::uint64_t max_subspaces = 0;  // 0 = keep config/default

    void attach(CLI::App* cmd, bool with_config = true) {
        if (with_config)
            cmd->add_option("--config", config_path, "JSON config file ('-' or omit for stdin)");
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
        cmd->add_option("--max-subspaces", max_subspaces,
                        "override the exhaustive-enumeration guard");
    }

    JobConfig load() const {
        JobConfig cfg = parse_job_config(load_config(config_path));
        if (max_subspaces) cfg.guard = max_subspaces;
        return cfg;
    }
};

const std::vector<FamilyKind> all_kinds = {
    FamilyKind::independents, FamilyKind::circuits,      FamilyKind::flats,
    FamilyKind::open_spaces,  FamilyKind::cyclic_spaces, FamilyKind::loops};

FamilyKind kind_from_name(const std::string& name) {
    for (FamilyKind k : all_kinds)
        if (name == family_kind_name(k)) return k;
    fail(errc::config_invalid, "unknown family kind \"" + name + "\"");
}

int run_families(const CommonOpts& opts, const std::vector<std::string>& kind_names) {
    JobConfig cfg = opts.load();
    QMatroid M = matroid_from_config(cfg);
    std::vector<FamilyKind> kinds = all_kinds;
    if (!kind_names.empty()) {
        kinds.clear();
        for (const auto& n : kind_names) kinds.push_back(kind_from_name(n));
    }
    json out;
    out["families"] = json::array();
    for (FamilyKind k : kinds) out["families"].push_back(family_to_json(M.family(k, cfg.guard)));
    emit(out.dump(2) + "\n", opts.out_path);
    return 0;
}

int run_lattice(const CommonOpts& opts, bool dot) {
    JobConfig cfg = opts.load();
    CyclicFlatLattice L;
    if (cfg.construction == Construction::z_lattice) {
        std::vector<Subspace> nodes;
        std::vector<int> ranks;
        for (const auto& [s, r] : cfg.table) {
            nodes.push_back(s);
            ranks.push_back(r);
        }
        L = CyclicFlatLattice::from_nodes(cfg.base_field, cfg.ambient_n, nodes, ranks);
    } else {
        L = cyclic_flats(matroid_from_config(cfg), cfg.guard);
    }
    if (dot)
        emit(to_dot(poset_of(L), "cyclic_flats"), opts.out_path);
    else
        emit(lattice_to_json(L).dump(2) + "\n", opts.out_path);
    return 0;
}

int run_axioms(const CommonOpts& opts, const std::string& scheme) {
    JobConfig cfg = opts.load();
    AxiomReport rep;
    if (scheme == "Z") {
        if (cfg.construction == Construction::z_lattice) {
            std::vector<Subspace> nodes;
            std::vector<int> ranks;
            for (const auto& [s, r] : cfg.table) {
                nodes.push_back(s);
                ranks.push_back(r);
            }
            rep = check_Z_axioms(cfg.base_field, cfg.ambient_n, nodes, ranks);
        } else {
            rep = check_Z_axioms(cyclic_flats(matroid_from_config(cfg), cfg.guard));
        }
    } else if (scheme == "R") {
        rep = check_rank_axioms(matroid_from_config(cfg), cfg.guard);
    } else if (scheme == "I" || scheme == "O") {
        rep = check_family_axioms(matroid_from_config(cfg), scheme[0], cfg.guard);
    } else {
        fail(errc::config_invalid, "scheme must be one of R, I, O, Z");
    }
    emit(axiom_report_to_json(rep).dump(2) + "\n", opts.out_path);
    return rep.passed ? 0 : 1;
}

int run_reconstruct(const CommonOpts& opts) {
    JobConfig cfg = opts.load();
    require(cfg.construction == Construction::z_lattice, errc::config_invalid,
            "reconstruct needs a z_lattice construction");
    std::vector<Subspace> nodes;
    std::vector<int> ranks;
    for (const auto& [s, r] : cfg.table) {
        nodes.push_back(s);
        ranks.push_back(r);
    }
    CyclicFlatLattice L =
        CyclicFlatLattice::from_nodes(cfg.base_field, cfg.ambient_n, nodes, ranks);
    AxiomReport zrep = check_Z_axioms(L);
    json out;
    out["z_check"] = axiom_report_to_json(zrep);
    if (!zrep.passed) {
        emit(out.dump(2) + "\n", opts.out_path);
        return 1;
    }
    QMatroid MZ = convolution_matroid(L);
    out["rank_of_E"] = MZ.rank_of_ambient();
    out["flats"] = family_to_json(reconstruct_flats(L, cfg.guard));
    emit(out.dump(2) + "\n", opts.out_path);
    return 0;
}

int run_code(const CommonOpts& opts, bool minimal, bool supports, bool bridge) {
    JobConfig cfg = opts.load();
    require(cfg.construction == Construction::code, errc::config_invalid,
            "code analyses need a code construction");
    RankMetricCode C = RankMetricCode::make(cfg.code_G, cfg.base_field);
    const bool all = !minimal && !supports && !bridge;
    std::string text;
    json artifact;
    artifact["length"] = C.length();
    artifact["dimension"] = C.dimension();
    artifact["m"] = C.m();
    artifact["nondegenerate"] = C.nondegenerate();
    int rc = 0;
    if (all || supports) {
        const SupportIndex idx = distinct_supports(C);
        text += std::to_string(idx.entries.size()) + " distinct supports\n";
        artifact["supports"] = support_index_to_json(idx, C.ext_field());
    }
    if (all || minimal) {
        const SupportIndex idx = minimal_codewords(C);
        text += std::to_string(idx.class_count) + " minimal codewords\n";
        artifact["minimal"] = support_index_to_json(idx, C.ext_field());
    }
    if (all || bridge) {
        const BridgeReport rep = bridge_checks(C, cfg.guard);
        text += std::string("bridge checks: ") + (rep.all_ok() ? "pass" : "FAIL") + "\n";
        artifact["bridge"] = {{"dependent_ok", rep.dependent_ok},
                              {"cyclic_ok", rep.cyclic_ok},
                              {"circuits_match", rep.circuits_match},
                              {"decomposition_ok", rep.decomposition_ok},
                              {"detail", rep.detail}};
        if (!rep.all_ok()) rc = 1;
    }
    std::cout << text;
    if (!opts.out_path.empty()) emit(artifact.dump(2) + "\n", opts.out_path);
    return rc;
}

int run_repro(const CommonOpts& opts, const std::string& id) {
    repro::Result res = repro::run(id, opts.max_subspaces ? opts.max_subspaces
                                                          : default_enumeration_guard);
    std::cout << res.text();
    if (!opts.out_path.empty()) {
        json out;
        out["example"] = res.example;
        out["pass"] = res.pass();
        out["diff"] = res.diff();
        emit(out.dump(2) + "\n", opts.out_path);
    }
    return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-matroids, cyclic flats, and rank-metric codes"};
    app.require_subcommand(1);

    CommonOpts fam_opts, lat_opts, ax_opts, rec_opts, code_opts, repro_opts;
    std::vector<std::string> kind_names;
    bool dot = false;
    std::string scheme;
    bool minimal = false, supports = false, bridge = false;
    std::string repro_id;

    auto* fam = app.add_subcommand("families", "list independents/circuits/flats/opens/loops");
    fam_opts.attach(fam);
    fam->add_option("--kind", kind_names, "restrict to these kinds (repeatable)");

    auto* lat = app.add_subcommand("lattice", "cyclic-flat lattice (JSON, or DOT with --dot)");
    lat_opts.attach(lat);
    lat->add_flag("--dot", dot, "emit a DOT rendering of the Hasse diagram");

    auto* ax = app.add_subcommand("axioms", "run one axiom scheme exhaustively");
    ax_opts.attach(ax);
    ax->add_option("--scheme", scheme, "R, I, O, or Z")->required();

    auto* rec = app.add_subcommand("reconstruct", "convolution + flats from a Z-lattice");
    rec_opts.attach(rec);

    auto* code = app.add_subcommand("code", "support / minimal-codeword / bridge analyses");
    code_opts.attach(code);
    code->add_flag("--minimal", minimal, "minimal codewords only");
    code->add_flag("--supports", supports, "distinct supports only");
    code->add_flag("--bridge", bridge, "bridge checks only");

    auto* rep = app.add_subcommand("repro", "replay a bundled worked example");
    repro_opts.attach(rep, /*with_config=*/false);
    rep->add_option("example", repro_id, "first | 2x4 | rankfinal | 3x3")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fam->parsed()) return run_families(fam_opts, kind_names);
        if (lat->parsed()) return run_lattice(lat_opts, dot);
        if (ax->parsed()) return run_axioms(ax_opts, scheme);
        if (rec->parsed()) return run_reconstruct(rec_opts);
        if (code->parsed()) return run_code(code_opts, minimal, supports, bridge);
        if (rep->parsed()) return run_repro(repro_opts, repro_id);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
