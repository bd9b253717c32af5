#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qmatroid/axioms.hpp"
#include "qmatroid/cyclic_flats.hpp"
#include "qmatroid/polymatroid.hpp"
#include "qmatroid/rank_metric.hpp"

namespace qmatroid {

using nlohmann::json;

// ---- fields ----------------------------------------------------------

inline json field_to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["e"] = f.degree();
    j["modulus"] = json::array();
    for (auto c : f.modulus()) j["modulus"].push_back(static_cast<int>(c));
    return j;
}

inline FieldPtr field_from_json(const json& j) {
    try {
        const int p = j.at("p").get<int>();
        const int e = j.value("e", 1);
        std::vector<int> modulus;
        if (j.contains("modulus"))
            for (const auto& c : j.at("modulus")) modulus.push_back(c.get<int>());
        return Field::make(p, e, std::move(modulus));
    } catch (const json::exception& ex) {
        fail(errc::config_invalid, std::string("bad field spec: ") + ex.what());
    }
}

// ---- subspaces --------------------------------------------------------

inline json subspace_to_json(const Subspace& s) {
    json j;
    j["n"] = s.ambient();
    j["rows"] = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (int c = 0; c < s.ambient(); ++c) row.push_back(static_cast<int>(s.basis().at(i, c)));
        j["rows"].push_back(std::move(row));
    }
    return j;
}

/// Rows are canonicalized (RREF) on input; arbitrary generating sets are fine.
inline Subspace subspace_from_json(const json& j, const FieldPtr& f) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Subspace::Vector> rows;
        for (const auto& row : j.at("rows")) {
            Subspace::Vector v;
            for (const auto& c : row) {
                long long x = c.get<long long>();
                require(0 <= x && x < static_cast<long long>(f->order()), errc::config_invalid,
                        "subspace entry outside the field");
                v.push_back(static_cast<Field::value_type>(x));
            }
            rows.push_back(std::move(v));
        }
        return Subspace::span(f, n, rows);
    } catch (const json::exception& ex) {
        fail(errc::config_invalid, std::string("bad subspace: ") + ex.what());
    }
}

// ---- matrices over an extension field ---------------------------------
// Entries are coordinate vectors over F_p, low to high in the modulus
// root (a bare integer is accepted as a prime-field coordinate).

inline Field::value_type entry_from_json(const json& c, const FieldPtr& f) {
    if (c.is_number_integer()) {
        long long x = c.get<long long>();
        require(0 <= x && x < static_cast<long long>(f->order()), errc::config_invalid,
                "matrix entry outside the field");
        return static_cast<Field::value_type>(x);
    }
    std::vector<int> coords;
    for (const auto& d : c) coords.push_back(d.get<int>());
    return f->from_coords(coords);
}

inline Matrix matrix_from_json(const json& j, const FieldPtr& f) {
    try {
        const int rows = static_cast<int>(j.size());
        require(rows > 0, errc::config_invalid, "matrix needs at least one row");
        const int cols = static_cast<int>(j.at(0).size());
        Matrix m(f, rows, cols);
        for (int i = 0; i < rows; ++i) {
            require(static_cast<int>(j.at(i).size()) == cols, errc::config_invalid,
                    "ragged matrix rows");
            for (int c = 0; c < cols; ++c) m.at(i, c) = entry_from_json(j.at(i).at(c), f);
        }
        return m;
    } catch (const json::exception& ex) {
        fail(errc::config_invalid, std::string("bad matrix: ") + ex.what());
    }
}

inline json matrix_to_json(const Matrix& m) {
    json j = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            json coords = json::array();
            for (int d : m.field()->coords(m.at(i, c))) coords.push_back(d);
            row.push_back(std::move(coords));
        }
        j.push_back(std::move(row));
    }
    return j;
}

inline json word_to_json(const RankMetricCode::Word& w, const FieldPtr& f) {
    json row = json::array();
    for (auto v : w) {
        json coords = json::array();
        for (int d : f->coords(v)) coords.push_back(d);
        row.push_back(std::move(coords));
    }
    return row;
}

// ---- reports ----------------------------------------------------------

inline json family_to_json(const FamilyReport& rep) {
    json j;
    j["kind"] = family_kind_name(rep.kind);
    j["members"] = json::array();
    for (const Subspace& s : rep.members) j["members"].push_back(subspace_to_json(s));
    j["ranks"] = rep.ranks;
    return j;
}

inline json axiom_report_to_json(const AxiomReport& rep) {
    json j;
    j["scheme"] = rep.scheme;
    j["passed"] = rep.passed;
    j["violations"] = json::array();
    for (const auto& v : rep.violations) {
        json jv;
        jv["axiom"] = v.axiom;
        jv["witness"] = json::array();
        for (const Subspace& w : v.witness) jv["witness"].push_back(subspace_to_json(w));
        jv["observed"] = v.observed;
        j["violations"].push_back(std::move(jv));
    }
    j["warnings"] = rep.warnings;
    return j;
}

inline json lattice_to_json(const CyclicFlatLattice& L) {
    json j;
    j["nodes"] = json::array();
    for (int i = 0; i < L.size(); ++i) {
        json node;
        node["subspace"] = subspace_to_json(L.nodes[i]);
        node["rank"] = L.ranks[i];
        node["label"] = L.nodes[i].label();
        j["nodes"].push_back(std::move(node));
    }
    j["bottom"] = L.bottom;
    j["top"] = L.top;
    j["hasse_edges"] = json::array();
    auto edges = L.hasse;
    std::sort(edges.begin(), edges.end());
    for (const auto& [lo, hi] : edges) j["hasse_edges"].push_back(json::array({lo, hi}));
    j["meet"] = L.meet_table;
    j["join"] = L.join_table;
    return j;
}

inline json support_index_to_json(const SupportIndex& idx, const FieldPtr& ext) {
    json j;
    j["class_count"] = idx.class_count;
    j["entries"] = json::array();
    for (const auto& e : idx.entries) {
        json je;
        je["support"] = subspace_to_json(e.support);
        je["weight"] = e.support.dim();
        je["words"] = json::array();
        for (const auto& w : e.words) je["words"].push_back(word_to_json(w, ext));
        j["entries"].push_back(std::move(je));
    }
    return j;
}

// ---- job configuration -------------------------------------------------

enum class Construction { code, uniform, rank_table, z_lattice, matrix_code };

/// Parsed CLI configuration: one field setup, exactly one construction.
struct JobConfig {
    FieldPtr field;              // entry field of the construction
    FieldPtr base_field;         // ambient field (defaults to prime field of `field`)
    Construction construction = Construction::uniform;
    Matrix code_G;                                    // code
    int uniform_k = 0, uniform_n = 0;                 // uniform
    int ambient_n = 0;                                // rank_table / z_lattice
    std::vector<std::pair<Subspace, int>> table;      // rank_table / z_lattice nodes
    std::vector<Matrix> matrices;                     // matrix_code
    std::uint64_t guard = default_enumeration_guard;
};

inline JobConfig parse_job_config(const json& j) {
    JobConfig cfg;
    try {
        require(j.contains("field"), errc::config_invalid, "missing \"field\"");
        cfg.field = field_from_json(j.at("field"));
        if (j.contains("base_field"))
            cfg.base_field = field_from_json(j.at("base_field"));
        else
            cfg.base_field = cfg.field->degree() == 1 ? cfg.field : Field::make(cfg.field->p(), 1);
        if (j.contains("max_subspaces")) cfg.guard = j.at("max_subspaces").get<std::uint64_t>();
        require(j.contains("construction"), errc::config_invalid, "missing \"construction\"");
        const json& c = j.at("construction");
        const std::string type = c.at("type").get<std::string>();
        if (type == "code") {
            cfg.construction = Construction::code;
            cfg.code_G = matrix_from_json(c.at("G"), cfg.field);
        } else if (type == "uniform") {
            cfg.construction = Construction::uniform;
            cfg.uniform_k = c.at("k").get<int>();
            cfg.uniform_n = c.at("n").get<int>();
        } else if (type == "rank_table" || type == "z_lattice") {
            cfg.construction =
                type == "rank_table" ? Construction::rank_table : Construction::z_lattice;
            cfg.ambient_n = c.at("n").get<int>();
            const char* key = type == "rank_table" ? "table" : "nodes";
            for (const auto& entry : c.at(key)) {
                Subspace s = subspace_from_json(entry.at("subspace"), cfg.base_field);
                require(s.ambient() == cfg.ambient_n, errc::config_invalid,
                        "entry ambient disagrees with n");
                cfg.table.emplace_back(std::move(s), entry.at("rank").get<int>());
            }
        } else if (type == "matrix_code") {
            cfg.construction = Construction::matrix_code;
            for (const auto& m : c.at("matrices"))
                cfg.matrices.push_back(matrix_from_json(m, cfg.base_field));
        } else {
            fail(errc::config_invalid, "unknown construction type \"" + type + "\"");
        }
    } catch (const json::exception& ex) {
        fail(errc::config_invalid, std::string("bad config: ") + ex.what());
    }
    return cfg;
}

/// Builds the q-matroid a config describes (code, uniform, rank table, or
/// convolution of a Z-lattice).
inline QMatroid matroid_from_config(const JobConfig& cfg) {
    switch (cfg.construction) {
        case Construction::code:
            return QMatroid::from_code_matrix(cfg.code_G, cfg.base_field, "code");
        case Construction::uniform:
            return QMatroid::uniform(cfg.uniform_k, cfg.uniform_n, cfg.base_field);
        case Construction::rank_table:
            return QMatroid::from_rank_table(cfg.base_field, cfg.ambient_n, cfg.table, cfg.guard);
        case Construction::z_lattice: {
            std::vector<Subspace> nodes;
            std::vector<int> ranks;
            for (const auto& [s, r] : cfg.table) {
                nodes.push_back(s);
                ranks.push_back(r);
            }
            return convolution_matroid(cfg.base_field, cfg.ambient_n, nodes, ranks);
        }
        case Construction::matrix_code:
            fail(errc::config_invalid, "a matrix code defines a polymatroid, not a q-matroid");
    }
    fail(errc::config_invalid, "unhandled construction");
}

}  // namespace qmatroid
