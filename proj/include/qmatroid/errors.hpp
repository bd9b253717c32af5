#pragma once

#include <stdexcept>
#include <string>

namespace qmatroid {

enum class errc {
    non_prime,
    reducible_modulus,
    degree_mismatch,
    field_mismatch,
    division_by_zero,
    dependent_basis,
    ambient_mismatch,
    enumeration_too_large,
    invalid_range,
    not_full_rank,
    field_tower_mismatch,
    incomplete_table,
    axiom_violation,
    not_a_node,
    invalid_z_lattice,
    not_a_lattice,
    degenerate_code,
    config_invalid,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::dependent_basis: return "DependentBasis";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::invalid_range: return "InvalidRange";
        case errc::not_full_rank: return "NotFullRank";
        case errc::field_tower_mismatch: return "FieldTowerMismatch";
        case errc::incomplete_table: return "IncompleteTable";
        case errc::axiom_violation: return "AxiomViolation";
        case errc::not_a_node: return "NotANode";
        case errc::invalid_z_lattice: return "InvalidZLattice";
        case errc::not_a_lattice: return "NotALattice";
        case errc::degenerate_code: return "DegenerateCode";
        case errc::config_invalid: return "ConfigInvalid";
    }
    return "Unknown";
}

/// Library-wide exception; carries a machine-checkable error code.
class Error : public std::runtime_error {
   public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace qmatroid
