#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "tridyck/partition.hpp"
#include "tridyck/poly.hpp"
#include "tridyck/report.hpp"
#include "tridyck/schur.hpp"

namespace tridyck {

struct ConjectureReport {
    Partition shape;
    Status status = Status::not_applicable;
    bool applicable = false;  // top-down tableau is sim-sym
    MultiPoly polynomial{2};
    std::size_t nodes = 0;
    std::size_t intervals = 0;
    bool symmetric = false;
    bool positive_2var = false;
    SchurExpansion expansion_2var;
    // Outcome of decompose_schur_3var(homogenize(P, |lambda|)).
    std::string homogenized;
    LiftResult lift;
    std::optional<SchurExpansion> reference;
    bool reference_match = false;
    bool reference_uncertain = false;
    std::string details;

    nlohmann::json to_json() const;
    CaseResult to_case() const;
};

ConjectureReport check_lattice_conjecture(const Partition& lam, std::uint64_t lift_budget = 5'000'000);

}  // namespace tridyck
