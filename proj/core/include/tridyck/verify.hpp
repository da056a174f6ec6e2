#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tridyck/partition.hpp"
#include "tridyck/report.hpp"

namespace tridyck {

struct SuiteBounds {
    // 0 keeps the suite default. Means |lambda| or m depending on the suite.
    int max_size = 0;
    bool slow = false;
    // Restrict the conjecture-lattice suite to one shape.
    std::optional<Partition> shape;
    // 0 uses the hardware concurrency.
    unsigned threads = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double wall_seconds = 0;

    int count(Status s) const;
    bool passed() const;
    // Wall time is left out unless asked for, so reports compare byte for byte.
    nlohmann::json to_json(bool with_timing = false) const;
    std::string table() const;
};

const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& name, const SuiteBounds& bounds = {});

}  // namespace tridyck
