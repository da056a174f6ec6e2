#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tridyck {

enum class Status { pass, fail, not_applicable, reference_uncertain };

const char* to_string(Status s) noexcept;

struct CaseResult {
    std::string input;
    Status status = Status::pass;
    std::string details;

    nlohmann::json to_json() const;
};

inline bool ok(Status s) noexcept { return s != Status::fail; }

}  // namespace tridyck
