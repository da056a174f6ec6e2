#include "tridyck/report.hpp"

namespace tridyck {

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
        case Status::reference_uncertain: return "reference-uncertain";
    }
    return "?";
}

nlohmann::json CaseResult::to_json() const {
    return {{"input", input}, {"status", to_string(status)}, {"details", details}};
}

}  // namespace tridyck
