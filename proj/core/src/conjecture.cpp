#include "tridyck/conjecture.hpp"

#include "tridyck/lattice.hpp"
#include "tridyck/reference.hpp"
#include "tridyck/simsym.hpp"

namespace tridyck {

ConjectureReport check_lattice_conjecture(const Partition& lam, std::uint64_t lift_budget) {
    ConjectureReport r;
    r.shape = lam;
    if (!is_triangular(lam)) throw Error(Errc::not_triangular, lam.str());
    const StandardTableau theta = top_down_tableau(lam);
    r.applicable = is_sim_sym(theta);
    if (!r.applicable) {
        r.status = Status::not_applicable;
        r.details = "top-down tableau is not sim-sym";
        return r;
    }

    const Lattice L(lam);
    r.nodes = L.size();
    r.intervals = L.interval_count();
    r.polynomial = interval_polynomial(L, theta);
    r.symmetric = is_qt_symmetric(r.polynomial);

    if (r.symmetric) {
        r.expansion_2var = decompose_schur_2var(r.polynomial);
        r.positive_2var = r.expansion_2var.is_positive();
    }

    bool homogenized_ok = false;
    try {
        const SchurExpansion h = decompose_schur_3var(homogenize(r.polynomial, lam.size()));
        homogenized_ok = h.is_positive();
        r.homogenized = h.compact();
    } catch (const Error& e) {
        r.homogenized = to_string(e.code());
    }

    if (r.positive_2var) r.lift = lift_r1(r.polynomial, lift_budget);
    const bool lifted = r.lift.status == LiftResult::Status::found;

    if (auto ref = reference_expansion(lam)) {
        r.reference = ref->expansion;
        r.reference_uncertain = ref->uncertain;
        r.reference_match = expand_r1(ref->expansion) == r.polynomial;
    }

    std::string why;
    if (!r.symmetric) why += "not symmetric; ";
    if (r.symmetric && !r.positive_2var) why += "2-variable expansion not positive; ";
    if (r.positive_2var && !lifted && !homogenized_ok)
        why += std::string("no positive 3-variable expansion (lift ") + to_string(r.lift.status) + "); ";
    const bool core_ok = why.empty();
    if (r.reference && !r.reference_match) why += "reference mismatch; ";

    if (!core_ok)
        r.status = Status::fail;
    else if (r.reference && !r.reference_match)
        r.status = r.reference_uncertain ? Status::reference_uncertain : Status::fail;
    else
        r.status = Status::pass;

    if (why.empty()) {
        r.details = lifted ? "lift " + r.lift.expansion.str() : "homogenized " + r.homogenized;
        if (r.reference) r.details += r.reference_uncertain ? "; matches uncertain reference" : "; matches reference";
    } else {
        r.details = why.substr(0, why.size() - 2);
    }
    return r;
}

nlohmann::json ConjectureReport::to_json() const {
    nlohmann::json j{{"shape", shape.parts()}, {"status", to_string(status)}, {"applicable", applicable}};
    if (!applicable) return j;
    j["nodes"] = nodes;
    j["intervals"] = intervals;
    j["polynomial"] = polynomial.str();
    j["symmetric"] = symmetric;
    j["positive_2var"] = positive_2var;
    if (symmetric) j["expansion_2var"] = expansion_2var.compact();
    j["homogenized"] = homogenized;
    j["lift"] = {{"status", to_string(lift.status)}, {"expansion", lift.expansion.compact()}, {"nodes", lift.nodes}};
    if (reference) {
        j["reference"] = reference->compact();
        j["reference_match"] = reference_match;
        j["reference_uncertain"] = reference_uncertain;
    }
    return j;
}

CaseResult ConjectureReport::to_case() const { return {"(" + shape.str() + ")", status, details}; }

}  // namespace tridyck
