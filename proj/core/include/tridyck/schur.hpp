#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tridyck/partition.hpp"
#include "tridyck/poly.hpp"

namespace tridyck {

class SchurExpansion {
public:
    using Map = std::map<Partition, Coeff>;

    SchurExpansion() = default;
    explicit SchurExpansion(Map coefficients);

    // "2,2,1 | 4,1,1 | 5,2*2" or "s(2,2,1) + s(4,1,1) + 2*s(5,2)"
    static SchurExpansion parse(const std::string& text);

    const Map& coefficients() const noexcept { return coeffs_; }
    Coeff coefficient(const Partition& nu) const;
    void add(const Partition& nu, Coeff c);
    bool empty() const noexcept { return coeffs_.empty(); }

    bool is_positive() const noexcept;
    // Terms with at most k parts.
    SchurExpansion truncated(int max_length) const;
    int max_length() const noexcept;

    // Sum of c * s_nu in the given number of variables.
    MultiPoly expand(int arity) const;

    // "s(2,1,1) + s(3,2) + 2*s(5,1)"; "0" when empty.
    std::string str() const;
    // "2,1,1 | 3,2 | 5,1*2"
    std::string compact() const;
    nlohmann::json to_json() const;

    bool operator==(const SchurExpansion& o) const noexcept { return coeffs_ == o.coeffs_; }

private:
    Map coeffs_;
};

struct SSYTableau {
    Partition shape;
    std::vector<std::vector<int>> entries;  // bottom row first

    // content[k] = number of entries equal to k+1
    std::vector<int> content(int max_entry) const;
};

std::vector<SSYTableau> enumerate_ssyt(const Partition& shape, int max_entry);

MultiPoly schur_polynomial(const Partition& shape, int arity);

// Multiplicity of s_{n-a,a} is c_a - c_{a-1} within each homogeneous degree n.
SchurExpansion decompose_schur_2var(const MultiPoly& p);

// (q,t,r) -> (q,t) by r = 1.
MultiPoly specialize_r1(const MultiPoly& p);
// Sum of c * s_nu(q,t,1); parts beyond the third make s_nu vanish.
MultiPoly expand_r1(const SchurExpansion& e);

MultiPoly homogenize(const MultiPoly& p, int degree);

// Leading-term elimination against 3-variable Schur polynomials.
SchurExpansion decompose_schur_3var(const MultiPoly& p);

// Search for a nonnegative integer combination of s_nu(q,t,1), length(nu) <= 3,
// equal to p. The answer is not unique in general; the search is deterministic.
struct LiftResult {
    enum class Status { found, infeasible, budget_exhausted };
    Status status = Status::infeasible;
    SchurExpansion expansion;
    std::uint64_t nodes = 0;
};

LiftResult lift_r1(const MultiPoly& p, std::uint64_t node_budget = 5'000'000);

const char* to_string(LiftResult::Status s) noexcept;

}  // namespace tridyck
