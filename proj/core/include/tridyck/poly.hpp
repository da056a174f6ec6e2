#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tridyck/error.hpp"

namespace tridyck {

using Coeff = std::int64_t;
using Exponent = std::array<int, 3>;  // unused trailing slots stay 0

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// Total degree descending, then lexicographically descending.
struct CanonicalOrder {
    bool operator()(const Exponent& a, const Exponent& b) const noexcept {
        const int da = a[0] + a[1] + a[2];
        const int db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse polynomial in (q,t) or (q,t,r) with int64 coefficients; overflow throws.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Coeff, CanonicalOrder>;

    explicit MultiPoly(int arity = 2);

    static MultiPoly monomial(int arity, Exponent e, Coeff c = 1);
    static MultiPoly constant(int arity, Coeff c);

    int arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Coeff coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, Coeff c);

    int total_degree() const;  // -1 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(Coeff c) const;

    // Value with every variable set to 1.
    Coeff sum_of_coefficients() const;

    // "q^4*t + q^3*t^2"; "0" for the zero polynomial.
    std::string str() const;
    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);
    // Inverse of str().
    static MultiPoly parse(const std::string& text, int arity);

    bool operator==(const MultiPoly& o) const noexcept { return arity_ == o.arity_ && terms_ == o.terms_; }

private:
    int arity_;
    Terms terms_;
};

// Partial evaluation: values[k] replaces variable k, nullopt keeps it.
MultiPoly substitute(const MultiPoly& p, const std::vector<std::optional<Coeff>>& values);

bool is_qt_symmetric(const MultiPoly& p);
// Invariant under all permutations of the variables.
bool is_symmetric(const MultiPoly& p);

}  // namespace tridyck
