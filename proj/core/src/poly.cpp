#include "tridyck/poly.hpp"

#include <algorithm>
#include <cctype>

namespace tridyck {

namespace {

constexpr const char* kVars[3] = {"q", "t", "r"};

void check_arity(int a) {
    if (a != 2 && a != 3) throw Error(Errc::arity_mismatch, "arity must be 2 or 3");
}

}  // namespace

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "coefficient addition");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "coefficient multiplication");
    return r;
}

MultiPoly::MultiPoly(int arity) : arity_(arity) { check_arity(arity); }

MultiPoly MultiPoly::monomial(int arity, Exponent e, Coeff c) {
    MultiPoly p(arity);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::constant(int arity, Coeff c) { return monomial(arity, {0, 0, 0}, c); }

Coeff MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponent& e, Coeff c) {
    for (int k = 0; k < 3; ++k) {
        if (e[k] < 0) throw Error(Errc::parameter_out_of_range, "negative exponent");
        if (k >= arity_ && e[k] != 0) throw Error(Errc::arity_mismatch, "exponent beyond arity");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return e[0] + e[1] + e[2];
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.arity_ != arity_) throw Error(Errc::arity_mismatch, "addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.arity_ != arity_) throw Error(Errc::arity_mismatch, "subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (o.arity_ != arity_) throw Error(Errc::arity_mismatch, "product");
    MultiPoly r(arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, checked_mul(c1, c2));
    return r;
}

MultiPoly MultiPoly::scaled(Coeff c) const {
    MultiPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, checked_mul(v, c));
    return r;
}

Coeff MultiPoly::sum_of_coefficients() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff mag = c < 0 ? -c : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (int k = 0; k < arity_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += kVars[k];
            if (e[k] > 1) mono += '^' + std::to_string(e[k]);
        }
        if (mono.empty())
            s += std::to_string(mag);
        else if (mag == 1)
            s += mono;
        else
            s += std::to_string(mag) + '*' + mono;
    }
    return s;
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json vars = nlohmann::json::array();
    for (int k = 0; k < arity_; ++k) vars.push_back(kVars[k]);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json exp = nlohmann::json::array();
        for (int k = 0; k < arity_; ++k) exp.push_back(e[k]);
        terms.push_back({{"exp", exp}, {"coef", c}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    const int arity = static_cast<int>(j.at("vars").size());
    MultiPoly p(arity);
    for (const auto& t : j.at("terms")) {
        Exponent e{0, 0, 0};
        const auto& exp = t.at("exp");
        if (static_cast<int>(exp.size()) != arity) throw Error(Errc::parse_error, "exponent length");
        for (int k = 0; k < arity; ++k) e[k] = exp[k].get<int>();
        p.add_term(e, t.at("coef").get<Coeff>());
    }
    return p;
}

MultiPoly MultiPoly::parse(const std::string& text, int arity) {
    MultiPoly p(arity);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&] {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw Error(Errc::parse_error, "expected a number in '" + text + "'");
        return std::stoll(text.substr(start, i - start));
    };
    skip();
    if (text.compare(i, std::string::npos, "0") == 0) return p;
    while (true) {
        skip();
        Coeff sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        }
        Coeff coef = 1;
        Exponent e{0, 0, 0};
        bool any = false;
        while (true) {
            skip();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coef = checked_mul(coef, number());
                any = true;
            } else {
                int var = -1;
                for (int k = 0; k < arity; ++k)
                    if (i < text.size() && text[i] == kVars[k][0]) var = k;
                if (var < 0) break;
                ++i;
                int pw = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    pw = static_cast<int>(number());
                }
                e[var] += pw;
                any = true;
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) throw Error(Errc::parse_error, "empty term in '" + text + "'");
        p.add_term(e, checked_mul(sign, coef));
        skip();
        if (i >= text.size()) break;
        if (text[i] != '+' && text[i] != '-') throw Error(Errc::parse_error, "unexpected '" + std::string(1, text[i]) + "'");
    }
    return p;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<std::optional<Coeff>>& values) {
    if (static_cast<int>(values.size()) != p.arity()) throw Error(Errc::arity_mismatch, "substitute");
    MultiPoly r(p.arity());
    for (const auto& [e, c] : p.terms()) {
        Exponent ne = e;
        Coeff v = c;
        for (int k = 0; k < p.arity(); ++k) {
            if (!values[k]) continue;
            for (int j = 0; j < e[k]; ++j) v = checked_mul(v, *values[k]);
            ne[k] = 0;
        }
        r.add_term(ne, v);
    }
    return r;
}

bool is_qt_symmetric(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        Exponent s = e;
        std::swap(s[0], s[1]);
        if (p.coefficient(s) != c) return false;
    }
    return true;
}

bool is_symmetric(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        Exponent s = e;
        std::sort(s.begin(), s.begin() + p.arity());
        do {
            if (p.coefficient(s) != c) return false;
        } while (std::next_permutation(s.begin(), s.begin() + p.arity()));
    }
    return true;
}

}  // namespace tridyck
