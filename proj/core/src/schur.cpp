#include "tridyck/schur.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace tridyck {

SchurExpansion::SchurExpansion(Map coefficients) {
    for (auto& [nu, c] : coefficients) add(nu, c);
}

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

SchurExpansion SchurExpansion::parse(const std::string& text) {
    SchurExpansion out;
    const bool pretty = text.find("s(") != std::string::npos;
    std::string rest = text;
    if (pretty) {
        // split on '+' outside parentheses
        std::vector<std::string> terms;
        int depth = 0;
        std::string cur;
        for (char ch : rest) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == '+' && depth == 0) {
                terms.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        terms.push_back(cur);
        for (auto t : terms) {
            t = trim(t);
            if (t.empty() || t == "0") continue;
            Coeff c = 1;
            auto star = t.find("*s(");
            if (star != std::string::npos) {
                c = std::stoll(t.substr(0, star));
                t = t.substr(star + 1);
            }
            if (t.rfind("s(", 0) != 0 || t.back() != ')') throw Error(Errc::parse_error, "bad Schur term '" + t + "'");
            out.add(Partition::parse(t.substr(2, t.size() - 3)), c);
        }
        return out;
    }
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, '|')) {
        item = trim(item);
        if (item.empty()) continue;
        Coeff c = 1;
        auto star = item.find('*');
        if (star != std::string::npos) {
            c = std::stoll(trim(item.substr(star + 1)));
            item = trim(item.substr(0, star));
        }
        out.add(Partition::parse(item), c);
    }
    return out;
}

Coeff SchurExpansion::coefficient(const Partition& nu) const {
    auto it = coeffs_.find(nu);
    return it == coeffs_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& nu, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(nu, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) coeffs_.erase(it);
    }
}

bool SchurExpansion::is_positive() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

SchurExpansion SchurExpansion::truncated(int max_length) const {
    SchurExpansion out;
    for (const auto& [nu, c] : coeffs_)
        if (nu.length() <= max_length) out.coeffs_.emplace(nu, c);
    return out;
}

int SchurExpansion::max_length() const noexcept {
    int m = 0;
    for (const auto& [nu, c] : coeffs_) m = std::max(m, nu.length());
    return m;
}

MultiPoly SchurExpansion::expand(int arity) const {
    MultiPoly out(arity);
    for (const auto& [nu, c] : coeffs_) out += schur_polynomial(nu, arity).scaled(c);
    return out;
}

std::string SchurExpansion::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [nu, c] : coeffs_) {
        Coeff mag = c < 0 ? -c : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (mag != 1) s += std::to_string(mag) + "*";
        s += "s(" + nu.str() + ")";
    }
    return s;
}

std::string SchurExpansion::compact() const {
    std::string s;
    for (const auto& [nu, c] : coeffs_) {
        if (!s.empty()) s += " | ";
        s += nu.str();
        if (c != 1) s += "*" + std::to_string(c);
    }
    return s;
}

nlohmann::json SchurExpansion::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [nu, c] : coeffs_) arr.push_back({{"shape", nu.parts()}, {"coef", c}});
    return arr;
}

std::vector<int> SSYTableau::content(int max_entry) const {
    std::vector<int> out(static_cast<std::size_t>(max_entry), 0);
    for (const auto& row : entries)
        for (int v : row) ++out[static_cast<std::size_t>(v - 1)];
    return out;
}

namespace {

void ssyt_rec(const Partition& shape, int max_entry, int row, int col, std::vector<std::vector<int>>& fill,
              std::vector<SSYTableau>& out) {
    if (row == shape.length()) {
        out.push_back({shape, fill});
        return;
    }
    if (col == shape[row]) {
        ssyt_rec(shape, max_entry, row + 1, 0, fill, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);
    if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);
    // leave room for the rows still to come above this cell
    int rows_above = 0;
    for (int r = row + 1; r < shape.length() && shape[r] > col; ++r) ++rows_above;
    for (int v = lo; v <= max_entry - rows_above; ++v) {
        fill[row][col] = v;
        ssyt_rec(shape, max_entry, row, col + 1, fill, out);
    }
}

}  // namespace

std::vector<SSYTableau> enumerate_ssyt(const Partition& shape, int max_entry) {
    std::vector<SSYTableau> out;
    if (max_entry < 1 || shape.length() > max_entry) return out;
    std::vector<std::vector<int>> fill;
    for (int r = 0; r < shape.length(); ++r) fill.emplace_back(static_cast<std::size_t>(shape[r]), 0);
    ssyt_rec(shape, max_entry, 0, 0, fill, out);
    return out;
}

MultiPoly schur_polynomial(const Partition& shape, int arity) {
    MultiPoly out(arity);
    for (const auto& t : enumerate_ssyt(shape, arity)) {
        auto c = t.content(arity);
        Exponent e{0, 0, 0};
        for (int k = 0; k < arity; ++k) e[k] = c[k];
        out.add_term(e, 1);
    }
    return out;
}

SchurExpansion decompose_schur_2var(const MultiPoly& p) {
    if (p.arity() != 2) throw Error(Errc::arity_mismatch, "decompose_schur_2var expects (q,t)");
    if (!is_qt_symmetric(p)) throw Error(Errc::not_symmetric, p.str());
    SchurExpansion out;
    const int top = p.total_degree();
    for (int n = 0; n <= top; ++n) {
        Coeff prev = 0;
        for (int a = 0; 2 * a <= n; ++a) {
            Coeff ca = p.coefficient({n - a, a, 0});
            out.add(Partition{n - a, a}, checked_add(ca, -prev));
            prev = ca;
        }
    }
    if (!(out.expand(2) == p)) throw Error(Errc::reconstruction_mismatch, p.str());
    return out;
}

MultiPoly specialize_r1(const MultiPoly& p) {
    if (p.arity() != 3) throw Error(Errc::arity_mismatch, "specialize_r1 expects (q,t,r)");
    MultiPoly out(2);
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], 0}, c);
    return out;
}

MultiPoly expand_r1(const SchurExpansion& e) { return specialize_r1(e.truncated(3).expand(3)); }

MultiPoly homogenize(const MultiPoly& p, int degree) {
    if (p.arity() != 2) throw Error(Errc::arity_mismatch, "homogenize expects (q,t)");
    MultiPoly out(3);
    for (const auto& [e, c] : p.terms()) {
        const int rest = degree - e[0] - e[1];
        if (rest < 0) throw Error(Errc::degree_overflow, "term of degree " + std::to_string(e[0] + e[1]));
        out.add_term({e[0], e[1], rest}, c);
    }
    return out;
}

SchurExpansion decompose_schur_3var(const MultiPoly& p) {
    if (p.arity() != 3) throw Error(Errc::arity_mismatch, "decompose_schur_3var expects (q,t,r)");
    SchurExpansion out;
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        Exponent lead = rest.terms().begin()->first;
        for (const auto& [e, c] : rest.terms()) lead = std::max(lead, e);
        if (!(lead[0] >= lead[1] && lead[1] >= lead[2])) throw Error(Errc::not_symmetric, p.str());
        const Coeff c = rest.coefficient(lead);
        Partition nu{lead[0], lead[1], lead[2]};
        out.add(nu, c);
        rest -= schur_polynomial(nu, 3).scaled(c);
    }
    if (!(out.expand(3) == p)) throw Error(Errc::reconstruction_mismatch, p.str());
    return out;
}

const char* to_string(LiftResult::Status s) noexcept {
    switch (s) {
        case LiftResult::Status::found: return "found";
        case LiftResult::Status::infeasible: return "infeasible";
        case LiftResult::Status::budget_exhausted: return "budget-exhausted";
    }
    return "unknown";
}

namespace {

// s_nu(q,t,1) = sum of s_(x,y)(q,t) over nu2 <= x <= nu1, nu3 <= y <= nu2, so
// the lift is an exact cover of the (q,t)-Schur multiplicities by such boxes.
class LiftSearch {
public:
    LiftSearch(const SchurExpansion& two, std::uint64_t budget) : budget_(budget) {
        for (const auto& [kappa, c] : two.coefficients()) top_ = std::max(top_, kappa[0]);
        width_ = top_ + 1;
        residual_.assign(static_cast<std::size_t>(width_ * width_), 0);
        for (const auto& [kappa, c] : two.coefficients()) residual_[idx(kappa[0], kappa[1])] = static_cast<int>(c);
        covering_.resize(residual_.size());
        for (int a = 0; a <= top_; ++a)
            for (int b = 0; b <= a; ++b)
                for (int c = 0; c <= b; ++c) {
                    Box box{{a, b, c}, {}};
                    bool ok = true;
                    for (int x = b; x <= a && ok; ++x)
                        for (int y = c; y <= b; ++y) {
                            if (residual_[idx(x, y)] <= 0) {
                                ok = false;
                                break;
                            }
                            box.points.push_back(idx(x, y));
                        }
                    if (!ok) continue;
                    const int id = static_cast<int>(boxes_.size());
                    for (int pt : box.points) covering_[pt].push_back(id);
                    boxes_.push_back(std::move(box));
                }
        cap_.assign(boxes_.size(), 0);
    }

    LiftResult run() {
        LiftResult res;
        try {
            res.status = search() ? LiftResult::Status::found : LiftResult::Status::infeasible;
        } catch (const Exhausted&) {
            res.status = LiftResult::Status::budget_exhausted;
        }
        res.nodes = nodes_;
        if (res.status == LiftResult::Status::found)
            for (int id : chosen_) {
                const auto& nu = boxes_[id].nu;
                res.expansion.add(Partition{nu[0], nu[1], nu[2]}, 1);
            }
        return res;
    }

private:
    struct Box {
        std::array<int, 3> nu;
        std::vector<int> points;
    };
    struct Exhausted {};
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
            return h;
        }
    };

    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x * width_ + y); }

    bool search() {
        if (++nodes_ > budget_) throw Exhausted{};
        for (std::size_t b = 0; b < boxes_.size(); ++b) {
            int m = INT32_MAX;
            for (int pt : boxes_[b].points) m = std::min(m, residual_[pt]);
            cap_[b] = m;
        }
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        for (std::size_t pt = 0; pt < residual_.size(); ++pt) {
            if (residual_[pt] <= 0) continue;
            std::size_t count = 0;
            long long capacity = 0;
            for (int b : covering_[pt])
                if (cap_[b] > 0) {
                    ++count;
                    capacity += cap_[b];
                }
            if (capacity < residual_[pt]) return false;
            if (count < best_count) {
                best_count = count;
                best = static_cast<int>(pt);
            }
        }
        if (best < 0) return true;
        if (dead_.count(residual_)) return false;
        std::vector<int> options;
        // widest boxes first
        for (auto it = covering_[best].rbegin(); it != covering_[best].rend(); ++it)
            if (cap_[*it] > 0) options.push_back(*it);
        for (int b : options) {
            for (int pt : boxes_[b].points) --residual_[pt];
            chosen_.push_back(b);
            if (search()) return true;
            chosen_.pop_back();
            for (int pt : boxes_[b].points) ++residual_[pt];
        }
        dead_.insert(residual_);
        return false;
    }

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int top_ = 0;
    int width_ = 1;
    std::vector<int> residual_;
    std::vector<Box> boxes_;
    std::vector<std::vector<int>> covering_;
    std::vector<int> cap_;
    std::vector<int> chosen_;
    std::unordered_set<std::vector<int>, VecHash> dead_;
};

}  // namespace

LiftResult lift_r1(const MultiPoly& p, std::uint64_t node_budget) {
    LiftResult res;
    if (p.arity() != 2) throw Error(Errc::arity_mismatch, "lift_r1 expects (q,t)");
    if (p.is_zero()) {
        res.status = LiftResult::Status::found;
        return res;
    }
    const SchurExpansion two = decompose_schur_2var(p);
    if (!two.is_positive()) return res;
    res = LiftSearch(two, node_budget).run();
    if (res.status == LiftResult::Status::found) {
        if (!(expand_r1(res.expansion) == p)) throw Error(Errc::reconstruction_mismatch, "lift");
    }
    return res;
}

}  // namespace tridyck
