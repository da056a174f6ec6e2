#include "tridyck/simsym.hpp"

#include <algorithm>

#include "tridyck/aqt.hpp"
#include "tridyck/statistics.hpp"

namespace tridyck {

bool is_sim_sym(const StandardTableau& theta) {
    if (!is_triangular(theta.shape())) throw Error(Errc::not_triangular, theta.shape().str());
    return a_theta_polynomial(theta) == a_lambda_polynomial(theta.shape());
}

std::vector<StandardTableau> enumerate_sim_sym(const Partition& p) {
    if (!is_triangular(p)) throw Error(Errc::not_triangular, p.str());
    const MultiPoly target = a_lambda_polynomial(p);
    std::vector<StandardTableau> out;
    for (auto& theta : enumerate_standard_tableaux(p))
        if (a_theta_polynomial(theta) == target) out.push_back(std::move(theta));
    return out;
}

SchurExpansion closed_form_a_lambda_2part(int m, int n) {
    if (n < 0 || m < n || !is_triangular(Partition{m, n}))
        throw Error(Errc::not_triangular, std::to_string(m) + "," + std::to_string(n));
    SchurExpansion out;
    for (int d = 0; d <= std::min(n, m - n); ++d) out.add(Partition{m + n - 2 * d, d}, 1);
    return out;
}

Partition imp_path(int m, int n, int i, int d, int a) {
    if (n < 1 || m < n || !is_triangular(Partition{m, n}))
        throw Error(Errc::parameter_out_of_range, "(m,n) must be a triangular 2-partition with n >= 1");
    if (i < 1 || i > max_row_regular_index(m, n)) throw Error(Errc::parameter_out_of_range, "i");
    if (d < 0 || d > std::min(n, m - n)) throw Error(Errc::parameter_out_of_range, "d");
    if (a < d || a > m + n - 2 * d) throw Error(Errc::parameter_out_of_range, "a");

    const StandardTableau theta = row_regular_tableau(m, n, i);
    auto remove_from_other_row = [&](const Partition& shape, int top_label) {
        if (d == 0) return shape;
        if (theta.cell_of(top_label).row == 0) return Partition{shape[0], shape[1] - d};
        return Partition{shape[0] - d, shape[1]};
    };

    Partition mu;
    if (a == d) {
        mu = remove_from_other_row(Partition{m, n}, m + n);
    } else if (a <= m - d - i + 2) {
        const int k = m + n - (a - d);
        mu = remove_from_other_row(theta.prefix_shape(k), k);
    } else {
        mu = Partition{m + n - a - d, d};
    }

    const auto s = statistics(theta, mu);
    if (s.deficit != d || s.area != a)
        throw Error(Errc::internal_error, "imp_path(" + std::to_string(d) + "," + std::to_string(a) + ") gave (" +
                                              mu.str() + ")");
    return mu;
}

StandardTableau special_simsym_tableau(int m) {
    if (m < 3) throw Error(Errc::parameter_out_of_range, "m >= 3");
    std::vector<int> lower{1, 3, 4};
    for (int v = 6; v <= m + 2; ++v) lower.push_back(v);
    return StandardTableau({lower, {2, 5}});
}

nlohmann::json SimSymReport::to_json() const {
    nlohmann::json j{{"shape", {m, n}}, {"claim", "simsym-characterization"}, {"pass", pass}};
    j["witnesses"] = nlohmann::json::array();
    for (const auto& t : sim_sym) j["witnesses"].push_back(t.str());
    if (!pass) {
        j["expected"] = nlohmann::json::array();
        for (const auto& t : expected) j["expected"].push_back(t.str());
    }
    return j;
}

SimSymReport verify_simsym_characterization(int m, int n) {
    SimSymReport r;
    r.m = m;
    r.n = n;
    r.sim_sym = enumerate_sim_sym(Partition{m, n});
    for (int i = 1; i <= max_row_regular_index(m, n); ++i) r.expected.push_back(row_regular_tableau(m, n, i));
    if (n == 2) r.expected.push_back(special_simsym_tableau(m));
    std::sort(r.sim_sym.begin(), r.sim_sym.end());
    std::sort(r.expected.begin(), r.expected.end());
    r.pass = r.sim_sym == r.expected;
    return r;
}

}  // namespace tridyck
