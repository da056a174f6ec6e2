#include "tridyck/aqt.hpp"

#include "tridyck/statistics.hpp"

namespace tridyck {

MultiPoly a_theta_polynomial(const StandardTableau& theta) {
    const Partition& lam = theta.shape();
    if (!is_triangular(lam)) throw Error(Errc::not_triangular, lam.str());
    MultiPoly out(2);
    for (const auto& mu : enumerate_subpartitions(lam)) {
        auto s = statistics(theta, mu);
        out.add_term({s.area, s.sim, 0}, 1);
    }
    return out;
}

MultiPoly a_lambda_polynomial(const Partition& p) { return a_theta_polynomial(triangular_tableau(p)); }

MultiPoly a_lambda_by_slopes(const Partition& p) {
    if (!is_triangular(p)) throw Error(Errc::not_triangular, p.str());
    MultiPoly out(2);
    for (const auto& mu : enumerate_subpartitions(p)) {
        TriangularDyckPath path(p, mu);
        out.add_term({path.area(), static_cast<int>(slope_similar_cells(path).size()), 0}, 1);
    }
    return out;
}

}  // namespace tridyck
