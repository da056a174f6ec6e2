#include "tridyck/statistics.hpp"

#include <algorithm>

namespace tridyck {

namespace {

bool similar(const Partition& mu, Cell c, const Rational& mean) {
    const int a = arm(mu, c);
    const int l = leg(mu, c);
    const Rational scaled = mean * (a + l + 1);
    return l < scaled && scaled <= l + 1;
}

}  // namespace

std::set<Cell> slope_similar_cells(const TriangularDyckPath& path) {
    std::set<Cell> out;
    if (path.inner().empty()) return out;
    const Rational mean = mean_slope(path.outer());
    for (const Cell& c : path.inner().cells())
        if (similar(path.inner(), c, mean)) out.insert(c);
    return out;
}

bool is_mean_similar(const Partition& lam, const Partition& mu) {
    if (mu.empty()) return true;
    const Rational mean = mean_slope(lam);
    for (const Cell& c : mu.cells())
        if (!similar(mu, c, mean)) return false;
    return true;
}

std::set<Cell> deficit_cells(const StandardTableau& theta, const Partition& mu) {
    const Partition& lam = theta.shape();
    if (!contains(lam, mu))
        throw Error(Errc::containment_violation, "(" + mu.str() + ") not inside (" + lam.str() + ")");
    std::vector<Cell> outside;
    for (const Cell& c : lam.cells())
        if (!mu.has_cell(c)) outside.push_back(c);
    std::set<Cell> out;
    for (const Cell& c1 : mu.cells()) {
        const int l1 = theta.label(c1);
        for (const Cell& c2 : outside) {
            if (c1.row == c2.row || c1.col == c2.col) continue;
            if (l1 > theta.label(c2)) out.insert({std::min(c1.row, c2.row), std::min(c1.col, c2.col)});
        }
    }
    return out;
}

PathStatistics statistics(const StandardTableau& theta, const Partition& mu) {
    const int def = static_cast<int>(deficit_cells(theta, mu).size());
    return {theta.size() - mu.size(), mu.size() - def, def};
}

}  // namespace tridyck
