#include "tridyck/lattice.hpp"

#include <algorithm>

#include "tridyck/statistics.hpp"

namespace tridyck {

std::vector<Partition> cover_rotations(const Partition& lam, const Partition& mu) {
    if (!contains(lam, mu))
        throw Error(Errc::containment_violation, "(" + mu.str() + ") not inside (" + lam.str() + ")");
    std::vector<Partition> out;
    // 0-indexed j here is line j+1
    for (int j = 0; j < mu.length(); ++j) {
        if (!(mu[j] > mu[j + 1])) continue;
        const int v = lam[j] - mu[j];
        int i = j - 1;
        while (i >= 0 && lam[i] - mu[i] > v) --i;
        std::vector<int> alpha(mu.parts());
        for (int k = i + 1; k <= j; ++k) --alpha[static_cast<std::size_t>(k)];
        Partition a(alpha);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    }
    return out;
}

Lattice::Lattice(const Partition& lam) : base_(lam) {
    if (!is_triangular(lam)) throw Error(Errc::not_triangular, lam.str());
    nodes_ = enumerate_subpartitions(lam);
    const int n = static_cast<int>(nodes_.size());
    for (int v = 0; v < n; ++v) index_.emplace(nodes_[v].str(), v);
    succ_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (const auto& a : cover_rotations(lam, nodes_[v])) {
            const int w = index_of(a);
            if (w < 0) throw Error(Errc::internal_error, "rotation left the lattice");
            succ_[v].push_back(w);
        }
        std::sort(succ_[v].begin(), succ_[v].end());
        for (int w : succ_[v]) covers_.emplace_back(v, w);
    }
    // Covers strictly shrink mu, so successors always have smaller index.
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    reach_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
    for (int v = 0; v < n; ++v) {
        reach_[v][v / 64] |= std::uint64_t{1} << (v % 64);
        for (int w : succ_[v]) {
            if (w >= v) throw Error(Errc::internal_error, "cover does not shrink");
            for (std::size_t k = 0; k < words; ++k) reach_[v][k] |= reach_[w][k];
        }
    }
    dist_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist_[s];
        d[s] = 0;
        for (int v = s; v >= 0; --v) {
            if (d[v] < 0) continue;
            ++interval_count_;
            for (int w : succ_[v]) d[w] = std::max(d[w], d[v] + 1);
        }
    }
}

int Lattice::index_of(const Partition& p) const {
    auto it = index_.find(p.str());
    return it == index_.end() ? -1 : it->second;
}

bool Lattice::precedes(int tau, int mu) const {
    return (reach_.at(static_cast<std::size_t>(tau))[static_cast<std::size_t>(mu) / 64] >> (mu % 64)) & 1u;
}

int Lattice::distance(int tau, int mu) const {
    return dist_.at(static_cast<std::size_t>(tau)).at(static_cast<std::size_t>(mu));
}

Lattice build_lattice(const Partition& lam) { return Lattice(lam); }

std::vector<Interval> enumerate_intervals(const Lattice& L) {
    std::vector<Interval> out;
    out.reserve(L.interval_count());
    const int n = static_cast<int>(L.size());
    for (int tau = n - 1; tau >= 0; --tau)
        for (int mu = tau; mu >= 0; --mu) {
            const int d = L.distance(tau, mu);
            if (d >= 0) out.push_back({tau, mu, d});
        }
    return out;
}

MultiPoly interval_polynomial(const Lattice& L, const StandardTableau& theta) {
    if (!(theta.shape() == L.base())) throw Error(Errc::shape_mismatch, theta.str() + " on (" + L.base().str() + ")");
    std::vector<int> sim;
    for (const auto& mu : L.nodes()) sim.push_back(statistics(theta, mu).sim);
    MultiPoly out(2);
    for (const auto& iv : enumerate_intervals(L)) out.add_term({iv.distance, sim[iv.upper], 0}, 1);
    return out;
}

MultiPoly interval_polynomial(const Partition& lam, const StandardTableau& theta) {
    return interval_polynomial(build_lattice(lam), theta);
}

std::string to_dot(const Lattice& L) {
    std::string s = "digraph nu_tamari {\n  rankdir=BT;\n";
    for (std::size_t v = 0; v < L.size(); ++v)
        s += "  n" + std::to_string(v) + " [label=\"(" + L.nodes()[v].str() + ")\"];\n";
    for (const auto& [u, w] : L.covers()) s += "  n" + std::to_string(u) + " -> n" + std::to_string(w) + ";\n";
    s += "}\n";
    return s;
}

nlohmann::json to_json(const Lattice& L) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& p : L.nodes()) nodes.push_back(p.parts());
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [u, w] : L.covers()) covers.push_back({u, w});
    return {{"base", L.base().parts()}, {"nodes", nodes}, {"covers", covers}};
}

}  // namespace tridyck
