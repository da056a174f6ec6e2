#include "tridyck/twopart.hpp"

#include <algorithm>
#include <set>

#include "tridyck/schur.hpp"
#include "tridyck/simsym.hpp"
#include "tridyck/statistics.hpp"

namespace tridyck {

const char* to_string(Side s) noexcept {
    switch (s) {
        case Side::left: return "left";
        case Side::center: return "center";
        case Side::right: return "right";
    }
    return "?";
}

const char* to_string(Polygon::Kind k) noexcept {
    switch (k) {
        case Polygon::Kind::pentagon: return "pentagon";
        case Polygon::Kind::small_square: return "small-square";
        case Polygon::Kind::big_square: return "big-square";
    }
    return "?";
}

namespace {

struct Offsets {
    int m, n, i, j;
};

Offsets offsets(const Partition& lam, const Partition& mu) {
    if (lam.length() > 2 || mu.length() > 2) throw Error(Errc::not_two_part, "(" + lam.str() + "), (" + mu.str() + ")");
    if (!contains(lam, mu)) throw Error(Errc::containment_violation, "(" + mu.str() + ") not inside (" + lam.str() + ")");
    return {lam[0], lam[1], lam[0] - mu[0], lam[1] - mu[1]};
}

std::string shape_name(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

std::string pname(const Partition& p) { return "(" + p.str() + ")"; }

// Collects the first few mismatches of one named check.
class Tally {
public:
    explicit Tally(std::string input) : input_(std::move(input)) {}
    void fail(const std::string& what) {
        if (failures_++ < 3) details_ += (details_.empty() ? "" : "; ") + what;
    }
    void count() { ++checked_; }
    CaseResult result() const {
        CaseResult r{input_, failures_ ? Status::fail : Status::pass, {}};
        r.details = failures_ ? std::to_string(failures_) + " mismatches: " + details_
                              : std::to_string(checked_) + " checked";
        return r;
    }

private:
    std::string input_;
    std::string details_;
    int failures_ = 0;
    int checked_ = 0;
};

}  // namespace

Side two_part_side(const Partition& lam, const Partition& mu) {
    const auto o = offsets(lam, mu);
    if (o.i < o.j) return Side::left;
    if (o.i == o.j) return Side::center;
    return Side::right;
}

std::vector<Partition> predicted_rotations(const Partition& lam, const Partition& mu) {
    const auto o = offsets(lam, mu);
    std::vector<Partition> out;
    if (o.m - o.i > o.n - o.j) out.push_back(Partition{o.m - o.i - 1, o.n - o.j});
    if (o.n - o.j > 0) {
        if (o.i <= o.j)
            out.push_back(Partition{o.m - o.i, o.n - o.j - 1});
        else
            out.push_back(Partition{o.m - o.i - 1, o.n - o.j - 1});
    }
    return out;
}

int predicted_distance(const Partition& lam, const Partition& tau, const Partition& mu) {
    offsets(lam, mu);
    if (!contains(tau, mu)) return -1;
    const int d1 = tau[0] - mu[0];
    const int d2 = tau[1] - mu[1];
    if (two_part_side(lam, tau) == Side::right) return d1 >= d2 ? d1 : -1;
    return d1 + d2;
}

int predicted_top_down_sim(const Partition& lam, const Partition& mu) {
    const auto o = offsets(lam, mu);
    if (o.i >= o.j) return o.i < o.n ? o.m + o.n - 2 * o.i : o.m - o.i;
    return o.m + o.n - 2 * o.j + 1;
}

std::vector<Partition> predicted_sim_level(const Partition& lam, int s) {
    const auto o = offsets(lam, Partition{});
    const int m = o.m, n = o.n;
    std::vector<Partition> out;
    if (s < 0 || s > m + n) return out;
    if (s <= m - n) {
        for (int k = 0; k <= std::min(s, n); ++k) out.push_back(Partition{s, k});
    } else if ((m + n - s) % 2 == 0) {
        const int i = (m + n - s) / 2;
        for (int j = 0; j <= i; ++j) out.push_back(Partition{m - i, n - j});
    } else {
        const int j = (m + n - s + 1) / 2;
        for (int i = 0; i < j; ++i) out.push_back(Partition{m - i, n - j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> predicted_red_line_polynomial(const Partition& lam, const Partition& mu) {
    const auto o = offsets(lam, mu);
    const int from = two_part_side(lam, mu) == Side::right ? o.j : o.i;
    std::vector<int> coef(static_cast<std::size_t>(o.i + o.j + 1), 0);
    for (int d = from; d <= o.i + o.j; ++d) coef[static_cast<std::size_t>(d)] = 1;
    return coef;
}

Polygon predicted_polygon(const Partition& lam, const Partition& mu) {
    const auto o = offsets(lam, mu);
    const int a = o.m - o.i, b = o.n - o.j;
    if (!(a > b && b > 0)) throw Error(Errc::parameter_out_of_range, "no polygon at (" + mu.str() + ")");
    Polygon p;
    if (o.i == o.j) {
        p.kind = Polygon::Kind::pentagon;
        p.left_chain = {mu, Partition{a, b - 1}, Partition{a - 1, b - 1}, Partition{a - 2, b - 1}};
        p.right_chain = {mu, Partition{a - 1, b}, Partition{a - 2, b - 1}};
    } else if (o.i < o.j) {
        p.kind = Polygon::Kind::small_square;
        p.left_chain = {mu, Partition{a, b - 1}, Partition{a - 1, b - 1}};
        p.right_chain = {mu, Partition{a - 1, b}, Partition{a - 1, b - 1}};
    } else {
        p.kind = Polygon::Kind::big_square;
        p.left_chain = {mu, Partition{a - 1, b - 1}, Partition{a - 2, b - 1}};
        p.right_chain = {mu, Partition{a - 1, b}, Partition{a - 2, b - 1}};
    }
    return p;
}

std::vector<int> lattice_polygon(const Lattice& L, int mu) {
    const auto& up = L.successors(mu);
    if (up.size() != 2) throw Error(Errc::parameter_out_of_range, "node does not have two covers");
    std::vector<int> bounds;
    for (int x = 0; x < static_cast<int>(L.size()); ++x)
        if (L.precedes(up[0], x) && L.precedes(up[1], x)) bounds.push_back(x);
    int join = -1;
    for (int x : bounds)
        if (std::all_of(bounds.begin(), bounds.end(), [&](int y) { return L.precedes(x, y); })) join = x;
    if (join < 0) throw Error(Errc::internal_error, "no join");
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(L.size()); ++x)
        if (L.precedes(mu, x) && L.precedes(x, join)) out.push_back(x);
    return out;
}

MultiPoly chain_interval_polynomial(int m) {
    MultiPoly out(2);
    for (int s = 0; s <= m; ++s)
        for (int d = 0; d <= m - s; ++d) out.add_term({s, d, 0}, 1);
    return out;
}

CaseResult check_two_row_intervals(int m, int n) {
    CaseResult r{shape_name(m, n), Status::pass, {}};
    const Partition lam{m, n};
    const MultiPoly P = interval_polynomial(lam, top_down_tableau(lam));
    const SchurExpansion A = closed_form_a_lambda_2part(m, n);
    const MultiPoly expected = expand_r1(A);
    if (!(P == expected)) {
        r.status = Status::fail;
        r.details = "intervals " + P.str() + " vs " + A.str() + " = " + expected.str();
        return r;
    }
    if (n == 0 && !(P == chain_interval_polynomial(m))) {
        r.status = Status::fail;
        r.details = "chain formula mismatch";
        return r;
    }
    r.details = A.str();
    return r;
}

std::vector<CaseResult> check_structure_2part(int m, int n) {
    const Partition lam{m, n};
    const Lattice L(lam);
    const StandardTableau theta = top_down_tableau(lam);
    const auto& nodes = L.nodes();
    const int N = static_cast<int>(nodes.size());
    const std::string name = shape_name(m, n);

    Tally rot(name + " rotations"), dist(name + " distances"), sim(name + " sim"), level(name + " sim-levels"),
        red(name + " red-line"), poly(name + " polygons");

    std::vector<int> sims(static_cast<std::size_t>(N));
    for (int v = 0; v < N; ++v) sims[v] = statistics(theta, nodes[v]).sim;

    for (int v = 0; v < N; ++v) {
        const Partition& mu = nodes[v];

        auto want = predicted_rotations(lam, mu);
        std::vector<Partition> got;
        for (int w : L.successors(v)) got.push_back(nodes[w]);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        rot.count();
        if (want != got) rot.fail(pname(mu));

        sim.count();
        if (predicted_top_down_sim(lam, mu) != sims[v])
            sim.fail(pname(mu) + " sim " + std::to_string(sims[v]));

        for (int t = 0; t < N; ++t) {
            dist.count();
            if (predicted_distance(lam, nodes[t], mu) != L.distance(t, v))
                dist.fail(pname(nodes[t]) + "->" + pname(mu));
            if (two_part_side(lam, nodes[t]) == Side::right && L.precedes(t, v) &&
                two_part_side(lam, mu) != Side::right)
                dist.fail(pname(mu) + " above right-side " + pname(nodes[t]) + " but not right");
        }

        std::vector<int> f;
        for (int t = 0; t < N; ++t) {
            if (!(nodes[t][0] == m || nodes[t][1] == n) || !L.precedes(t, v)) continue;
            const int d = L.distance(t, v);
            if (static_cast<int>(f.size()) <= d) f.resize(static_cast<std::size_t>(d + 1), 0);
            ++f[static_cast<std::size_t>(d)];
        }
        red.count();
        if (f != predicted_red_line_polynomial(lam, mu)) red.fail(pname(mu));

        if (mu[0] > mu[1] && mu[1] > 0) {
            poly.count();
            const Polygon p = predicted_polygon(lam, mu);
            std::set<Partition> members(p.left_chain.begin(), p.left_chain.end());
            members.insert(p.right_chain.begin(), p.right_chain.end());
            std::set<Partition> actual;
            for (int x : lattice_polygon(L, v)) actual.insert(nodes[x]);
            bool chains_ok = true;
            for (const auto* chain : {&p.left_chain, &p.right_chain})
                for (std::size_t k = 0; k + 1 < chain->size(); ++k) {
                    const auto& s = L.successors(L.index_of((*chain)[k]));
                    if (std::find(s.begin(), s.end(), L.index_of((*chain)[k + 1])) == s.end()) chains_ok = false;
                }
            if (members != actual || !chains_ok) poly.fail(std::string(to_string(p.kind)) + " at " + pname(mu));
        }
    }

    for (int s = 0; s <= m + n; ++s) {
        std::vector<Partition> got;
        for (int v = 0; v < N; ++v)
            if (sims[v] == s) got.push_back(nodes[v]);
        std::sort(got.begin(), got.end());
        level.count();
        if (got != predicted_sim_level(lam, s)) level.fail("s=" + std::to_string(s));
    }

    std::vector<CaseResult> out{rot.result(), dist.result(), sim.result(), level.result(), red.result(), poly.result()};
    for (auto& c : check_lattice_shape(L)) out.push_back(std::move(c));
    return out;
}

std::vector<CaseResult> check_lattice_shape(const Lattice& L) {
    const Partition& lam = L.base();
    const std::string name = pname(lam);
    const StandardTableau theta = top_down_tableau(lam);
    const auto& nodes = L.nodes();
    const int N = static_cast<int>(nodes.size());

    Tally chain(name + " top-down-chain"), bound(name + " dist+sim"), mono(name + " containment");

    for (int k = lam.size(); k > 0; --k) {
        const int a = L.index_of(theta.prefix_shape(k));
        const int b = L.index_of(theta.prefix_shape(k - 1));
        const auto& s = L.successors(a);
        chain.count();
        if (std::find(s.begin(), s.end(), b) == s.end()) chain.fail("step " + std::to_string(k));
    }

    std::vector<int> sims(static_cast<std::size_t>(N));
    for (int v = 0; v < N; ++v) sims[v] = statistics(theta, nodes[v]).sim;
    for (int t = 0; t < N; ++t)
        for (int v = 0; v <= t; ++v) {
            if (!L.precedes(t, v)) continue;
            bound.count();
            mono.count();
            if (L.distance(t, v) + sims[v] > lam.size()) bound.fail(pname(nodes[t]) + "->" + pname(nodes[v]));
            if (!contains(nodes[t], nodes[v])) mono.fail(pname(nodes[t]) + "->" + pname(nodes[v]));
        }
    return {chain.result(), bound.result(), mono.result()};
}

}  // namespace tridyck
