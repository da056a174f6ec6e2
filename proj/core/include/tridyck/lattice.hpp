#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "tridyck/partition.hpp"
#include "tridyck/poly.hpp"
#include "tridyck/tableau.hpp"

namespace tridyck {

// Rotations of mu inside lam, one per 1-indexed line j with mu_j > mu_{j+1}.
std::vector<Partition> cover_rotations(const Partition& lam, const Partition& mu);

struct Interval {
    int lower = 0;  // tau
    int upper = 0;  // mu, tau precedes mu
    int distance = 0;
};

class Lattice {
public:
    explicit Lattice(const Partition& lam);

    const Partition& base() const noexcept { return base_; }
    // Nodes in enumerate_subpartitions order: by size, then lex.
    const std::vector<Partition>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    // Edges (mu, alpha): alpha is a rotation of mu.
    const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }
    const std::vector<int>& successors(int v) const { return succ_[static_cast<std::size_t>(v)]; }

    int index_of(const Partition& p) const;  // -1 when absent
    int minimum() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
    int maximum() const noexcept { return 0; }

    bool precedes(int tau, int mu) const;
    // Longest cover chain from tau up to mu, -1 when not comparable.
    int distance(int tau, int mu) const;

    std::size_t interval_count() const noexcept { return interval_count_; }

private:
    Partition base_;
    std::vector<Partition> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<std::uint64_t>> reach_;
    std::vector<std::vector<int>> dist_;
    std::size_t interval_count_ = 0;
};

Lattice build_lattice(const Partition& lam);

std::vector<Interval> enumerate_intervals(const Lattice& L);

// Sum over intervals of q^distance t^sim(upper).
MultiPoly interval_polynomial(const Lattice& L, const StandardTableau& theta);
MultiPoly interval_polynomial(const Partition& lam, const StandardTableau& theta);

std::string to_dot(const Lattice& L);
nlohmann::json to_json(const Lattice& L);

}  // namespace tridyck
