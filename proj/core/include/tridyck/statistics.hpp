#pragma once

#include <set>

#include "tridyck/partition.hpp"
#include "tridyck/tableau.hpp"

namespace tridyck {

struct PathStatistics {
    int area = 0;
    int sim = 0;
    int deficit = 0;

    bool operator==(const PathStatistics&) const = default;
};

// Cells of mu whose interval in mu satisfies v- < mean(lambda) <= v+.
std::set<Cell> slope_similar_cells(const TriangularDyckPath& path);

// True when every cell of mu is slope-similar.
bool is_mean_similar(const Partition& lam, const Partition& mu);

std::set<Cell> deficit_cells(const StandardTableau& theta, const Partition& mu);

PathStatistics statistics(const StandardTableau& theta, const Partition& mu);

}  // namespace tridyck
