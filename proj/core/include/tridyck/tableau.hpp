#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tridyck/partition.hpp"

namespace tridyck {

class StandardTableau {
public:
    StandardTableau() = default;
    // rows()[0] is the bottom row. Throws invalid_tableau unless the labels are a
    // bijection onto 1..|shape| increasing along rows and up columns.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    // "[1,2,4][3,5]", bottom row first.
    static StandardTableau parse(std::string_view text);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }

    int label(Cell c) const;
    Cell cell_of(int label) const;

    // Shape formed by labels 1..k.
    Partition prefix_shape(int k) const;

    std::string str() const;

    bool operator==(const StandardTableau& o) const noexcept { return rows_ == o.rows_; }
    auto operator<=>(const StandardTableau& o) const noexcept { return rows_ <=> o.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> where_;  // where_[label-1]
};

// Greedy unique extension by mean-similar prefixes.
StandardTableau triangular_tableau(const Partition& p);
// Same tableau by sorting cells along the mean-slope sweep.
StandardTableau triangular_tableau_sweep(const Partition& p);

StandardTableau top_down_tableau(const Partition& p);

// Two-row tableau with upper row n+i, n+i+2, ..., n+i+2(n-1); 1 <= i <= m-2(n-1).
StandardTableau row_regular_tableau(int m, int n, int i);
int max_row_regular_index(int m, int n);

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& p);

// Number of standard tableaux by the hook length formula.
long long count_standard_tableaux(const Partition& p);

}  // namespace tridyck
