#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tridyck/error.hpp"

namespace tridyck {

using Rational = boost::multiprecision::cpp_rational;

// French convention: row 0 is the bottom row, parts()[0] is its length.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; anything not weakly decreasing or negative throws invalid_partition.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // "7,6,4,3,1"; "" and "0" are the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    // 0-indexed part, 0 past the end.
    int operator[](int i) const noexcept {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool has_cell(Cell c) const noexcept {
        return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[static_cast<std::size_t>(c.row)];
    }

    // Bottom row first, left to right.
    std::vector<Cell> cells() const;

    std::string str() const;

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const noexcept { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct SlopeInterval {
    Rational lower;
    Rational upper;
};

bool contains(const Partition& outer, const Partition& inner) noexcept;

int arm(const Partition& p, Cell c);
int leg(const Partition& p, Cell c);

// (leg/(arm+leg+1), (leg+1)/(arm+leg+1))
SlopeInterval cell_slope_interval(const Partition& p, Cell c);
SlopeInterval slope_bounds(const Partition& p);
bool is_triangular(const Partition& p);
Rational mean_slope(const Partition& p);

// All partitions of n, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_triangular_partitions(int n);
// Every mu inside p once: by size, then lexicographically increasing.
std::vector<Partition> enumerate_subpartitions(const Partition& p);

class TriangularDyckPath {
public:
    TriangularDyckPath(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int area() const noexcept { return outer_.size() - inner_.size(); }

private:
    Partition outer_;
    Partition inner_;
};

int area(const TriangularDyckPath& path) noexcept;

std::string to_string(const Rational& r);

}  // namespace tridyck
