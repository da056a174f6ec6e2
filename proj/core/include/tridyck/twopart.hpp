#pragma once

#include <string>
#include <vector>

#include "tridyck/lattice.hpp"
#include "tridyck/partition.hpp"
#include "tridyck/report.hpp"

namespace tridyck {

// Closed forms for the lattice of a 2-partition (m,n) with its top-down tableau.
// They are oracles for the generic lattice code, not used by it.

enum class Side { left, center, right };

const char* to_string(Side s) noexcept;

// mu = (m-i, n-j): left if i<j, center if i=j, right if i>j.
Side two_part_side(const Partition& lam, const Partition& mu);

// Rotations of mu predicted by the lower/upper rotation rules.
std::vector<Partition> predicted_rotations(const Partition& lam, const Partition& mu);

// Distance from tau up to mu by the side rules, -1 when not comparable.
int predicted_distance(const Partition& lam, const Partition& tau, const Partition& mu);

int predicted_top_down_sim(const Partition& lam, const Partition& mu);

// Subpartitions whose top-down sim is s.
std::vector<Partition> predicted_sim_level(const Partition& lam, int s);

// Coefficient list in t of the distance generating function from the
// elements with i'=0 or j'=0 up to mu.
std::vector<int> predicted_red_line_polynomial(const Partition& lam, const Partition& mu);

struct Polygon {
    enum class Kind { pentagon, small_square, big_square } kind;
    std::vector<Partition> left_chain;
    std::vector<Partition> right_chain;
};

const char* to_string(Polygon::Kind k) noexcept;

// Defined when both rotations apply at mu (m-i > n-j > 0).
Polygon predicted_polygon(const Partition& lam, const Partition& mu);

// Node indices x with mu <= x <= join of the covers of mu.
std::vector<int> lattice_polygon(const Lattice& L, int mu);

// Sum over the chain (m) > (m-1) > ... > () of q^dist t^sim.
MultiPoly chain_interval_polynomial(int m);

// Top-down interval polynomial against sum_d s_{m+n-2d,d}(q,t,1).
CaseResult check_two_row_intervals(int m, int n);

// Every structural closed form above checked against the lattice of (m,n).
std::vector<CaseResult> check_structure_2part(int m, int n);

// Checks valid for any triangular shape: the top-down tableau is a maximal
// chain, dist + sim <= |lambda|, and comparability implies containment.
std::vector<CaseResult> check_lattice_shape(const Lattice& L);

}  // namespace tridyck
