#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "tridyck/partition.hpp"
#include "tridyck/schur.hpp"
#include "tridyck/tableau.hpp"

namespace tridyck {

// A_theta(q,t) == A_lambda(q,t).
bool is_sim_sym(const StandardTableau& theta);

// Sim-sym tableaux in enumerate_standard_tableaux order.
std::vector<StandardTableau> enumerate_sim_sym(const Partition& p);

// Sum of s_{m+n-2d,d} for 0 <= d <= min(n, m-n).
SchurExpansion closed_form_a_lambda_2part(int m, int n);

// Subpartition of (m,n) with deficit d and area a for the i-row-regular tableau.
Partition imp_path(int m, int n, int i, int d, int a);

// The upper row {2,5} tableau of (m,2).
StandardTableau special_simsym_tableau(int m);

struct SimSymReport {
    int m = 0;
    int n = 0;
    bool pass = false;
    std::vector<StandardTableau> sim_sym;   // brute force
    std::vector<StandardTableau> expected;  // row-regular, plus the special one when n = 2

    nlohmann::json to_json() const;
};

SimSymReport verify_simsym_characterization(int m, int n);

}  // namespace tridyck
