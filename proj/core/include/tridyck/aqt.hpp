#pragma once

#include "tridyck/partition.hpp"
#include "tridyck/poly.hpp"
#include "tridyck/tableau.hpp"

namespace tridyck {

// Sum over mu inside the shape of q^area t^sim, sim taken against theta.
MultiPoly a_theta_polynomial(const StandardTableau& theta);

// a_theta_polynomial of the triangular tableau.
MultiPoly a_lambda_polynomial(const Partition& p);

// Same polynomial with sim counted directly from slope similarity.
MultiPoly a_lambda_by_slopes(const Partition& p);

}  // namespace tridyck
