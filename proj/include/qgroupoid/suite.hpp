#pragma once

#include <vector>

#include "qgroupoid/report.hpp"
#include "qgroupoid/rmatrix.hpp"

namespace qg {

// Check bundles shared by the command-line tool and the acceptance run. Each
// returns the module reports unchanged.

// six transport relations plus the transition-matrix relations
std::vector<Report> check_transport(int n, int qsign = kDefaultQsign);

// M3 M1 = M2, then again after `triples` random rescalings
// M1 -> A M1 C, M2 -> B M2 C, M3 -> B M3 A^{-1}
std::vector<Report> check_groupoid(int n, unsigned seed, int triples = 3);

// reflection equation for A = M1^T D M3 M1 with `diagonals` random classical D
std::vector<Report> check_reflection(int n, unsigned seed, int diagonals = 3, int qsign = kDefaultQsign);

// upper-triangular, q^{-1/2} diagonal, positive coefficients after K_l = 1
Report check_canonical(int n);

// A_n Casimirs and b_n corank; K_l against the reduced quiver when n <= 6
std::vector<Report> check_casimirs(int n);

} // namespace qg
