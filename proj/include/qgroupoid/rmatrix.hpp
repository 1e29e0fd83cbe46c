#pragma once

#include "qgroupoid/qmatrix.hpp"
#include "qgroupoid/report.hpp"

namespace qg {

enum class RVariant { Plain, Transposed, T1, T2, Inverse };

// Trigonometric R-matrix on C^k (x) C^k evaluated at q^{qsign}:
// identity off the diagonal blocks, q on (i,i),(i,i) and q - q^{-1} on
// (i,j),(j,i) for j < i. Index (i,j) is stored as i*k + j.
ClassicalMatrix build_R(int k, RVariant v = RVariant::Plain, int qsign = 1);

// flip operator P(x (x) y) = y (x) x
ClassicalMatrix flip_matrix(int k);

ClassicalMatrix partial_transpose(const ClassicalMatrix &m, int k, int leg);

// The R-matrix identities of the transport matrices hold with R evaluated
// at q^{-1} under the torus convention used here; every verifier takes the
// argument sign explicitly.
constexpr int kDefaultQsign = -1;

// Six relations among the transport matrices M_i = QS M_i:
//   R^T M_i^1 M_i^2 = M_i^2 M_i^1 R  (i = 1,2,3)
//   M_1^1 M_2^2 = M_2^2 M_1^1 R
//   M_1^1 M_3^2 = M_3^2 R^T M_1^1
//   M_2^1 M_3^2 = R M_3^2 M_2^1
Report verify_thMM(const QMatrix &M1, const QMatrix &M2, const QMatrix &M3, int qsign = kDefaultQsign);

// M_3 M_1 = M_2
Report verify_groupoid(const QMatrix &M1, const QMatrix &M2, const QMatrix &M3);

// R_{2n} (M (x) 1)(1 (x) M) = (1 (x) M)(M (x) 1) R_n for a stacked 2n x n matrix
Report verify_rmm(const QMatrix &stacked, int qsign = kDefaultQsign);

// R M_i^1 M_i^2 = M_i^2 M_i^1 R for i = 1,2 and M_1^1 M_2^2 = M_2^2 M_1^1 R
// on the transition matrices
Report verify_transition_relations(const QMatrix &T1, const QMatrix &T2, int qsign = kDefaultQsign);

enum class ReflectionMode { Materialized, Streamed };

// R A^1 R^{t1} A^2 = A^2 R^{t1} A^1 R
Report verify_reflection(const QMatrix &A, int qsign = kDefaultQsign, ReflectionMode mode = ReflectionMode::Streamed);

// classical diagonal with invertible entries +-q^{k/2}
ClassicalMatrix random_unit_diagonal(int n, unsigned seed);
ClassicalMatrix inverse_unit_diagonal(const ClassicalMatrix &d);

} // namespace qg
