#pragma once

#include <memory>
#include <vector>

#include "qgroupoid/network.hpp"
#include "qgroupoid/qmatrix.hpp"
#include "qgroupoid/quiver.hpp"

namespace qg {

// Q = diag(q^{-i+1/2}), S_{i,n+1-i} = (-1)^{i+1}
ClassicalMatrix matrix_Q(int n);
ClassicalMatrix matrix_S(int n);
ClassicalMatrix matrix_QS(int n);

struct TransportMatrices {
    QMatrix M1, M2, M3;
};

// M_i = QS * transition_i
TransportMatrices transport_matrices(const TransitionData &t);

// M1^T D M3 M1 for a classical diagonal D
QMatrix assemble_A_general(const TransportMatrices &m, const ClassicalMatrix &D);

// Everything needed to go from the b_n networks to the quantum A-matrix.
struct BnSetup {
    int n = 0;
    BnNetworks nets;
    TransitionData transition;
    std::shared_ptr<const Quiver> an;
    FormPtr an_form;
};

BnSetup make_bn_setup(int n);

// transition_1^T transition_3 QS transition_1 on the b_n torus
QMatrix assemble_A(const TransitionData &t);

// K_l as a Weyl monomial on the b_n torus, 1 <= l <= n
TorusElement compute_Kl(const Quiver &bn, const FormPtr &form, int l);
Lattice Kl_vector(int n, int l);

// Sets every K_l to 1: each monomial loses sum_l k_l K_l, where k_l is half
// the exponent of Z_(l,n-l,0). What remains must live on the A_n torus.
// The order list fixes the elimination order (default 1..n); the result does
// not depend on it.
TorusElement specialize_Kl_one(const TorusElement &x, const Quiver &bn, const Quiver &an, const FormPtr &an_form,
                               const std::vector<int> &order = {});
QMatrix specialize_Kl_one(const QMatrix &A, const Quiver &bn, const Quiver &an, const FormPtr &an_form,
                          const std::vector<int> &order = {});

// A on the A_n torus after K_l = 1
QMatrix quantum_A(const BnSetup &s);

// transition_1^T S^T Q^{-1} transition_3^T transition_1
QMatrix dagger_A_factorized(const TransitionData &t);

struct CanonicalFormCheck {
    bool upper_triangular = true;
    bool unit_diagonal = true; // every diagonal entry is exactly q^{-1/2}
    bool positive = true;      // every coefficient of every entry is positive
    bool ok() const { return upper_triangular && unit_diagonal && positive; }
};

CanonicalFormCheck check_canonical_form(const QMatrix &A);

} // namespace qg
