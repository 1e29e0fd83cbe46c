#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgroupoid/quiver.hpp"
#include "qgroupoid/report.hpp"

namespace qg {

enum class CasimirKind { T, C, K, R };

std::string casimir_kind_name(CasimirKind k);

struct CasimirElement {
    CasimirKind kind;
    int index = 0;
    TorusElement value; // a single Weyl monomial with coefficient 1

    const Lattice &vector() const { return value.terms().begin()->first; }
    Json to_json() const;
};

// Lattice vector on a reduced quiver from b_n labels with exponents. Labels in
// one amalgamation class must carry equal exponents and the class is counted
// once; a label outside every class is a structural error.
Lattice class_vector(const Quiver &reduced, const std::vector<std::pair<Label, int>> &items);

// T_i = :prod_{j=0}^{n-i} Z_(j, n-j-i, i): on the b_n torus
CasimirElement casimir_T(const Quiver &bn, const FormPtr &form, int i);

// C_i = :T_i T_{n-i}: (C_{n/2} = T_{n/2}) on a reduced quiver (A_n or Sp_2m)
CasimirElement casimir_C(const Quiver &reduced, const FormPtr &form, int i);

// b_n K_l, same monomial as compute_Kl
CasimirElement casimir_K_bn(const Quiver &bn, const FormPtr &form, int l);

// Sp_2m quasi-Casimir K_l: the classes met by b_n K_{n+1-l}, each once, with
// the class of its squared vertex replaced by S_l^2
CasimirElement casimir_K_sp(const Quiver &sp, const FormPtr &form, int l);

// R_j = :Q_{2j}^2 K_{2j} K_{2j+1}^2 K_{2j+2} Q_{2j+2}^2:, indices cyclic
CasimirElement casimir_R(const Quiver &sp, const FormPtr &form, int j);

// zero pairing with every unfrozen generator; throws on a non-monomial
bool is_central(const TorusElement &e, const Quiver &q);
bool is_central_vector(const Lattice &v, const Quiver &q, const FormPtr &form);

// rank of a family of lattice vectors over the rationals
int lattice_rank(const std::vector<Lattice> &vs);

// centrality and count checks used by the CLI and acceptance run
Report verify_casimirs_An(int n);
Report verify_Kl_bn(int n);
Report verify_bn_corank(int n);
Report verify_casimirs_sp(int m);

} // namespace qg
