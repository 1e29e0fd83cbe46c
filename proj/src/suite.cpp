#include "qgroupoid/suite.hpp"

#include "qgroupoid/casimirs.hpp"
#include "qgroupoid/groupoid.hpp"

namespace qg {

std::vector<Report> check_transport(int n, int qsign)
{
    BnSetup s = make_bn_setup(n);
    TransportMatrices m = transport_matrices(s.transition);
    return {verify_thMM(m.M1, m.M2, m.M3, qsign), verify_transition_relations(s.transition.M1, s.transition.M2, qsign)};
}

std::vector<Report> check_groupoid(int n, unsigned seed, int triples)
{
    BnSetup s = make_bn_setup(n);
    TransportMatrices m = transport_matrices(s.transition);
    std::vector<Report> out{verify_groupoid(m.M1, m.M2, m.M3)};
    for (int t = 0; t < triples; ++t) {
        unsigned base = seed + 3u * static_cast<unsigned>(t);
        ClassicalMatrix A = random_unit_diagonal(n, base), B = random_unit_diagonal(n, base + 1),
                        C = random_unit_diagonal(n, base + 2);
        Report r = verify_groupoid((A * m.M1) * C, (B * m.M2) * C, (B * m.M3) * inverse_unit_diagonal(A));
        r.check = "groupoid_rescaled_" + std::to_string(t + 1);
        out.push_back(r);
    }
    return out;
}

std::vector<Report> check_reflection(int n, unsigned seed, int diagonals, int qsign)
{
    BnSetup s = make_bn_setup(n);
    TransportMatrices m = transport_matrices(s.transition);
    std::vector<Report> out;
    const ReflectionMode mode = n <= 3 ? ReflectionMode::Materialized : ReflectionMode::Streamed;
    for (int t = 0; t < diagonals; ++t) {
        ClassicalMatrix D = random_unit_diagonal(n, seed + static_cast<unsigned>(t));
        Report r = verify_reflection(assemble_A_general(m, D), qsign, mode);
        r.check = "reflection_D" + std::to_string(t + 1);
        out.push_back(r);
    }
    return out;
}

Report check_canonical(int n)
{
    BnSetup s = make_bn_setup(n);
    CanonicalFormCheck c = check_canonical_form(quantum_A(s));
    Report r{"canonical_form", n, 0, {}};
    r.add("A is upper-triangular", c.upper_triangular);
    r.add("every diagonal entry is q^-1/2", c.unit_diagonal);
    r.add("every entry is a positive sum of Weyl monomials", c.positive);
    return r;
}

std::vector<Report> check_casimirs(int n)
{
    std::vector<Report> out{verify_casimirs_An(n), verify_bn_corank(n)};
    if (n <= 6)
        out.push_back(verify_Kl_bn(n));
    return out;
}

} // namespace qg
