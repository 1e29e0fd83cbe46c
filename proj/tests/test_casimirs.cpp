#include "doctest.h"

#include <Eigen/Dense>

#include "qgroupoid/casimirs.hpp"
#include "qgroupoid/groupoid.hpp"

using namespace qg;

namespace {

// floating rank as an independent check of the exact lattice rank
int float_rank(const std::vector<Lattice> &vs)
{
    if (vs.empty())
        return 0;
    Eigen::MatrixXd m(vs.size(), vs[0].size());
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs[i].size(); ++j)
            m(i, j) = vs[i][j];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    return static_cast<int>(lu.rank());
}

// brute-force centrality: commutes with every unfrozen generator in the torus
bool commutes_with_generators(const TorusElement &c, const Quiver &q, const FormPtr &f)
{
    for (int u : q.unfrozen()) {
        auto g = TorusElement::generator(f, u);
        if (!(c * g == g * c))
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("casimirs")
{
    TEST_CASE("A_n: C_i are central and independent")
    {
        for (int n = 2; n <= 8; ++n) {
            CAPTURE(n);
            Quiver an = amalgamate_to_An(build_bn(n));
            FormPtr f = skew_form(an);
            std::vector<Lattice> vs;
            for (int i = 1; 2 * i <= n; ++i) {
                auto c = casimir_C(an, f, i);
                CHECK(is_central(c.value, an));
                CHECK(commutes_with_generators(c.value, an, f));
                vs.push_back(c.vector());
            }
            CHECK(lattice_rank(vs) == n / 2);
            CHECK(float_rank(vs) == n / 2);
            CHECK(verify_casimirs_An(n).pass());
            CHECK(verify_bn_corank(n).pass());
        }
    }

    TEST_CASE("b_n: T_i are central on the full triangle")
    {
        for (int n = 2; n <= 6; ++n) {
            Quiver bn = build_bn(n);
            FormPtr f = skew_form(bn);
            for (int i = 1; i <= n; ++i)
                CHECK(commutes_with_generators(casimir_T(bn, f, i).value, bn, f));
        }
    }

    TEST_CASE("K_l against the reduced quiver")
    {
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(n);
            CHECK(verify_Kl_bn(n).pass());
        }
    }

    TEST_CASE("a non-central monomial is detected")
    {
        Quiver an = amalgamate_to_An(build_bn(4));
        FormPtr f = skew_form(an);
        Lattice v(an.size(), 0);
        v[0] = 2;
        CHECK_FALSE(is_central_vector(v, an, f));
        CHECK_FALSE(commutes_with_generators(TorusElement::monomial(f, v), an, f));
    }

    TEST_CASE("Sp_2m: C_i and R_j central, independent, 2m of them")
    {
        for (int m = 1; m <= 3; ++m) {
            CAPTURE(m);
            Quiver sp = build_sp2m(m);
            FormPtr f = skew_form(sp);
            std::vector<Lattice> vs;
            for (int i = 1; i <= m; ++i) {
                auto c = casimir_C(sp, f, i);
                CHECK(commutes_with_generators(c.value, sp, f));
                vs.push_back(c.vector());
            }
            for (int j = 1; j <= m; ++j) {
                auto r = casimir_R(sp, f, j);
                CHECK(commutes_with_generators(r.value, sp, f));
                vs.push_back(r.vector());
            }
            CHECK(lattice_rank(vs) == 2 * m);
            CHECK(float_rank(vs) == 2 * m);
        }
    }

    TEST_CASE("Sp_2m centre dimension: m + m for odd m")
    {
        CHECK(center_dimension(build_sp2m(1)) == 2);
        CHECK(center_dimension(build_sp2m(3)) == 6);
        // even m carries one central monomial beyond C_i and R_j
        CHECK(center_dimension(build_sp2m(2)) == 5);
    }

    TEST_CASE("class vectors reject unequal exponents on one class")
    {
        Quiver bn = build_bn(3);
        Quiver an = amalgamate_to_An(bn);
        CHECK_THROWS_AS(class_vector(an, {{{2, 0, 1}, 1}, {{0, 1, 2}, 2}}), StructuralError);
    }
}
