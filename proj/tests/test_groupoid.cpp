#include "doctest.h"

#include "qgroupoid/groupoid.hpp"
#include "qgroupoid/rmatrix.hpp"
#include "qgroupoid/suite.hpp"

using namespace qg;

TEST_SUITE("groupoid")
{
    TEST_CASE("M3 M1 = M2 and its rescalings")
    {
        for (int n = 2; n <= 5; ++n) {
            CAPTURE(n);
            for (const auto &r : check_groupoid(n, 100 + n))
                CHECK(r.pass());
        }
    }

    TEST_CASE("Q and S")
    {
        auto qs = matrix_QS(3);
        CHECK(qs.at(0, 2) == QCoeff::qhalf(-1));
        CHECK(qs.at(1, 1) == -QCoeff::qhalf(-3));
        CHECK(qs.at(2, 0) == QCoeff::qhalf(-5));
        CHECK(qs.at(0, 0).is_zero());
    }

    TEST_CASE("canonical form after K_l = 1")
    {
        for (int n = 2; n <= 5; ++n) {
            CAPTURE(n);
            CHECK(check_canonical(n).pass());
        }
    }

    TEST_CASE("n = 2 entry a_12 has two terms")
    {
        BnSetup s = make_bn_setup(2);
        QMatrix A = quantum_A(s);
        REQUIRE(s.an->size() == 1);
        const TorusElement &a12 = A.at(0, 1);
        CHECK(a12.size() == 2);
        TorusElement want(s.an_form);
        want.add_term({-1}, QCoeff(1));
        want.add_term({1}, QCoeff(1));
        CHECK(a12 == want);
        CHECK(A.at(1, 0).is_zero());
    }

    TEST_CASE("K_l elimination order does not matter")
    {
        for (int n = 2; n <= 4; ++n) {
            BnSetup s = make_bn_setup(n);
            QMatrix raw = assemble_A(s.transition);
            std::vector<int> fwd, rev;
            for (int l = 1; l <= n; ++l) {
                fwd.push_back(l);
                rev.insert(rev.begin(), l);
            }
            QMatrix a = specialize_Kl_one(raw, *s.nets.quiver, *s.an, s.an_form, fwd);
            QMatrix b = specialize_Kl_one(raw, *s.nets.quiver, *s.an, s.an_form, rev);
            CHECK(a == b);
        }
    }

    TEST_CASE("dagger of A factorizes")
    {
        for (int n = 2; n <= 4; ++n) {
            BnSetup s = make_bn_setup(n);
            CHECK(dagger(assemble_A(s.transition)) == dagger_A_factorized(s.transition));
        }
    }

    TEST_CASE("K_l commute with the reduced generators")
    {
        for (int n = 2; n <= 5; ++n) {
            Quiver bn = build_bn(n);
            FormPtr f = skew_form(bn);
            for (int l = 1; l <= n; ++l) {
                TorusElement k = compute_Kl(bn, f, l);
                CHECK(k.is_monomial());
                CHECK(k.terms().begin()->first == Kl_vector(n, l));
            }
        }
    }

    TEST_CASE("rescaled A still satisfies the reflection equation")
    {
        BnSetup s = make_bn_setup(3);
        auto m = transport_matrices(s.transition);
        for (unsigned seed = 1; seed <= 3; ++seed)
            CHECK(verify_reflection(assemble_A_general(m, random_unit_diagonal(3, seed))).pass());
    }
}
