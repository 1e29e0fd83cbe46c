#include "doctest.h"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "qgroupoid/casimirs.hpp"
#include "qgroupoid/spectral.hpp"

using namespace qg;

TEST_SUITE("spectral")
{
    TEST_CASE("symbolic eigenvalue identities")
    {
        for (int n = 2; n <= 5; ++n) {
            CAPTURE(n);
            BnSetup s = make_bn_setup(n);
            Report r = verify_spectrum_symbolic(s);
            CHECK(r.pass());
        }
    }

    TEST_CASE("lambda cases")
    {
        CHECK(lambda_case(4, 1) == LambdaCase::Lower);
        CHECK(lambda_case(4, 2) == LambdaCase::Lower);
        CHECK(lambda_case(4, 3) == LambdaCase::Upper);
        CHECK(lambda_case(5, 3) == LambdaCase::Middle);
    }

    TEST_CASE("lambda_i are Casimir monomials on A_n")
    {
        for (int n = 2; n <= 6; ++n) {
            BnSetup s = make_bn_setup(n);
            for (int i = 1; i <= n; ++i) {
                auto l = lambda_formula(*s.an, s.an_form, i);
                REQUIRE(l.is_monomial());
                CHECK(is_central(l, *s.an));
            }
        }
    }

    TEST_CASE("numeric eigenvalues match at 1e-9")
    {
        for (int n = 2; n <= 6; ++n) {
            BnSetup s = make_bn_setup(n);
            for (unsigned seed = 1; seed <= 3; ++seed) {
                auto e = numeric_eigen_check(s, seed);
                CAPTURE(n);
                CAPTURE(seed);
                CHECK(e.match);
                CHECK(e.max_rel_err <= 1e-9);
            }
        }
    }

    TEST_CASE("predicted lambda are roots of det(A - lambda A^T)")
    {
        // independent of the eigen solver: the pencil is singular at each lambda_i
        using MatH = Eigen::Matrix<HighReal, Eigen::Dynamic, Eigen::Dynamic>;
        for (int n = 2; n <= 5; ++n) {
            BnSetup s = make_bn_setup(n);
            QMatrix A = quantum_A(s);
            std::vector<HighReal> z;
            for (int v = 0; v < s.an->size(); ++v)
                z.push_back(HighReal(1) + HighReal(v + 1) / 7);
            MatH a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    a(i, j) = specialize(A.at(i, j), HighReal(1), z);
            HighReal scale = a.cwiseAbs().maxCoeff();
            for (int i = 1; i <= n; ++i) {
                HighReal l = specialize(lambda_formula(*s.an, s.an_form, i), HighReal(1), z);
                MatH pencil = a - l * MatH(a.transpose());
                HighReal d = pencil.fullPivLu().determinant();
                HighReal rel = abs(d) / pow(scale * (1 + abs(l)), n);
                CAPTURE(n);
                CAPTURE(i);
                CHECK(static_cast<double>(rel) < 1e-30);
            }
        }
    }

    TEST_CASE("numeric check is deterministic per seed")
    {
        BnSetup s = make_bn_setup(4);
        CHECK(numeric_eigen_check(s, 9).to_json() == numeric_eigen_check(s, 9).to_json());
    }

    TEST_CASE("corollary: distinct scaled roots of unity")
    {
        for (int n = 2; n <= 4; ++n) {
            BnSetup s = make_bn_setup(n);
            auto c = verify_corollary(s, n, 3);
            CAPTURE(n);
            CHECK(c.admissible);
            CHECK(c.pass);
            CHECK(c.residual <= 1e-8);
            for (auto l : c.lambdas)
                CHECK(std::pow(std::abs(l), n) == doctest::Approx(std::abs(c.constant)));
        }
    }

    TEST_CASE("corollary: no assignment when N < n")
    {
        BnSetup s = make_bn_setup(4);
        CHECK_FALSE(verify_corollary(s, 3, 1).admissible);
    }
}
