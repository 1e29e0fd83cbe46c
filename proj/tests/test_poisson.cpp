#include "doctest.h"

#include <random>

#include "qgroupoid/poisson.hpp"

using namespace qg;

namespace {

// the last case as it is often printed, with a single a_kl
Rational printed_variant(const UnipotentMatrix &A, IndexPair p, IndexPair r)
{
    if (p.i == r.i && p.k < r.k)
        return -A.sym(p.i, p.k) * A.sym(p.i, r.k) + A.sym(p.k, r.k);
    if (p.i == r.i && r.k < p.k)
        return -printed_variant(A, r, p);
    return closed_form_bracket(A, p, r);
}

} // namespace

TEST_SUITE("poisson")
{
    TEST_CASE("coordinate numbering round-trips")
    {
        for (int n = 2; n <= 6; ++n)
            for (int c = 0; c < coordinate_count(n); ++c)
                CHECK(coordinate_index(n, coordinate_pair(n, c)) == c);
        CHECK_THROWS_AS(check_pair(4, {3, 2}), std::out_of_range);
        CHECK_THROWS_AS(check_pair(4, {1, 5}), std::out_of_range);
    }

    TEST_CASE("closed form cases")
    {
        std::mt19937_64 rng(3);
        auto A = random_unipotent(4, rng);
        auto a = [&](int i, int k) { return A.sym(i, k); };
        CHECK(closed_form_bracket(A, {1, 2}, {3, 4}) == 0);
        CHECK(closed_form_bracket(A, {1, 4}, {2, 3}) == 0);
        CHECK(closed_form_bracket(A, {1, 3}, {2, 4}) == 2 * (a(1, 2) * a(3, 4) - a(1, 4) * a(2, 3)));
        CHECK(closed_form_bracket(A, {1, 2}, {2, 4}) == a(1, 2) * a(2, 4) - 2 * a(1, 4));
        CHECK(closed_form_bracket(A, {1, 3}, {2, 3}) == -a(1, 3) * a(2, 3) + 2 * a(1, 2));
        CHECK(closed_form_bracket(A, {1, 2}, {1, 3}) == -a(1, 2) * a(1, 3) + 2 * a(2, 3));
        CHECK(closed_form_bracket(A, {2, 4}, {2, 4}) == 0);
    }

    TEST_CASE("anchor construction reproduces the closed form exactly")
    {
        for (int n = 2; n <= 5; ++n) {
            CAPTURE(n);
            CHECK(verify_anchor_equivalence(n, 25, 7 + n).pass());
        }
        std::mt19937_64 rng(1);
        auto A = random_unipotent(3, rng);
        CHECK(anchor_bracket(A, {1, 2}, {2, 3}) == closed_form_bracket(A, {1, 2}, {2, 3}));
    }

    TEST_CASE("the single a_kl variant of the last case disagrees with the anchor")
    {
        std::mt19937_64 rng(5);
        bool differs = false;
        for (int t = 0; t < 5 && !differs; ++t) {
            auto A = random_unipotent(3, rng);
            differs = anchor_bracket(A, {1, 2}, {1, 3}) != printed_variant(A, {1, 2}, {1, 3});
        }
        CHECK(differs);
    }

    TEST_CASE("skew-symmetry")
    {
        for (int n = 2; n <= 5; ++n)
            CHECK(verify_skew_symmetry(n, 3, n).pass());
    }

    TEST_CASE("Jacobi identity, exact")
    {
        for (int n = 3; n <= 4; ++n) {
            CAPTURE(n);
            CHECK(verify_jacobi(n).pass());
        }
    }

    TEST_CASE("Jacobi fails for the single a_kl variant from n = 4")
    {
        // shared-start case replaced by -a_ik a_il + a_kl; n = 3 still happens to be Poisson
        auto bad_triples = [](int n) {
            const int N = coordinate_count(n);
            auto x = [&](IndexPair p) { return Polynomial::variable(N, coordinate_index(n, p)); };
            std::vector<Polynomial> t(N * N, Polynomial(N));
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    IndexPair p = coordinate_pair(n, a), r = coordinate_pair(n, b);
                    Polynomial v = coordinate_bracket(n, p, r);
                    if (p.i == r.i && p.k < r.k)
                        v = Rational(-1) * (x(p) * x(r)) + x({p.k, r.k});
                    else if (p.i == r.i && p.k > r.k)
                        v = x(r) * x(p) - x({r.k, p.k});
                    t[a * N + b] = v;
                }
            auto br = [&](const Polynomial &f, const Polynomial &g) {
                Polynomial s(N);
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b)
                        s += f.derivative(a) * g.derivative(b) * t[a * N + b];
                return s;
            };
            int bad = 0;
            for (int a = 0; a < N; ++a)
                for (int b = a + 1; b < N; ++b)
                    for (int c = b + 1; c < N; ++c) {
                        auto X = Polynomial::variable(N, a), Y = Polynomial::variable(N, b),
                             Z = Polynomial::variable(N, c);
                        bad += !(br(X, br(Y, Z)) + br(Y, br(Z, X)) + br(Z, br(X, Y))).is_zero();
                    }
            return bad;
        };
        CHECK(bad_triples(3) == 0);
        CHECK(bad_triples(4) > 0);
        CHECK(verify_jacobi(4).pass());
    }

    TEST_CASE("determinant coefficients are Casimirs")
    {
        for (int n = 2; n <= 4; ++n) {
            CAPTURE(n);
            CHECK(verify_det_casimirs(n).pass());
        }
    }

    TEST_CASE("n = 3 determinant coefficient is the Markov-type polynomial")
    {
        auto c = characteristic_coefficients(3);
        // det(A - lambda A^T) = (1 - lambda)^3 + ... ; lambda^0 coefficient is 1
        CHECK(c[0] == Polynomial::constant(3, 1));
        CHECK(c[3] == Polynomial::constant(3, -1));
        std::vector<Rational> pt{Rational(2), Rational(3), Rational(5)};
        // lambda^1 coefficient: -3 + a12^2 + a13^2 + a23^2 - a12 a13 a23
        CHECK(c[1].evaluate(pt) == Rational(-3 + 4 + 9 + 25 - 30));
    }

    TEST_CASE("cluster bracket calibration is stable across n")
    {
        for (int n = 3; n <= 5; ++n) {
            auto s = make_cluster_setup(n);
            CHECK(fit_cluster_constant(s, 11) == doctest::Approx(cluster_calibration().convert_to<double>()).epsilon(1e-12));
        }
    }

    TEST_CASE("cluster bracket matches the closed form")
    {
        for (int n = 3; n <= 4; ++n) {
            auto s = make_cluster_setup(n);
            auto c = verify_cluster_bracket(s, 20, 2);
            CAPTURE(n);
            CHECK(c.report.pass());
            CHECK(c.worst_rel_dev <= 1e-9);
        }
    }

    TEST_CASE("unipotent matrix validation")
    {
        std::vector<Rational> ok{1, 2, 0, 1};
        CHECK_NOTHROW(UnipotentMatrix(2, ok));
        std::vector<Rational> bad{1, 2, 1, 1};
        CHECK_THROWS_AS(UnipotentMatrix(2, bad), StructuralError);
        std::vector<Rational> diag{2, 0, 0, 1};
        CHECK_THROWS_AS(UnipotentMatrix(2, diag), StructuralError);
    }
}
