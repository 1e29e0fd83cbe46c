// One line per acceptance criterion; exit status 0 only if every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qgroupoid/casimirs.hpp"
#include "qgroupoid/groupoid.hpp"
#include "qgroupoid/poisson.hpp"
#include "qgroupoid/quiver.hpp"
#include "qgroupoid/spectral.hpp"
#include "qgroupoid/suite.hpp"

using namespace qg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    bool pass = true;
    std::ostringstream detail;
    std::string failures;
    void fail(const std::string &why)
    {
        failures += (failures.empty() ? "" : "; ") + why;
        pass = false;
    }
};

bool all_pass(const std::vector<Report> &rs, std::string &first_failure)
{
    for (const auto &r : rs)
        for (const auto &c : r.results)
            if (!c.pass) {
                first_failure = r.check + " n=" + std::to_string(r.n) + ": " + c.name +
                                (c.detail.empty() ? "" : " (" + c.detail + ")");
                return false;
            }
    return true;
}

Line criterion_transport()
{
    Line l;
    double worst = 0;
    for (int n = 2; n <= 5; ++n) {
        auto t0 = Clock::now();
        std::string why;
        if (!all_pass(check_transport(n), why))
            l.fail(why);
        double t = seconds_since(t0);
        worst = std::max(worst, t);
        if (t > 60)
            l.fail("n=" + std::to_string(n) + " took " + std::to_string(t) + " s");
    }
    l.detail << " six transport relations exact, n=2..5, slowest n " << worst << " s (limit 60 s)";
    return l;
}

Line criterion_groupoid()
{
    Line l;
    for (int n = 2; n <= 5; ++n) {
        std::string why;
        if (!all_pass(check_groupoid(n, 1000u + static_cast<unsigned>(n), 3), why))
            l.fail(why);
    }
    l.detail << " M3 M1 = M2 exact, n=2..5, plus 3 random diagonal rescalings per n";
    return l;
}

Line criterion_reflection()
{
    Line l;
    double t4 = 0;
    for (int n = 2; n <= 4; ++n) {
        auto t0 = Clock::now();
        std::string why;
        if (!all_pass(check_reflection(n, 2000u + static_cast<unsigned>(n), 3), why))
            l.fail(why);
        if (n == 4) {
            t4 = seconds_since(t0);
            if (t4 > 600)
                l.fail("n=4 took " + std::to_string(t4) + " s");
        }
    }
    l.detail << " reflection equation for A = M1^T D M3 M1, 3 random D, n=2,3 materialized, n=4 streamed in " << t4
             << " s (limit 600 s)";
    return l;
}

Line criterion_canonical()
{
    Line l;
    for (int n = 2; n <= 5; ++n) {
        std::string why;
        if (!all_pass({check_canonical(n)}, why))
            l.fail(why);
    }
    l.detail << " after K_l = 1: upper-triangular, diagonal q^-1/2, positive coefficients, n=2..5";
    return l;
}

Line criterion_casimirs()
{
    Line l;
    auto t0 = Clock::now();
    std::string why;
    for (int n = 2; n <= 8; ++n) {
        if (!all_pass({verify_casimirs_An(n), verify_bn_corank(n)}, why))
            l.fail(why);
        if (n <= 6 && !all_pass({verify_Kl_bn(n)}, why))
            l.fail(why);
    }
    for (int m = 1; m <= 3; ++m)
        if (!all_pass({verify_casimirs_sp(m)}, why))
            l.fail(why);
    double t = seconds_since(t0);
    if (t > 5)
        l.fail("took " + std::to_string(t) + " s");
    l.detail << " C_i (n=2..8), K_l (n=2..6), R_j (m=1..3) central; counts floor(n/2) and m+m; b_n corank "
                "floor(n/2)+1; "
             << t << " s (limit 5 s)";
    return l;
}

Line criterion_spectrum_symbolic()
{
    Line l;
    for (int n = 2; n <= 6; ++n) {
        std::string why;
        if (!all_pass({verify_spectrum_symbolic(make_bn_setup(n))}, why))
            l.fail(why);
    }
    l.detail << " lambda_i case formula = (-1)^(n-1) q^-n m_(n+1-i) m_i^-1, m_i on the diagonal, lambda_i "
                "lambda_(n+1-i) = q^-2n, n=2..6";
    return l;
}

Line criterion_spectrum_numeric()
{
    Line l;
    const int assignments = 20;
    double worst = 0;
    int retries = 0;
    for (int n = 2; n <= 6; ++n) {
        BnSetup s = make_bn_setup(n);
        for (int t = 0; t < assignments; ++t) {
            auto e = numeric_eigen_check(s, 3000u + 100u * static_cast<unsigned>(n) + static_cast<unsigned>(t));
            worst = std::max(worst, e.max_rel_err);
            retries += e.retries;
            if (!e.match)
                l.fail("n=" + std::to_string(n) + " seed " + std::to_string(e.seed));
            if (e.reduced_confidence)
                l.fail("n=" + std::to_string(n) + " could not separate eigenvalues");
        }
    }
    l.detail << " eigenvalues of A (A^T)^-1 at q=1, " << assignments << " assignments per n=2..6, worst relative error "
             << worst << " (tolerance 1e-9), " << retries << " reseeds";
    return l;
}

Line criterion_corollary()
{
    Line l;
    double worst = 0;
    for (int n = 2; n <= 4; ++n) {
        auto c = verify_corollary(make_bn_setup(n), n, 4000u + static_cast<unsigned>(n));
        worst = std::max(worst, c.residual);
        if (!c.pass)
            l.fail("(n,N)=(" + std::to_string(n) + "," + std::to_string(n) + ") residual " + std::to_string(c.residual));
    }
    l.detail << " (A (A^T)^-1)^N = cI for (n,N) in {(2,2),(3,3),(4,4)}, worst inf-norm residual " << worst
             << " (tolerance 1e-8)";
    return l;
}

Line criterion_poisson()
{
    Line l;
    std::string why;
    for (int n = 2; n <= 5; ++n)
        if (!all_pass({verify_anchor_equivalence(n, 100, 5000u + static_cast<unsigned>(n))}, why))
            l.fail(why);
    for (int n = 2; n <= 4; ++n)
        if (!all_pass({verify_jacobi(n), verify_det_casimirs(n)}, why))
            l.fail(why);
    l.detail << " anchor bracket = closed form on 100 random rational matrices, n=2..5; Jacobi exact n<=4; det(A - "
                "lambda A^T) coefficients are Casimirs n<=4";
    return l;
}

Line criterion_cluster()
{
    Line l;
    const double stored = cluster_calibration().convert_to<double>();
    auto s3 = make_cluster_setup(3);
    double fitted = fit_cluster_constant(s3, 6000);
    if (std::abs(fitted - stored) > 1e-9 * std::abs(stored))
        l.fail("calibration at n=3 gives " + std::to_string(fitted));
    double worst = 0;
    for (int n = 3; n <= 4; ++n) {
        auto s = n == 3 ? s3 : make_cluster_setup(n);
        if (n != 3) {
            double refit = fit_cluster_constant(s, 6000);
            if (std::abs(refit - stored) > 1e-9 * std::abs(stored))
                l.fail("calibration drifts at n=" + std::to_string(n));
        }
        auto c = verify_cluster_bracket(s, 50, 6100u + static_cast<unsigned>(n));
        worst = std::max(worst, c.worst_rel_dev);
        std::string why;
        if (!all_pass({c.report}, why))
            l.fail(why);
    }
    l.detail << " cluster bracket with c = " << cluster_calibration() << " (fitted " << fitted
             << ") matches the closed form on 50 points, n=3,4, worst relative deviation " << worst
             << " (tolerance 1e-9)";
    return l;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Line()>>> criteria = {
        {"transport R-matrix relations", criterion_transport},
        {"groupoid condition", criterion_groupoid},
        {"reflection equation", criterion_reflection},
        {"canonical A-matrix", criterion_canonical},
        {"Casimir centrality and counts", criterion_casimirs},
        {"characteristic equation, symbolic", criterion_spectrum_symbolic},
        {"characteristic equation, numeric", criterion_spectrum_numeric},
        {"roots of unity corollary", criterion_corollary},
        {"semiclassical bracket", criterion_poisson},
        {"cluster-induced bracket", criterion_cluster},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Line l;
        try {
            l = criteria[i].second();
        } catch (const std::exception &e) {
            l.fail(std::string("exception: ") + e.what());
        }
        failed += !l.pass;
        std::string text = l.detail.str();
        if (!l.failures.empty())
            text += " | failed: " + l.failures;
        std::printf("criterion %2zu [%s] %s:%s\n", i + 1, l.pass ? "PASS" : "FAIL", criteria[i].first, text.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
