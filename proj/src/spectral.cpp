#include "qgroupoid/spectral.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qgroupoid/casimirs.hpp"

namespace qg {

namespace {

constexpr double kPi = 3.14159265358979323846;

Json complex_json(std::complex<double> z)
{
    return Json::array({z.real(), z.imag()});
}

int sign_pow(int e)
{
    return (e % 2 == 0) ? 1 : -1;
}

} // namespace

TorusElement diagonal_m(const Quiver &bn, const FormPtr &form, int i)
{
    const int n = bn.n();
    if (i < 1 || i > n)
        throw std::out_of_range("m_i: i out of range");
    Lattice v(bn.size(), 0);
    for (int t = n - i + 1; t <= n; ++t)
        v = lattice_add(v, casimir_T(bn, form, t).vector());
    return TorusElement::monomial(form, v);
}

std::pair<TorusElement, TorusElement> antidiagonal_ab(const Quiver &bn, const FormPtr &form, int i)
{
    const int n = bn.n();
    if (i < 1 || i > n)
        throw std::out_of_range("a_i, b_i: i out of range");
    TorusElement a = QCoeff::qhalf(2 * i - 1, sign_pow(i + 1)) * diagonal_m(bn, form, i);
    TorusElement b = QCoeff::qhalf(-2 * n + 2 * i - 1, sign_pow(n - i)) * diagonal_m(bn, form, n + 1 - i);
    return {a, b};
}

std::string lambda_case_name(LambdaCase c)
{
    switch (c) {
    case LambdaCase::Lower:
        return "lower";
    case LambdaCase::Middle:
        return "middle";
    case LambdaCase::Upper:
        return "upper";
    }
    return "?";
}

LambdaCase lambda_case(int n, int i)
{
    if (i < 1 || i > n)
        throw std::out_of_range("lambda: i out of range");
    if (i <= n / 2)
        return LambdaCase::Lower;
    if (n % 2 == 1 && 2 * i == n + 1)
        return LambdaCase::Middle;
    return LambdaCase::Upper;
}

TorusElement lambda_formula(const Quiver &an, const FormPtr &an_form, int i)
{
    const int n = an.n();
    Lattice v(an.size(), 0);
    switch (lambda_case(n, i)) {
    case LambdaCase::Lower:
        for (int k = i; k <= n / 2; ++k)
            v = lattice_add(v, casimir_C(an, an_form, k).vector());
        break;
    case LambdaCase::Upper:
        for (int k = n + 1 - i; k <= n / 2; ++k)
            v = lattice_sub(v, casimir_C(an, an_form, k).vector());
        break;
    case LambdaCase::Middle:
        break;
    }
    return TorusElement::monomial(an_form, v, QCoeff::monomial(-4 * n, sign_pow(n - 1)));
}

TorusElement lambda_from_m(const BnSetup &s, int i)
{
    const Quiver &bn = *s.nets.quiver;
    auto [a, b] = antidiagonal_ab(bn, s.nets.form, i);
    TorusElement r = b * invert_monomial(a);
    TorusElement out(s.an_form);
    for (const auto &[lat, c] : r.terms()) {
        auto p = project_to(*s.an, bn, lat);
        if (!p)
            throw StructuralError("m_{n+1-i} m_i^{-1} does not live on the A_n torus");
        out.add_term(*p, c);
    }
    return out;
}

Json SpectralData::to_json() const
{
    Json ls = Json::array();
    for (size_t i = 0; i < lambda.size(); ++i)
        ls.push_back({{"i", i + 1},
                      {"case", lambda_case_name(cases[i])},
                      {"lambda", lambda[i].to_json()},
                      {"lambda_text", lambda[i].str()},
                      {"m", m[i].to_json()}});
    return {{"n", n}, {"lambda_symbolic", ls}};
}

SpectralData spectral_data(const BnSetup &s)
{
    SpectralData d;
    d.n = s.n;
    for (int i = 1; i <= s.n; ++i) {
        d.m.push_back(diagonal_m(*s.nets.quiver, s.nets.form, i));
        d.lambda.push_back(lambda_formula(*s.an, s.an_form, i));
        d.cases.push_back(lambda_case(s.n, i));
    }
    return d;
}

Report verify_spectrum_symbolic(const BnSetup &s)
{
    const int n = s.n;
    const Quiver &bn = *s.nets.quiver;
    const FormPtr &f = s.nets.form;
    Report rep{"spectrum_symbolic", n, 0, {}};
    const QMatrix &M3 = s.transition.M3;

    bool lower = true, diag = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            lower = lower && M3.at(i, j).is_zero();
    for (int i = 1; i <= n; ++i)
        diag = diag && M3.at(i - 1, i - 1) == diagonal_m(bn, f, i);
    rep.add("right transition matrix is lower-triangular", lower);
    rep.add("diagonal of the right transition matrix equals m_i", diag);

    std::vector<QCoeff> qinv;
    for (int i = 1; i <= n; ++i)
        qinv.push_back(QCoeff::qhalf(2 * i - 1));
    QMatrix X = M3 * matrix_QS(n);
    QMatrix Y = (matrix_S(n).transpose() * ClassicalMatrix::diagonal(qinv)) * M3.transpose();
    bool zeros = true;
    for (int r = 0; r < n; ++r)
        for (int c = 0; r + c < n - 1; ++c)
            zeros = zeros && X.at(r, c).is_zero() && Y.at(r, c).is_zero();
    rep.add("M3 QS and S^T Q^-1 M3^T vanish above the anti-diagonal", zeros);
    bool ab = true;
    for (int i = 1; i <= n; ++i) {
        auto [a, b] = antidiagonal_ab(bn, f, i);
        ab = ab && Y.at(n - i, i - 1) == a && X.at(n - i, i - 1) == b;
    }
    rep.add("anti-diagonal entries equal a_i and b_i", ab);

    bool formula = true, central = true, pairs = true;
    std::vector<TorusElement> lam;
    for (int i = 1; i <= n; ++i) {
        TorusElement l = lambda_formula(*s.an, s.an_form, i);
        formula = formula && l == lambda_from_m(s, i);
        central = central && is_central(l, *s.an);
        lam.push_back(l);
    }
    TorusElement target = TorusElement::constant(s.an_form, QCoeff::monomial(-8 * n));
    for (int i = 1; i <= n; ++i)
        pairs = pairs && lam[i - 1] * lam[n - i] == target;
    rep.add("case formula equals (-1)^(n-1) q^-n m_(n+1-i) m_i^-1", formula);
    rep.add("every lambda_i is central on A_n", central);
    rep.add("lambda_i lambda_(n+1-i) = q^-2n", pairs);
    return rep;
}

namespace {

double rel_err(std::complex<double> got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// permutation matching that minimizes the worst relative error
double best_matching(const std::vector<std::complex<double>> &got, const std::vector<double> &want)
{
    std::vector<int> p(want.size());
    std::iota(p.begin(), p.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0;
        for (size_t i = 0; i < p.size(); ++i)
            worst = std::max(worst, rel_err(got[p[i]], want[i]));
        best = std::min(best, worst);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

bool clustered(const std::vector<double> &v, double tol)
{
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (std::abs(v[i] - v[j]) <= tol * std::max(std::abs(v[i]), std::abs(v[j])))
                return true;
    return false;
}

} // namespace

Json NumericEigenReport::to_json() const
{
    Json ev = Json::array();
    for (auto z : eigenvalues)
        ev.push_back(complex_json(z));
    return {{"n", n},
            {"seed", seed},
            {"retries", retries},
            {"reduced_confidence", reduced_confidence},
            {"numeric_match", match},
            {"max_rel_err", max_rel_err},
            {"eigenvalues", ev},
            {"predicted", predicted}};
}

NumericEigenReport numeric_eigen_check(const BnSetup &s, unsigned seed, double rel_tol)
{
    const int n = s.n;
    QMatrix A = quantum_A(s);
    std::vector<TorusElement> lam;
    for (int i = 1; i <= n; ++i)
        lam.push_back(lambda_formula(*s.an, s.an_form, i));

    NumericEigenReport rep;
    rep.n = n;
    const int max_retries = 10;
    for (int attempt = 0;; ++attempt) {
        rep.seed = seed + 7919u * static_cast<unsigned>(attempt);
        std::mt19937_64 rng(rep.seed);
        std::uniform_real_distribution<double> u(-0.7, 0.7);
        std::vector<double> z(s.an->size());
        for (auto &x : z)
            x = std::exp(u(rng));
        rep.predicted.clear();
        for (const auto &l : lam)
            rep.predicted.push_back(specialize(l, 1.0, z));
        if (clustered(rep.predicted, 1e-6) && attempt < max_retries)
            continue;
        rep.retries = attempt;
        rep.reduced_confidence = clustered(rep.predicted, 1e-6);

        // A A^{-T} is far from normal, so the eigen solve runs at 50 digits
        using MatH = Eigen::Matrix<HighReal, Eigen::Dynamic, Eigen::Dynamic>;
        std::vector<HighReal> zh(z.begin(), z.end());
        MatH a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = specialize(A.at(i, j), HighReal(1), zh);
        MatH x = a * a.transpose().inverse();
        Eigen::EigenSolver<MatH> es(x);
        rep.eigenvalues.clear();
        for (int i = 0; i < n; ++i) {
            auto ev = es.eigenvalues()(i);
            rep.eigenvalues.emplace_back(static_cast<double>(ev.real()), static_cast<double>(ev.imag()));
        }
        std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                  [](auto p, auto q) { return p.real() < q.real() || (p.real() == q.real() && p.imag() < q.imag()); });
        rep.max_rel_err = best_matching(rep.eigenvalues, rep.predicted);
        rep.match = rep.max_rel_err <= rel_tol;
        return rep;
    }
}

Json CorollaryReport::to_json() const
{
    Json ls = Json::array();
    for (auto z : lambdas)
        ls.push_back(complex_json(z));
    Json j = {{"n", n}, {"N", N}, {"admissible", admissible}, {"status", pass ? "pass" : "fail"}};
    if (!admissible) {
        j["detail"] = "no admissible assignment";
        return j;
    }
    j["root_indices"] = root_indices;
    j["constant"] = complex_json(constant);
    j["residual_inf_norm"] = residual;
    j["lambdas"] = ls;
    return j;
}

namespace {

// s_i in [0,N) distinct with s_i + s_{n+1-i} constant mod N; for odd n the
// middle index must satisfy the same constraint with itself.
bool find_roots(int n, int N, std::vector<int> &s)
{
    if (N < n)
        return false;
    s.assign(n, 0);
    std::vector<char> used(N, 0);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == n) {
            int sigma = (s[0] + s[n - 1]) % N;
            for (int i = 0; i < n; ++i)
                if ((s[i] + s[n - 1 - i]) % N != sigma)
                    return false;
            return true;
        }
        for (int v = 0; v < N; ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            s[pos] = v;
            if (rec(pos + 1))
                return true;
            used[v] = 0;
        }
        return false;
    };
    return rec(0);
}

std::complex<double> eval_vector(const Lattice &v, const std::vector<std::complex<double>> &z)
{
    std::complex<double> r = 1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            r *= std::pow(z[i], v[i] / 2);
    return r;
}

} // namespace

CorollaryReport verify_corollary(const BnSetup &s, int N, unsigned seed, double tol)
{
    const int n = s.n, h = n / 2;
    const Quiver &bn = *s.nets.quiver;
    CorollaryReport rep;
    rep.n = n;
    rep.N = N;
    std::vector<int> sv;
    if (N < 1 || !find_roots(n, N, sv))
        return rep;
    rep.admissible = true;
    rep.root_indices = sv;

    const int sigma = (sv[0] + sv[n - 1]) % N;
    double phi0 = kPi * sigma / N;
    if (n % 2 == 1) {
        double mid = 2 * kPi * sv[h] / N - phi0;
        if (std::abs(std::remainder(mid, 2 * kPi)) > 1e-9)
            phi0 += kPi;
    }
    // phi_i = sum_{k=i}^{h} theta_k for the lower indices
    std::vector<double> phi(h + 2, 0.0), theta(h + 1, 0.0);
    for (int i = 1; i <= h; ++i)
        phi[i] = 2 * kPi * sv[i - 1] / N - phi0;
    for (int k = h; k >= 1; --k)
        theta[k] = phi[k] - (k < h ? phi[k + 1] : 0.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    std::vector<std::complex<double>> z(bn.size());
    for (auto &x : z)
        x = std::exp(u(rng));
    std::vector<Lattice> C;
    for (int k = 1; k <= h; ++k) {
        Lattice v = casimir_T(bn, s.nets.form, k).vector();
        if (2 * k < n)
            v = lattice_add(v, casimir_T(bn, s.nets.form, n - k).vector());
        C.push_back(v);
    }
    for (int k = 1; k <= h; ++k) {
        int free_vertex = bn_index(n, {0, n - k, k});
        z[free_vertex] = 1;
        std::complex<double> rest = eval_vector(C[k - 1], z);
        z[free_vertex] = std::polar(1.0, theta[k]) / rest;
    }
    std::vector<std::complex<double>> cval(h + 1);
    for (int k = 1; k <= h; ++k)
        cval[k] = eval_vector(C[k - 1], z);
    const double sgn = sign_pow(n - 1);
    for (int i = 1; i <= n; ++i) {
        std::complex<double> l = sgn;
        switch (lambda_case(n, i)) {
        case LambdaCase::Lower:
            for (int k = i; k <= h; ++k)
                l *= cval[k];
            break;
        case LambdaCase::Upper:
            for (int k = n + 1 - i; k <= h; ++k)
                l /= cval[k];
            break;
        case LambdaCase::Middle:
            break;
        }
        rep.lambdas.push_back(l);
    }
    rep.constant = std::pow(rep.lambdas[0], N);

    // X^N amplifies rounding by roughly cond(X)^N, so the power is taken at 50 digits
    using CH = boost::multiprecision::number<boost::multiprecision::cpp_complex_backend<50>,
                                             boost::multiprecision::et_off>;
    using MatCH = Eigen::Matrix<CH, Eigen::Dynamic, Eigen::Dynamic>;
    std::vector<CH> zh(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        zh[i] = CH(z[i].real(), z[i].imag());
    QMatrix A = assemble_A(s.transition);
    MatCH a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CH acc = 0;
            for (const auto &[lat, coeff] : A.at(i, j).terms()) {
                CH mono = 1;
                for (size_t u = 0; u < lat.size(); ++u) {
                    if (lat[u] % 2 != 0)
                        throw EvaluationError("corollary: half-integer exponent in A");
                    for (int k = 0; k < std::abs(lat[u]) / 2; ++k)
                        mono = lat[u] > 0 ? mono * zh[u] : mono / zh[u];
                }
                HighReal c = 0;
                for (const auto &t : coeff.terms())
                    c += static_cast<HighReal>(t.second);
                acc += CH(c) * mono;
            }
            a(i, j) = acc;
        }
    MatCH x = a * a.transpose().inverse();
    MatCH p = MatCH::Identity(n, n);
    for (int k = 0; k < N; ++k)
        p = p * x;
    const CH c(rep.constant.real(), rep.constant.imag());
    rep.residual = 0;
    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j)
            row += static_cast<double>(abs(p(i, j) - (i == j ? c : CH(0))));
        rep.residual = std::max(rep.residual, row);
    }

    bool distinct = true, same_power = true;
    for (int i = 0; i < n; ++i) {
        same_power = same_power && std::abs(std::pow(rep.lambdas[i], N) - rep.constant) <= 1e-10;
        for (int j = i + 1; j < n; ++j)
            distinct = distinct && std::abs(rep.lambdas[i] - rep.lambdas[j]) > 1e-6;
    }
    rep.pass = distinct && same_power && rep.residual <= tol;
    return rep;
}

} // namespace qg
