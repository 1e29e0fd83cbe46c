#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qgroupoid/groupoid.hpp"
#include "qgroupoid/report.hpp"

namespace qg {

// m_i = :T_n T_{n-1} ... T_{n-i+1}: on the b_n torus (m_1 = Z_(0,0,n))
TorusElement diagonal_m(const Quiver &bn, const FormPtr &form, int i);

// a_i = (-1)^{i+1} q^{i-1/2} m_i,  b_i = (-1)^{n-i} q^{-n+i-1/2} m_{n+1-i}
std::pair<TorusElement, TorusElement> antidiagonal_ab(const Quiver &bn, const FormPtr &form, int i);

enum class LambdaCase { Lower, Middle, Upper };
std::string lambda_case_name(LambdaCase c);
LambdaCase lambda_case(int n, int i);

// (-1)^{n-1} q^{-n} times prod_{k=i}^{[n/2]} C_k, 1, or prod_{k=n+1-i}^{[n/2]} C_k^{-1}
TorusElement lambda_formula(const Quiver &an, const FormPtr &an_form, int i);

// b_i a_i^{-1} = (-1)^{n-1} q^{-n} m_{n+1-i} m_i^{-1}, pushed to the A_n torus
TorusElement lambda_from_m(const BnSetup &s, int i);

struct SpectralData {
    int n = 0;
    std::vector<TorusElement> m;
    std::vector<TorusElement> lambda;
    std::vector<LambdaCase> cases;
    Json to_json() const;
};

SpectralData spectral_data(const BnSetup &s);

// symbolic certification: diagonal of the right transition matrix, zero
// pattern and anti-diagonal of M3 QS and S^T Q^{-1} M3^T, lambda identities
Report verify_spectrum_symbolic(const BnSetup &s);

struct NumericEigenReport {
    int n = 0;
    unsigned seed = 0;     // seed actually used
    int retries = 0;       // reseeds caused by clustered eigenvalues
    bool reduced_confidence = false;
    bool match = false;
    double max_rel_err = 0;
    std::vector<std::complex<double>> eigenvalues;
    std::vector<double> predicted;
    Json to_json() const;
};

// q = 1, random positive values of the A_n generators; eigenvalues of
// A (A^T)^{-1} against the lambda_i, matched as multisets
NumericEigenReport numeric_eigen_check(const BnSetup &s, unsigned seed, double rel_tol = 1e-9);

struct CorollaryReport {
    int n = 0, N = 0;
    bool admissible = false;
    bool pass = false;
    std::vector<int> root_indices; // lambda_i is proportional to exp(2 pi i s_i / N)
    std::complex<double> constant; // lambda_1^N
    double residual = 0;           // max-row-sum norm of X^N - cI
    std::vector<std::complex<double>> lambdas;
    Json to_json() const;
};

// Picks unit-modulus Casimir values so the lambda_i become distinct N-th roots
// of unity times a common factor, then checks (A A^{-T})^N = c I numerically.
CorollaryReport verify_corollary(const BnSetup &s, int N, unsigned seed, double tol = 1e-8);

} // namespace qg
