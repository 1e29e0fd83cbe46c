#pragma once

#include <array>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgroupoid/groupoid.hpp"
#include "qgroupoid/report.hpp"

namespace qg {

using Rational = boost::multiprecision::cpp_rational;

// 1-based entry index (i,k) with i < k
struct IndexPair {
    int i = 0, k = 0;
    friend auto operator<=>(const IndexPair &, const IndexPair &) = default;
};

void check_pair(int n, IndexPair p);

// coordinates a_ik, i < k, numbered row by row: (1,2), (1,3), ..., (n-1,n)
int coordinate_count(int n);
int coordinate_index(int n, IndexPair p);
IndexPair coordinate_pair(int n, int idx);

class UnipotentMatrix {
public:
    explicit UnipotentMatrix(int n);
    // full n x n matrix, row-major; throws unless unit upper-triangular
    UnipotentMatrix(int n, std::vector<Rational> entries);

    int n() const { return n_; }
    // 1-based, any i,k: a_ii = 1 and a_ki reads a_ik (the symmetric completion)
    const Rational &sym(int i, int k) const;
    // 1-based, the actual matrix entry
    Rational at(int i, int k) const;
    void set(IndexPair p, Rational v);

private:
    int n_;
    std::vector<Rational> upper_; // indexed by coordinate_index
    Rational one_{1};
};

// entries p/q with |p| <= 9, 1 <= q <= 5
UnipotentMatrix random_unipotent(int n, std::mt19937_64 &rng);

// The five-case closed form on any commutative value type. `a(i,k)` must
// return the symmetric reading (a_ii = 1, a_ki = a_ik).
template <class T, class Entry>
T closed_form_generic(Entry a, IndexPair p, IndexPair r)
{
    if (p == r)
        return T(0);
    // antisymmetric normalization: p starts first, or ends last on a shared start
    if (r.i < p.i || (r.i == p.i && r.k < p.k)) {
        T v = closed_form_generic<T>(a, r, p);
        return T(0) - v;
    }
    const int i = p.i, k = p.k, j = r.i, l = r.k;
    if (i == j) // i < k < l
        return T(0) - a(i, k) * a(i, l) + T(2) * a(k, l);
    if (k == l) // i < j < k
        return T(0) - a(i, k) * a(j, k) + T(2) * a(i, j);
    if (k == j) // i < k < l
        return a(i, k) * a(k, l) - T(2) * a(i, l);
    if (k < j || l < k) // disjoint or nested
        return T(0);
    // i < j < k < l
    return T(2) * (a(i, j) * a(k, l) - a(i, l) * a(k, j));
}

Rational closed_form_bracket(const UnipotentMatrix &A, IndexPair p, IndexPair r);

// -2 Tr(da_ik D_A P_A(da_jl)) with da_jl = E_{l,j}, D_A g = A g + g^T A and
// P_A w = P_-(w A) - P_+(w^T A^T), the halves on the diagonal
Rational anchor_bracket(const UnipotentMatrix &A, IndexPair p, IndexPair r);

// every ordered pair of coordinates
using BracketTable = std::map<std::pair<IndexPair, IndexPair>, Rational>;
BracketTable closed_form_table(const UnipotentMatrix &A);
BracketTable anchor_table(const UnipotentMatrix &A);

// Sparse polynomial over the rationals in the coordinates a_ik.
class Polynomial {
public:
    using Monomial = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int vars) : vars_(vars) {}
    static Polynomial constant(int vars, const Rational &c);
    static Polynomial variable(int vars, int idx);

    int vars() const { return vars_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Rational> &terms() const { return t_; }

    // pads every monomial with zero exponents up to `vars` variables
    void widen(int vars);
    Polynomial derivative(int idx) const;
    Rational evaluate(const std::vector<Rational> &x) const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Rational &c, const Polynomial &a);
    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.t_ == b.t_; }

private:
    void add_term(const Monomial &m, const Rational &c);
    int vars_ = 0;
    std::map<Monomial, Rational> t_;
};

// {x_p, x_r} from the closed form, as polynomials
Polynomial coordinate_bracket(int n, IndexPair p, IndexPair r);

// {f, g} = sum_{p,r} df/dx_p dg/dx_r {x_p, x_r}
class PolyBracket {
public:
    explicit PolyBracket(int n);
    int n() const { return n_; }
    Polynomial operator()(const Polynomial &f, const Polynomial &g) const;

private:
    int n_;
    std::vector<Polynomial> table_; // p * count + r
};

// coefficients of det(A - lambda A^T), index = power of lambda
std::vector<Polynomial> characteristic_coefficients(int n);

// exact checks; witnesses report the offending coordinate indices
Report verify_anchor_equivalence(int n, int trials, unsigned seed);
Report verify_skew_symmetry(int n, int trials, unsigned seed);
Report verify_jacobi(int n);
Report verify_det_casimirs(int n);

// Cluster-induced bracket at q = 1 on the A_n torus:
// {a, b}(z) = c * sum (z_a da/dz_a)(z_b db/dz_b) eps_ab, eps = doubled pairing
struct ClusterBracketSetup {
    int n = 0;
    BnSetup bn;
    QMatrix A; // quantum A after K_l = 1
};

ClusterBracketSetup make_cluster_setup(int n);

// the stored constant, fitted once on {a_12, a_23} at n = 3
Rational cluster_calibration();

double cluster_bracket(const ClusterBracketSetup &s, IndexPair p, IndexPair r, const std::vector<double> &z,
                       double c);

// fits c on {a_12, a_23} from one random point; the stored value comes from
// n = 3, and refitting at larger n must give the same number
double fit_cluster_constant(const ClusterBracketSetup &n3, unsigned seed);

struct ClusterCheck {
    Report report;
    double worst_rel_dev = 0;
};

// all coordinate pairs against the closed form at `points` random z, plus the
// brackets of the C_i with every coordinate
ClusterCheck verify_cluster_bracket(const ClusterBracketSetup &s, int points, unsigned seed, double rel_tol = 1e-9);

} // namespace qg
