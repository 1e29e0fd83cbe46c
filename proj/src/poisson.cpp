#include "qgroupoid/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qgroupoid/casimirs.hpp"
#include "qgroupoid/parallel.hpp"

namespace qg {

void check_pair(int n, IndexPair p)
{
    if (p.i < 1 || p.k > n || p.i >= p.k)
        throw std::out_of_range("index pair (" + std::to_string(p.i) + "," + std::to_string(p.k) +
                                ") needs 1 <= i < k <= " + std::to_string(n));
}

int coordinate_count(int n)
{
    return n * (n - 1) / 2;
}

int coordinate_index(int n, IndexPair p)
{
    check_pair(n, p);
    // rows 1..i-1 hold (n-1) + ... + (n-i+1) coordinates
    return (p.i - 1) * (2 * n - p.i) / 2 + (p.k - p.i - 1);
}

IndexPair coordinate_pair(int n, int idx)
{
    for (int i = 1; i < n; ++i) {
        if (idx < n - i)
            return {i, i + 1 + idx};
        idx -= n - i;
    }
    throw std::out_of_range("coordinate index out of range");
}

UnipotentMatrix::UnipotentMatrix(int n) : n_(n), upper_(coordinate_count(n))
{
    if (n < 1)
        throw std::out_of_range("UnipotentMatrix: n must be positive");
}

UnipotentMatrix::UnipotentMatrix(int n, std::vector<Rational> e) : UnipotentMatrix(n)
{
    if (static_cast<int>(e.size()) != n * n)
        throw StructuralError("UnipotentMatrix: expected n*n entries");
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational &v = e[i * n + k];
            if (i == k && v != 1)
                throw StructuralError("UnipotentMatrix: diagonal must be 1");
            if (i > k && v != 0)
                throw StructuralError("UnipotentMatrix: must vanish below the diagonal");
            if (i < k)
                upper_[coordinate_index(n, {i + 1, k + 1})] = v;
        }
}

const Rational &UnipotentMatrix::sym(int i, int k) const
{
    if (i == k)
        return one_;
    if (i > k)
        std::swap(i, k);
    return upper_[coordinate_index(n_, {i, k})];
}

Rational UnipotentMatrix::at(int i, int k) const
{
    if (i == k)
        return 1;
    if (i > k)
        return 0;
    return upper_[coordinate_index(n_, {i, k})];
}

void UnipotentMatrix::set(IndexPair p, Rational v)
{
    upper_[coordinate_index(n_, p)] = std::move(v);
}

UnipotentMatrix random_unipotent(int n, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    UnipotentMatrix A(n);
    for (int c = 0; c < coordinate_count(n); ++c) {
        int p = num(rng), q = den(rng);
        A.set(coordinate_pair(n, c), Rational(p, q));
    }
    return A;
}

Rational closed_form_bracket(const UnipotentMatrix &A, IndexPair p, IndexPair r)
{
    check_pair(A.n(), p);
    check_pair(A.n(), r);
    return closed_form_generic<Rational>([&](int i, int k) { return A.sym(i, k); }, p, r);
}

namespace {

using RMat = std::vector<std::vector<Rational>>;

RMat zeros(int n)
{
    return RMat(n, std::vector<Rational>(n));
}

RMat mat_mul(const RMat &a, const RMat &b)
{
    const int n = static_cast<int>(a.size());
    RMat r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (int j = 0; j < n; ++j)
                if (b[k][j] != 0)
                    r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RMat transpose(const RMat &a)
{
    const int n = static_cast<int>(a.size());
    RMat r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[j][i] = a[i][j];
    return r;
}

// (1 + s sign(j-i))/2 entrywise
RMat half_projection(const RMat &a, int s)
{
    const int n = static_cast<int>(a.size());
    RMat r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int sg = (j > i) - (j < i);
            int w = 1 + s * sg;
            if (w != 0)
                r[i][j] = a[i][j] * Rational(w, 2);
        }
    return r;
}

RMat full(const UnipotentMatrix &A)
{
    const int n = A.n();
    RMat r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            r[i][k] = A.at(i + 1, k + 1);
    return r;
}

// D_A P_A(E_{l,j}); one call serves every a_ik against a_jl
RMat anchor_image(const RMat &A, const RMat &At, IndexPair r)
{
    const int n = static_cast<int>(A.size());
    RMat w = zeros(n);
    w[r.k - 1][r.i - 1] = 1;
    RMat g = half_projection(mat_mul(w, A), -1);
    RMat h = half_projection(mat_mul(transpose(w), At), +1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[i][j] -= h[i][j];
    RMat d = mat_mul(A, g);
    RMat gtA = mat_mul(transpose(g), A);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[i][j] += gtA[i][j];
    return d;
}

std::string pair_str(IndexPair p)
{
    return "a" + std::to_string(p.i) + std::to_string(p.k);
}

} // namespace

Rational anchor_bracket(const UnipotentMatrix &A, IndexPair p, IndexPair r)
{
    check_pair(A.n(), p);
    check_pair(A.n(), r);
    RMat a = full(A);
    RMat d = anchor_image(a, transpose(a), r);
    // Tr(E_{k,i} D) = D_{i,k}
    return Rational(-2) * d[p.i - 1][p.k - 1];
}

BracketTable closed_form_table(const UnipotentMatrix &A)
{
    const int n = A.n(), N = coordinate_count(n);
    BracketTable t;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            IndexPair p = coordinate_pair(n, x), r = coordinate_pair(n, y);
            t[{p, r}] = closed_form_bracket(A, p, r);
        }
    return t;
}

BracketTable anchor_table(const UnipotentMatrix &A)
{
    const int n = A.n(), N = coordinate_count(n);
    RMat a = full(A), at = transpose(a);
    BracketTable t;
    for (int y = 0; y < N; ++y) {
        IndexPair r = coordinate_pair(n, y);
        RMat d = anchor_image(a, at, r);
        for (int x = 0; x < N; ++x) {
            IndexPair p = coordinate_pair(n, x);
            t[{p, r}] = Rational(-2) * d[p.i - 1][p.k - 1];
        }
    }
    return t;
}

Polynomial Polynomial::constant(int vars, const Rational &c)
{
    Polynomial p(vars);
    p.add_term(Monomial(vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int vars, int idx)
{
    Polynomial p(vars);
    Monomial m(vars, 0);
    m.at(idx) = 1;
    p.add_term(m, 1);
    return p;
}

bool Polynomial::is_constant() const
{
    for (const auto &[m, c] : t_)
        for (int e : m)
            if (e != 0)
                return false;
    return true;
}

void Polynomial::widen(int vars)
{
    if (vars <= vars_)
        return;
    vars_ = vars;
    std::map<Monomial, Rational> t;
    for (auto &[m, c] : t_) {
        Monomial w = m;
        w.resize(vars, 0);
        t.emplace(std::move(w), c);
    }
    t_ = std::move(t);
}

void Polynomial::add_term(const Monomial &m0, const Rational &c)
{
    if (c == 0)
        return;
    Monomial m = m0;
    m.resize(vars_, 0);
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        t_.erase(it);
}

Polynomial Polynomial::derivative(int idx) const
{
    Polynomial r(vars_);
    for (const auto &[m, c] : t_) {
        if (m[idx] == 0)
            continue;
        Monomial d = m;
        --d[idx];
        r.add_term(d, c * m[idx]);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational> &x) const
{
    Rational s = 0;
    for (const auto &[m, c] : t_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e)
                t *= x[i];
        s += t;
    }
    return s;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    widen(o.vars_);
    for (const auto &[m, c] : o.t_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    widen(o.vars_);
    for (const auto &[m, c] : o.t_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    Polynomial r(std::max(a.vars_, b.vars_));
    for (const auto &[ma, ca] : a.t_)
        for (const auto &[mb, cb] : b.t_) {
            Polynomial::Monomial m(r.vars_, 0);
            for (size_t i = 0; i < ma.size(); ++i)
                m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i)
                m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial operator*(const Rational &c, const Polynomial &a)
{
    Polynomial r(a.vars_);
    for (const auto &[m, x] : a.t_)
        r.add_term(m, c * x);
    return r;
}

namespace {

// wraps Polynomial so the closed form template can use integer literals
struct PolyValue {
    Polynomial p;
    PolyValue(int c) : p(Polynomial::constant(0, c)) {} // NOLINT
    PolyValue(Polynomial q) : p(std::move(q)) {}        // NOLINT
    friend PolyValue operator+(const PolyValue &a, const PolyValue &b) { return {a.p + b.p}; }
    friend PolyValue operator-(const PolyValue &a, const PolyValue &b) { return {a.p - b.p}; }
    friend PolyValue operator*(const PolyValue &a, const PolyValue &b) { return {a.p * b.p}; }
};

} // namespace

Polynomial coordinate_bracket(int n, IndexPair p, IndexPair r)
{
    check_pair(n, p);
    check_pair(n, r);
    const int N = coordinate_count(n);
    auto entry = [&](int i, int k) -> PolyValue {
        if (i == k)
            return PolyValue(Polynomial::constant(N, 1));
        if (i > k)
            std::swap(i, k);
        return PolyValue(Polynomial::variable(N, coordinate_index(n, {i, k})));
    };
    Polynomial out = closed_form_generic<PolyValue>(entry, p, r).p;
    out.widen(N);
    return out;
}

PolyBracket::PolyBracket(int n) : n_(n)
{
    const int N = coordinate_count(n);
    table_.resize(static_cast<size_t>(N) * N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            table_[x * N + y] = coordinate_bracket(n, coordinate_pair(n, x), coordinate_pair(n, y));
}

Polynomial PolyBracket::operator()(const Polynomial &f, const Polynomial &g) const
{
    const int N = coordinate_count(n_);
    std::vector<Polynomial> df(N), dg(N);
    for (int x = 0; x < N; ++x) {
        df[x] = f.derivative(x);
        dg[x] = g.derivative(x);
    }
    Polynomial r(N);
    for (int x = 0; x < N; ++x) {
        if (df[x].is_zero())
            continue;
        for (int y = 0; y < N; ++y) {
            const Polynomial &b = table_[x * N + y];
            if (dg[y].is_zero() || b.is_zero())
                continue;
            r += df[x] * dg[y] * b;
        }
    }
    return r;
}

std::vector<Polynomial> characteristic_coefficients(int n)
{
    const int N = coordinate_count(n);
    // entry (i,k) of A - lambda A^T as {constant part, lambda part}
    auto a = [&](int i, int k) {
        if (i == k)
            return Polynomial::constant(N, 1);
        if (i > k)
            return Polynomial(N);
        return Polynomial::variable(N, coordinate_index(n, {i, k}));
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Polynomial> coeff(n + 1, Polynomial(N));
    do {
        int inversions = 0;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                inversions += perm[x] > perm[y];
        std::vector<Polynomial> prod{Polynomial::constant(N, inversions % 2 ? -1 : 1)};
        for (int x = 0; x < n; ++x) {
            Polynomial c0 = a(x + 1, perm[x] + 1);
            Polynomial c1 = Rational(-1) * a(perm[x] + 1, x + 1);
            std::vector<Polynomial> next(prod.size() + 1, Polynomial(N));
            for (size_t d = 0; d < prod.size(); ++d) {
                if (prod[d].is_zero())
                    continue;
                if (!c0.is_zero())
                    next[d] += prod[d] * c0;
                if (!c1.is_zero())
                    next[d + 1] += prod[d] * c1;
            }
            prod = std::move(next);
        }
        for (size_t d = 0; d < prod.size(); ++d)
            coeff[d] += prod[d];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coeff;
}

Report verify_anchor_equivalence(int n, int trials, unsigned seed)
{
    Report rep{"poisson_anchor", n, 0, {}};
    std::mt19937_64 rng(seed);
    std::vector<UnipotentMatrix> mats;
    for (int t = 0; t < trials; ++t)
        mats.push_back(random_unipotent(n, rng));
    std::vector<std::string> bad(trials);
    parallel_for(trials, [&](int t) {
        auto closed = closed_form_table(mats[t]);
        auto anchor = anchor_table(mats[t]);
        for (const auto &[key, v] : closed)
            if (anchor.at(key) != v) {
                std::ostringstream os;
                os << "trial " << t << ": {" << pair_str(key.first) << "," << pair_str(key.second)
                   << "} anchor " << anchor.at(key) << " closed form " << v;
                bad[t] = os.str();
                return;
            }
    });
    auto it = std::find_if(bad.begin(), bad.end(), [](const std::string &s) { return !s.empty(); });
    rep.add("anchor bracket equals the closed form on " + std::to_string(trials) + " random matrices",
            it == bad.end(), it == bad.end() ? std::string{} : *it);
    return rep;
}

Report verify_skew_symmetry(int n, int trials, unsigned seed)
{
    Report rep{"poisson_skew", n, 0, {}};
    std::mt19937_64 rng(seed);
    bool closed_ok = true, anchor_ok = true;
    for (int t = 0; t < trials; ++t) {
        auto A = random_unipotent(n, rng);
        auto c = closed_form_table(A);
        auto a = anchor_table(A);
        for (const auto &[key, v] : c) {
            std::pair<IndexPair, IndexPair> sw{key.second, key.first};
            closed_ok = closed_ok && v == -c.at(sw);
            anchor_ok = anchor_ok && a.at(key) == -a.at(sw);
        }
    }
    rep.add("closed form is skew-symmetric", closed_ok);
    rep.add("anchor bracket is skew-symmetric", anchor_ok);
    return rep;
}

Report verify_jacobi(int n)
{
    Report rep{"poisson_jacobi", n, 0, {}};
    const int N = coordinate_count(n);
    PolyBracket br(n);
    std::vector<Polynomial> x;
    for (int i = 0; i < N; ++i)
        x.push_back(Polynomial::variable(N, i));
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c)
                triples.push_back({a, b, c});
    std::vector<char> ok(triples.size(), 1);
    parallel_for(static_cast<int>(triples.size()), [&](int t) {
        auto [a, b, c] = triples[t];
        Polynomial j = br(x[a], br(x[b], x[c])) + br(x[b], br(x[c], x[a])) + br(x[c], br(x[a], x[b]));
        ok[t] = j.is_zero();
    });
    std::string detail = std::to_string(triples.size()) + " coordinate triples";
    for (size_t t = 0; t < triples.size(); ++t)
        if (!ok[t]) {
            detail = "fails on {" + pair_str(coordinate_pair(n, triples[t][0])) + "," +
                     pair_str(coordinate_pair(n, triples[t][1])) + "," +
                     pair_str(coordinate_pair(n, triples[t][2])) + "}";
            break;
        }
    bool all = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    rep.add("Jacobi identity holds as a polynomial identity", all, detail);
    return rep;
}

Report verify_det_casimirs(int n)
{
    Report rep{"poisson_det_casimirs", n, 0, {}};
    const int N = coordinate_count(n);
    PolyBracket br(n);
    auto coeff = characteristic_coefficients(n);
    bool central = true;
    std::string detail;
    for (size_t d = 0; d < coeff.size() && central; ++d)
        for (int x = 0; x < N; ++x)
            if (!br(coeff[d], Polynomial::variable(N, x)).is_zero()) {
                central = false;
                detail = "lambda^" + std::to_string(d) + " coefficient fails against " +
                         pair_str(coordinate_pair(n, x));
                break;
            }
    rep.add("coefficients of det(A - lambda A^T) Poisson-commute with every a_ik", central, detail);

    bool reciprocal = true;
    for (int d = 0; d <= n; ++d) {
        Polynomial s = coeff[d];
        if (n % 2 == 0)
            s -= coeff[n - d];
        else
            s += coeff[n - d];
        reciprocal = reciprocal && s.is_zero();
    }
    rep.add("det(A - lambda A^T) is (anti-)reciprocal", reciprocal);

    std::set<std::map<Polynomial::Monomial, Rational>> distinct;
    for (const auto &c : coeff)
        if (!c.is_constant()) {
            Polynomial neg = Rational(-1) * c;
            if (!distinct.count(neg.terms()))
                distinct.insert(c.terms());
        }
    int count = static_cast<int>(distinct.size());
    rep.add("floor(n/2) non-constant coefficients up to reciprocity", count == n / 2,
            "count " + std::to_string(count));
    return rep;
}

ClusterBracketSetup make_cluster_setup(int n)
{
    ClusterBracketSetup s;
    s.n = n;
    s.bn = make_bn_setup(n);
    s.A = quantum_A(s.bn);
    return s;
}

Rational cluster_calibration()
{
    return Rational(1);
}

namespace {

struct Evaluated {
    std::vector<std::pair<std::vector<double>, double>> terms; // half exponents, value
    double value = 0;
};

Evaluated evaluate_terms(const TorusElement &x, const std::vector<double> &z)
{
    Evaluated e;
    for (const auto &[lat, coeff] : x.terms()) {
        double c = 0;
        for (const auto &t : coeff.terms())
            c += t.second.convert_to<double>();
        double v = c;
        std::vector<double> half(lat.size());
        for (size_t i = 0; i < lat.size(); ++i) {
            half[i] = 0.5 * lat[i];
            if (lat[i] != 0)
                v *= std::pow(z[i], half[i]);
        }
        e.terms.push_back({std::move(half), v});
        e.value += v;
    }
    return e;
}

double raw_bracket(const Evaluated &a, const Evaluated &b, const SkewForm &f)
{
    const int d = f.dim();
    double s = 0;
    for (const auto &[ea, va] : a.terms)
        for (const auto &[eb, vb] : b.terms) {
            double pair = 0;
            for (int x = 0; x < d; ++x) {
                if (ea[x] == 0)
                    continue;
                for (int y = 0; y < d; ++y)
                    if (eb[y] != 0)
                        pair += ea[x] * eb[y] * (f.at4(x, y) / 2.0);
            }
            s += pair * va * vb;
        }
    return s;
}

std::vector<double> random_point(int dim, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    std::vector<double> z(dim);
    for (auto &x : z)
        x = std::exp(u(rng));
    return z;
}

} // namespace

double cluster_bracket(const ClusterBracketSetup &s, IndexPair p, IndexPair r, const std::vector<double> &z,
                       double c)
{
    check_pair(s.n, p);
    check_pair(s.n, r);
    auto a = evaluate_terms(s.A.at(p.i - 1, p.k - 1), z);
    auto b = evaluate_terms(s.A.at(r.i - 1, r.k - 1), z);
    return c * raw_bracket(a, b, *s.bn.an_form);
}

double fit_cluster_constant(const ClusterBracketSetup &n3, unsigned seed)
{
    if (n3.n < 3)
        throw std::invalid_argument("calibration needs n >= 3");
    std::mt19937_64 rng(seed);
    auto z = random_point(n3.bn.an->size(), rng);
    double raw = cluster_bracket(n3, {1, 2}, {2, 3}, z, 1.0);
    double a12 = specialize(n3.A.at(0, 1), 1.0, z), a23 = specialize(n3.A.at(1, 2), 1.0, z),
           a13 = specialize(n3.A.at(0, 2), 1.0, z);
    return (a12 * a23 - 2 * a13) / raw;
}

ClusterCheck verify_cluster_bracket(const ClusterBracketSetup &s, int points, unsigned seed, double rel_tol)
{
    const int n = s.n, N = coordinate_count(n);
    ClusterCheck out;
    out.report = Report{"poisson_cluster", n, 0, {}};
    const double c = cluster_calibration().convert_to<double>();
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> zs;
    for (int t = 0; t < points; ++t)
        zs.push_back(random_point(s.bn.an->size(), rng));

    std::vector<TorusElement> casimirs;
    for (int i = 1; 2 * i <= n; ++i)
        casimirs.push_back(casimir_C(*s.bn.an, s.bn.an_form, i).value);

    std::vector<double> worst(points, 0.0), worst_cas(points, 0.0);
    parallel_for(points, [&](int t) {
        const auto &z = zs[t];
        std::vector<Evaluated> ev(N);
        std::vector<double> vals(N);
        for (int x = 0; x < N; ++x) {
            IndexPair p = coordinate_pair(n, x);
            ev[x] = evaluate_terms(s.A.at(p.i - 1, p.k - 1), z);
            vals[x] = ev[x].value;
        }
        auto entry = [&](int i, int k) {
            if (i == k)
                return 1.0;
            if (i > k)
                std::swap(i, k);
            return vals[coordinate_index(n, {i, k})];
        };
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y) {
                IndexPair p = coordinate_pair(n, x), r = coordinate_pair(n, y);
                double got = c * raw_bracket(ev[x], ev[y], *s.bn.an_form);
                double want = closed_form_generic<double>(entry, p, r);
                double dev = std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1.0});
                worst[t] = std::max(worst[t], dev);
            }
        for (const auto &cas : casimirs) {
            auto ec = evaluate_terms(cas, z);
            for (int x = 0; x < N; ++x) {
                double v = c * raw_bracket(ec, ev[x], *s.bn.an_form);
                double scale = std::max(std::abs(ec.value * vals[x]), 1.0);
                worst_cas[t] = std::max(worst_cas[t], std::abs(v) / scale);
            }
        }
    });
    double w = *std::max_element(worst.begin(), worst.end());
    double wc = casimirs.empty() ? 0.0 : *std::max_element(worst_cas.begin(), worst_cas.end());
    out.worst_rel_dev = std::max(w, wc);
    std::ostringstream d1, d2;
    d1 << "c = " << cluster_calibration() << ", worst relative deviation " << w << " over " << points << " points";
    d2 << "worst relative value " << wc;
    out.report.add("cluster bracket matches the closed form", w <= rel_tol, d1.str());
    out.report.add("C_i have vanishing cluster bracket with every a_ik", wc <= rel_tol, d2.str());
    return out;
}

} // namespace qg
