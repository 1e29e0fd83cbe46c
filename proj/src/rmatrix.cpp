#include "qgroupoid/rmatrix.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "qgroupoid/parallel.hpp"

namespace qg {

ClassicalMatrix partial_transpose(const ClassicalMatrix &m, int k, int leg)
{
    if (m.rows() != k * k || m.cols() != k * k)
        throw StructuralError("partial transpose: expected a k^2 x k^2 matrix");
    ClassicalMatrix r(k * k, k * k);
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < k; ++a)
            for (int j = 0; j < k; ++j)
                for (int b = 0; b < k; ++b) {
                    const QCoeff &x = m.at(i * k + a, j * k + b);
                    if (x.is_zero())
                        continue;
                    if (leg == 1)
                        r.at(j * k + a, i * k + b) = x;
                    else
                        r.at(i * k + b, j * k + a) = x;
                }
    return r;
}

ClassicalMatrix build_R(int k, RVariant v, int qsign)
{
    if (k < 1)
        throw std::invalid_argument("build_R: k must be positive");
    if (qsign != 1 && qsign != -1)
        throw std::invalid_argument("build_R: qsign must be +1 or -1");
    if (v == RVariant::Inverse)
        return build_R(k, RVariant::Plain, -qsign);
    ClassicalMatrix R(k * k, k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            R.at(i * k + j, i * k + j) = QCoeff(1);
    for (int i = 0; i < k; ++i)
        R.at(i * k + i, i * k + i) = QCoeff::monomial(4 * qsign);
    QCoeff off = QCoeff::monomial(4 * qsign) - QCoeff::monomial(-4 * qsign);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j)
            R.at(i * k + j, j * k + i) = off;
    switch (v) {
    case RVariant::Transposed:
        return R.transpose();
    case RVariant::T1:
        return partial_transpose(R, k, 1);
    case RVariant::T2:
        return partial_transpose(R, k, 2);
    default:
        return R;
    }
}

ClassicalMatrix flip_matrix(int k)
{
    ClassicalMatrix P(k * k, k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            P.at(i * k + j, j * k + i) = QCoeff(1);
    return P;
}

namespace {

TensorOperator op(const ClassicalMatrix &c, int k, const FormPtr &f)
{
    return TensorOperator::classical(c, k, k, f);
}

void compare(Report &rep, const std::string &name, const TensorOperator &lhs, const TensorOperator &rhs)
{
    auto d = TensorOperator::first_difference(lhs, rhs);
    if (d.first < 0)
        rep.add(name, true);
    else
        rep.add(name, false, "sides differ", d);
}

void require_square(const QMatrix &m, int n, const char *what)
{
    if (m.rows() != n || m.cols() != n)
        throw StructuralError(std::string(what) + ": expected square matrices of equal size");
}

} // namespace

Report verify_thMM(const QMatrix &M1, const QMatrix &M2, const QMatrix &M3, int qsign)
{
    const int n = M1.rows();
    require_square(M1, n, "verify_thMM");
    require_square(M2, n, "verify_thMM");
    require_square(M3, n, "verify_thMM");
    const FormPtr &f = M1.form();
    Report rep{"transport_relations", n, qsign, {}};
    TensorOperator R = op(build_R(n, RVariant::Plain, qsign), n, f);
    TensorOperator RT = op(build_R(n, RVariant::Transposed, qsign), n, f);
    const QMatrix *Ms[3] = {&M1, &M2, &M3};
    for (int i = 0; i < 3; ++i) {
        TensorOperator a1 = sheet(*Ms[i], 1, n), a2 = sheet(*Ms[i], 2, n);
        std::string idx = std::to_string(i + 1);
        compare(rep, "R^T M" + idx + "^1 M" + idx + "^2 = M" + idx + "^2 M" + idx + "^1 R", RT * (a1 * a2),
                (a2 * a1) * R);
    }
    TensorOperator m1a = sheet(M1, 1, n), m2b = sheet(M2, 2, n), m3b = sheet(M3, 2, n), m2a = sheet(M2, 1, n);
    compare(rep, "M1^1 M2^2 = M2^2 M1^1 R", m1a * m2b, (m2b * m1a) * R);
    compare(rep, "M1^1 M3^2 = M3^2 R^T M1^1", m1a * m3b, (m3b * RT) * m1a);
    compare(rep, "M2^1 M3^2 = R M3^2 M2^1", m2a * m3b, (R * m3b) * m2a);
    return rep;
}

Report verify_groupoid(const QMatrix &M1, const QMatrix &M2, const QMatrix &M3)
{
    const int n = M1.rows();
    require_square(M1, n, "verify_groupoid");
    require_square(M2, n, "verify_groupoid");
    require_square(M3, n, "verify_groupoid");
    Report rep{"groupoid", n, 0, {}};
    QMatrix lhs = M3 * M1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(lhs.at(i, j) == M2.at(i, j))) {
                rep.add("M3 M1 = M2", false, "entries differ", std::make_pair(i, j));
                return rep;
            }
    rep.add("M3 M1 = M2", true);
    return rep;
}

Report verify_rmm(const QMatrix &M, int qsign)
{
    const int n = M.cols();
    if (M.rows() != 2 * n)
        throw StructuralError("verify_rmm: expected a stacked 2n x n matrix");
    const FormPtr &f = M.form();
    Report rep{"stacked_rmatrix_relation", n, qsign, {}};
    TensorOperator lhs = op(build_R(2 * n, RVariant::Plain, qsign), 2 * n, f) * (sheet(M, 1, 2 * n) * sheet(M, 2, n));
    TensorOperator rhs = (sheet(M, 2, 2 * n) * sheet(M, 1, n)) * op(build_R(n, RVariant::Plain, qsign), n, f);
    compare(rep, "R_2n M^1 M^2 = M^2 M^1 R_n", lhs, rhs);
    return rep;
}

Report verify_transition_relations(const QMatrix &T1, const QMatrix &T2, int qsign)
{
    const int n = T1.rows();
    require_square(T1, n, "verify_transition_relations");
    require_square(T2, n, "verify_transition_relations");
    Report rep{"transition_relations", n, qsign, {}};
    TensorOperator R = op(build_R(n, RVariant::Plain, qsign), n, T1.form());
    const QMatrix *Ts[2] = {&T1, &T2};
    for (int i = 0; i < 2; ++i) {
        TensorOperator a1 = sheet(*Ts[i], 1, n), a2 = sheet(*Ts[i], 2, n);
        std::string idx = std::to_string(i + 1);
        compare(rep, "R T" + idx + "^1 T" + idx + "^2 = T" + idx + "^2 T" + idx + "^1 R", R * (a1 * a2),
                (a2 * a1) * R);
    }
    TensorOperator t1 = sheet(T1, 1, n), t2 = sheet(T2, 2, n);
    compare(rep, "T1^1 T2^2 = T2^2 T1^1 R", t1 * t2, (t2 * t1) * R);
    return rep;
}

namespace {

// rows of a sparse operator as (col, entry) lists
std::vector<std::vector<std::pair<int, const TorusElement *>>> rows_of(const TensorOperator &t)
{
    std::vector<std::vector<std::pair<int, const TorusElement *>>> r(t.rows());
    for (const auto &[key, x] : t.entries())
        r[key.first].emplace_back(key.second, &x);
    return r;
}

std::vector<TorusElement> row_product(const std::vector<std::pair<int, const TorusElement *>> &row,
                                      const std::vector<std::vector<std::pair<int, const TorusElement *>>> &rhs,
                                      int cols, const FormPtr &f)
{
    std::vector<TorusElement> out(cols, TorusElement(f));
    for (const auto &[u, x] : row)
        for (const auto &[c, y] : rhs[u])
            out[c] += *x * *y;
    return out;
}

} // namespace

Report verify_reflection(const QMatrix &A, int qsign, ReflectionMode mode)
{
    const int n = A.rows();
    require_square(A, n, "verify_reflection");
    const FormPtr &f = A.form();
    Report rep{"reflection_equation", n, qsign, {}};
    TensorOperator R = op(build_R(n, RVariant::Plain, qsign), n, f);
    TensorOperator Rt1 = op(build_R(n, RVariant::T1, qsign), n, f);
    TensorOperator A1 = sheet(A, 1, n), A2 = sheet(A, 2, n);
    const std::string name = "R A^1 R^t1 A^2 = A^2 R^t1 A^1 R";
    if (mode == ReflectionMode::Materialized) {
        compare(rep, name, ((R * A1) * Rt1) * A2, ((A2 * Rt1) * A1) * R);
        return rep;
    }
    // Linear factors are materialized; the quadratic products are formed one
    // row at a time and discarded after comparison.
    TensorOperator X = (R * A1) * Rt1;
    TensorOperator Y = A2 * Rt1;
    TensorOperator Z = A1 * R;
    auto xr = rows_of(X), a2r = rows_of(A2), yr = rows_of(Y), zr = rows_of(Z);
    const int N = n * n;
    std::vector<int> bad_col(N, -1);
    parallel_for(N, [&](int r) {
        auto lhs = row_product(xr[r], a2r, N, f);
        auto rhs = row_product(yr[r], zr, N, f);
        for (int c = 0; c < N; ++c)
            if (!(lhs[c] == rhs[c])) {
                bad_col[r] = c;
                return;
            }
    });
    for (int r = 0; r < N; ++r)
        if (bad_col[r] >= 0) {
            rep.add(name, false, "sides differ", std::make_pair(r, bad_col[r]));
            return rep;
        }
    rep.add(name, true);
    return rep;
}

ClassicalMatrix random_unit_diagonal(int n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> e(-3, 3), s(0, 1);
    std::vector<QCoeff> d;
    for (int i = 0; i < n; ++i)
        d.push_back(QCoeff::qhalf(e(rng), s(rng) ? 1 : -1));
    return ClassicalMatrix::diagonal(d);
}

ClassicalMatrix inverse_unit_diagonal(const ClassicalMatrix &d)
{
    std::vector<QCoeff> inv;
    for (int i = 0; i < d.rows(); ++i) {
        const QCoeff &x = d.at(i, i);
        if (!x.is_unit())
            throw NotInvertible("diagonal entry is not a unit");
        const auto &t = x.terms()[0];
        inv.push_back(QCoeff::monomial(-t.first, t.second));
    }
    return ClassicalMatrix::diagonal(inv);
}

} // namespace qg
