#include "qgroupoid/groupoid.hpp"

#include <stdexcept>

namespace qg {

ClassicalMatrix matrix_Q(int n)
{
    std::vector<QCoeff> d;
    for (int i = 1; i <= n; ++i)
        d.push_back(QCoeff::qhalf(-2 * i + 1));
    return ClassicalMatrix::diagonal(d);
}

ClassicalMatrix matrix_S(int n)
{
    ClassicalMatrix S(n, n);
    for (int i = 1; i <= n; ++i)
        S.at(i - 1, n - i) = QCoeff(i % 2 == 1 ? 1 : -1);
    return S;
}

ClassicalMatrix matrix_QS(int n)
{
    return matrix_Q(n) * matrix_S(n);
}

TransportMatrices transport_matrices(const TransitionData &t)
{
    ClassicalMatrix qs = matrix_QS(t.M1.rows());
    return {qs * t.M1, qs * t.M2, qs * t.M3};
}

QMatrix assemble_A_general(const TransportMatrices &m, const ClassicalMatrix &D)
{
    return ((m.M1.transpose() * D) * m.M3) * m.M1;
}

BnSetup make_bn_setup(int n)
{
    BnSetup s;
    s.n = n;
    s.nets = build_networks_bn(n);
    s.transition = bn_transition_matrices(s.nets);
    s.an = std::make_shared<const Quiver>(amalgamate_to_An(*s.nets.quiver));
    s.an_form = skew_form(*s.an);
    return s;
}

QMatrix assemble_A(const TransitionData &t)
{
    const int n = t.M1.rows();
    if (t.M3.rows() != n || t.M1.cols() != n)
        throw StructuralError("assemble_A: shape mismatch");
    return ((t.M1.transpose() * t.M3) * matrix_QS(n)) * t.M1;
}

Lattice Kl_vector(int n, int l)
{
    if (l < 1 || l > n)
        throw std::out_of_range("K_l: l out of range");
    Lattice v((n + 1) * (n + 2) / 2, 0);
    for (int i = 1; i <= l; ++i)
        v[bn_index(n, {i - 1, n - l, l - i + 1})] += 2;
    v[bn_index(n, {l, n - l, 0})] += 4;
    for (int j = 1; j <= n - l; ++j)
        v[bn_index(n, {l, j - 1, n - l - j + 1})] += 2;
    return v;
}

TorusElement compute_Kl(const Quiver &bn, const FormPtr &form, int l)
{
    if (bn.kind() != QuiverKind::Bn)
        throw StructuralError("compute_Kl needs a b_n quiver");
    return TorusElement::monomial(form, Kl_vector(bn.n(), l));
}

TorusElement specialize_Kl_one(const TorusElement &x, const Quiver &bn, const Quiver &an, const FormPtr &an_form,
                               const std::vector<int> &order)
{
    const int n = bn.n();
    std::vector<int> ls = order;
    if (ls.empty())
        for (int l = 1; l <= n; ++l)
            ls.push_back(l);
    std::vector<Lattice> K;
    for (int l = 0; l <= n; ++l)
        K.push_back(l == 0 ? Lattice{} : Kl_vector(n, l));
    TorusElement out(an_form);
    for (const auto &[lat, c] : x.terms()) {
        Lattice v = lat;
        for (int l : ls) {
            int piv = bn_index(n, {l, n - l, 0});
            if (v[piv] % 2 != 0)
                throw StructuralError("K_l specialization: odd exponent on a squared generator");
            int k = v[piv] / 2;
            for (size_t u = 0; u < v.size(); ++u)
                v[u] -= k * (K[l][u] / 2);
        }
        auto p = project_to(an, bn, v);
        if (!p)
            throw StructuralError("K_l specialization: monomial does not reduce to the A_n torus");
        out.add_term(*p, c);
    }
    return out;
}

QMatrix specialize_Kl_one(const QMatrix &A, const Quiver &bn, const Quiver &an, const FormPtr &an_form,
                          const std::vector<int> &order)
{
    QMatrix r(A.rows(), A.cols(), an_form);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            r.at(i, j) = specialize_Kl_one(A.at(i, j), bn, an, an_form, order);
    return r;
}

QMatrix quantum_A(const BnSetup &s)
{
    return specialize_Kl_one(assemble_A(s.transition), *s.nets.quiver, *s.an, s.an_form);
}

QMatrix dagger_A_factorized(const TransitionData &t)
{
    const int n = t.M1.rows();
    std::vector<QCoeff> qinv;
    for (int i = 1; i <= n; ++i)
        qinv.push_back(QCoeff::qhalf(2 * i - 1));
    ClassicalMatrix middle = matrix_S(n).transpose() * ClassicalMatrix::diagonal(qinv);
    return ((t.M1.transpose() * middle) * t.M3.transpose()) * t.M1;
}

CanonicalFormCheck check_canonical_form(const QMatrix &A)
{
    CanonicalFormCheck c;
    const QCoeff diag = QCoeff::qhalf(-1);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            const TorusElement &x = A.at(i, j);
            if (i > j && !x.is_zero())
                c.upper_triangular = false;
            if (i == j) {
                bool unit = x.is_monomial() && lattice_is_zero(x.terms().begin()->first) &&
                            x.terms().begin()->second == diag;
                if (!unit)
                    c.unit_diagonal = false;
            }
            for (const auto &[lat, coeff] : x.terms())
                for (const auto &t : coeff.terms())
                    if (t.second <= 0)
                        c.positive = false;
        }
    return c;
}

} // namespace qg
