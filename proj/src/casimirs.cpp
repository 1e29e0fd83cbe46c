#include "qgroupoid/casimirs.hpp"

#include <map>
#include <stdexcept>

#include "qgroupoid/groupoid.hpp"
#include "qgroupoid/linalg.hpp"

namespace qg {

std::string casimir_kind_name(CasimirKind k)
{
    switch (k) {
    case CasimirKind::T:
        return "T";
    case CasimirKind::C:
        return "C";
    case CasimirKind::K:
        return "K";
    case CasimirKind::R:
        return "R";
    }
    return "?";
}

Json CasimirElement::to_json() const
{
    return {{"kind", casimir_kind_name(kind)}, {"index", index}, {"exponents_doubled", vector()}};
}

Lattice class_vector(const Quiver &reduced, const std::vector<std::pair<Label, int>> &items)
{
    std::map<Label, int> raw;
    for (const auto &[l, e] : items)
        raw[l] += e;
    Lattice v(reduced.size(), 0);
    std::map<int, int> seen;
    for (const auto &[l, e] : raw) {
        int c = reduced.find(l);
        if (c < 0)
            throw StructuralError("label " + label_str(l) + " has no class in the reduced quiver");
        auto it = seen.find(c);
        if (it != seen.end()) {
            if (it->second != e)
                throw StructuralError("members of class " + reduced.vertex(c).tag + " carry different exponents");
            continue;
        }
        seen[c] = e;
        v[c] = 2 * e;
    }
    return v;
}

namespace {

std::vector<std::pair<Label, int>> T_items(int n, int i)
{
    std::vector<std::pair<Label, int>> r;
    for (int j = 0; j <= n - i; ++j)
        r.push_back({{j, n - j - i, i}, 1});
    return r;
}

Lattice bn_vector(int n, const std::vector<std::pair<Label, int>> &items)
{
    Lattice v((n + 1) * (n + 2) / 2, 0);
    for (const auto &[l, e] : items)
        v[bn_index(n, l)] += 2 * e;
    return v;
}

} // namespace

CasimirElement casimir_T(const Quiver &bn, const FormPtr &form, int i)
{
    const int n = bn.n();
    if (bn.kind() != QuiverKind::Bn)
        throw StructuralError("T_i lives on the b_n quiver");
    if (i < 1 || i > n)
        throw std::out_of_range("T_i: i out of range");
    return {CasimirKind::T, i, TorusElement::monomial(form, bn_vector(n, T_items(n, i)))};
}

CasimirElement casimir_C(const Quiver &reduced, const FormPtr &form, int i)
{
    const int n = reduced.n();
    if (reduced.kind() != QuiverKind::An && reduced.kind() != QuiverKind::Sp2m)
        throw StructuralError("C_i lives on an amalgamated quiver");
    if (i < 1 || 2 * i > n)
        throw std::out_of_range("C_i: i out of range");
    auto items = T_items(n, i);
    if (2 * i < n) {
        auto more = T_items(n, n - i);
        items.insert(items.end(), more.begin(), more.end());
    }
    return {CasimirKind::C, i, TorusElement::monomial(form, class_vector(reduced, items))};
}

CasimirElement casimir_K_bn(const Quiver &bn, const FormPtr &form, int l)
{
    return {CasimirKind::K, l, compute_Kl(bn, form, l)};
}

CasimirElement casimir_K_sp(const Quiver &sp, const FormPtr &form, int l)
{
    if (sp.kind() != QuiverKind::Sp2m)
        throw StructuralError("quasi-Casimir K_l needs the Sp_2m quiver");
    const int n = sp.n();
    if (l < 1 || l > n)
        throw std::out_of_range("K_l: l out of range");
    const int L = n + 1 - l;
    int squared = sp.find(sp_S_label(n / 2, l));
    Lattice v(sp.size(), 0);
    auto mark = [&](const Label &x) {
        int c = sp.find(x);
        if (c != squared)
            v[c] = 2;
    };
    for (int i = 1; i <= L; ++i)
        mark({i - 1, n - L, L - i + 1});
    for (int j = 1; j <= n - L; ++j)
        mark({L, j - 1, n - L - j + 1});
    v[squared] = 4;
    return {CasimirKind::K, l, TorusElement::monomial(form, v)};
}

CasimirElement casimir_R(const Quiver &sp, const FormPtr &form, int j)
{
    if (sp.kind() != QuiverKind::Sp2m)
        throw StructuralError("R_j needs the Sp_2m quiver");
    const int n = sp.n(), m = n / 2;
    if (j < 1 || j > m)
        throw std::out_of_range("R_j: j out of range");
    auto K = [&](int l) { return casimir_K_sp(sp, form, (l - 1) % n + 1).vector(); };
    auto Q = [&](int k) {
        int r = ((k / 2) - 1) % m + 1;
        Lattice v(sp.size(), 0);
        v[sp.find_tag("Q" + std::to_string(2 * r))] = 2;
        return v;
    };
    Lattice v(sp.size(), 0);
    v = lattice_add(v, lattice_scale(Q(2 * j), 2));
    v = lattice_add(v, K(2 * j));
    v = lattice_add(v, lattice_scale(K(2 * j + 1), 2));
    v = lattice_add(v, K(2 * j + 2));
    v = lattice_add(v, lattice_scale(Q(2 * j + 2), 2));
    return {CasimirKind::R, j, TorusElement::monomial(form, v)};
}

bool is_central_vector(const Lattice &v, const Quiver &q, const FormPtr &form)
{
    auto row = form->row(v);
    for (int u : q.unfrozen())
        if (row[u] != 0)
            return false;
    return true;
}

bool is_central(const TorusElement &e, const Quiver &q)
{
    if (e.is_zero())
        return true;
    if (!e.is_monomial())
        throw StructuralError("is_central expects a single monomial");
    return is_central_vector(e.terms().begin()->first, q, e.form());
}

int lattice_rank(const std::vector<Lattice> &vs)
{
    if (vs.empty())
        return 0;
    return integer_rank(to_int_matrix(vs));
}

Report verify_casimirs_An(int n)
{
    Report rep{"casimirs_An", n, 0, {}};
    Quiver an = amalgamate_to_An(build_bn(n));
    FormPtr f = skew_form(an);
    std::vector<Lattice> vs;
    bool central = true;
    for (int i = 1; 2 * i <= n; ++i) {
        auto c = casimir_C(an, f, i);
        central = central && is_central(c.value, an);
        vs.push_back(c.vector());
    }
    rep.add("every C_i is central on A_n", central);
    int r = lattice_rank(vs);
    rep.add("C_i independent, count floor(n/2)", r == n / 2, "rank " + std::to_string(r));
    int cd = center_dimension(an);
    rep.add("A_n centre dimension = floor(n/2)", cd == n / 2, "dimension " + std::to_string(cd));
    return rep;
}

Report verify_Kl_bn(int n)
{
    Report rep{"K_l_bn", n, 0, {}};
    Quiver bn = build_bn(n);
    FormPtr f = skew_form(bn);
    Quiver an = amalgamate_to_An(bn);
    std::vector<Lattice> K;
    for (int l = 1; l <= n; ++l)
        K.push_back(Kl_vector(n, l));
    bool mutual = true;
    for (const auto &a : K)
        for (const auto &b : K)
            mutual = mutual && f->pair4(a, b) == 0;
    rep.add("K_l commute pairwise", mutual);
    // reduced generators as b_n vectors: pair products and interior vertices
    bool reduced = true;
    for (const auto &v : an.vertices()) {
        Lattice g = lift_to(an, bn, [&] {
            Lattice e(an.size(), 0);
            e[v.id] = 2;
            return e;
        }());
        for (const auto &k : K)
            reduced = reduced && f->pair4(k, g) == 0;
    }
    rep.add("K_l commute with every reduced generator", reduced);
    return rep;
}

Report verify_bn_corank(int n)
{
    Report rep{"bn_corank", n, 0, {}};
    int c = corank(build_bn(n));
    rep.add("corank of the b_n form = floor(n/2)+1", c == n / 2 + 1, "corank " + std::to_string(c));
    return rep;
}

Report verify_casimirs_sp(int m)
{
    Report rep{"casimirs_Sp2m", 2 * m, 0, {}};
    Quiver sp = build_sp2m(m);
    FormPtr f = skew_form(sp);
    std::vector<Lattice> vs;
    bool c_ok = true, r_ok = true;
    for (int i = 1; i <= m; ++i) {
        auto c = casimir_C(sp, f, i);
        c_ok = c_ok && is_central(c.value, sp);
        vs.push_back(c.vector());
    }
    for (int j = 1; j <= m; ++j) {
        auto r = casimir_R(sp, f, j);
        r_ok = r_ok && is_central(r.value, sp);
        vs.push_back(r.vector());
    }
    rep.add("every C_i is central on Sp_2m", c_ok);
    rep.add("every R_j is central on Sp_2m", r_ok);
    int r = lattice_rank(vs);
    rep.add("C_i and R_j independent, count m + m", r == 2 * m, "rank " + std::to_string(r));

    // K_l commutes with everything except the S_i and Q_2r
    bool k_ok = true;
    for (int l = 1; l <= 2 * m; ++l) {
        auto row = f->row(casimir_K_sp(sp, f, l).vector());
        for (const auto &v : sp.vertices()) {
            bool exempt = v.tag[0] == 'S' || v.tag[0] == 'Q';
            if (!exempt && row[v.id] != 0)
                k_ok = false;
        }
    }
    rep.add("quasi-Casimirs K_l commute with all but S_i and Q_2r", k_ok);
    int cd = center_dimension(sp);
    rep.add("Sp_2m centre dimension = m + m", cd == 2 * m, "dimension " + std::to_string(cd));
    return rep;
}

} // namespace qg
