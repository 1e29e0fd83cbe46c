#include "qgroupoid/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgroupoid/linalg.hpp"

namespace qg {

std::string label_str(const Label &l)
{
    std::ostringstream os;
    os << "(" << l[0] << "," << l[1] << "," << l[2] << ")";
    return os.str();
}

std::string kind_name(QuiverKind k)
{
    switch (k) {
    case QuiverKind::Bn:
        return "bn";
    case QuiverKind::An:
        return "An";
    case QuiverKind::Sp2m:
        return "Sp2m";
    case QuiverKind::SpTriangle:
        return "Sp2m-triangle";
    }
    return "?";
}

int Quiver::add_vertex(std::string tag, std::vector<Label> members, bool frozen)
{
    int id = size();
    for (const auto &m : members) {
        if (by_label_.count(m))
            throw StructuralError("label " + label_str(m) + " used twice");
        by_label_[m] = id;
    }
    vertices_.push_back({id, std::move(tag), std::move(members), frozen});
    return id;
}

int Quiver::weight2(int a, int b) const
{
    if (a == b)
        return 0;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = arrows_.find(key);
    if (it == arrows_.end())
        return 0;
    return a < b ? it->second : -it->second;
}

void Quiver::add_arrow(int from, int to, int w2)
{
    if (from == to)
        return;
    if (from < 0 || to < 0 || from >= size() || to >= size())
        throw std::out_of_range("arrow endpoint out of range");
    auto key = from < to ? std::make_pair(from, to) : std::make_pair(to, from);
    int &w = arrows_[key];
    w += from < to ? w2 : -w2;
    if (w == 0)
        arrows_.erase(key);
}

void Quiver::remove_arrow(int a, int b)
{
    arrows_.erase(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

int Quiver::find(const Label &l) const
{
    auto it = by_label_.find(l);
    return it == by_label_.end() ? -1 : it->second;
}

int Quiver::find_tag(const std::string &tag) const
{
    for (const auto &v : vertices_)
        if (v.tag == tag)
            return v.id;
    return -1;
}

std::vector<int> Quiver::unfrozen() const
{
    std::vector<int> r;
    for (const auto &v : vertices_)
        if (!v.frozen)
            r.push_back(v.id);
    return r;
}

std::vector<Label> bn_labels(int n)
{
    std::vector<Label> r;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j)
            r.push_back({i, j, n - i - j});
    return r;
}

int bn_index(int n, const Label &l)
{
    if (l[0] < 0 || l[1] < 0 || l[2] < 0 || l[0] + l[1] + l[2] != n)
        return -1;
    // rows i = 0..l0-1 hold n+1, n, ..., n+2-l0 labels
    int before = l[0] * (n + 1) - l[0] * (l[0] - 1) / 2;
    return before + l[1];
}

namespace {

bool on_common_side(const Label &a, const Label &b)
{
    for (int s = 0; s < 3; ++s)
        if (a[s] == 0 && b[s] == 0)
            return true;
    return false;
}

bool on_boundary(const Label &a)
{
    return a[0] == 0 || a[1] == 0 || a[2] == 0;
}

} // namespace

Quiver build_bn(int n)
{
    if (n < 2)
        throw std::invalid_argument("build_bn: n must be at least 2");
    Quiver q(QuiverKind::Bn, n);
    for (const auto &l : bn_labels(n))
        q.add_vertex(label_str(l), {l}, on_boundary(l));
    static const int dirs[3][3] = {{1, 0, -1}, {0, -1, 1}, {-1, 1, 0}};
    for (const auto &v : bn_labels(n)) {
        for (const auto &d : dirs) {
            Label u{v[0] + d[0], v[1] + d[1], v[2] + d[2]};
            int iu = bn_index(n, u);
            if (iu < 0)
                continue;
            q.add_arrow(bn_index(n, v), iu, on_common_side(v, u) ? 1 : 2);
        }
    }
    return q;
}

Quiver amalgamate_to_An(const Quiver &bn)
{
    if (bn.kind() != QuiverKind::Bn)
        throw StructuralError("amalgamate_to_An needs a b_n quiver");
    const int n = bn.n();
    Quiver a(QuiverKind::An, n);
    std::vector<int> cls(bn.size(), -1);
    for (int i = 1; i < n; ++i) {
        Label x{i, 0, n - i}, y{0, n - i, i};
        int id = a.add_vertex("P" + std::to_string(i), {x, y}, false);
        cls[bn_index(n, x)] = id;
        cls[bn_index(n, y)] = id;
    }
    for (const auto &l : bn_labels(n))
        if (!on_boundary(l))
            cls[bn_index(n, l)] = a.add_vertex(label_str(l), {l}, false);
    for (const auto &[key, w] : bn.arrows()) {
        int ca = cls[key.first], cb = cls[key.second];
        if (ca < 0 || cb < 0 || ca == cb)
            continue;
        a.add_arrow(ca, cb, w);
    }
    return a;
}

Label sp_S_label(int m, int l)
{
    const int n = 2 * m;
    if (l < 1 || l > n + 1)
        throw std::out_of_range("S index out of range");
    return {n - l + 1, l - 1, 0};
}

SpQuivers build_sp2m_pair(int m)
{
    if (m < 1)
        throw std::invalid_argument("build_sp2m: m must be at least 1");
    const int n = 2 * m;
    Quiver bn = build_bn(n);
    Quiver tri(QuiverKind::SpTriangle, n);
    for (const auto &v : bn.vertices())
        tri.add_vertex(v.tag, v.members, v.frozen);
    for (const auto &[key, w] : bn.arrows())
        tri.add_arrow(key.first, key.second, w);

    auto S = [&](int l) { return bn_index(n, sp_S_label(m, l)); };
    for (int l = 1; l <= n; ++l) {
        tri.remove_arrow(S(l), S(l + 1));
        if (l % 2 == 1)
            tri.add_arrow(S(l), S(l + 1), 2);
    }
    std::vector<int> qid(m + 1);
    for (int r = 1; r <= m; ++r) {
        qid[r] = tri.add_vertex("Q" + std::to_string(2 * r), {}, true);
        tri.add_arrow(S(2 * r), qid[r], 2);
        tri.add_arrow(qid[r], S(2 * r - 1), 1);
        tri.add_arrow(qid[r], S(2 * r + 1), 1);
    }

    Quiver red(QuiverKind::Sp2m, n);
    std::vector<int> cls(tri.size(), -1);
    for (int k = 1; k < n; ++k) {
        Label x{k, 0, n - k}, y{0, n - k, k};
        int id = red.add_vertex("P" + std::to_string(k), {x, y}, false);
        cls[bn_index(n, x)] = id;
        cls[bn_index(n, y)] = id;
    }
    {
        Label top{n, 0, 0}, c1{0, 0, n}, c2{0, n, 0};
        int id = red.add_vertex("S1", {top, c1, c2}, false);
        for (const auto &l : {top, c1, c2})
            cls[bn_index(n, l)] = id;
    }
    for (int l = 2; l <= n; ++l)
        cls[S(l)] = red.add_vertex("S" + std::to_string(l), {sp_S_label(m, l)}, false);
    for (const auto &l : bn_labels(n))
        if (!on_boundary(l))
            cls[bn_index(n, l)] = red.add_vertex(label_str(l), {l}, false);
    for (int r = 1; r <= m; ++r)
        cls[qid[r]] = red.add_vertex("Q" + std::to_string(2 * r), {}, true);
    for (int v = 0; v < tri.size(); ++v)
        if (cls[v] < 0)
            throw StructuralError("Sp_2m: unclassified vertex " + tri.vertex(v).tag);
    for (const auto &[key, w] : tri.arrows()) {
        int ca = cls[key.first], cb = cls[key.second];
        if (ca == cb)
            continue;
        red.add_arrow(ca, cb, w);
    }
    return {std::move(tri), std::move(red), std::move(cls)};
}

Quiver build_sp2m(int m)
{
    return build_sp2m_pair(m).reduced;
}

FormPtr skew_form(const Quiver &q)
{
    const int n = q.size();
    std::vector<int> p(static_cast<size_t>(n) * n, 0);
    for (const auto &[key, w] : q.arrows()) {
        // doubled weight -> pairing scaled by 4
        p[static_cast<size_t>(key.first) * n + key.second] = 2 * w;
        p[static_cast<size_t>(key.second) * n + key.first] = -2 * w;
    }
    return std::make_shared<SkewForm>(n, std::move(p));
}

namespace {

std::vector<std::vector<int>> weight_rows(const Quiver &q, const std::vector<int> &rows)
{
    std::vector<std::vector<int>> m;
    for (int a : rows) {
        std::vector<int> r(q.size());
        for (int b = 0; b < q.size(); ++b)
            r[b] = q.weight2(a, b);
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

int corank(const Quiver &q)
{
    std::vector<int> all(q.size());
    for (int i = 0; i < q.size(); ++i)
        all[i] = i;
    return q.size() - integer_rank(to_int_matrix(weight_rows(q, all)));
}

int center_dimension(const Quiver &q)
{
    auto rows = q.unfrozen();
    if (rows.empty())
        return q.size();
    return q.size() - integer_rank(to_int_matrix(weight_rows(q, rows)));
}

std::string export_dot(const Quiver &q)
{
    std::ostringstream os;
    os << "digraph quiver {\n";
    os << "  // kind=" << kind_name(q.kind()) << " n=" << q.n() << "\n";
    for (const auto &v : q.vertices()) {
        os << "  v" << v.id << " [label=\"" << v.tag << "\"";
        if (v.frozen)
            os << ", shape=box";
        os << "];\n";
    }
    for (const auto &[key, w] : q.arrows()) {
        int from = w > 0 ? key.first : key.second;
        int to = w > 0 ? key.second : key.first;
        int aw = w > 0 ? w : -w;
        os << "  v" << from << " -> v" << to << " [weight2=" << aw;
        if (aw == 1)
            os << ", style=dashed";
        else if (aw > 2)
            os << ", penwidth=" << aw / 2;
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

Json quiver_json(const Quiver &q)
{
    Json vs = Json::array();
    for (const auto &v : q.vertices()) {
        Json mem = Json::array();
        for (const auto &l : v.members)
            mem.push_back(l);
        vs.push_back({{"id", v.id}, {"tag", v.tag}, {"frozen", v.frozen}, {"members", mem}});
    }
    Json as = Json::array();
    for (const auto &[key, w] : q.arrows()) {
        if (w > 0)
            as.push_back({{"from", key.first}, {"to", key.second}, {"weight2", w}});
        else
            as.push_back({{"from", key.second}, {"to", key.first}, {"weight2", -w}});
    }
    return {{"kind", kind_name(q.kind())}, {"n", q.n()}, {"vertices", vs}, {"arrows", as}};
}

std::optional<Lattice> project_to(const Quiver &reduced, const Quiver &bn, const Lattice &bn_doubled)
{
    const int n = bn.n();
    Lattice out(reduced.size(), 0);
    std::vector<char> covered(bn.size(), 0);
    for (const auto &v : reduced.vertices()) {
        if (v.members.empty())
            continue;
        int e = bn_doubled[bn_index(n, v.members[0])];
        for (const auto &l : v.members) {
            int idx = bn_index(n, l);
            covered[idx] = 1;
            if (bn_doubled[idx] != e)
                return std::nullopt;
        }
        out[v.id] = e;
    }
    for (int i = 0; i < bn.size(); ++i)
        if (!covered[i] && bn_doubled[i] != 0)
            return std::nullopt;
    return out;
}

Lattice lift_to(const Quiver &reduced, const Quiver &bn, const Lattice &doubled)
{
    Lattice out(bn.size(), 0);
    for (const auto &v : reduced.vertices())
        for (const auto &l : v.members)
            out[bn_index(bn.n(), l)] += doubled[v.id];
    return out;
}

} // namespace qg
