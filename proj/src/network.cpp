#include "qgroupoid/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qg {

int DirectedNetwork::add_vertex(Color c, double x, double y, std::string name)
{
    vertices.push_back({c, x, y, std::move(name)});
    return static_cast<int>(vertices.size()) - 1;
}

int DirectedNetwork::add_edge(int from, int to, int right_face, int left_face)
{
    edges.push_back({from, to, right_face, left_face});
    return static_cast<int>(edges.size()) - 1;
}

int DirectedNetwork::add_face(int quiver_vertex, double x, double y)
{
    faces.push_back({quiver_vertex, x, y});
    return static_cast<int>(faces.size()) - 1;
}

std::vector<std::vector<int>> DirectedNetwork::out_edges() const
{
    std::vector<std::vector<int>> r(vertices.size());
    for (size_t e = 0; e < edges.size(); ++e)
        r[edges[e].from].push_back(static_cast<int>(e));
    return r;
}

std::vector<std::vector<int>> DirectedNetwork::in_edges() const
{
    std::vector<std::vector<int>> r(vertices.size());
    for (size_t e = 0; e < edges.size(); ++e)
        r[edges[e].to].push_back(static_cast<int>(e));
    return r;
}

void DirectedNetwork::validate() const
{
    auto out = out_edges();
    auto in = in_edges();
    const int nf = static_cast<int>(faces.size());
    for (size_t v = 0; v < vertices.size(); ++v) {
        const auto &x = vertices[v];
        size_t i = in[v].size(), o = out[v].size();
        switch (x.color) {
        case Color::Black:
            if (i != 2 || o != 1)
                throw StructuralError("black vertex " + x.name + " must have two incoming edges and one outgoing");
            break;
        case Color::White:
            if (i != 1 || o != 2)
                throw StructuralError("white vertex " + x.name + " must have one incoming edge and two outgoing");
            break;
        case Color::Boundary:
            if (i + o != 1)
                throw StructuralError("boundary vertex " + x.name + " must have degree one");
            break;
        }
    }
    for (int s : sources)
        if (vertices.at(s).color != Color::Boundary || !in[s].empty())
            throw StructuralError("source " + vertices[s].name + " is not an outgoing boundary vertex");
    for (int s : sinks)
        if (vertices.at(s).color != Color::Boundary || !out[s].empty())
            throw StructuralError("sink " + vertices[s].name + " is not an incoming boundary vertex");

    std::vector<char> used(nf, 0);
    for (const auto &e : edges) {
        if (e.right_face < 0 || e.right_face >= nf || e.left_face < 0 || e.left_face >= nf)
            throw StructuralError("edge with unassigned face");
        if (e.right_face == e.left_face)
            throw StructuralError("edge separates a face from itself");
        used[e.right_face] = used[e.left_face] = 1;
    }
    std::vector<char> label_used(quiver ? quiver->size() : 0, 0);
    for (int f = 0; f < nf; ++f) {
        if (!used[f])
            throw StructuralError("face " + std::to_string(f) + " touches no edge");
        int qv = faces[f].quiver_vertex;
        if (quiver) {
            if (qv < 0 || qv >= quiver->size())
                throw StructuralError("face label outside the quiver");
            if (label_used[qv]++)
                throw StructuralError("quiver vertex " + quiver->vertex(qv).tag + " labels two faces");
        }
    }

    // acyclicity by Kahn's algorithm
    std::vector<int> indeg(vertices.size());
    for (size_t v = 0; v < vertices.size(); ++v)
        indeg[v] = static_cast<int>(in[v].size());
    std::vector<int> stack;
    for (size_t v = 0; v < vertices.size(); ++v)
        if (indeg[v] == 0)
            stack.push_back(static_cast<int>(v));
    size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int e : out[v])
            if (--indeg[edges[e].to] == 0)
                stack.push_back(edges[e].to);
    }
    if (seen != vertices.size())
        throw StructuralError("network contains a directed cycle");
}

Json DirectedNetwork::to_json() const
{
    Json vs = Json::array();
    for (const auto &v : vertices) {
        const char *c = v.color == Color::Black ? "black" : v.color == Color::White ? "white" : "boundary";
        vs.push_back({{"name", v.name}, {"color", c}, {"x", v.x}, {"y", v.y}});
    }
    Json es = Json::array();
    for (const auto &e : edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"right_face", e.right_face}, {"left_face", e.left_face}});
    Json fs = Json::array();
    for (const auto &f : faces) {
        Json j = {{"quiver_vertex", f.quiver_vertex}, {"x", f.x}, {"y", f.y}};
        if (quiver)
            j["tag"] = quiver->vertex(f.quiver_vertex).tag;
        fs.push_back(j);
    }
    Json bs = Json::array();
    for (const auto &b : boundary)
        bs.push_back({{"vertex", b.vertex}, {"x", b.x}, {"y", b.y}});
    return {{"vertices", vs}, {"edges", es},     {"faces", fs},
            {"sources", sources}, {"sinks", sinks}, {"boundary", bs}};
}

namespace {

// Grid picture of the left network on b_n. Interior points (X,Y) with
// X+Y <= n-1; paths move left or down. Face cell(t,h) is the unit square
// [t,t+1] x [h-1,h] and carries the label (h, t+1, n-1-h-t).
struct GridBuilder {
    int n;
    DirectedNetwork &net;
    std::map<std::pair<int, int>, int> in_v, out_v;

    int cell(int t, int h) const
    {
        Label l{h, t + 1, n - 1 - h - t};
        int id = bn_index(n, l);
        if (id < 0)
            throw StructuralError("grid face outside the triangle");
        return id;
    }

    void faces()
    {
        for (const auto &l : bn_labels(n)) {
            int h = l[0], t = l[1] - 1;
            net.add_face(bn_index(n, l), t + 0.5, h - 0.5);
        }
    }

    void interior()
    {
        for (int X = 0; X < n; ++X)
            for (int Y = 0; X + Y < n; ++Y) {
                std::string p = "(" + std::to_string(X) + "," + std::to_string(Y) + ")";
                if (X + Y == n - 1) {
                    int w = net.add_vertex(Color::White, X, Y, "w" + p);
                    in_v[{X, Y}] = out_v[{X, Y}] = w;
                } else {
                    int b = net.add_vertex(Color::Black, X + 0.2, Y + 0.2, "b" + p);
                    int w = net.add_vertex(Color::White, X - 0.2, Y - 0.2, "w" + p);
                    net.add_edge(b, w, cell(X - 1, Y + 1), cell(X, Y));
                    in_v[{X, Y}] = b;
                    out_v[{X, Y}] = w;
                }
            }
        for (int X = 0; X < n; ++X)
            for (int Y = 0; X + Y < n; ++Y) {
                if (X + 1 + Y < n)
                    net.add_edge(out_v[{X + 1, Y}], in_v[{X, Y}], cell(X, Y + 1), cell(X, Y));
                if (X + Y + 1 < n)
                    net.add_edge(out_v[{X, Y + 1}], in_v[{X, Y}], cell(X - 1, Y + 1), cell(X, Y + 1));
            }
    }

    // sinks 1'..n' on the left, then 1''..n'' at the bottom
    void sinks()
    {
        for (int i = 1; i <= n; ++i) {
            int Y = n - i;
            int s = net.add_vertex(Color::Boundary, -1, Y, std::to_string(i) + "'");
            net.add_edge(out_v[{0, Y}], s, cell(-1, Y + 1), cell(-1, Y));
            net.sinks.push_back(s);
        }
        for (int i = 1; i <= n; ++i) {
            int X = i - 1;
            int s = net.add_vertex(Color::Boundary, X, -1, std::to_string(i) + "''");
            net.add_edge(out_v[{X, 0}], s, cell(X - 1, 0), cell(X, 0));
            net.sinks.push_back(s);
        }
    }

    int source_vertex(int j)
    {
        return net.add_vertex(Color::Boundary, j - 0.5, n - j + 0.5, std::to_string(j));
    }

    void plain_sources()
    {
        for (int j = 1; j <= n; ++j) {
            int s = source_vertex(j);
            net.add_edge(s, in_v[{j - 1, n - j}], cell(j - 2, n - j + 1), cell(j - 1, n - j));
            net.sources.push_back(s);
        }
    }

    // counterclockwise from the top corner
    void boundary()
    {
        net.boundary.push_back({-1, -1.0, n + 1.0});
        for (int k = 0; k < n; ++k) {
            int s = net.sinks[k];
            net.boundary.push_back({s, net.vertices[s].x, net.vertices[s].y});
        }
        net.boundary.push_back({-1, -1.0, -1.0});
        for (int k = n; k < 2 * n; ++k) {
            int s = net.sinks[k];
            net.boundary.push_back({s, net.vertices[s].x, net.vertices[s].y});
        }
        net.boundary.push_back({-1, n + 1.0, -1.0});
        for (int k = n - 1; k >= 0; --k) {
            int s = net.sources[k];
            net.boundary.push_back({s, net.vertices[s].x, net.vertices[s].y});
        }
    }
};

DirectedNetwork build_left_bn(int n, std::shared_ptr<const Quiver> q, FormPtr f)
{
    DirectedNetwork net;
    net.quiver = std::move(q);
    net.form = std::move(f);
    GridBuilder g{n, net, {}, {}};
    g.faces();
    g.interior();
    g.sinks();
    g.plain_sources();
    g.boundary();
    return net;
}

// Reflect x -> -x and relabel faces (i,j,k) -> (i,k,j). Sources j become
// (n+1-j)', bottom sinks i'' become (n+1-i)'', left sinks become extra sinks.
DirectedNetwork mirror_bn(const DirectedNetwork &left, int n)
{
    DirectedNetwork net;
    net.quiver = left.quiver;
    net.form = left.form;
    for (const auto &f : left.faces) {
        Label l = left.quiver->vertex(f.quiver_vertex).members.at(0);
        net.add_face(bn_index(n, {l[0], l[2], l[1]}), -f.x, f.y);
    }
    std::vector<std::string> names(left.vertices.size());
    for (size_t v = 0; v < left.vertices.size(); ++v)
        names[v] = left.vertices[v].name;
    for (int j = 1; j <= n; ++j)
        names[left.sources[j - 1]] = std::to_string(n + 1 - j) + "'";
    for (int i = 1; i <= n; ++i) {
        names[left.sinks[n + i - 1]] = std::to_string(n + 1 - i) + "''";
        names[left.sinks[i - 1]] = "e" + std::to_string(i);
    }
    for (size_t v = 0; v < left.vertices.size(); ++v) {
        const auto &x = left.vertices[v];
        net.add_vertex(x.color, -x.x, x.y, names[v]);
    }
    for (const auto &e : left.edges)
        net.add_edge(e.from, e.to, e.left_face, e.right_face);
    for (int k = 1; k <= n; ++k)
        net.sources.push_back(left.sources[n - k]);
    for (int k = 1; k <= n; ++k)
        net.sinks.push_back(left.sinks[2 * n - k]);
    for (int k = 1; k <= n; ++k)
        net.sinks.push_back(left.sinks[k - 1]);
    for (auto it = left.boundary.rbegin(); it != left.boundary.rend(); ++it)
        net.boundary.push_back({it->vertex, -it->x, it->y});
    return net;
}

} // namespace

BnNetworks build_networks_bn(int n)
{
    auto q = std::make_shared<const Quiver>(build_bn(n));
    FormPtr f = skew_form(*q);
    BnNetworks r;
    r.quiver = q;
    r.form = f;
    r.left = build_left_bn(n, q, f);
    r.right = mirror_bn(r.left, n);
    return r;
}

SpNetwork build_network_sp2m(int m)
{
    if (m < 1)
        throw std::invalid_argument("build_network_sp2m: m must be at least 1");
    const int n = 2 * m;
    SpNetwork r{build_sp2m_pair(m), {}};
    auto tri = std::make_shared<const Quiver>(r.quivers.triangle);
    DirectedNetwork &net = r.net;
    net.quiver = tri;
    net.form = skew_form(*tri);

    GridBuilder g{n, net, {}, {}};
    g.faces();
    std::vector<int> qface(m + 1);
    for (int k = 1; k <= m; ++k)
        qface[k] = net.add_face(tri->find_tag("Q" + std::to_string(2 * k)), 2 * k - 1.1, n - 2 * k + 0.8);
    g.interior();
    g.sinks();

    std::vector<int> src(n + 1);
    for (int k = 1; k <= m; ++k) {
        const int a = 2 * k - 1, b = 2 * k;
        src[a] = g.source_vertex(a);
        src[b] = g.source_vertex(b);
        int B = net.add_vertex(Color::Black, 2 * k - 1.65, n - 2 * k + 1.05, "B" + std::to_string(k));
        int W = net.add_vertex(Color::White, 2 * k - 0.85, n - 2 * k + 0.25, "W" + std::to_string(k));
        int up = g.cell(a - 2, n - a + 1);   // S_{2k-1}
        int mid = g.cell(a - 1, n - a);      // S_{2k}
        int down = g.cell(b - 1, n - b);     // S_{2k+1}
        int Q = qface[k];
        net.add_edge(src[a], B, up, Q);
        net.add_edge(B, g.in_v[{a - 1, n - a}], up, mid);
        net.add_edge(src[b], W, Q, down);
        net.add_edge(W, B, Q, mid);
        net.add_edge(W, g.in_v[{b - 1, n - b}], mid, down);
    }
    for (int j = 1; j <= n; ++j)
        net.sources.push_back(src[j]);
    g.boundary();
    return r;
}

namespace {

void dfs_paths(const DirectedNetwork &net, const std::vector<std::vector<int>> &out, int v, Path &cur,
               const std::function<void(int, const Path &)> &emit)
{
    if (out[v].empty()) {
        emit(v, cur);
        return;
    }
    for (int e : out[v]) {
        cur.push_back(e);
        dfs_paths(net, out, net.edges[e].to, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<Path> enumerate_paths(const DirectedNetwork &net, int source, int sink)
{
    auto out = net.out_edges();
    std::vector<Path> r;
    Path cur;
    dfs_paths(net, out, source, cur, [&](int end, const Path &p) {
        if (end == sink)
            r.push_back(p);
    });
    return r;
}

std::vector<int> right_faces(const DirectedNetwork &net, const Path &path)
{
    const int nf = static_cast<int>(net.faces.size());
    std::vector<char> on_path(net.edges.size(), 0);
    for (int e : path)
        on_path[e] = 1;
    std::vector<std::vector<int>> adj(nf);
    for (size_t e = 0; e < net.edges.size(); ++e) {
        if (on_path[e])
            continue;
        adj[net.edges[e].right_face].push_back(net.edges[e].left_face);
        adj[net.edges[e].left_face].push_back(net.edges[e].right_face);
    }
    std::vector<char> in(nf, 0);
    std::vector<int> stack;
    for (int e : path) {
        int f = net.edges[e].right_face;
        if (!in[f]) {
            in[f] = 1;
            stack.push_back(f);
        }
    }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f])
            if (!in[g]) {
                in[g] = 1;
                stack.push_back(g);
            }
    }
    for (int e : path)
        if (in[net.edges[e].left_face])
            throw StructuralError("path does not separate the disk");
    std::vector<int> r;
    for (int f = 0; f < nf; ++f)
        if (in[f])
            r.push_back(f);
    return r;
}

TorusElement path_weight(const DirectedNetwork &net, const Path &path)
{
    Lattice l(net.form->dim(), 0);
    for (int f : right_faces(net, path))
        l[net.faces[f].quiver_vertex] += 2;
    return TorusElement::monomial(net.form, std::move(l));
}

QMatrix transition_matrix(const DirectedNetwork &net, const std::vector<int> &sink_ids)
{
    std::map<int, int> row_of;
    for (size_t a = 0; a < sink_ids.size(); ++a)
        row_of[net.sinks.at(sink_ids[a])] = static_cast<int>(a);
    QMatrix M(static_cast<int>(sink_ids.size()), static_cast<int>(net.sources.size()), net.form);
    auto out = net.out_edges();
    for (size_t b = 0; b < net.sources.size(); ++b) {
        Path cur;
        dfs_paths(net, out, net.sources[b], cur, [&](int end, const Path &p) {
            auto it = row_of.find(end);
            if (it != row_of.end())
                M.at(it->second, static_cast<int>(b)) += path_weight(net, p);
        });
    }
    return M;
}

TransitionData bn_transition_matrices(const BnNetworks &nets)
{
    const int n = nets.quiver->n();
    std::vector<int> first(n), second(n);
    for (int i = 0; i < n; ++i) {
        first[i] = i;
        second[i] = n + i;
    }
    return {transition_matrix(nets.left, first), transition_matrix(nets.left, second),
            transition_matrix(nets.right, first)};
}

} // namespace qg
