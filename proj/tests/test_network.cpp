#include "doctest.h"

#include <cmath>
#include <map>
#include <queue>

#include "qgroupoid/network.hpp"

using namespace qg;

namespace {

// number of directed paths from `from` to every vertex, by dynamic programming
// over a topological order
std::vector<long> path_counts(const DirectedNetwork &net, int from)
{
    const int nv = static_cast<int>(net.vertices.size());
    std::vector<int> indeg(nv, 0);
    for (const auto &e : net.edges)
        ++indeg[e.to];
    std::queue<int> ready;
    for (int v = 0; v < nv; ++v)
        if (indeg[v] == 0)
            ready.push(v);
    std::vector<long> cnt(nv, 0);
    cnt[from] = 1;
    auto out = net.out_edges();
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        for (int e : out[v]) {
            int w = net.edges[e].to;
            cnt[w] += cnt[v];
            if (--indeg[w] == 0)
                ready.push(w);
        }
    }
    return cnt;
}

struct Pt {
    double x, y;
};

// even-odd rule with a ray in a direction no grid edge can be parallel to
bool inside(const std::vector<Pt> &poly, Pt p)
{
    const double dx = std::cos(0.7236), dy = std::sin(0.7236);
    int crossings = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        Pt a = poly[i], b = poly[(i + 1) % poly.size()];
        // solve p + t d = a + s (b - a), t > 0, 0 <= s < 1
        double ex = b.x - a.x, ey = b.y - a.y;
        double det = ex * dy - ey * dx;
        if (std::abs(det) < 1e-15)
            continue;
        double rx = a.x - p.x, ry = a.y - p.y;
        double t = (ex * ry - ey * rx) / det;
        double s = (dx * ry - dy * rx) / det;
        if (t > 0 && s >= 0 && s < 1)
            ++crossings;
    }
    return crossings % 2 == 1;
}

// faces right of the path: the path followed by the boundary arc walked
// clockwise from the sink back to the source bounds the right-hand region
std::vector<int> right_faces_by_parity(const DirectedNetwork &net, const Path &path)
{
    std::vector<Pt> poly;
    int src = net.edges[path.front()].from, dst = net.edges[path.back()].to;
    for (int e : path) {
        const auto &v = net.vertices[net.edges[e].from];
        poly.push_back({v.x, v.y});
    }
    const auto &last = net.vertices[dst];
    poly.push_back({last.x, last.y});
    const int nb = static_cast<int>(net.boundary.size());
    int start = -1;
    for (int i = 0; i < nb; ++i)
        if (net.boundary[i].vertex == dst)
            start = i;
    REQUIRE(start >= 0);
    for (int step = 1; step < nb; ++step) {
        const auto &b = net.boundary[((start - step) % nb + nb) % nb];
        if (b.vertex == src)
            break;
        poly.push_back({b.x, b.y});
    }
    std::vector<int> r;
    for (size_t f = 0; f < net.faces.size(); ++f)
        if (inside(poly, {net.faces[f].x, net.faces[f].y}))
            r.push_back(static_cast<int>(f));
    return r;
}

void check_network(const DirectedNetwork &net)
{
    CHECK_NOTHROW(net.validate());
    for (int s : net.sources) {
        auto cnt = path_counts(net, s);
        for (int t : net.sinks) {
            auto paths = enumerate_paths(net, s, t);
            CHECK(static_cast<long>(paths.size()) == cnt[t]);
            for (const auto &p : paths)
                CHECK(right_faces(net, p) == right_faces_by_parity(net, p));
        }
    }
}

} // namespace

TEST_SUITE("network")
{
    TEST_CASE("left and right b_n networks: path counts and right faces")
    {
        for (int n = 2; n <= 4; ++n) {
            CAPTURE(n);
            BnNetworks nets = build_networks_bn(n);
            CHECK(nets.left.sources.size() == static_cast<size_t>(n));
            CHECK(nets.left.sinks.size() == static_cast<size_t>(2 * n));
            check_network(nets.left);
            check_network(nets.right);
        }
    }

    TEST_CASE("Sp_2m network is valid and its paths separate the disk")
    {
        for (int m = 1; m <= 2; ++m) {
            CAPTURE(m);
            SpNetwork sp = build_network_sp2m(m);
            CHECK(sp.net.sinks.size() == static_cast<size_t>(4 * m));
            CHECK_NOTHROW(sp.net.validate());
            for (int s : sp.net.sources) {
                auto cnt = path_counts(sp.net, s);
                for (int t : sp.net.sinks)
                    CHECK(static_cast<long>(enumerate_paths(sp.net, s, t).size()) == cnt[t]);
            }
        }
    }

    TEST_CASE("every face of the b_n networks carries a quiver vertex")
    {
        BnNetworks nets = build_networks_bn(4);
        for (const auto *net : {&nets.left, &nets.right})
            for (const auto &f : net->faces)
                CHECK((f.quiver_vertex >= 0 && f.quiver_vertex < nets.quiver->size()));
    }

    TEST_CASE("transition matrix entries sum path weights")
    {
        BnNetworks nets = build_networks_bn(3);
        TransitionData t = bn_transition_matrices(nets);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                TorusElement sum(nets.form);
                for (const auto &p : enumerate_paths(nets.left, nets.left.sources[b], nets.left.sinks[a]))
                    sum += path_weight(nets.left, p);
                CHECK(t.M1.at(a, b) == sum);
            }
        // right network: bottom transition is lower-triangular
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                CHECK(t.M3.at(a, b).is_zero());
    }

    TEST_CASE("validation rejects a broken network")
    {
        BnNetworks nets = build_networks_bn(2);
        DirectedNetwork bad = nets.left;
        bad.edges.push_back({bad.edges[0].to, bad.edges[0].from, bad.edges[0].left_face, bad.edges[0].right_face});
        CHECK_THROWS_AS(bad.validate(), StructuralError);
    }
}
