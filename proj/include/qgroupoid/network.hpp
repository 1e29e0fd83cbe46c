#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qgroupoid/qmatrix.hpp"
#include "qgroupoid/quiver.hpp"

namespace qg {

enum class Color { Black, White, Boundary };

struct NetVertex {
    Color color = Color::White;
    double x = 0, y = 0;
    std::string name;
};

struct NetEdge {
    int from = 0, to = 0;
    int right_face = -1, left_face = -1;
};

struct NetFace {
    int quiver_vertex = -1;
    double x = 0, y = 0; // a point inside the face
};

// One point of the boundary circle, listed counterclockwise.
struct BoundaryPoint {
    int vertex = -1; // -1 for a corner of the drawing
    double x = 0, y = 0;
};

using Path = std::vector<int>; // edge ids, source to sink

class DirectedNetwork {
public:
    int add_vertex(Color c, double x, double y, std::string name = {});
    int add_edge(int from, int to, int right_face, int left_face);
    int add_face(int quiver_vertex, double x, double y);

    std::vector<NetVertex> vertices;
    std::vector<NetEdge> edges;
    std::vector<NetFace> faces;
    std::vector<int> sources;
    std::vector<int> sinks;
    std::vector<BoundaryPoint> boundary;

    std::shared_ptr<const Quiver> quiver;
    FormPtr form;

    std::vector<std::vector<int>> out_edges() const;
    std::vector<std::vector<int>> in_edges() const;

    // throws StructuralError when trivalence, coloring, acyclicity or
    // face labels are violated
    void validate() const;
    Json to_json() const;
};

struct BnNetworks {
    std::shared_ptr<const Quiver> quiver;
    FormPtr form;
    // sources 1..n on the NE side; sinks 1'..n' (left side) then 1''..n'' (bottom)
    DirectedNetwork left;
    // sources 1'..n' on the left side; sinks 1''..n'' (bottom) then n extra
    // sinks on the NE side
    DirectedNetwork right;
};

BnNetworks build_networks_bn(int n);

struct SpNetwork {
    SpQuivers quivers;
    // faces are labeled by the unamalgamated triangle quiver
    DirectedNetwork net;
};

SpNetwork build_network_sp2m(int m);

std::vector<Path> enumerate_paths(const DirectedNetwork &net, int source, int sink);
std::vector<int> right_faces(const DirectedNetwork &net, const Path &path);
TorusElement path_weight(const DirectedNetwork &net, const Path &path);

// entry (a,b) sums the weights of all paths from sources[b] to sinks[sink_ids[a]]
QMatrix transition_matrix(const DirectedNetwork &net, const std::vector<int> &sink_ids);

struct TransitionData {
    QMatrix M1; // left network, sources -> 1'..n'
    QMatrix M2; // left network, sources -> 1''..n''
    QMatrix M3; // right network, 1'..n' -> 1''..n''
};

TransitionData bn_transition_matrices(const BnNetworks &nets);

} // namespace qg
