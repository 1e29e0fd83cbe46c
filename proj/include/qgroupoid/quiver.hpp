#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgroupoid/qtorus.hpp"

namespace qg {

// barycentric (i,j,k), i+j+k = n
using Label = std::array<int, 3>;

std::string label_str(const Label &l);

enum class QuiverKind { Bn, An, Sp2m, SpTriangle };

std::string kind_name(QuiverKind k);

struct QuiverVertex {
    int id = 0;
    std::string tag;
    // b_n vertices this vertex stands for; an amalgamated vertex is the
    // Weyl product of its members. Empty for the extra Q vertices of Sp_2m.
    std::vector<Label> members;
    bool frozen = false;
};

class Quiver {
public:
    Quiver(QuiverKind kind, int n) : kind_(kind), n_(n) {}

    QuiverKind kind() const { return kind_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<QuiverVertex> &vertices() const { return vertices_; }
    const QuiverVertex &vertex(int id) const { return vertices_.at(id); }

    int add_vertex(std::string tag, std::vector<Label> members, bool frozen);
    void set_frozen(int id, bool f) { vertices_.at(id).frozen = f; }

    // doubled signed weight of the arrow a -> b
    int weight2(int a, int b) const;
    void add_arrow(int from, int to, int w2);
    void remove_arrow(int a, int b);
    // (a,b) with a<b -> doubled weight of a -> b, zero entries dropped
    const std::map<std::pair<int, int>, int> &arrows() const { return arrows_; }

    // vertex whose member list contains the label, -1 if none
    int find(const Label &l) const;
    int find_tag(const std::string &tag) const;
    std::vector<int> unfrozen() const;

private:
    QuiverKind kind_;
    int n_;
    std::vector<QuiverVertex> vertices_;
    std::map<std::pair<int, int>, int> arrows_;
    std::map<Label, int> by_label_;
};

// all labels (i,j,k) with i+j+k = n in row-major order
std::vector<Label> bn_labels(int n);
int bn_index(int n, const Label &l);

Quiver build_bn(int n);
Quiver amalgamate_to_An(const Quiver &bn);

// Sp_2m: the unamalgamated triangle (faces of the Sp network) and the
// amalgamated quiver, with the class map between them
struct SpQuivers {
    Quiver triangle;
    Quiver reduced;
    std::vector<int> class_of; // triangle id -> reduced id
};
SpQuivers build_sp2m_pair(int m);
Quiver build_sp2m(int m);

// label of S_l in the Sp_2m triangle, 1 <= l <= 2m+1
Label sp_S_label(int m, int l);

FormPtr skew_form(const Quiver &q);

int corank(const Quiver &q);
// dimension of {v : <v, e_u> = 0 for every unfrozen u}
int center_dimension(const Quiver &q);

std::string export_dot(const Quiver &q);
Json quiver_json(const Quiver &q);

// Pull a b_n exponent vector (doubled) back to a reduced quiver.
// Members of one vertex must carry equal exponents; b_n vertices outside
// every member list must carry zero. Returns nullopt otherwise.
std::optional<Lattice> project_to(const Quiver &reduced, const Quiver &bn, const Lattice &bn_doubled);

// Push a reduced exponent vector forward to b_n (each member gets the exponent).
Lattice lift_to(const Quiver &reduced, const Quiver &bn, const Lattice &doubled);

} // namespace qg
