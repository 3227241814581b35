#pragma once

#include <string>
#include <vector>

#include "mmt/cost.hpp"
#include "mmt/types.hpp"

namespace mmt {

// Finite atomic boundary datum: weights in Z^m summing to zero.
struct BoundaryAtom {
    Point point;
    IntVec weight;
};

struct Boundary {
    int dim = 0;
    int m = 0;
    std::vector<BoundaryAtom> atoms;
};

struct Edge {
    int tail = 0;
    int head = 0;
    IntVec mult;
};

// Geometric graph in R^d with Z^k multiplicities on oriented edges.
// Orientation convention: tau = (head - tail)/|head - tail| and
// boundary(segment) = delta_head - delta_tail.
template <int Tag>
struct BasicNetwork {
    int dim = 0;
    int coeff_dim = 0;  // m for material networks, N for labeled ones
    std::vector<Point> vertices;
    std::vector<Edge> edges;
};

using Network = BasicNetwork<0>;
using LabeledNetwork = BasicNetwork<1>;

// Merges parallel edges (same unordered vertex pair) by summing
// multiplicities under the orientation of the first occurrence and drops
// edges whose merged multiplicity is zero. Never changes the boundary.
template <int Tag>
BasicNetwork<Tag> merge_parallel_edges(const BasicNetwork<Tag>& net);

// Full invariant check; throws ValidationError on violation. Edge segments
// must be pairwise interior-disjoint up to kGeomTol: overlapping or
// crossing segments are rejected, not merged.
template <int Tag>
void validate(const BasicNetwork<Tag>& net);

void validate(const Boundary& b);

template <int Tag>
Boundary boundary_of(const BasicNetwork<Tag>& net);

template <int Tag>
double edge_length(const BasicNetwork<Tag>& net, const Edge& e) {
    return dist(net.vertices[e.head], net.vertices[e.tail]);
}

template <int Tag>
Point edge_direction(const BasicNetwork<Tag>& net, const Edge& e) {
    Point d = sub(net.vertices[e.head], net.vertices[e.tail]);
    const double len = norm2(d);
    for (double& v : d) v /= len;
    return d;
}

template <int Tag>
BasicNetwork<Tag> dilate(const BasicNetwork<Tag>& net, double factor) {
    BasicNetwork<Tag> out = net;
    for (Point& p : out.vertices)
        for (double& c : p) c *= factor;
    return out;
}

// True when the two boundaries carry the same atoms up to ordering and
// point coincidence within kGeomTol.
bool same_boundary(const Boundary& a, const Boundary& b);

// Total transport energy: sum over edges of length * C(multiplicity).
double energy(const Network& net, const MultiMaterialCost& cost);

}  // namespace mmt
