#include "mmt/core.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mmt {

namespace {

// Closest-approach parameters of two segments, clamped to [0,1]^2.
struct SegmentClosest {
    double s = 0, t = 0, distance = 0;
    bool parallel = false;
};

SegmentClosest segment_closest(const Point& a0, const Point& a1, const Point& b0,
                               const Point& b1) {
    const Point u = sub(a1, a0);
    const Point v = sub(b1, b0);
    const Point w = sub(a0, b0);
    const double aa = dot(u, u);
    const double bb = dot(u, v);
    const double cc = dot(v, v);
    const double dd = dot(u, w);
    const double ee = dot(v, w);
    const double det = aa * cc - bb * bb;

    SegmentClosest r;
    r.parallel = det <= 1e-14 * aa * cc;

    double s, t;
    if (r.parallel) {
        s = 0.0;
        t = (cc > 0) ? ee / cc : 0.0;
    } else {
        s = (bb * ee - cc * dd) / det;
        t = (aa * ee - bb * dd) / det;
    }
    s = std::clamp(s, 0.0, 1.0);
    // re-derive t for the clamped s, then clamp and re-derive s once more
    t = (cc > 0) ? std::clamp((ee + s * bb) / cc, 0.0, 1.0) : 0.0;
    s = (aa > 0) ? std::clamp((t * bb - dd) / aa, 0.0, 1.0) : 0.0;
    Point pa(a0), pb(b0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        pa[i] = a0[i] + s * u[i];
        pb[i] = b0[i] + t * v[i];
    }
    r.s = s;
    r.t = t;
    r.distance = dist(pa, pb);
    return r;
}

bool param_at_endpoint(double t, double len) {
    const double eps = kGeomTol / std::max(len, kGeomTol);
    return t <= eps || t >= 1.0 - eps;
}

// Two segments are interior-disjoint when every touching point is an
// endpoint of both. Collinear overlaps of positive length are violations.
bool interiors_disjoint(const Point& a0, const Point& a1, const Point& b0,
                        const Point& b1) {
    const SegmentClosest c = segment_closest(a0, a1, b0, b1);
    if (c.distance > kGeomTol) return true;
    const double la = dist(a0, a1);
    const double lb = dist(b0, b1);
    if (c.parallel) {
        // project b's endpoints on a's axis and measure the overlap length
        const Point u = sub(a1, a0);
        const double t0 = dot(sub(b0, a0), u) / dot(u, u);
        const double t1 = dot(sub(b1, a0), u) / dot(u, u);
        const double lo = std::max(0.0, std::min(t0, t1));
        const double hi = std::min(1.0, std::max(t0, t1));
        if ((hi - lo) * la > kGeomTol) return false;
        return true;
    }
    return param_at_endpoint(c.s, la) && param_at_endpoint(c.t, lb);
}

}  // namespace

template <int Tag>
BasicNetwork<Tag> merge_parallel_edges(const BasicNetwork<Tag>& net) {
    BasicNetwork<Tag> out;
    out.dim = net.dim;
    out.coeff_dim = net.coeff_dim;
    out.vertices = net.vertices;
    std::map<std::pair<int, int>, int> seen;  // unordered pair -> edge index in out
    for (const Edge& e : net.edges) {
        const std::pair<int, int> key{std::min(e.tail, e.head), std::max(e.tail, e.head)};
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, static_cast<int>(out.edges.size()));
            out.edges.push_back(e);
        } else {
            Edge& target = out.edges[it->second];
            const int flip = (target.tail == e.tail) ? 1 : -1;
            for (std::size_t i = 0; i < target.mult.size(); ++i)
                target.mult[i] += flip * e.mult[i];
        }
    }
    std::vector<Edge> kept;
    for (const Edge& e : out.edges)
        if (!is_zero(e.mult)) kept.push_back(e);
    out.edges = std::move(kept);
    return out;
}

template <int Tag>
void validate(const BasicNetwork<Tag>& net) {
    const int nv = static_cast<int>(net.vertices.size());
    for (const Point& p : net.vertices)
        if (static_cast<int>(p.size()) != net.dim)
            throw ValidationError("network: vertex dimension mismatch");
    std::map<std::pair<int, int>, int> seen;
    for (const Edge& e : net.edges) {
        if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
            throw ValidationError("network: edge endpoint out of range");
        if (e.tail == e.head) throw ValidationError("network: loop edge");
        if (static_cast<int>(e.mult.size()) != net.coeff_dim)
            throw ValidationError("network: multiplicity dimension mismatch");
        if (is_zero(e.mult)) throw ValidationError("network: zero multiplicity edge");
        const std::pair<int, int> key{std::min(e.tail, e.head), std::max(e.tail, e.head)};
        if (!seen.emplace(key, 1).second)
            throw ValidationError("network: parallel edges must be pre-merged");
        if (edge_length(net, e) <= kGeomTol)
            throw ValidationError("network: degenerate (zero-length) edge");
    }
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < net.edges.size(); ++j) {
            const Edge& e = net.edges[i];
            const Edge& f = net.edges[j];
            if (!interiors_disjoint(net.vertices[e.tail], net.vertices[e.head],
                                    net.vertices[f.tail], net.vertices[f.head]))
                throw ValidationError("network: edges " + std::to_string(i) + " and " +
                                      std::to_string(j) + " overlap in their interiors");
        }
    }
}

void validate(const Boundary& b) {
    IntVec total(b.m, 0);
    for (const BoundaryAtom& a : b.atoms) {
        if (static_cast<int>(a.point.size()) != b.dim)
            throw ValidationError("boundary: atom dimension mismatch");
        if (static_cast<int>(a.weight.size()) != b.m)
            throw ValidationError("boundary: weight dimension mismatch");
        if (is_zero(a.weight)) throw ValidationError("boundary: zero-weight atom");
        for (int i = 0; i < b.m; ++i) total[i] += a.weight[i];
    }
    if (!is_zero(total)) throw ValidationError("boundary: weights do not sum to zero");
    for (std::size_t i = 0; i < b.atoms.size(); ++i)
        for (std::size_t j = i + 1; j < b.atoms.size(); ++j)
            if (points_equal(b.atoms[i].point, b.atoms[j].point))
                throw ValidationError("boundary: coincident atom points");
}

template <int Tag>
Boundary boundary_of(const BasicNetwork<Tag>& net) {
    std::vector<IntVec> weight(net.vertices.size(), IntVec(net.coeff_dim, 0));
    for (const Edge& e : net.edges) {
        for (int i = 0; i < net.coeff_dim; ++i) {
            weight[e.head][i] += e.mult[i];
            weight[e.tail][i] -= e.mult[i];
        }
    }
    Boundary b;
    b.dim = net.dim;
    b.m = net.coeff_dim;
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (!is_zero(weight[v])) b.atoms.push_back({net.vertices[v], weight[v]});
    return b;
}

bool same_boundary(const Boundary& a, const Boundary& b) {
    if (a.m != b.m || a.dim != b.dim || a.atoms.size() != b.atoms.size()) return false;
    std::vector<bool> used(b.atoms.size(), false);
    for (const BoundaryAtom& atom : a.atoms) {
        bool found = false;
        for (std::size_t j = 0; j < b.atoms.size(); ++j) {
            if (!used[j] && points_equal(atom.point, b.atoms[j].point) &&
                atom.weight == b.atoms[j].weight) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

double energy(const Network& net, const MultiMaterialCost& cost) {
    if (cost.m != net.coeff_dim) throw DomainError("energy: cost/network material mismatch");
    double total = 0.0;
    for (const Edge& e : net.edges) total += edge_length(net, e) * evaluate(cost, e.mult);
    return total;
}

template Network merge_parallel_edges<0>(const Network&);
template LabeledNetwork merge_parallel_edges<1>(const LabeledNetwork&);
template void validate<0>(const Network&);
template void validate<1>(const LabeledNetwork&);
template Boundary boundary_of<0>(const Network&);
template Boundary boundary_of<1>(const LabeledNetwork&);

}  // namespace mmt
