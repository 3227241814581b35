#include "mmt/lifting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mmt {

namespace {

// Residual state of one component's integer flow.
struct Residual {
    // Per edge: remaining units and flow direction (+1 tail->head, -1 head->tail).
    std::vector<int> remaining;
    std::vector<int> direction;
    std::vector<std::vector<int>> incident;  // vertex -> incident edge indices (sorted)

    template <int Tag>
    Residual(const BasicNetwork<Tag>& net, int component) {
        remaining.resize(net.edges.size());
        direction.resize(net.edges.size());
        incident.resize(net.vertices.size());
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            const int theta = net.edges[e].mult[component];
            remaining[e] = std::abs(theta);
            direction[e] = sign_of(theta);
            if (theta != 0) {
                incident[net.edges[e].tail].push_back(static_cast<int>(e));
                incident[net.edges[e].head].push_back(static_cast<int>(e));
            }
        }
    }

    // Lowest-index edge leaving `v` with residual units, or -1.
    template <int Tag>
    int next_edge(const BasicNetwork<Tag>& net, int v) const {
        for (int e : incident[v]) {
            if (remaining[e] == 0) continue;
            const int from = direction[e] > 0 ? net.edges[e].tail : net.edges[e].head;
            if (from == v) return e;
        }
        return -1;
    }
};

// One walk step target.
template <int Tag>
int edge_target(const BasicNetwork<Tag>& net, const Residual& res, int e) {
    return res.direction[e] > 0 ? net.edges[e].head : net.edges[e].tail;
}

}  // namespace

template <int Tag>
Decomposition flow_decompose(const BasicNetwork<Tag>& net, int component,
                             const std::vector<int>& source_unit_order) {
    Decomposition dec;
    dec.component = component;
    Residual res(net, component);

    std::vector<int> demand(net.vertices.size(), 0);
    std::vector<int> production(net.vertices.size(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const int theta = net.edges[e].mult[component];
        demand[net.edges[e].head] += theta;
        demand[net.edges[e].tail] -= theta;
    }
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        if (demand[v] < 0) {
            production[v] = -demand[v];
            demand[v] = 0;
        }
    }

    std::vector<int> sources = source_unit_order;
    if (sources.empty()) {
        for (std::size_t v = 0; v < net.vertices.size(); ++v)
            for (int k = 0; k < production[v]; ++k) sources.push_back(static_cast<int>(v));
    } else {
        std::vector<int> check = production;
        for (int v : sources) {
            if (v < 0 || v >= static_cast<int>(check.size()) || check[v] == 0)
                throw ValidationError("flow_decompose: source order does not match production");
            --check[v];
        }
        if (std::accumulate(check.begin(), check.end(), 0) != 0)
            throw ValidationError("flow_decompose: source order does not cover all production");
    }

    for (int s : sources) {
        std::vector<int> walk{s};
        std::vector<int> pos(net.vertices.size(), -1);
        pos[s] = 0;
        int cur = s;
        while (true) {
            if (demand[cur] > 0 && cur != s) {
                --demand[cur];
                break;
            }
            const int e = res.next_edge(net, cur);
            if (e < 0) {
                if (demand[cur] > 0) {  // unit terminates at its own source's sink
                    --demand[cur];
                    break;
                }
                throw ValidationError("flow_decompose: component flow is inconsistent");
            }
            --res.remaining[e];
            const int v = edge_target(net, res, e);
            if (pos[v] >= 0) {
                // strip the loop walk[pos(v)..] as a cycle and resume from v
                UnitCurve cyc;
                cyc.index = component;
                cyc.vertices.assign(walk.begin() + pos[v], walk.end());
                for (std::size_t k = pos[v] + 1; k < walk.size(); ++k) pos[walk[k]] = -1;
                walk.resize(pos[v] + 1);
                dec.cycles.push_back(std::move(cyc));
                cur = v;
            } else {
                walk.push_back(v);
                pos[v] = static_cast<int>(walk.size()) - 1;
                cur = v;
            }
        }
        UnitCurve path;
        path.index = component;
        path.vertices = walk;
        dec.paths.push_back(std::move(path));
    }

    // leftover residual is a circulation; peel simple cycles
    while (true) {
        int start_edge = -1;
        for (std::size_t e = 0; e < res.remaining.size(); ++e)
            if (res.remaining[e] > 0) {
                start_edge = static_cast<int>(e);
                break;
            }
        if (start_edge < 0) break;
        const int s = res.direction[start_edge] > 0 ? net.edges[start_edge].tail
                                                    : net.edges[start_edge].head;
        std::vector<int> walk{s};
        std::vector<int> pos(net.vertices.size(), -1);
        pos[s] = 0;
        int cur = s;
        while (true) {
            const int e = res.next_edge(net, cur);
            if (e < 0) throw ValidationError("flow_decompose: circulation is inconsistent");
            --res.remaining[e];
            const int v = edge_target(net, res, e);
            if (pos[v] >= 0) {
                UnitCurve cyc;
                cyc.index = component;
                cyc.vertices.assign(walk.begin() + pos[v], walk.end());
                for (std::size_t k = pos[v] + 1; k < walk.size(); ++k) pos[walk[k]] = -1;
                walk.resize(pos[v] + 1);
                dec.cycles.push_back(std::move(cyc));
                if (v == s && res.next_edge(net, s) < 0) break;
                cur = v;
            } else {
                walk.push_back(v);
                pos[v] = static_cast<int>(walk.size()) - 1;
                cur = v;
            }
        }
    }
    return dec;
}

namespace {

template <int Tag>
std::map<std::pair<int, int>, int> edge_index_map(const BasicNetwork<Tag>& net) {
    std::map<std::pair<int, int>, int> idx;
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        idx[{std::min(net.edges[e].tail, net.edges[e].head),
             std::max(net.edges[e].tail, net.edges[e].head)}] = static_cast<int>(e);
    return idx;
}

template <int Tag>
void add_curve(const BasicNetwork<Tag>& net, const std::map<std::pair<int, int>, int>& idx,
               const std::vector<int>& vertices, bool closed, int sign, IntVec& out) {
    const std::size_t n = vertices.size();
    const std::size_t steps = closed ? n : n - 1;
    for (std::size_t k = 0; k < steps; ++k) {
        const int u = vertices[k];
        const int v = vertices[(k + 1) % n];
        const auto it = idx.find({std::min(u, v), std::max(u, v)});
        if (it == idx.end()) throw ValidationError("decomposition references a missing edge");
        const Edge& e = net.edges[it->second];
        out[it->second] += (e.tail == u ? 1 : -1) * sign;
    }
}

}  // namespace

template <int Tag>
IntVec superpose_component(const BasicNetwork<Tag>& net, const Decomposition& dec) {
    IntVec out(net.edges.size(), 0);
    const auto idx = edge_index_map(net);
    for (const UnitCurve& p : dec.paths) add_curve(net, idx, p.vertices, false, p.sign, out);
    for (const UnitCurve& c : dec.cycles) add_curve(net, idx, c.vertices, true, c.sign, out);
    return out;
}

template <int Tag>
BasicNetwork<Tag> remove_cycles(const BasicNetwork<Tag>& net) {
    BasicNetwork<Tag> cur = net;
    while (true) {
        bool found_cycle = false;
        std::vector<IntVec> per_component(cur.coeff_dim);
        for (int i = 0; i < cur.coeff_dim; ++i) {
            Decomposition dec = flow_decompose(cur, i);
            if (!dec.cycles.empty()) {
                found_cycle = true;
                dec.cycles.clear();
            }
            per_component[i] = superpose_component(cur, dec);
        }
        BasicNetwork<Tag> next;
        next.dim = cur.dim;
        next.coeff_dim = cur.coeff_dim;
        next.vertices = cur.vertices;
        for (std::size_t e = 0; e < cur.edges.size(); ++e) {
            Edge edge = cur.edges[e];
            for (int i = 0; i < cur.coeff_dim; ++i) edge.mult[i] = per_component[i][e];
            if (!is_zero(edge.mult)) next.edges.push_back(edge);
        }
        if (!found_cycle) return next;
        cur = next;
    }
}

std::pair<LabeledNetwork, Permutation> lift(const Network& net, const LabelLayout& layout) {
    const Boundary net_boundary = boundary_of(net);
    if (!same_boundary(net_boundary, layout.boundary))
        throw ValidationError("lift: network boundary does not match the layout's boundary");

    const Network clean = remove_cycles(net);

    // layout atom index -> vertex index of the cycle-free network
    std::vector<int> atom_vertex(layout.boundary.atoms.size(), -1);
    for (std::size_t a = 0; a < layout.boundary.atoms.size(); ++a)
        for (std::size_t v = 0; v < clean.vertices.size(); ++v)
            if (points_equal(layout.boundary.atoms[a].point, clean.vertices[v])) {
                atom_vertex[a] = static_cast<int>(v);
                break;
            }

    LabeledNetwork out;
    out.dim = clean.dim;
    out.coeff_dim = layout.total;
    out.vertices = clean.vertices;
    for (const Edge& e : clean.edges)
        out.edges.push_back({e.tail, e.head, IntVec(layout.total, 0)});
    const auto idx = edge_index_map(clean);

    Permutation sigma = identity_permutation(layout);
    std::vector<bool> slot_used(layout.total, false);

    int offset = 0;
    for (int i = 0; i < layout.m; ++i) {
        std::vector<int> source_order;
        for (int k = 0; k < layout.counts[i]; ++k) {
            const int atom = layout.source_atom[offset + k];
            if (atom_vertex[atom] < 0)
                throw ValidationError("lift: boundary atom is not a network vertex");
            source_order.push_back(atom_vertex[atom]);
        }
        Decomposition dec = flow_decompose(clean, i, source_order);
        for (int k = 0; k < layout.counts[i]; ++k) {
            const int label = offset + k;
            IntVec trace(clean.edges.size(), 0);
            Decomposition single;
            single.component = i;
            single.paths.push_back(dec.paths[k]);
            trace = superpose_component(clean, single);
            for (std::size_t e = 0; e < clean.edges.size(); ++e)
                out.edges[e].mult[label] = trace[e];

            // read the permutation off the reached sink
            const int sink_vertex = dec.paths[k].vertices.back();
            int slot = -1;
            for (int j = offset; j < offset + layout.counts[i] && slot < 0; ++j)
                if (!slot_used[j] && atom_vertex[layout.sink_atom[j]] == sink_vertex) slot = j;
            if (slot < 0) throw ValidationError("lift: path terminated at a non-sink vertex");
            slot_used[slot] = true;
            sigma[i][k] = slot - offset;
        }
        offset += layout.counts[i];
    }

    std::vector<Edge> kept;
    for (const Edge& e : out.edges)
        if (!is_zero(e.mult)) kept.push_back(e);
    out.edges = std::move(kept);
    return {out, sigma};
}

Permutation sigma_of_boundary(const LabeledNetwork& lnet, const LabelLayout& layout) {
    if (lnet.coeff_dim != layout.total)
        throw ValidationError("labeled network has wrong label count for the layout");
    const Boundary lb = boundary_of(lnet);
    Permutation sigma = identity_permutation(layout);
    std::vector<bool> slot_used(layout.total, false);
    for (int j = 0; j < layout.total; ++j) {
        const Point* source = nullptr;
        const Point* sink = nullptr;
        for (const BoundaryAtom& a : lb.atoms) {
            const int w = a.weight[j];
            if (w == 0) continue;
            if (w == -1 && !source)
                source = &a.point;
            else if (w == 1 && !sink)
                sink = &a.point;
            else
                throw ValidationError("labeled boundary is not of unit B_sigma form");
        }
        if (!source || !sink)
            throw ValidationError("labeled boundary is missing a source or sink for label " +
                                  std::to_string(j + 1));
        if (!points_equal(*source, layout.source_point(j)))
            throw ValidationError("labeled boundary sources label " + std::to_string(j + 1) +
                                  " at the wrong point");
        const int offset = layout.offset_of[j];
        const int count = layout.counts[layout.group_of[j]];
        int slot = -1;
        for (int cand = offset; cand < offset + count && slot < 0; ++cand)
            if (!slot_used[cand] && points_equal(*sink, layout.sink_point(cand))) slot = cand;
        if (slot < 0)
            throw ValidationError("labeled boundary sinks label " + std::to_string(j + 1) +
                                  " at a point that is not an available demand slot");
        slot_used[slot] = true;
        sigma[layout.group_of[j]][j - offset] = slot - offset;
    }
    return sigma;
}

Network project(const LabeledNetwork& lnet, const LabelLayout& layout) {
    sigma_of_boundary(lnet, layout);  // validates B_sigma form
    const LabeledNetwork clean = remove_cycles(lnet);
    Network out;
    out.dim = clean.dim;
    out.coeff_dim = layout.m;
    out.vertices = clean.vertices;
    for (const Edge& e : clean.edges) {
        IntVec mult(layout.m, 0);
        for (int j = 0; j < layout.total; ++j) mult[layout.group_of[j]] += e.mult[j];
        if (!is_zero(mult)) out.edges.push_back({e.tail, e.head, mult});
    }
    return out;
}

template <int Tag>
std::vector<bool> is_forest_per_component(const BasicNetwork<Tag>& net) {
    std::vector<bool> result(net.coeff_dim, true);
    for (int i = 0; i < net.coeff_dim; ++i) {
        std::vector<int> parent(net.vertices.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const Edge& e : net.edges) {
            if (e.mult[i] == 0) continue;
            const int a = find(e.tail);
            const int b = find(e.head);
            if (a == b) {
                result[i] = false;
                break;
            }
            parent[a] = b;
        }
    }
    return result;
}

template Decomposition flow_decompose<0>(const Network&, int, const std::vector<int>&);
template Decomposition flow_decompose<1>(const LabeledNetwork&, int, const std::vector<int>&);
template IntVec superpose_component<0>(const Network&, const Decomposition&);
template IntVec superpose_component<1>(const LabeledNetwork&, const Decomposition&);
template Network remove_cycles<0>(const Network&);
template LabeledNetwork remove_cycles<1>(const LabeledNetwork&);
template std::vector<bool> is_forest_per_component<0>(const Network&);
template std::vector<bool> is_forest_per_component<1>(const LabeledNetwork&);

}  // namespace mmt
