#include "mmt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace mmt {

namespace {

constexpr std::uint64_t kTopologyCap = 200000;
constexpr std::uint64_t kGridCombinationCap = 5000000;

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    EdgeList edges;
    for (int v : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1) leaves.push(v);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

EdgeList canonical_edges(EdgeList edges, int terminals, int steiner) {
    // lexicographically smallest edge list over Steiner relabelings
    std::vector<int> perm(steiner);
    for (int i = 0; i < steiner; ++i) perm[i] = i;
    EdgeList best;
    do {
        EdgeList relabeled;
        for (auto [u, v] : edges) {
            const int uu = u < terminals ? u : terminals + perm[u - terminals];
            const int vv = v < terminals ? v : terminals + perm[v - terminals];
            relabeled.emplace_back(std::min(uu, vv), std::max(uu, vv));
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (best.empty() || relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Topology> enumerate_topologies(int terminals, int max_steiner) {
    if (terminals < 2 || terminals > 8)
        throw LimitError("enumerate_topologies: terminal count must be between 2 and 8");
    if (max_steiner < 0 || max_steiner > 3)
        throw LimitError("enumerate_topologies: max_steiner must be between 0 and 3");

    std::vector<Topology> out;
    for (int steiner = 0; steiner <= max_steiner; ++steiner) {
        const int n = terminals + steiner;
        std::set<EdgeList> seen;
        auto emit = [&](const EdgeList& edges) {
            // Steiner nodes need degree >= 3
            std::vector<int> degree(n, 0);
            for (auto [u, v] : edges) {
                ++degree[u];
                ++degree[v];
            }
            for (int s = terminals; s < n; ++s)
                if (degree[s] < 3) return;
            const EdgeList canon = canonical_edges(edges, terminals, steiner);
            if (seen.insert(canon).second) {
                Topology t;
                t.terminals = terminals;
                t.steiner = steiner;
                t.edges = canon;
                out.push_back(std::move(t));
                if (out.size() > kTopologyCap)
                    throw LimitError("enumerate_topologies: candidate count exceeds the cap");
            }
        };
        if (n == 2) {
            emit({{0, 1}});
            continue;
        }
        // enumerate Pruefer sequences; a Steiner node must appear >= 2 times
        std::vector<int> seq(n - 2, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n - 2) {
                emit(tree_from_pruefer(seq, n));
                return;
            }
            for (int v = 0; v < n; ++v) {
                seq[pos] = v;
                // prune: remaining slots must cover the under-represented Steiner nodes
                std::vector<int> need(n, 2);
                for (int k = 0; k <= pos; ++k)
                    if (seq[k] >= terminals) need[seq[k]] = std::max(0, need[seq[k]] - 1);
                int required = 0;
                for (int s = terminals; s < n; ++s) required += need[s];
                if (required <= (n - 2) - (pos + 1)) rec(pos + 1);
            }
        };
        rec(0);
    }
    return out;
}

namespace {

std::vector<int> tree_path(const Topology& topo, int from, int to) {
    std::vector<std::vector<int>> adj(topo.nodes());
    for (auto [u, v] : topo.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(topo.nodes(), -1);
    std::queue<int> q;
    q.push(from);
    parent[from] = from;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == to) break;
        for (int v : adj[u])
            if (parent[v] < 0) {
                parent[v] = u;
                q.push(v);
            }
    }
    if (parent[to] < 0) throw ValidationError("topology does not connect a label's endpoints");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

double geometry_objective(const std::vector<Point>& pos, const EdgeList& edges,
                          const RealVec& weights) {
    double f = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e)
        f += weights[e] * dist(pos[edges[e].first], pos[edges[e].second]);
    return f;
}

}  // namespace

GeometryResult optimize_geometry(const Topology& topo, const std::vector<IntVec>& edge_mults,
                                 const NormBall& ball,
                                 const std::vector<Point>& terminal_points) {
    const int d = static_cast<int>(terminal_points.front().size());
    const int n = topo.nodes();

    EdgeList active;
    RealVec weights;
    std::vector<IntVec> active_mults;
    for (std::size_t e = 0; e < topo.edges.size(); ++e) {
        if (is_zero(edge_mults[e])) continue;
        active.push_back(topo.edges[e]);
        weights.push_back(gauge(ball, edge_mults[e]));
        active_mults.push_back(edge_mults[e]);
    }

    std::vector<Point> pos(n, Point(d, 0.0));
    for (int t = 0; t < topo.terminals; ++t) pos[t] = terminal_points[t];

    // Steiner start: centroid of terminals, then a few rounds of
    // neighbor-centroid smoothing.
    Point centroid(d, 0.0);
    for (int t = 0; t < topo.terminals; ++t)
        for (int k = 0; k < d; ++k) centroid[k] += pos[t][k] / topo.terminals;
    for (int s = topo.terminals; s < n; ++s) pos[s] = centroid;
    std::vector<std::vector<int>> neighbors(n);
    for (auto [u, v] : active) {
        neighbors[u].push_back(v);
        neighbors[v].push_back(u);
    }
    for (int round = 0; round < 20; ++round) {
        for (int s = topo.terminals; s < n; ++s) {
            if (neighbors[s].empty()) continue;
            Point avg(d, 0.0);
            for (int u : neighbors[s])
                for (int k = 0; k < d; ++k) avg[k] += pos[u][k] / neighbors[s].size();
            pos[s] = avg;
        }
    }

    double diameter = 0.0;
    for (int a = 0; a < topo.terminals; ++a)
        for (int b = a + 1; b < topo.terminals; ++b)
            diameter = std::max(diameter, dist(terminal_points[a], terminal_points[b]));
    if (diameter == 0.0) diameter = 1.0;

    GeometryTrace trace;
    double f = geometry_objective(pos, active, weights);
    const int max_iters = 100000;
    int iter = 0;
    if (topo.steiner > 0 && !active.empty()) {
        for (iter = 1; iter <= max_iters; ++iter) {
            std::vector<Point> grad(n, Point(d, 0.0));
            for (std::size_t e = 0; e < active.size(); ++e) {
                const auto [u, v] = active[e];
                const double len = dist(pos[u], pos[v]);
                if (len <= kGeomTol) continue;  // nonsmooth point: skip this edge
                for (int k = 0; k < d; ++k) {
                    const double g = weights[e] * (pos[u][k] - pos[v][k]) / len;
                    grad[u][k] += g;
                    grad[v][k] -= g;
                }
            }
            double step = diameter / iter;
            bool accepted = false;
            double moved = 0.0;
            for (int halving = 0; halving < 60; ++halving) {
                std::vector<Point> trial = pos;
                double trial_move = 0.0;
                for (int s = topo.terminals; s < n; ++s)
                    for (int k = 0; k < d; ++k) {
                        trial[s][k] -= step * grad[s][k];
                        trial_move = std::max(trial_move, std::abs(step * grad[s][k]));
                    }
                const double ft = geometry_objective(trial, active, weights);
                if (ft < f - 1e-15) {
                    pos = std::move(trial);
                    f = ft;
                    accepted = true;
                    moved = trial_move;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted || moved < 1e-10) {
                trace.converged = true;
                break;
            }
        }
    } else {
        trace.converged = true;
    }
    trace.iterations = std::min(iter, max_iters);
    trace.objective = f;

    // contract degenerate edges (only those with a Steiner endpoint)
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (auto [u, v] : active) {
        const int a = find(u);
        const int b = find(v);
        if (a == b) continue;
        if (dist(pos[a], pos[b]) < kGeomTol && (a >= topo.terminals || b >= topo.terminals)) {
            // keep the terminal representative when there is one
            if (a < topo.terminals)
                rep[b] = a;
            else
                rep[a] = b;
        }
    }

    std::vector<int> vertex_id(n, -1);
    GeometryResult result;
    result.trace = trace;
    LabeledNetwork& net = result.network;
    net.dim = d;
    net.coeff_dim = ball.labels;
    auto ensure_vertex = [&](int node) {
        const int r = find(node);
        if (vertex_id[r] < 0) {
            vertex_id[r] = static_cast<int>(net.vertices.size());
            net.vertices.push_back(pos[r]);
        }
        return vertex_id[r];
    };
    std::map<std::pair<int, int>, int> edge_at;
    for (std::size_t e = 0; e < active.size(); ++e) {
        const int u = find(active[e].first);
        const int v = find(active[e].second);
        if (u == v) continue;
        const int uu = ensure_vertex(u);
        const int vv = ensure_vertex(v);
        const auto key = std::make_pair(std::min(uu, vv), std::max(uu, vv));
        auto it = edge_at.find(key);
        if (it == edge_at.end()) {
            edge_at.emplace(key, static_cast<int>(net.edges.size()));
            Edge edge;
            edge.tail = uu;
            edge.head = vv;
            edge.mult = active_mults[e];
            net.edges.push_back(std::move(edge));
        } else {
            Edge& target = net.edges[it->second];
            const int flip = target.tail == uu ? 1 : -1;
            for (std::size_t j = 0; j < target.mult.size(); ++j)
                target.mult[j] += flip * active_mults[e][j];
        }
    }
    std::vector<Edge> kept;
    for (const Edge& e : net.edges)
        if (!is_zero(e.mult)) kept.push_back(e);
    net.edges = std::move(kept);
    for (int s = topo.terminals; s < n; ++s)
        if (find(s) == s && vertex_id[s] >= 0) result.steiner_points.push_back(pos[s]);
    return result;
}

namespace {

struct GridGraph {
    std::vector<Point> nodes;
    EdgeList edges;
    std::vector<std::vector<int>> adjacency;  // node -> neighbor nodes
    std::map<std::pair<int, int>, int> edge_index;

    explicit GridGraph(const GridSpec& spec) {
        const int nx = spec.nx, ny = spec.ny;
        if (nx < 2 || ny < 2 || nx > 5 || ny > 5)
            throw LimitError("grid: dimensions must be between 2x2 and 5x5");
        auto id = [nx](int ix, int iy) { return iy * nx + ix; };
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                nodes.push_back({spec.origin[0] + ix * spec.spacing,
                                 spec.origin[1] + iy * spec.spacing});
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix) {
                if (ix + 1 < nx) edges.emplace_back(id(ix, iy), id(ix + 1, iy));
                if (iy + 1 < ny) edges.emplace_back(id(ix, iy), id(ix, iy + 1));
            }
        adjacency.resize(nodes.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adjacency[edges[e].first].push_back(edges[e].second);
            adjacency[edges[e].second].push_back(edges[e].first);
            edge_index[edges[e]] = static_cast<int>(e);
        }
    }

    int node_at(const Point& p) const {
        for (std::size_t v = 0; v < nodes.size(); ++v)
            if (points_equal(nodes[v], p)) return static_cast<int>(v);
        return -1;
    }
};

std::vector<std::vector<int>> enumerate_simple_paths(const GridGraph& g, int from, int to) {
    std::vector<std::vector<int>> paths;
    std::vector<int> walk{from};
    std::vector<bool> seen(g.nodes.size(), false);
    seen[from] = true;
    std::function<void()> rec = [&]() {
        const int cur = walk.back();
        if (cur == to) {
            paths.push_back(walk);
            return;
        }
        for (int v : g.adjacency[cur]) {
            if (seen[v]) continue;
            seen[v] = true;
            walk.push_back(v);
            rec();
            walk.pop_back();
            seen[v] = false;
        }
    };
    rec();
    return paths;
}

// signed per-edge traversal of a node path
void add_path_to_edges(const GridGraph& g, const std::vector<int>& path, int coord,
                       std::vector<IntVec>& mults) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const int u = path[k], v = path[k + 1];
        const auto it = g.edge_index.find({std::min(u, v), std::max(u, v)});
        const int e = it->second;
        mults[e][coord] += (g.edges[e].first == u) ? 1 : -1;
    }
}

std::vector<Permutation> solve_permutations(const LabelLayout& layout, const SolveOptions& opts,
                                            bool& sampled) {
    sampled = false;
    if (opts.irrigation_identity_only) return {identity_permutation(layout)};
    std::vector<Permutation> perms = all_permutations(layout, opts.max_permutations);
    if (perms.empty() && layout.total > 0) {
        sampled = true;
        std::mt19937_64 rng(opts.seed);
        Permutation sigma = identity_permutation(layout);
        perms.push_back(sigma);
        for (std::uint64_t s = 1; s < opts.max_permutations; ++s) {
            for (auto& group : sigma) std::shuffle(group.begin(), group.end(), rng);
            perms.push_back(sigma);
        }
    }
    if (perms.empty()) perms.push_back(identity_permutation(layout));
    return perms;
}

}  // namespace

SolveResult solve_mmtp(const Boundary& boundary, const MultiMaterialCost& cost,
                       const SolveOptions& opts) {
    const LabelLayout layout = label_layout(boundary);
    const NormBall ball = build_ball(cost, layout);

    SolveResult result;
    result.permutations_sampled = false;
    const std::vector<Permutation> perms =
        solve_permutations(layout, opts, result.permutations_sampled);
    result.note = "best within enumerated class";

    double best = std::numeric_limits<double>::infinity();

    if (opts.grid) {
        const GridGraph grid(*opts.grid);
        std::vector<int> label_source(layout.total);
        for (int j = 0; j < layout.total; ++j) {
            label_source[j] = grid.node_at(layout.source_point(j));
            if (label_source[j] < 0)
                throw ValidationError("grid solve: boundary atom off the grid");
        }
        for (const Permutation& sigma : perms) {
            ++result.permutations_tried;
            std::vector<std::vector<std::vector<int>>> label_paths(layout.total);
            std::uint64_t combos = 1;
            for (int j = 0; j < layout.total; ++j) {
                const int sink = grid.node_at(layout.sink_point(apply_permutation(layout, sigma, j)));
                if (sink < 0) throw ValidationError("grid solve: boundary atom off the grid");
                label_paths[j] = enumerate_simple_paths(grid, label_source[j], sink);
                combos *= label_paths[j].size();
                if (combos > kGridCombinationCap)
                    throw LimitError("grid solve: path combination count exceeds the cap");
            }
            std::vector<std::size_t> choice(layout.total, 0);
            while (true) {
                std::vector<IntVec> mults(grid.edges.size(), IntVec(layout.total, 0));
                for (int j = 0; j < layout.total; ++j)
                    add_path_to_edges(grid, label_paths[j][choice[j]], j, mults);
                double value = 0.0;
                for (std::size_t e = 0; e < grid.edges.size(); ++e) {
                    if (is_zero(mults[e])) continue;
                    value += opts.grid->spacing * gauge(ball, mults[e]);
                }
                if (value < best - 1e-12) {
                    best = value;
                    LabeledNetwork net;
                    net.dim = 2;
                    net.coeff_dim = layout.total;
                    net.vertices = grid.nodes;
                    for (std::size_t e = 0; e < grid.edges.size(); ++e)
                        if (!is_zero(mults[e]))
                            net.edges.push_back(
                                {grid.edges[e].first, grid.edges[e].second, mults[e]});
                    result.labeled = std::move(net);
                    result.sigma = sigma;
                }
                int j = layout.total - 1;
                while (j >= 0 && choice[j] + 1 == label_paths[j].size()) {
                    choice[j] = 0;
                    --j;
                }
                if (j < 0) break;
                ++choice[j];
            }
        }
    } else {
        const int terminals = static_cast<int>(boundary.atoms.size());
        const std::vector<Topology> topologies = enumerate_topologies(terminals, opts.max_steiner);
        std::vector<Point> terminal_points;
        for (const BoundaryAtom& a : boundary.atoms) terminal_points.push_back(a.point);

        for (std::size_t si = 0; si < perms.size(); ++si) {
            const Permutation& sigma = perms[si];
            ++result.permutations_tried;
            for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
                const Topology& topo = topologies[ti];
                if (si == 0) ++result.topologies_tried;
                std::vector<IntVec> mults(topo.edges.size(), IntVec(layout.total, 0));
                std::map<std::pair<int, int>, int> edge_idx;
                for (std::size_t e = 0; e < topo.edges.size(); ++e) edge_idx[topo.edges[e]] = e;
                for (int j = 0; j < layout.total; ++j) {
                    const int from = layout.source_atom[j];
                    const int to = layout.sink_atom[apply_permutation(layout, sigma, j)];
                    if (from == to) continue;
                    const std::vector<int> path = tree_path(topo, from, to);
                    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                        const int u = path[k], v = path[k + 1];
                        const auto key = std::make_pair(std::min(u, v), std::max(u, v));
                        const int e = edge_idx.at(key);
                        mults[e][j] += (topo.edges[e].first == u) ? 1 : -1;
                    }
                }
                GeometryResult geo = optimize_geometry(topo, mults, ball, terminal_points);
                const double value = mass(geo.network, ball);
                if (value < best - 1e-12) {
                    best = value;
                    result.labeled = geo.network;
                    result.sigma = sigma;
                    result.best_trace = geo.trace;
                }
            }
        }
    }

    if (!std::isfinite(best)) throw ValidationError("solve: no feasible candidate found");
    result.value = best;
    result.network = project(result.labeled, layout);
    const double projected_energy = energy(result.network, cost);
    if (std::abs(projected_energy - best) > 1e-8)
        throw std::runtime_error("solve: projected energy does not match the optimal mass");
    return result;
}

double grid_oracle(const Boundary& boundary, const MultiMaterialCost& cost,
                   const GridSpec& grid_spec) {
    const LabelLayout layout = label_layout(boundary);
    if (layout.total > 4) throw LimitError("grid_oracle: more than 4 labels");
    const GridGraph grid(grid_spec);

    std::vector<int> label_source(layout.total);
    for (int j = 0; j < layout.total; ++j) {
        label_source[j] = grid.node_at(layout.source_point(j));
        if (label_source[j] < 0) throw ValidationError("grid_oracle: boundary atom off the grid");
    }

    const std::vector<Permutation> perms =
        all_permutations(layout, 10000);
    if (perms.empty()) throw LimitError("grid_oracle: too many permutations");

    double best = std::numeric_limits<double>::infinity();
    for (const Permutation& sigma : perms) {
        std::vector<std::vector<std::vector<int>>> label_paths(layout.total);
        std::uint64_t combos = 1;
        for (int j = 0; j < layout.total; ++j) {
            const int sink = grid.node_at(layout.sink_point(apply_permutation(layout, sigma, j)));
            if (sink < 0) throw ValidationError("grid_oracle: boundary atom off the grid");
            label_paths[j] = enumerate_simple_paths(grid, label_source[j], sink);
            combos *= label_paths[j].size();
            if (combos > kGridCombinationCap)
                throw LimitError("grid_oracle: path combination count exceeds the cap");
        }
        std::vector<std::size_t> choice(layout.total, 0);
        if (layout.total == 0) return 0.0;
        while (true) {
            // superpose material flows directly and price them with the cost
            std::vector<IntVec> flows(grid.edges.size(), IntVec(layout.m, 0));
            for (int j = 0; j < layout.total; ++j)
                add_path_to_edges(grid, label_paths[j][choice[j]], layout.group_of[j], flows);
            double value = 0.0;
            for (std::size_t e = 0; e < grid.edges.size(); ++e) {
                if (is_zero(flows[e])) continue;
                value += grid_spec.spacing * evaluate(cost, flows[e]);
            }
            best = std::min(best, value);
            int j = layout.total - 1;
            while (j >= 0 && choice[j] + 1 == label_paths[j].size()) {
                choice[j] = 0;
                --j;
            }
            if (j < 0) break;
            ++choice[j];
        }
    }
    return best;
}

}  // namespace mmt
