#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmt/core.hpp"
#include "mmt/lifting.hpp"
#include "mmt/norm_ball.hpp"

namespace mmt {

// Abstract routing graph: nodes 0..terminals-1 are boundary atoms, the
// remaining ones Steiner nodes (degree >= 3, coordinates free).
struct Topology {
    int terminals = 0;
    int steiner = 0;
    std::vector<std::pair<int, int>> edges;

    int nodes() const { return terminals + steiner; }
};

// All non-isomorphic trees on the terminal set plus up to max_steiner
// Steiner nodes (Steiner nodes interchangeable, terminals fixed). Every
// label then routes along the unique tree path between its endpoints.
std::vector<Topology> enumerate_topologies(int terminals, int max_steiner);

struct GeometryTrace {
    int iterations = 0;
    bool converged = false;
    double objective = 0.0;
};

struct GeometryResult {
    LabeledNetwork network;
    std::vector<Point> steiner_points;
    GeometryTrace trace;
};

// Minimizes sum_e |x_head - x_tail| * gauge(mult_e) over the Steiner
// coordinates by subgradient descent with a diminishing step schedule and
// backtracking; edges shorter than kGeomTol are skipped in the subgradient
// and contracted in the reported network.
GeometryResult optimize_geometry(const Topology& topo, const std::vector<IntVec>& edge_mults,
                                 const NormBall& ball, const std::vector<Point>& terminal_points);

struct GridSpec {
    int nx = 3;
    int ny = 3;
    double spacing = 1.0;
    Point origin = {0.0, 0.0};
};

struct SolveOptions {
    int max_steiner = 2;
    std::uint64_t max_permutations = 10000;
    std::uint64_t seed = 0;
    // restrict to the identity permutation (valid for irrigation-type
    // boundaries where one atom carries half of every material)
    bool irrigation_identity_only = false;
    std::optional<GridSpec> grid;  // route on grid vertices instead of free geometry
};

struct SolveResult {
    Network network;         // projected MMTP solution
    LabeledNetwork labeled;  // MMP solution it was projected from
    Permutation sigma;
    double value = 0.0;
    std::uint64_t topologies_tried = 0;
    std::uint64_t permutations_tried = 0;
    bool permutations_sampled = false;
    GeometryTrace best_trace;
    std::string note;
};

// Small-instance solve through the labeled mass-minimization route:
// enumerate permutations and topologies, optimize Steiner geometry under
// the constructed norm, take the minimum and project it back.
SolveResult solve_mmtp(const Boundary& boundary, const MultiMaterialCost& cost,
                       const SolveOptions& opts = {});

// Exhaustive minimum energy over superpositions of per-label simple paths
// on a grid graph, evaluating the cost directly (no norm construction).
double grid_oracle(const Boundary& boundary, const MultiMaterialCost& cost,
                   const GridSpec& grid);

}  // namespace mmt
