#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmt/core.hpp"
#include "mmt/cost.hpp"

namespace mmt {

// Hard cap on the label-space dimension of the norm construction
// (3^N candidate vertices).
inline constexpr int kMaxLabels = 10;

// Label bookkeeping for a boundary: N_i copies of material i, label j
// sourced at P(j) and sunk at D(j), per the first-index cumulative rules.
struct LabelLayout {
    int m = 0;
    int total = 0;               // N
    std::vector<int> counts;     // N_i
    std::vector<int> group_of;   // label j -> material index i(j), 0-based
    std::vector<int> offset_of;  // label j -> jbar, the group offset
    std::vector<int> source_atom;  // label j -> boundary atom index of P(j)
    std::vector<int> sink_atom;    // label j -> boundary atom index of D(j)
    Boundary boundary;

    const Point& source_point(int j) const { return boundary.atoms[source_atom[j]].point; }
    const Point& sink_point(int j) const { return boundary.atoms[sink_atom[j]].point; }
};

LabelLayout label_layout(const Boundary& boundary);

// Per-material permutations sigma_i acting on the label groups; sigma[i] is
// a 0-based permutation of {0,..,N_i-1}.
using Permutation = std::vector<std::vector<int>>;

Permutation identity_permutation(const LabelLayout& layout);

// sigma(j) in label indexing: jbar + sigma_{i(j)}(j - jbar).
int apply_permutation(const LabelLayout& layout, const Permutation& sigma, int j);

// Labeled boundary B_sigma = -sum_j e_j delta_{P(j)} + sum_j e_j delta_{D(sigma(j))}.
struct LabeledBoundary {
    int dim = 0;
    int labels = 0;
    std::vector<BoundaryAtom> atoms;  // weights in Z^N
};

LabeledBoundary boundary_sigma(const LabelLayout& layout, const Permutation& sigma);

struct BallVertex {
    IntVec pattern;  // D in {-1,0,1}^N
    double c = 1.0;  // cost of the pattern's group sums
    RealVec q;       // pattern / c
};

// One orthant piece of the general construction: the Step-1 ball of the
// orthant-symmetrized cost, plus the replicated sign vector tau_O defining
// the orthant H_O of R^N it is glued on.
struct OrthantPiece {
    std::vector<int> material_signs;  // s in {-1,+1}^m
    std::vector<int> tau;             // tau_O in {-1,+1}^N
    std::vector<BallVertex> vertices;
};

// Analytic gauges for the cost families whose equivalent norms have known
// closed forms.
struct ClosedFormGauge {
    enum class Kind { SupNorm, LpNorm, MailingSplit };
    Kind kind = Kind::SupNorm;
    double p = 1.0;
};

// Unit ball of the monotone norm on R^N equivalent to a cost. Always
// carries a vertex representation; supersymmetric costs use a single
// convex-hull list, general costs the intersection of per-orthant pieces.
struct NormBall {
    int labels = 0;              // N
    std::vector<int> group_of;   // label -> material, replicating sign patterns
    bool supersymmetric = true;
    std::vector<BallVertex> hull;       // supersymmetric / imported form
    std::vector<OrthantPiece> pieces;   // general form
    std::optional<ClosedFormGauge> closed_form;
};

struct BuildOptions {
    // When false, the sublinearity gate is skipped so that the construction
    // can be exercised on costs that violate it (the gauge then fails the
    // norm identity and the failure is observable).
    bool require_axioms = true;
};

NormBall build_ball(const MultiMaterialCost& cost, const LabelLayout& layout,
                    const BuildOptions& opts = {});

// Ball given directly by a vertex list (hull form).
NormBall ball_from_vertices(int labels, const std::vector<int>& group_of,
                            const std::vector<BallVertex>& vertices);

double gauge(const NormBall& ball, const RealVec& x);
double gauge(const NormBall& ball, const IntVec& x);

// Gauge of the convex hull of an explicit vertex list (helper shared by the
// extreme-point filter and the hull form).
double hull_gauge(const std::vector<BallVertex>& vertices, const RealVec& x);

std::vector<RealVec> extreme_points(const NormBall& ball);

// Mass of a labeled network: sum over edges of length * gauge(multiplicity).
double mass(const LabeledNetwork& net, const NormBall& ball);

struct EqnMainReport {
    bool ok = true;
    double max_residual = 0.0;
    bool sampled = false;  // permutations sampled instead of exhausted
    IntVec worst_theta;
    double worst_cost = 0.0;
    double worst_gauge = 0.0;
};

struct VerifyOptions {
    std::uint64_t max_permutations = 10000;
    std::uint64_t seed = 0;
    double tolerance = kResidualTol;
};

// Checks the defining identity: C(theta) equals the gauge of the signed
// label pattern of theta, over the full theta box and all permutations
// (sampled once their count exceeds max_permutations).
EqnMainReport verify_eqn_main(const MultiMaterialCost& cost, const NormBall& ball,
                              const LabelLayout& layout, const VerifyOptions& opts = {});

// The signed label pattern of theta under sigma (the right-hand side
// argument of the norm identity).
IntVec signed_pattern(const LabelLayout& layout, const Permutation& sigma, const IntVec& theta);

struct MonotoneAbsoluteReport {
    bool absolute = true;
    bool monotone = true;
    double max_absolute_deviation = 0.0;
    double max_monotone_violation = 0.0;
    RealVec absolute_witness;
    RealVec monotone_witness;
};

MonotoneAbsoluteReport check_monotone_absolute(const NormBall& ball, int sample_count,
                                               std::uint64_t seed = 0);

// All permutations of the layout's groups, or an empty vector when their
// count exceeds the cap.
std::vector<Permutation> all_permutations(const LabelLayout& layout, std::uint64_t cap);

}  // namespace mmt
