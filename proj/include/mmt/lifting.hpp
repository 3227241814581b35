#pragma once

#include <utility>
#include <vector>

#include "mmt/core.hpp"
#include "mmt/norm_ball.hpp"

namespace mmt {

// One extracted unit path or cycle of a single component. Cycles store the
// closed vertex sequence without repeating the starting vertex.
struct UnitCurve {
    std::vector<int> vertices;
    int index = 0;  // material or label index the curve belongs to
    int sign = 1;
};

struct Decomposition {
    int component = 0;
    std::vector<UnitCurve> paths;
    std::vector<UnitCurve> cycles;
};

// Integer flow decomposition of one component into simple source-to-sink
// unit paths followed by simple cycles. Deterministic: sources are consumed
// in the given per-unit order (vertex-index order by default) and walks
// always extend along the lowest-index edge with residual flow in the
// direction of travel.
template <int Tag>
Decomposition flow_decompose(const BasicNetwork<Tag>& net, int component,
                             const std::vector<int>& source_unit_order = {});

// Per-edge multiplicity of one component reproduced from a decomposition
// (paths and cycles superposed); used to check exact reconstruction.
template <int Tag>
IntVec superpose_component(const BasicNetwork<Tag>& net, const Decomposition& dec);

// Drops all cycles from every component and re-superposes the paths,
// iterating until no component contains a cycle. Preserves the boundary
// and never increases the energy of an increasing cost.
template <int Tag>
BasicNetwork<Tag> remove_cycles(const BasicNetwork<Tag>& net);

// MMTP -> MMP: decomposes each material into unit paths, assigns label
// j = group offset + extraction rank, and reads off the permutation from
// the reached sinks. Cycles are dropped.
std::pair<LabeledNetwork, Permutation> lift(const Network& net, const LabelLayout& layout);

// MMP -> MMTP: removes per-label cycles, then sums each material group's
// label components. The labeled boundary must equal B_sigma for some
// permutation sigma of the layout.
Network project(const LabeledNetwork& lnet, const LabelLayout& layout);

// Recovers sigma from a labeled network's boundary; throws when the
// boundary is not of B_sigma form.
Permutation sigma_of_boundary(const LabeledNetwork& lnet, const LabelLayout& layout);

// For each component, whether its support (edges with nonzero entry) is
// acyclic as an undirected graph.
template <int Tag>
std::vector<bool> is_forest_per_component(const BasicNetwork<Tag>& net);

}  // namespace mmt
