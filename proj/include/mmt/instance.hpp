#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmt/calibration.hpp"
#include "mmt/core.hpp"
#include "mmt/cost.hpp"
#include "mmt/norm_ball.hpp"
#include "mmt/solver.hpp"

namespace mmt {

// A network as stored in an instance file; `labeled` distinguishes Z^m
// material multiplicities from Z^N label multiplicities.
struct NamedNetwork {
    std::string name;
    bool labeled = false;
    std::vector<Point> vertices;
    std::vector<Edge> edges;
};

struct NamedForm {
    std::string name;
    ConstantForm form;
};

// Explicit ball data with q = pattern / c per vertex. Supersymmetric and
// hand-picked balls carry a single hull list; general balls one vertex list
// per orthant with its material sign vector.
struct BallPieceData {
    std::vector<int> signs;
    std::vector<std::pair<IntVec, double>> vertices;
};

struct BallData {
    std::vector<int> groups;
    std::vector<std::pair<IntVec, double>> vertices;  // hull form
    std::vector<BallPieceData> pieces;                // orthant form
};

struct InstanceDocument {
    std::string version = "1";
    int dimension = 2;
    int materials = 1;
    std::optional<Boundary> boundary;
    std::optional<CostDescriptor> cost;
    std::vector<NamedNetwork> networks;
    std::optional<BallData> ball;
    std::vector<NamedForm> calibrations;
    SolveOptions solve;
};

InstanceDocument parse_instance(const std::string& text);
InstanceDocument read_instance(const std::string& path);

// Canonical serialization: alphabetically sorted keys, floats printed with
// 12 significant digits. read/write round-trips byte-stably.
std::string write_instance(const InstanceDocument& doc);
void write_instance_file(const InstanceDocument& doc, const std::string& path);

Network to_network(const NamedNetwork& n, int materials, int dimension);
LabeledNetwork to_labeled_network(const NamedNetwork& n, int labels, int dimension);
NamedNetwork from_network(const Network& net, const std::string& name);
NamedNetwork from_labeled_network(const LabeledNetwork& net, const std::string& name);

NormBall to_ball(const BallData& data);
BallData ball_data_of(const NormBall& ball);

}  // namespace mmt
