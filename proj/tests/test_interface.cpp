#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mmt/instance.hpp"
#include "mmt/lifting.hpp"
#include "mmt/svg.hpp"

using namespace mmt;

namespace {

InstanceDocument sample_doc() {
    InstanceDocument doc;
    doc.dimension = 2;
    doc.materials = 2;
    Boundary b;
    b.dim = 2;
    b.m = 2;
    b.atoms = {{{0.0, 0.0}, {-1, -1}},
               {{1.5, 0.866025403784439}, {1, 0}},
               {{1.5, -0.866025403784439}, {0, 1}}};
    doc.boundary = b;
    CostDescriptor cost;
    cost.kind = "mailing";
    cost.m = 2;
    cost.alpha = 0.0;
    cost.box = {1, 1};
    doc.cost = cost;
    NamedNetwork net;
    net.name = "minimizer";
    net.labeled = true;
    net.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.5, 0.866025403784439},
                    {1.5, -0.866025403784439}};
    net.edges = {{0, 1, {1, 1}}, {1, 2, {1, 0}}, {1, 3, {0, 1}}};
    doc.networks.push_back(net);
    NamedForm form;
    form.name = "omega1";
    form.form.rows = {{0.5, 0.866025403784439}, {0.5, -0.866025403784439}};
    doc.calibrations.push_back(form);
    return doc;
}

}  // namespace

TEST_CASE("canonical write round-trips byte-stably") {
    const InstanceDocument doc = sample_doc();
    const std::string once = write_instance(doc);
    const InstanceDocument reparsed = parse_instance(once);
    const std::string twice = write_instance(reparsed);
    CHECK(once == twice);
    CHECK(reparsed.materials == 2);
    REQUIRE(reparsed.boundary.has_value());
    CHECK(reparsed.boundary->atoms.size() == 3);
    REQUIRE(reparsed.cost.has_value());
    CHECK(reparsed.cost->kind == "mailing");
    REQUIRE(reparsed.networks.size() == 1);
    CHECK(reparsed.networks[0].labeled);
    REQUIRE(reparsed.calibrations.size() == 1);
    // floats are stored with 12 significant digits
    CHECK(reparsed.calibrations[0].form.rows[0][1] ==
          doctest::Approx(0.866025403784439).epsilon(1e-11));
}

TEST_CASE("parse errors carry position information") {
    CHECK_THROWS_WITH_AS(parse_instance("{ not json"), doctest::Contains("parse error"),
                         ValidationError);
    CHECK_THROWS_AS(parse_instance("{\"dimension\": 2}"), ValidationError);
}

TEST_CASE("networks from documents are merged and validated") {
    NamedNetwork n;
    n.name = "x";
    n.vertices = {{0.0, 0.0}, {1.0, 0.0}};
    n.edges = {{0, 1, {1}}, {1, 0, {1}}};  // cancels after merging
    const Network net = to_network(n, 1, 2);
    CHECK(net.edges.empty());

    NamedNetwork bad;
    bad.vertices = {{0.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}};
    bad.edges = {{0, 1, {1}}, {2, 3, {1}}};
    CHECK_THROWS_AS(to_network(bad, 1, 2), ValidationError);
}

TEST_CASE("exported balls reimport with the same gauge") {
    Boundary b;
    b.dim = 2;
    b.m = 2;
    b.atoms = {{{0.0, 0.0}, {-1, -1}}, {{1.0, 1.0}, {1, 0}}, {{2.0, 0.0}, {0, 1}}};
    const LabelLayout layout = label_layout(b);

    // orthant form (hexagon)
    NormBall hex = build_ball(mailing_cost(2, 0.0, 1), layout);
    hex.closed_form.reset();
    const NormBall hex2 = to_ball(ball_data_of(hex));
    for (const RealVec x : {RealVec{1.0, -1.0}, RealVec{0.3, 0.8}, RealVec{-1.2, 0.4}})
        CHECK(gauge(hex2, x) == doctest::Approx(gauge(hex, x)).epsilon(1e-9));

    // hull form (supersymmetric)
    const MultiMaterialCost euclidean =
        composite_cost(StarNorm{2.0, {}}, {gilbert_steiner_cost(1.0), gilbert_steiner_cost(1.0)});
    const NormBall round = build_ball(euclidean, layout);
    const NormBall round2 = to_ball(ball_data_of(round));
    for (const RealVec x : {RealVec{1.0, -1.0}, RealVec{0.3, 0.8}})
        CHECK(gauge(round2, x) == doctest::Approx(gauge(round, x)).epsilon(1e-9));
}

TEST_CASE("fixture files parse and carry consistent data") {
    for (const char* name :
         {"fixtures/y_steiner.json", "fixtures/y_steiner_reversed.json",
          "fixtures/square_steiner.json", "fixtures/square_rotated.json",
          "fixtures/gs_mailing.json", "fixtures/linear_combination_half.json",
          "fixtures/linear_combination_quarter.json", "fixtures/triangle_cycles.json",
          "fixtures/grid_shared_path.json", "fixtures/grid_mailing.json",
          "fixtures/grid_opposite.json"}) {
        CAPTURE(name);
        const InstanceDocument doc = read_instance(name);
        REQUIRE(doc.boundary.has_value());
        CHECK_NOTHROW(validate(*doc.boundary));
        REQUIRE(doc.cost.has_value());
        const MultiMaterialCost cost = make_cost(*doc.cost);
        CHECK(cost.m == doc.materials);
        const LabelLayout layout = label_layout(*doc.boundary);
        for (const NamedNetwork& n : doc.networks) {
            if (n.labeled)
                CHECK_NOTHROW(to_labeled_network(n, layout.total, doc.dimension));
            else
                CHECK_NOTHROW(to_network(n, doc.materials, doc.dimension));
        }
    }
}

TEST_CASE("svg output is deterministic and structured") {
    const InstanceDocument doc = read_instance("fixtures/y_steiner.json");
    const LabelLayout layout = label_layout(*doc.boundary);
    const LabeledNetwork net = to_labeled_network(doc.networks[1], layout.total, doc.dimension);
    const std::string a = render_network_svg(net);
    const std::string b = render_network_svg(net);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("(1,1)") != std::string::npos);
    CHECK(a.find("(1,0)") != std::string::npos);
    CHECK(a.find("(0,1)") != std::string::npos);

    // empty network: axes only
    LabeledNetwork empty;
    empty.dim = 2;
    empty.coeff_dim = 2;
    const std::string e = render_network_svg(empty);
    CHECK(e.find("<line") != std::string::npos);
    CHECK(e.find("<circle") == std::string::npos);

    LabeledNetwork three_d;
    three_d.dim = 3;
    three_d.coeff_dim = 2;
    CHECK_THROWS_AS(render_network_svg(three_d), DomainError);
}

TEST_CASE("ball svg draws the hexagon polygon") {
    Boundary b;
    b.dim = 2;
    b.m = 2;
    b.atoms = {{{0.0, 0.0}, {-1, -1}}, {{1.0, 1.0}, {1, 0}}, {{2.0, 0.0}, {0, 1}}};
    const NormBall ball = build_ball(mailing_cost(2, 0.0, 1), label_layout(b));
    const std::string svg = render_ball_svg(ball);
    CHECK(svg == render_ball_svg(ball));
    CHECK(svg.find("<polygon") != std::string::npos);
}

TEST_CASE("solve options round-trip through documents") {
    InstanceDocument doc = sample_doc();
    doc.solve.max_steiner = 3;
    doc.solve.seed = 99;
    doc.solve.grid = GridSpec{4, 5, 0.5, {1.0, 2.0}};
    const InstanceDocument back = parse_instance(write_instance(doc));
    CHECK(back.solve.max_steiner == 3);
    CHECK(back.solve.seed == 99);
    REQUIRE(back.solve.grid.has_value());
    CHECK(back.solve.grid->nx == 4);
    CHECK(back.solve.grid->ny == 5);
    CHECK(back.solve.grid->spacing == 0.5);
}
