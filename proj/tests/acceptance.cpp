// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mmt/calibration.hpp"
#include "mmt/instance.hpp"
#include "mmt/lifting.hpp"
#include "mmt/norm_ball.hpp"
#include "mmt/solver.hpp"
#include "mmt/svg.hpp"

using namespace mmt;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    notes.push_back(buf);
}

void report(int criterion, const char* name, bool ok) {
    std::printf("criterion %2d %-52s %s\n", criterion, name, ok ? "PASS" : "FAIL");
    if (!ok) {
        ++failures;
        for (const std::string& n : notes) std::printf("    %s\n", n.c_str());
    }
    notes.clear();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Boundary boundary_with_counts(const IntVec& counts) {
    Boundary b;
    b.dim = 2;
    b.m = static_cast<int>(counts.size());
    IntVec source(b.m);
    for (int i = 0; i < b.m; ++i) source[i] = -counts[i];
    b.atoms.push_back({{0.0, 0.0}, source});
    for (int i = 0; i < b.m; ++i) {
        if (counts[i] == 0) continue;
        IntVec w(b.m, 0);
        w[i] = counts[i];
        b.atoms.push_back({{1.0 + i, 1.0}, w});
    }
    return b;
}

// --- criterion 1: the defining norm identity for every builtin cost ---
bool criterion_norm_identity() {
    struct Case {
        const char* name;
        MultiMaterialCost cost;
        IntVec counts;
    };
    const std::vector<Case> cases = {
        {"steiner", steiner_cost(), {4}},
        {"gilbert_steiner(1/2)", gilbert_steiner_cost(0.5), {4}},
        {"gilbert_steiner(1/3)", gilbert_steiner_cost(1.0 / 3.0), {4}},
        {"linear_combination", linear_combination_cost({0.5, 0.5}, {0.0, 1.0}), {4}},
        {"max_of", max_of_cost({gilbert_steiner_cost(0.5),
                                linear_combination_cost({0.3}, {1.0})}),
         {4}},
        {"urban(2,1)", urban_cost(2.0, 1.0), {4}},
        {"plc", plc_cost(1.0, 0.5, 0.25, 1.0), {2, 2}},
        {"composite(l2)", composite_cost(StarNorm{2.0, {}}, {gilbert_steiner_cost(1.0),
                                                             gilbert_steiner_cost(1.0)}),
         {2, 2}},
        {"mailing(1/2)", mailing_cost(2, 0.5), {2, 2}},
        {"mailing(0)", mailing_cost(2, 0.0), {2, 2}},
    };
    bool ok = true;
    for (const Case& c : cases) {
        const auto start = std::chrono::steady_clock::now();
        const LabelLayout layout = label_layout(boundary_with_counts(c.counts));
        const NormBall ball = build_ball(c.cost, layout);
        const EqnMainReport rep = verify_eqn_main(c.cost, ball, layout);
        const double elapsed = seconds_since(start);
        if (!rep.ok || rep.max_residual > 1e-9) {
            ok = false;
            note("%s: residual %.3g", c.name, rep.max_residual);
        }
        if (elapsed >= 10.0) {
            ok = false;
            note("%s: took %.1f s", c.name, elapsed);
        }
    }
    return ok;
}

// --- criterion 2: known closed-form norms recovered ---
bool criterion_known_norms() {
    bool ok = true;
    std::mt19937 rng(20240131);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    auto check_norm = [&](const char* name, const MultiMaterialCost& cost, const IntVec& counts,
                          const std::function<double(const RealVec&)>& reference) {
        const LabelLayout layout = label_layout(boundary_with_counts(counts));
        const NormBall ball = build_ball(cost, layout);
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            RealVec x(layout.total);
            for (double& v : x) v = coord(rng);
            worst = std::max(worst, std::abs(gauge(ball, x) - reference(x)));
        }
        if (worst > 1e-6) {
            ok = false;
            note("%s: worst deviation %.3g", name, worst);
        }
    };
    check_norm("steiner -> sup", steiner_cost(), {4}, [](const RealVec& x) {
        double m = 0.0;
        for (double v : x) m = std::max(m, std::abs(v));
        return m;
    });
    check_norm("gilbert_steiner(1/2) -> l2", gilbert_steiner_cost(0.5), {4},
               [](const RealVec& x) {
                   double s = 0.0;
                   for (double v : x) s += v * v;
                   return std::sqrt(s);
               });
    check_norm("gilbert_steiner(1/3) -> l3", gilbert_steiner_cost(1.0 / 3.0), {4},
               [](const RealVec& x) {
                   double s = 0.0;
                   for (double v : x) s += std::pow(std::abs(v), 3.0);
                   return std::cbrt(s);
               });
    check_norm("mailing(1/2) -> split l2", mailing_cost(2, 0.5), {2, 2}, [](const RealVec& x) {
        double pos = 0.0, neg = 0.0;
        for (double v : x) {
            if (v > 0) pos += v * v;
            if (v < 0) neg += v * v;
        }
        return std::sqrt(pos) + std::sqrt(neg);
    });
    check_norm("mailing(1) -> split l1", mailing_cost(2, 1.0), {2, 2}, [](const RealVec& x) {
        double s = 0.0;
        for (double v : x) s += std::abs(v);
        return s;
    });
    return ok;
}

// --- criterion 3: hexagon ball reproduction ---
bool criterion_hexagon() {
    const InstanceDocument doc = read_instance("fixtures/y_steiner.json");
    const LabelLayout layout = label_layout(*doc.boundary);
    const NormBall ball = build_ball(make_cost(*doc.cost), layout);
    bool ok = true;
    const auto extremes = extreme_points(ball);
    const std::vector<RealVec> expected = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
    if (extremes.size() != expected.size()) {
        ok = false;
        note("extreme point count %zu, expected 6", extremes.size());
    }
    for (const RealVec& q : expected) {
        bool found = false;
        for (const RealVec& p : extremes)
            if (std::abs(p[0] - q[0]) < 1e-9 && std::abs(p[1] - q[1]) < 1e-9) found = true;
        if (!found) {
            ok = false;
            note("missing extreme point (%g,%g)", q[0], q[1]);
        }
    }
    const double g = gauge(ball, RealVec{1.0, -1.0});
    if (std::abs(g - 2.0) > 1e-9) {
        ok = false;
        note("gauge(1,-1) = %.12g", g);
    }
    return ok;
}

// --- criterion 4: calibration fixtures ---
bool criterion_calibrations() {
    bool ok = true;
    auto verify_file = [&](const char* path, bool expect_verdict) -> CalibrationReport {
        const InstanceDocument doc = read_instance(path);
        const LabelLayout layout = label_layout(*doc.boundary);
        const NormBall ball =
            doc.ball ? to_ball(*doc.ball) : build_ball(make_cost(*doc.cost), layout);
        CalibrationReport rep;
        for (const NamedForm& f : doc.calibrations) {
            for (const NamedNetwork& n : doc.networks) {
                if (!n.labeled) continue;
                rep = verify_calibration(f.form, to_labeled_network(n, layout.total, doc.dimension),
                                         ball, 1e-9);
                if (rep.verdict != expect_verdict) {
                    ok = false;
                    note("%s: verdict %d (cond_i %.3g, cond_iii %.12g)", path, (int)rep.verdict,
                         rep.cond_i_max_residual, rep.cond_iii_max_value);
                }
            }
        }
        return rep;
    };
    verify_file("fixtures/y_steiner.json", true);
    verify_file("fixtures/y_steiner_reversed.json", true);
    verify_file("fixtures/gs_mailing.json", true);
    verify_file("fixtures/linear_combination_half.json", true);
    verify_file("fixtures/linear_combination_quarter.json", true);
    verify_file("fixtures/square_steiner.json", true);
    const CalibrationReport rotated = verify_file("fixtures/square_rotated.json", false);
    if (std::abs(rotated.witness_pairing - std::sqrt(3.0)) > 1e-9) {
        ok = false;
        note("rotated-square witness %.12g, expected sqrt(3)", rotated.witness_pairing);
    }
    return ok;
}

// --- criterion 5: solver geometry ---
std::vector<double> junction_angles(const Network& net, int v) {
    std::vector<Point> dirs;
    for (const Edge& e : net.edges) {
        if (e.tail == v)
            dirs.push_back(edge_direction(net, e));
        else if (e.head == v) {
            Point d = edge_direction(net, e);
            for (double& c : d) c = -c;
            dirs.push_back(d);
        }
    }
    std::vector<double> angles;
    for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b)
            angles.push_back(std::acos(std::clamp(dot(dirs[a], dirs[b]), -1.0, 1.0)) * 180.0 /
                             M_PI);
    return angles;
}

int degree_three_vertex(const Network& net) {
    std::vector<int> degree(net.vertices.size(), 0);
    for (const Edge& e : net.edges) {
        ++degree[e.tail];
        ++degree[e.head];
    }
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (degree[v] == 3) return static_cast<int>(v);
    return -1;
}

bool criterion_solver_geometry() {
    bool ok = true;

    {
        const auto start = std::chrono::steady_clock::now();
        const InstanceDocument doc = read_instance("fixtures/y_steiner.json");
        const SolveResult res = solve_mmtp(*doc.boundary, make_cost(*doc.cost), doc.solve);
        const int junction = degree_three_vertex(res.network);
        if (junction < 0) {
            ok = false;
            note("steiner mailing: no junction found");
        } else {
            for (const double angle : junction_angles(res.network, junction))
                if (std::abs(angle - 120.0) > 0.5) {
                    ok = false;
                    note("steiner mailing: junction angle %.3f", angle);
                }
        }
        if (seconds_since(start) >= 30.0) {
            ok = false;
            note("steiner mailing solve too slow");
        }
    }

    {
        const auto start = std::chrono::steady_clock::now();
        const InstanceDocument doc = read_instance("fixtures/linear_combination_half.json");
        const SolveResult res = solve_mmtp(*doc.boundary, make_cost(*doc.cost), doc.solve);
        const int junction = degree_three_vertex(res.network);
        const double branch = std::acos(0.75) * 180.0 / M_PI;
        if (junction < 0) {
            ok = false;
            note("linear combination: no junction found");
        } else {
            int matched = 0;
            for (const double angle : junction_angles(res.network, junction))
                if (std::abs(angle - (180.0 - branch)) <= 0.5) ++matched;
            if (matched != 2) {
                ok = false;
                note("linear combination: branch angles off arccos(3/4)");
            }
        }
        if (seconds_since(start) >= 30.0) {
            ok = false;
            note("linear combination solve too slow");
        }
    }

    {
        const auto start = std::chrono::steady_clock::now();
        const InstanceDocument doc = read_instance("fixtures/gs_mailing.json");
        const SolveResult res = solve_mmtp(*doc.boundary, make_cost(*doc.cost), doc.solve);
        const int junction = degree_three_vertex(res.network);
        if (junction < 0) {
            ok = false;
            note("euclidean composite: no junction found");
        } else {
            const Point& j = res.network.vertices[junction];
            if (std::hypot(j[0], j[1]) > 1e-3) {
                ok = false;
                note("euclidean composite: junction at (%.5f, %.5f)", j[0], j[1]);
            }
            const double target = std::acos(1.0 / std::sqrt(5.0));
            for (const Edge& e : res.network.edges) {
                if (!(e.mult == IntVec{2, 1} || e.mult == IntVec{-2, -1})) continue;
                const Point d = edge_direction(res.network, e);
                const double angle = std::atan2(std::abs(d[1]), std::abs(d[0]));
                if (std::abs(angle - target) > 0.5 * M_PI / 180.0) {
                    ok = false;
                    note("euclidean composite: trunk angle %.5f rad", angle);
                }
            }
        }
        if (seconds_since(start) >= 30.0) {
            ok = false;
            note("euclidean composite solve too slow");
        }
    }
    return ok;
}

// --- criterion 6: cycle phenomena ---
bool criterion_cycles() {
    bool ok = true;
    const InstanceDocument doc = read_instance("fixtures/triangle_cycles.json");
    const MultiMaterialCost cost = make_cost(*doc.cost);
    const Network t = to_network(doc.networks[0], doc.materials, doc.dimension);
    const Network tp = to_network(doc.networks[1], doc.materials, doc.dimension);
    if (energy(t, cost) != energy(tp, cost)) {
        ok = false;
        note("energies differ: %.17g vs %.17g", energy(t, cost), energy(tp, cost));
    }
    const Network cleaned = remove_cycles(tp);
    if (!same_boundary(boundary_of(cleaned), boundary_of(tp))) {
        ok = false;
        note("remove_cycles changed the boundary");
    }
    if (energy(cleaned, cost) != energy(tp, cost)) {
        ok = false;
        note("remove_cycles changed the energy: %.17g", energy(cleaned, cost));
    }
    const std::vector<bool> forests = is_forest_per_component(tp);
    if (!(forests == std::vector<bool>{true, true, true, false})) {
        ok = false;
        note("forest flags wrong");
    }
    return ok;
}

// --- criterion 7: equivalence round trip on randomized instances ---
Network random_grid_network(std::mt19937& rng, int m, int units) {
    const int nx = 4, ny = 4;
    std::vector<Point> pts;
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) pts.push_back({double(x), double(y)});
    auto id = [nx](int x, int y) { return y * nx + x; };
    std::map<std::pair<int, int>, IntVec> mult;
    std::uniform_int_distribution<int> coord(0, nx - 1);
    for (int u = 0; u < units; ++u) {
        const int material = u % m;
        int x0 = coord(rng), y0 = coord(rng), x1 = coord(rng), y1 = coord(rng);
        int x = x0, y = y0;
        while (x != x1 || y != y1) {
            int nxt_x = x, nxt_y = y;
            const bool step_x = (x != x1) && (y == y1 || rng() % 2 == 0);
            if (step_x)
                nxt_x += (x1 > x) ? 1 : -1;
            else
                nxt_y += (y1 > y) ? 1 : -1;
            const int a = id(x, y), b = id(nxt_x, nxt_y);
            auto key = std::make_pair(std::min(a, b), std::max(a, b));
            auto& v = mult.try_emplace(key, IntVec(m, 0)).first->second;
            v[material] += (a == key.first) ? 1 : -1;
            x = nxt_x;
            y = nxt_y;
        }
    }
    Network net;
    net.dim = 2;
    net.coeff_dim = m;
    net.vertices = pts;
    for (const auto& [key, v] : mult)
        if (!is_zero(v)) net.edges.push_back({key.first, key.second, v});
    return net;
}

bool criterion_round_trip() {
    bool ok = true;
    std::mt19937 rng(7451);
    const std::vector<MultiMaterialCost> costs = {
        mailing_cost(2, 0.5, 8), gilbert_steiner_cost(0.5, 8),
        composite_cost(StarNorm{2.0, {}},
                       {gilbert_steiner_cost(1.0, 8), gilbert_steiner_cost(1.0, 8)})};
    int tested = 0;
    for (int trial = 0; trial < 500 && tested < 20; ++trial) {
        const MultiMaterialCost& cost = costs[trial % costs.size()];
        const Network net = remove_cycles(random_grid_network(rng, cost.m, 4));
        const Boundary b = boundary_of(net);
        if (b.atoms.empty()) continue;
        const LabelLayout layout = label_layout(b);
        if (layout.total == 0 || layout.total > 4) continue;
        ++tested;
        const auto [lifted, sigma] = lift(net, layout);
        const NormBall ball = build_ball(cost, layout);
        const Network projected = project(lifted, layout);
        const double e_proj = energy(projected, cost);
        const double m_lift = mass(lifted, ball);
        if (std::abs(e_proj - m_lift) > 1e-8) {
            ok = false;
            note("trial %d: |energy - mass| = %.3g", trial, std::abs(e_proj - m_lift));
        }
        if (e_proj > energy(net, cost) + 1e-8) {
            ok = false;
            note("trial %d: projection increased energy", trial);
        }
    }
    if (tested < 20) {
        ok = false;
        note("only %d instances generated", tested);
    }
    return ok;
}

// --- criterion 8: oracle equivalence on the grid fixtures ---
bool criterion_oracle() {
    bool ok = true;
    for (const char* path : {"fixtures/grid_shared_path.json", "fixtures/grid_mailing.json",
                             "fixtures/grid_opposite.json"}) {
        const InstanceDocument doc = read_instance(path);
        const MultiMaterialCost cost = make_cost(*doc.cost);
        const double oracle = grid_oracle(*doc.boundary, cost, *doc.solve.grid);
        const SolveResult restricted = solve_mmtp(*doc.boundary, cost, doc.solve);
        if (std::abs(restricted.value - oracle) > 1e-9) {
            ok = false;
            note("%s: grid solve %.12g vs oracle %.12g", path, restricted.value, oracle);
        }
        SolveOptions free_opts = doc.solve;
        free_opts.grid.reset();
        const SolveResult free_solve = solve_mmtp(*doc.boundary, cost, free_opts);
        if (free_solve.value > oracle + 1e-9) {
            ok = false;
            note("%s: free solve %.12g above oracle %.12g", path, free_solve.value, oracle);
        }
    }
    return ok;
}

// --- criterion 9: m=1 necessity and the concave urban cost ---
bool criterion_necessity() {
    bool ok = true;
    const MultiMaterialCost bad = table_cost(1, {2}, {3.0, 1.0, 0.0, 1.0, 3.0});
    const LabelLayout layout = label_layout(boundary_with_counts({2}));
    const NormBall ball = build_ball(bad, layout);
    const EqnMainReport rep = verify_eqn_main(bad, ball, layout);
    if (rep.ok) {
        ok = false;
        note("non-sublinear cost passed the identity");
    }
    if (rep.worst_theta.empty() || std::abs(rep.worst_theta[0]) != 2 ||
        std::abs(rep.max_residual - 1.0) > 1e-9) {
        ok = false;
        note("failure not detected at theta = +-2 (residual %.3g)", rep.max_residual);
    }
    const MultiMaterialCost urban = urban_cost(2.0, 1.0);
    for (int n : {2, 3, 4}) {
        const LabelLayout l = label_layout(boundary_with_counts({n}));
        if (!verify_eqn_main(urban, build_ball(urban, l), l).ok) {
            ok = false;
            note("urban cost failed at N = %d", n);
        }
    }
    return ok;
}

// --- criterion 10: property suites ---
bool criterion_properties() {
    bool ok = true;
    std::mt19937 rng(99);

    // partial-order axioms
    std::uniform_int_distribution<int> small(-5, 5);
    for (int t = 0; t < 300; ++t) {
        IntVec x(3), y(3), z(3);
        for (int k = 0; k < 3; ++k) {
            x[k] = small(rng);
            y[k] = small(rng);
            z[k] = small(rng);
        }
        if (!leq_partial_order(x, x)) ok = false;
        if (leq_partial_order(x, y) && leq_partial_order(y, x) && x != y) ok = false;
        if (leq_partial_order(x, y) && leq_partial_order(y, z) && !leq_partial_order(x, z))
            ok = false;
    }
    if (!ok) note("partial-order axioms failed");

    // exhaustive cost axioms (i), (ii) for the builtins
    for (const MultiMaterialCost& cost :
         {steiner_cost(), gilbert_steiner_cost(0.5), mailing_cost(2, 0.5), mailing_cost(3, 0.5),
          plc_cost(1.0, 0.5, 0.25, 1.0), urban_cost(2.0, 1.0),
          composite_cost(StarNorm{2.0, {}},
                         {gilbert_steiner_cost(1.0), gilbert_steiner_cost(1.0),
                          gilbert_steiner_cost(0.5)})}) {
        const AxiomReport rep = check_axioms(cost);
        if (!rep.even_and_positive || !rep.increasing) {
            ok = false;
            note("axioms (i)/(ii) failed for %s", cost.descriptor.kind.c_str());
        }
    }

    // ball symmetry and monotonicity samples
    {
        const LabelLayout layout = label_layout(boundary_with_counts({1, 1}));
        const NormBall hexagon = build_ball(mailing_cost(2, 0.0, 1), layout);
        const MonotoneAbsoluteReport rep = check_monotone_absolute(hexagon, 200, 3);
        if (!rep.monotone) {
            ok = false;
            note("hexagon monotonicity failed");
        }
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        for (int t = 0; t < 200; ++t) {
            RealVec x{coord(rng), coord(rng)};
            RealVec neg{-x[0], -x[1]};
            if (std::abs(gauge(hexagon, x) - gauge(hexagon, neg)) > 1e-9) {
                ok = false;
                note("gauge symmetry failed");
                break;
            }
        }
    }

    // discrete Stokes pairing equality
    {
        std::uniform_real_distribution<double> entry(-1.0, 1.0);
        LabeledNetwork y;
        y.dim = 2;
        y.coeff_dim = 2;
        y.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.5, 0.9}, {1.5, -0.9}};
        y.edges = {{0, 1, {1, 1}}, {1, 2, {1, 0}}, {1, 3, {0, 1}}};
        LabeledNetwork v;
        v.dim = 2;
        v.coeff_dim = 2;
        v.vertices = {{0.0, 0.0}, {1.5, 0.9}, {1.5, -0.9}};
        v.edges = {{0, 1, {1, 0}}, {0, 2, {0, 1}}};
        for (int t = 0; t < 50; ++t) {
            const ConstantForm form{{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}}};
            if (std::abs(form_pairing(form, y) - form_pairing(form, v)) > 1e-9) {
                ok = false;
                note("discrete Stokes equality failed");
                break;
            }
        }
    }

    // decomposition mass conservation and remove_cycles idempotence
    for (int t = 0; t < 25; ++t) {
        const Network net = random_grid_network(rng, 2, 5);
        for (int i = 0; i < 2; ++i) {
            const Decomposition dec = flow_decompose(net, i);
            IntVec expected;
            for (const Edge& e : net.edges) expected.push_back(e.mult[i]);
            if (superpose_component(net, dec) != expected) {
                ok = false;
                note("decomposition failed to reproduce the flow");
            }
        }
        const Network once = remove_cycles(net);
        const Network twice = remove_cycles(once);
        if (once.edges.size() != twice.edges.size()) {
            ok = false;
            note("remove_cycles not idempotent");
        } else {
            for (std::size_t e = 0; e < once.edges.size(); ++e)
                if (once.edges[e].mult != twice.edges[e].mult) {
                    ok = false;
                    note("remove_cycles not idempotent");
                }
        }
    }

    // SVG determinism
    {
        const InstanceDocument doc = read_instance("fixtures/y_steiner.json");
        const LabelLayout layout = label_layout(*doc.boundary);
        const LabeledNetwork net =
            to_labeled_network(doc.networks[1], layout.total, doc.dimension);
        if (render_network_svg(net) != render_network_svg(net)) {
            ok = false;
            note("network SVG not deterministic");
        }
        const NormBall ball = build_ball(make_cost(*doc.cost), layout);
        if (render_ball_svg(ball) != render_ball_svg(ball)) {
            ok = false;
            note("ball SVG not deterministic");
        }
    }
    return ok;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    report(1, "norm identity for every builtin cost", criterion_norm_identity());
    report(2, "known norms recovered at random points", criterion_known_norms());
    report(3, "hexagon ball reproduction", criterion_hexagon());
    report(4, "calibration fixtures", criterion_calibrations());
    report(5, "solver junction geometry", criterion_solver_geometry());
    report(6, "cycle phenomena", criterion_cycles());
    report(7, "equivalence round trip", criterion_round_trip());
    report(8, "oracle equivalence on grid fixtures", criterion_oracle());
    report(9, "m=1 necessity and concave urban identity", criterion_necessity());
    report(10, "property suites", criterion_properties());
    std::printf("acceptance: %s (%.1f s)\n", failures == 0 ? "all criteria passed" : "FAILURES",
                seconds_since(start));
    return failures == 0 ? 0 : 1;
}
