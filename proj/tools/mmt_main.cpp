#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mmt/calibration.hpp"
#include "mmt/instance.hpp"
#include "mmt/lifting.hpp"
#include "mmt/norm_ball.hpp"
#include "mmt/solver.hpp"
#include "mmt/svg.hpp"

namespace {

using namespace mmt;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimits = 3;

struct Common {
    std::string file;
    std::string output;
    double tol = 1e-9;
    int max_steiner = -1;
    std::uint64_t max_perms = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

const char* tristate(TriState t) {
    switch (t) {
        case TriState::True: return "true";
        case TriState::False: return "false";
        default: return "unknown";
    }
}

MultiMaterialCost require_cost(const InstanceDocument& doc) {
    if (!doc.cost) throw ValidationError("instance has no cost");
    CostDescriptor desc = *doc.cost;
    if (desc.box.empty() && doc.boundary) {
        // default box bound: the label count of the instance (an acyclic
        // competitor's multiplicity cannot exceed total production)
        const LabelLayout layout = label_layout(*doc.boundary);
        int bound = 1;
        for (int c : layout.counts) bound = std::max(bound, c);
        desc.box.assign(std::max(desc.m, 1), bound);
    }
    MultiMaterialCost c = make_cost(desc);
    if (c.m != doc.materials)
        throw ValidationError("cost material count does not match the instance");
    return c;
}

Boundary require_boundary(const InstanceDocument& doc) {
    if (!doc.boundary) throw ValidationError("instance has no boundary");
    validate(*doc.boundary);
    return *doc.boundary;
}

NormBall instance_ball(const InstanceDocument& doc, const LabelLayout& layout) {
    if (doc.ball) {
        NormBall ball = to_ball(*doc.ball);
        if (ball.labels != layout.total)
            throw ValidationError("stored ball dimension does not match the boundary layout");
        return ball;
    }
    return build_ball(require_cost(doc), layout);
}

int cmd_check_cost(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const MultiMaterialCost cost = require_cost(doc);
    const AxiomReport rep = check_axioms(cost);
    std::printf("even_and_positive:   %s\n", rep.even_and_positive ? "true" : "false");
    std::printf("increasing:          %s\n", rep.increasing ? "true" : "false");
    std::printf("subadditive:         %s\n", rep.subadditive ? "true" : "false");
    std::printf("sublinear (iii'):    %s\n", tristate(rep.sublinear_iii_prime));
    std::printf("supersymmetric:      %s\n", rep.supersymmetric ? "true" : "false");
    for (const AxiomWitness& w : rep.counterexamples) {
        std::string pts;
        for (const IntVec& p : w.points) {
            pts += " (";
            for (std::size_t i = 0; i < p.size(); ++i)
                pts += (i ? "," : "") + std::to_string(p[i]);
            pts += ")";
        }
        std::printf("counterexample %s:%s\n", w.axiom.c_str(), pts.c_str());
    }
    const bool ok = rep.even_and_positive && rep.increasing && rep.subadditive &&
                    rep.sublinear_iii_prime != TriState::False;
    return ok ? kExitOk : kExitVerdictFalse;
}

int cmd_build_norm(const Common& c) {
    InstanceDocument doc = read_instance(c.file);
    const Boundary boundary = require_boundary(doc);
    const LabelLayout layout = label_layout(boundary);
    const NormBall ball = build_ball(require_cost(doc), layout);
    std::printf("labels (N):      %d\n", ball.labels);
    std::printf("supersymmetric:  %s\n", ball.supersymmetric ? "true" : "false");
    if (ball.supersymmetric)
        std::printf("hull vertices:   %zu\n", ball.hull.size());
    else
        std::printf("orthant pieces:  %zu x %zu vertices\n", ball.pieces.size(),
                     ball.pieces.empty() ? 0 : ball.pieces.front().vertices.size());
    const auto extremes = extreme_points(ball);
    std::printf("extreme points:  %zu\n", extremes.size());
    for (const RealVec& p : extremes) {
        std::string s = "  (";
        for (std::size_t i = 0; i < p.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.12g", p[i]);
            s += (i ? "," : "") + std::string(buf);
        }
        std::printf("%s)\n", s.c_str());
    }
    if (!c.output.empty()) {
        doc.ball = ball_data_of(ball);
        write_instance_file(doc, c.output);
        std::printf("ball written to %s\n", c.output.c_str());
    }
    return kExitOk;
}

int cmd_energy(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const MultiMaterialCost cost = require_cost(doc);
    for (const NamedNetwork& n : doc.networks) {
        if (n.labeled) continue;
        const Network net = to_network(n, doc.materials, doc.dimension);
        std::printf("%s: %.12g\n", n.name.c_str(), energy(net, cost));
    }
    return kExitOk;
}

int cmd_mass(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const LabelLayout layout = label_layout(require_boundary(doc));
    const NormBall ball = instance_ball(doc, layout);
    for (const NamedNetwork& n : doc.networks) {
        if (!n.labeled) continue;
        const LabeledNetwork net = to_labeled_network(n, layout.total, doc.dimension);
        std::printf("%s: %.12g\n", n.name.c_str(), mass(net, ball));
    }
    return kExitOk;
}

int cmd_lift(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const LabelLayout layout = label_layout(require_boundary(doc));
    for (const NamedNetwork& n : doc.networks) {
        if (n.labeled) continue;
        const Network net = to_network(n, doc.materials, doc.dimension);
        const auto [lifted, sigma] = lift(net, layout);
        std::string sig;
        for (const auto& group : sigma) {
            sig += "[";
            for (std::size_t k = 0; k < group.size(); ++k)
                sig += (k ? " " : "") + std::to_string(group[k] + 1);
            sig += "]";
        }
        std::printf("%s: lifted to %d labels, sigma=%s\n", n.name.c_str(), layout.total,
                     sig.c_str());
        if (!c.output.empty()) {
            InstanceDocument out = doc;
            out.networks.push_back(from_labeled_network(lifted, n.name + "_lifted"));
            write_instance_file(out, c.output);
        }
        return kExitOk;
    }
    throw ValidationError("instance has no material network to lift");
}

int cmd_project(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const LabelLayout layout = label_layout(require_boundary(doc));
    for (const NamedNetwork& n : doc.networks) {
        if (!n.labeled) continue;
        const LabeledNetwork net = to_labeled_network(n, layout.total, doc.dimension);
        const Network projected = project(net, layout);
        std::printf("%s: projected to %d materials, %zu edges\n", n.name.c_str(), layout.m,
                     projected.edges.size());
        if (!c.output.empty()) {
            InstanceDocument out = doc;
            out.networks.push_back(from_network(projected, n.name + "_projected"));
            write_instance_file(out, c.output);
        }
        return kExitOk;
    }
    throw ValidationError("instance has no labeled network to project");
}

int cmd_verify_calibration(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const LabelLayout layout = label_layout(require_boundary(doc));
    const NormBall ball = instance_ball(doc, layout);
    if (doc.calibrations.empty()) throw ValidationError("instance has no calibration forms");
    bool all_ok = true;
    bool any = false;
    for (const NamedForm& f : doc.calibrations) {
        for (const NamedNetwork& n : doc.networks) {
            if (!n.labeled) continue;
            any = true;
            const LabeledNetwork net = to_labeled_network(n, layout.total, doc.dimension);
            const CalibrationReport rep = verify_calibration(f.form, net, ball, c.tol);
            std::printf("%s on %s: verdict=%s cond_i_residual=%.12g cond_iii_max=%.12g\n",
                         f.name.c_str(), n.name.c_str(), rep.verdict ? "true" : "false",
                         rep.cond_i_max_residual, rep.cond_iii_max_value);
            if (!rep.verdict && rep.witness_edge >= 0)
                std::printf("  witness: edge %d pairing magnitude %.12g vs gauge %.12g\n",
                             rep.witness_edge, rep.witness_pairing, rep.witness_gauge);
            all_ok = all_ok && rep.verdict;
        }
    }
    if (!any) throw ValidationError("instance has no labeled network to verify");
    return all_ok ? kExitOk : kExitVerdictFalse;
}

int cmd_solve(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    const Boundary boundary = require_boundary(doc);
    SolveOptions opts = doc.solve;
    if (c.max_steiner >= 0) opts.max_steiner = c.max_steiner;
    if (c.max_perms > 0) opts.max_permutations = c.max_perms;
    if (c.seed_set) opts.seed = c.seed;
    const SolveResult res = solve_mmtp(boundary, require_cost(doc), opts);
    std::printf("optimal value:   %.12g\n", res.value);
    std::printf("topologies:      %llu\n", static_cast<unsigned long long>(res.topologies_tried));
    std::printf("permutations:    %llu%s\n",
                 static_cast<unsigned long long>(res.permutations_tried),
                 res.permutations_sampled ? " (sampled)" : "");
    std::printf("network edges:   %zu\n", res.network.edges.size());
    for (std::size_t v = 0; v < res.network.vertices.size(); ++v) {
        const Point& p = res.network.vertices[v];
        std::printf("vertex %zu: (%.9g, %.9g)\n", v, p[0], p.size() > 1 ? p[1] : 0.0);
    }
    std::printf("note:            %s\n", res.note.c_str());
    if (!c.output.empty()) {
        InstanceDocument out = doc;
        out.networks.push_back(from_network(res.network, "solution"));
        out.networks.push_back(from_labeled_network(res.labeled, "solution_labeled"));
        write_instance_file(out, c.output);
    }
    return kExitOk;
}

int cmd_oracle(const Common& c) {
    const InstanceDocument doc = read_instance(c.file);
    if (!doc.solve.grid) throw ValidationError("oracle requires a grid in the solve options");
    const double value = grid_oracle(require_boundary(doc), require_cost(doc), *doc.solve.grid);
    std::printf("oracle value: %.12g\n", value);
    return kExitOk;
}

int cmd_render(const Common& c, const std::string& target) {
    const InstanceDocument doc = read_instance(c.file);
    std::string svg;
    const bool want_ball = target == "ball" || (target.empty() && doc.networks.empty());
    if (want_ball) {
        const LabelLayout layout = label_layout(require_boundary(doc));
        svg = render_ball_svg(instance_ball(doc, layout));
    } else {
        const NamedNetwork& n = doc.networks.front();
        if (n.labeled) {
            const LabelLayout layout = label_layout(require_boundary(doc));
            svg = render_network_svg(to_labeled_network(n, layout.total, doc.dimension));
        } else {
            svg = render_network_svg(to_network(n, doc.materials, doc.dimension));
        }
    }
    if (c.output.empty()) {
        std::fputs(svg.c_str(), stdout);
    } else {
        std::ofstream out(c.output);
        if (!out) throw ValidationError("cannot write output file: " + c.output);
        out << svg;
        std::printf("svg written to %s\n", c.output.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-material branched transport toolkit"};
    app.require_subcommand(1);

    Common common;
    std::string render_target;

    auto add_common = [&common](CLI::App* sub, bool with_output = true) {
        sub->add_option("file", common.file, "instance file")->required();
        if (with_output) sub->add_option("-o,--output", common.output, "output path");
        sub->add_option("--tol", common.tol, "verification tolerance");
        sub->add_option("--max-steiner", common.max_steiner, "maximum Steiner points");
        sub->add_option("--max-perms", common.max_perms, "permutation cutoff");
        sub->add_option("--seed", common.seed, "seed for sampled permutations")
            ->each([&common](const std::string&) { common.seed_set = true; });
    };

    add_common(app.add_subcommand("check-cost", "verify the cost axioms"));
    add_common(app.add_subcommand("build-norm", "construct the equivalent norm ball"));
    add_common(app.add_subcommand("energy", "evaluate the transport energy"));
    add_common(app.add_subcommand("mass", "evaluate the labeled mass"));
    add_common(app.add_subcommand("lift", "convert a material network to a labeled one"));
    add_common(app.add_subcommand("project", "convert a labeled network to a material one"));
    add_common(app.add_subcommand("verify-calibration", "check calibration certificates"));
    add_common(app.add_subcommand("solve", "solve the instance"));
    add_common(app.add_subcommand("oracle", "grid-restricted brute-force minimum"));
    CLI::App* render = app.add_subcommand("render", "render network or ball as SVG");
    add_common(render);
    render->add_option("--target", render_target, "network or ball");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : kExitOk;
    }

    try {
        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "check-cost") return cmd_check_cost(common);
        if (sub == "build-norm") return cmd_build_norm(common);
        if (sub == "energy") return cmd_energy(common);
        if (sub == "mass") return cmd_mass(common);
        if (sub == "lift") return cmd_lift(common);
        if (sub == "project") return cmd_project(common);
        if (sub == "verify-calibration") return cmd_verify_calibration(common);
        if (sub == "solve") return cmd_solve(common);
        if (sub == "oracle") return cmd_oracle(common);
        if (sub == "render") return cmd_render(common, render_target);
        std::fprintf(stderr, "unknown subcommand\n");
        return kExitInput;
    } catch (const mmt::LimitError& e) {
        std::fprintf(stderr, "limit exceeded: %s\n", e.what());
        return kExitLimits;
    } catch (const mmt::ValidationError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const mmt::DomainError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
}
