#include "mmt/norm_ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "mmt/simplex.hpp"

namespace mmt {

namespace {

IntVec group_sums(const std::vector<int>& group_of, int m, const IntVec& pattern) {
    IntVec sums(m, 0);
    for (std::size_t j = 0; j < pattern.size(); ++j) sums[group_of[j]] += pattern[j];
    return sums;
}

// Enumerates all D in {-1,0,1}^N except zero, in odometer order.
void for_each_pattern(int n, const std::function<void(const IntVec&)>& f) {
    IntVec d(n, -1);
    while (true) {
        if (!is_zero(d)) f(d);
        int i = n - 1;
        while (i >= 0 && d[i] == 1) {
            d[i] = -1;
            --i;
        }
        if (i < 0) break;
        ++d[i];
    }
}

std::vector<BallVertex> step1_vertices(const MultiMaterialCost& cost,
                                       const std::vector<int>& group_of, int m, int n) {
    std::vector<BallVertex> verts;
    std::map<RealVec, bool> seen;
    for_each_pattern(n, [&](const IntVec& d) {
        const IntVec sums = group_sums(group_of, m, abs_of(d));
        const double c = cost.fn(sums);
        if (!(c > 0.0))
            throw DomainError("ball construction: cost is not positive at a nonzero pattern");
        BallVertex v;
        v.pattern = d;
        v.c = c;
        v.q.resize(n);
        for (int j = 0; j < n; ++j) v.q[j] = d[j] / c;
        if (seen.emplace(v.q, true).second) verts.push_back(std::move(v));
    });
    return verts;
}

double closed_form_gauge(const ClosedFormGauge& cf, const RealVec& x) {
    switch (cf.kind) {
        case ClosedFormGauge::Kind::SupNorm: {
            double best = 0.0;
            for (double v : x) best = std::max(best, std::abs(v));
            return best;
        }
        case ClosedFormGauge::Kind::LpNorm: {
            double acc = 0.0;
            for (double v : x) acc += std::pow(std::abs(v), cf.p);
            return std::pow(acc, 1.0 / cf.p);
        }
        case ClosedFormGauge::Kind::MailingSplit: {
            double pos = 0.0, neg = 0.0;
            for (double v : x) {
                if (cf.p == kPInf) {
                    if (v > 0) pos = std::max(pos, v);
                    if (v < 0) neg = std::max(neg, -v);
                } else {
                    if (v > 0) pos += std::pow(v, cf.p);
                    if (v < 0) neg += std::pow(-v, cf.p);
                }
            }
            if (cf.p == kPInf) return pos + neg;
            return std::pow(pos, 1.0 / cf.p) + std::pow(neg, 1.0 / cf.p);
        }
    }
    return 0.0;
}

std::optional<ClosedFormGauge> recognize_closed_form(const CostDescriptor& d) {
    if (d.kind == "steiner") return ClosedFormGauge{ClosedFormGauge::Kind::SupNorm, kPInf};
    if (d.kind == "gilbert_steiner") {
        if (d.alpha == 0.0) return ClosedFormGauge{ClosedFormGauge::Kind::SupNorm, kPInf};
        return ClosedFormGauge{ClosedFormGauge::Kind::LpNorm, 1.0 / d.alpha};
    }
    if (d.kind == "mailing") {
        const double p = d.alpha == 0.0 ? kPInf : 1.0 / d.alpha;
        return ClosedFormGauge{ClosedFormGauge::Kind::MailingSplit, p};
    }
    return std::nullopt;
}

double piece_gauge(const OrthantPiece& piece, const RealVec& x) {
    const int n = static_cast<int>(x.size());
    RealVec rhs(n);
    bool trivial = true;
    for (int j = 0; j < n; ++j) {
        rhs[j] = std::max(piece.tau[j] * x[j], 0.0);
        if (rhs[j] > 0) trivial = false;
    }
    if (trivial) return 0.0;
    LinearProgram lp;
    const int k = static_cast<int>(piece.vertices.size());
    lp.c.assign(k, 1.0);
    lp.a.assign(n, std::vector<double>(k, 0.0));
    lp.b = rhs;
    lp.sense.assign(n, RowSense::GE);
    for (int col = 0; col < k; ++col)
        for (int j = 0; j < n; ++j) lp.a[j][col] = piece.tau[j] * piece.vertices[col].q[j];
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw std::runtime_error("gauge: orthant piece LP failed (invalid ball)");
    return res.value;
}

}  // namespace

LabelLayout label_layout(const Boundary& boundary) {
    validate(boundary);
    LabelLayout layout;
    layout.m = boundary.m;
    layout.boundary = boundary;
    layout.counts.assign(boundary.m, 0);
    for (int i = 0; i < boundary.m; ++i) {
        int total_abs = 0;
        for (const BoundaryAtom& a : boundary.atoms) total_abs += std::abs(a.weight[i]);
        if (total_abs % 2 != 0)
            throw ValidationError("boundary: production and demand differ for material " +
                                  std::to_string(i + 1));
        layout.counts[i] = total_abs / 2;
    }
    layout.total = 0;
    for (int c : layout.counts) layout.total += c;

    for (int i = 0; i < boundary.m; ++i) {
        const int offset = static_cast<int>(layout.group_of.size());
        for (int k = 1; k <= layout.counts[i]; ++k) {
            layout.group_of.push_back(i);
            layout.offset_of.push_back(offset);
            // first atom whose cumulative production covers copy k
            int acc = 0, src = -1;
            for (std::size_t l = 0; l < boundary.atoms.size() && src < 0; ++l) {
                if (boundary.atoms[l].weight[i] < 0) {
                    acc += -boundary.atoms[l].weight[i];
                    if (acc >= k) src = static_cast<int>(l);
                }
            }
            acc = 0;
            int dst = -1;
            for (std::size_t l = 0; l < boundary.atoms.size() && dst < 0; ++l) {
                if (boundary.atoms[l].weight[i] > 0) {
                    acc += boundary.atoms[l].weight[i];
                    if (acc >= k) dst = static_cast<int>(l);
                }
            }
            layout.source_atom.push_back(src);
            layout.sink_atom.push_back(dst);
        }
    }
    return layout;
}

Permutation identity_permutation(const LabelLayout& layout) {
    Permutation sigma(layout.m);
    for (int i = 0; i < layout.m; ++i) {
        sigma[i].resize(layout.counts[i]);
        for (int k = 0; k < layout.counts[i]; ++k) sigma[i][k] = k;
    }
    return sigma;
}

int apply_permutation(const LabelLayout& layout, const Permutation& sigma, int j) {
    const int i = layout.group_of[j];
    const int offset = layout.offset_of[j];
    return offset + sigma[i][j - offset];
}

LabeledBoundary boundary_sigma(const LabelLayout& layout, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != layout.m)
        throw DomainError("boundary_sigma: permutation group count mismatch");
    for (int i = 0; i < layout.m; ++i)
        if (static_cast<int>(sigma[i].size()) != layout.counts[i])
            throw DomainError("boundary_sigma: permutation size mismatch in group " +
                              std::to_string(i + 1));
    std::map<int, IntVec> weight_at;  // boundary atom index -> Z^N weight
    for (int j = 0; j < layout.total; ++j) {
        const int src = layout.source_atom[j];
        const int dst = layout.sink_atom[apply_permutation(layout, sigma, j)];
        auto& ws = weight_at.try_emplace(src, IntVec(layout.total, 0)).first->second;
        ws[j] -= 1;
        auto& wd = weight_at.try_emplace(dst, IntVec(layout.total, 0)).first->second;
        wd[j] += 1;
    }
    LabeledBoundary lb;
    lb.dim = layout.boundary.dim;
    lb.labels = layout.total;
    for (const auto& [atom, w] : weight_at)
        if (!is_zero(w)) lb.atoms.push_back({layout.boundary.atoms[atom].point, w});
    return lb;
}

NormBall ball_from_vertices(int labels, const std::vector<int>& group_of,
                            const std::vector<BallVertex>& vertices) {
    NormBall ball;
    ball.labels = labels;
    ball.group_of = group_of;
    ball.supersymmetric = true;
    ball.hull = vertices;
    return ball;
}

NormBall build_ball(const MultiMaterialCost& cost, const LabelLayout& layout,
                    const BuildOptions& opts) {
    if (cost.m != layout.m) throw DomainError("build_ball: cost/layout material count mismatch");
    if (layout.total > kMaxLabels)
        throw LimitError("build_ball: N = " + std::to_string(layout.total) + " exceeds the cap of " +
                         std::to_string(kMaxLabels));
    for (int i = 0; i < layout.m; ++i)
        if (cost.box[i] < layout.counts[i])
            throw DomainError("build_ball: cost box is smaller than the label counts");

    const AxiomReport axioms = check_axioms(cost);
    if (opts.require_axioms && !axioms.construction_ready())
        throw DomainError(
            "build_ball: cost fails the required axioms (even/positive, increasing, "
            "declared-norm sublinearity)");

    NormBall ball;
    ball.labels = layout.total;
    ball.group_of = layout.group_of;
    ball.supersymmetric = axioms.supersymmetric;
    ball.closed_form = recognize_closed_form(cost.descriptor);

    if (ball.supersymmetric) {
        ball.hull = step1_vertices(cost, layout.group_of, layout.m, layout.total);
        return ball;
    }

    // General case: one Step-1 ball per orthant of R^m, glued along the
    // replicated sign orthants of R^N.
    const int orthant_count = 1 << layout.m;
    for (int mask = 0; mask < orthant_count; ++mask) {
        OrthantPiece piece;
        piece.material_signs.resize(layout.m);
        for (int i = 0; i < layout.m; ++i)
            piece.material_signs[i] = (mask >> i) & 1 ? -1 : 1;
        const MultiMaterialCost symmetrized = symmetrize_for_orthant(cost, piece.material_signs);
        piece.vertices = step1_vertices(symmetrized, layout.group_of, layout.m, layout.total);
        piece.tau.resize(layout.total);
        for (int j = 0; j < layout.total; ++j)
            piece.tau[j] = piece.material_signs[layout.group_of[j]];
        ball.pieces.push_back(std::move(piece));
    }
    return ball;
}

double hull_gauge(const std::vector<BallVertex>& vertices, const RealVec& x) {
    const int n = static_cast<int>(x.size());
    bool zero = true;
    for (double v : x)
        if (v != 0.0) zero = false;
    if (zero) return 0.0;
    LinearProgram lp;
    const int k = static_cast<int>(vertices.size());
    lp.c.assign(k, 1.0);
    lp.a.assign(n, std::vector<double>(k, 0.0));
    lp.b = x;
    lp.sense.assign(n, RowSense::EQ);
    for (int col = 0; col < k; ++col)
        for (int j = 0; j < n; ++j) lp.a[j][col] = vertices[col].q[j];
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal) return std::numeric_limits<double>::infinity();
    return res.value;
}

double gauge(const NormBall& ball, const RealVec& x) {
    if (static_cast<int>(x.size()) != ball.labels)
        throw DomainError("gauge: vector dimension mismatch");
    if (ball.labels == 0) return 0.0;
    if (ball.closed_form) return closed_form_gauge(*ball.closed_form, x);
    if (ball.supersymmetric || ball.pieces.empty()) {
        const double g = hull_gauge(ball.hull, x);
        if (std::isinf(g)) throw std::runtime_error("gauge: hull LP infeasible (invalid ball)");
        return g;
    }
    double best = 0.0;
    for (const OrthantPiece& piece : ball.pieces) best = std::max(best, piece_gauge(piece, x));
    return best;
}

double gauge(const NormBall& ball, const IntVec& x) {
    return gauge(ball, RealVec(x.begin(), x.end()));
}

std::vector<RealVec> extreme_points(const NormBall& ball) {
    std::vector<BallVertex> candidates;
    std::map<RealVec, bool> seen;
    auto add = [&](const BallVertex& v) {
        if (seen.emplace(v.q, true).second) candidates.push_back(v);
    };
    if (ball.supersymmetric || ball.pieces.empty()) {
        for (const BallVertex& v : ball.hull) add(v);
    } else {
        for (const OrthantPiece& piece : ball.pieces)
            for (const BallVertex& v : piece.vertices) add(v);
    }
    // keep candidates on or inside the ball, then drop any that the others
    // already span
    std::vector<BallVertex> inside;
    for (const BallVertex& v : candidates)
        if (gauge(ball, v.q) <= 1.0 + kResidualTol) inside.push_back(v);
    std::vector<RealVec> extremes;
    for (std::size_t i = 0; i < inside.size(); ++i) {
        std::vector<BallVertex> others;
        for (std::size_t j = 0; j < inside.size(); ++j)
            if (j != i) others.push_back(inside[j]);
        if (hull_gauge(others, inside[i].q) > 1.0 + kResidualTol) extremes.push_back(inside[i].q);
    }
    return extremes;
}

double mass(const LabeledNetwork& net, const NormBall& ball) {
    if (net.coeff_dim != ball.labels) throw DomainError("mass: network/ball dimension mismatch");
    double total = 0.0;
    for (const Edge& e : net.edges)
        total += edge_length(net, e) * gauge(ball, RealVec(e.mult.begin(), e.mult.end()));
    return total;
}

IntVec signed_pattern(const LabelLayout& layout, const Permutation& sigma, const IntVec& theta) {
    IntVec v(layout.total, 0);
    int offset = 0;
    for (int i = 0; i < layout.m; ++i) {
        const int s = sign_of(theta[i]);
        const int count = std::min(std::abs(theta[i]), layout.counts[i]);
        for (int k = 0; k < count; ++k) v[offset + sigma[i][k]] += s;
        offset += layout.counts[i];
    }
    return v;
}

std::vector<Permutation> all_permutations(const LabelLayout& layout, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (int i = 0; i < layout.m; ++i) {
        for (int k = 2; k <= layout.counts[i]; ++k) {
            count *= k;
            if (count > cap) return {};
        }
    }
    std::vector<Permutation> out;
    Permutation sigma = identity_permutation(layout);
    std::vector<std::vector<int>> groups(layout.m);
    for (int i = 0; i < layout.m; ++i) groups[i] = sigma[i];

    std::function<void(int)> rec = [&](int i) {
        if (i == layout.m) {
            out.push_back(sigma);
            return;
        }
        std::vector<int> perm = groups[i];
        do {
            sigma[i] = perm;
            rec(i + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    return out;
}

EqnMainReport verify_eqn_main(const MultiMaterialCost& cost, const NormBall& ball,
                              const LabelLayout& layout, const VerifyOptions& opts) {
    EqnMainReport rep;
    std::vector<Permutation> perms = all_permutations(layout, opts.max_permutations);
    if (perms.empty() && layout.total > 0) {
        rep.sampled = true;
        std::mt19937_64 rng(opts.seed);
        Permutation sigma = identity_permutation(layout);
        for (std::uint64_t s = 0; s < opts.max_permutations; ++s) {
            for (int i = 0; i < layout.m; ++i)
                std::shuffle(sigma[i].begin(), sigma[i].end(), rng);
            perms.push_back(sigma);
        }
    }
    if (perms.empty()) perms.push_back(identity_permutation(layout));

    IntVec theta_box(layout.counts.begin(), layout.counts.end());
    for_each_box_point(theta_box, [&](const IntVec& theta) {
        const double c_val = evaluate(cost, theta);
        for (const Permutation& sigma : perms) {
            const IntVec pattern = signed_pattern(layout, sigma, theta);
            const double g = gauge(ball, pattern);
            const double residual = std::abs(c_val - g);
            if (residual > rep.max_residual) {
                rep.max_residual = residual;
                rep.worst_theta = theta;
                rep.worst_cost = c_val;
                rep.worst_gauge = g;
            }
        }
    });
    rep.ok = rep.max_residual <= opts.tolerance;
    return rep;
}

MonotoneAbsoluteReport check_monotone_absolute(const NormBall& ball, int sample_count,
                                               std::uint64_t seed) {
    MonotoneAbsoluteReport rep;
    if (ball.labels == 0) return rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < sample_count; ++s) {
        RealVec x(ball.labels);
        for (double& v : x) v = coord(rng);
        const double gx = gauge(ball, x);
        RealVec ax(ball.labels);
        for (int j = 0; j < ball.labels; ++j) ax[j] = std::abs(x[j]);
        const double gax = gauge(ball, ax);
        const double dev = std::abs(gx - gax);
        if (dev > rep.max_absolute_deviation) {
            rep.max_absolute_deviation = dev;
            rep.absolute_witness = x;
        }
        RealVec y = x;
        y[s % ball.labels] *= unit(rng);
        const double gy = gauge(ball, y);
        const double viol = gy - gx;
        if (viol > rep.max_monotone_violation) {
            rep.max_monotone_violation = viol;
            rep.monotone_witness = x;
        }
    }
    rep.absolute = rep.max_absolute_deviation <= kResidualTol;
    rep.monotone = rep.max_monotone_violation <= kResidualTol;
    return rep;
}

}  // namespace mmt
