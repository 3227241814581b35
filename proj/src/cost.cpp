#include "mmt/cost.hpp"

#include <algorithm>
#include <cmath>

namespace mmt {

namespace {

double norm_eval(const StarNorm& n, const double* x, std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double w = n.weights.empty() ? 1.0 : n.weights[i];
        const double v = w * std::abs(x[i]);
        if (n.p == kPInf)
            acc = std::max(acc, v);
        else
            acc += std::pow(v, n.p);
    }
    return n.p == kPInf ? acc : std::pow(acc, 1.0 / n.p);
}

void push_witness(AxiomReport& rep, const std::string& axiom, std::vector<IntVec> pts) {
    if (rep.counterexamples.size() < 16) rep.counterexamples.push_back({axiom, std::move(pts)});
}

}  // namespace

double StarNorm::operator()(const RealVec& x) const { return norm_eval(*this, x.data(), x.size()); }

double StarNorm::operator()(const IntVec& x) const {
    RealVec r(x.begin(), x.end());
    return norm_eval(*this, r.data(), r.size());
}

double power0(double base, double alpha) {
    const double ab = std::abs(base);
    if (ab == 0.0) return 0.0;
    if (alpha == 0.0) return 1.0;
    return std::pow(ab, alpha);
}

bool in_box(const IntVec& box, const IntVec& theta) {
    if (theta.size() != box.size()) return false;
    for (std::size_t i = 0; i < box.size(); ++i)
        if (std::abs(theta[i]) > box[i]) return false;
    return true;
}

double evaluate(const MultiMaterialCost& cost, const IntVec& theta) {
    if (static_cast<int>(theta.size()) != cost.m)
        throw DomainError("cost: multiplicity has wrong dimension");
    if (!in_box(cost.box, theta)) throw DomainError("cost: multiplicity outside the declared box");
    return cost.fn(theta);
}

void for_each_box_point(const IntVec& box, const std::function<void(const IntVec&)>& f) {
    const int m = static_cast<int>(box.size());
    IntVec x(m);
    for (int i = 0; i < m; ++i) x[i] = -box[i];
    while (true) {
        f(x);
        int i = m - 1;
        while (i >= 0 && x[i] == box[i]) {
            x[i] = -box[i];
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
}

AxiomReport check_axioms(const MultiMaterialCost& cost) {
    AxiomReport rep;
    std::vector<IntVec> pts;
    std::vector<double> vals;
    for_each_box_point(cost.box, [&](const IntVec& x) {
        pts.push_back(x);
        vals.push_back(cost.fn(x));
    });
    const std::size_t n = pts.size();

    auto value_of = [&](const IntVec& x) {
        // odometer order gives a direct index
        std::size_t idx = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            idx = idx * (2 * cost.box[i] + 1) + (x[i] + cost.box[i]);
        return vals[idx];
    };

    rep.even_and_positive = true;
    for (std::size_t k = 0; k < n; ++k) {
        IntVec neg = pts[k];
        for (int& v : neg) v = -v;
        if (std::abs(vals[k] - value_of(neg)) > kAxiomTol) {
            rep.even_and_positive = false;
            push_witness(rep, "even", {pts[k]});
            break;
        }
        const bool zero = is_zero(pts[k]);
        if ((zero && std::abs(vals[k]) > kAxiomTol) || (!zero && vals[k] <= kAxiomTol)) {
            rep.even_and_positive = false;
            push_witness(rep, "positive", {pts[k]});
            break;
        }
    }

    rep.increasing = true;
    for (std::size_t a = 0; a < n && rep.increasing; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (leq_partial_order(pts[a], pts[b]) && vals[a] > vals[b] + kAxiomTol) {
                rep.increasing = false;
                push_witness(rep, "increasing", {pts[a], pts[b]});
                break;
            }
        }
    }

    rep.subadditive = true;
    for (std::size_t a = 0; a < n && rep.subadditive; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            IntVec s = pts[a];
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += pts[b][i];
            if (!in_box(cost.box, s)) continue;
            if (value_of(s) > vals[a] + vals[b] + kAxiomTol) {
                rep.subadditive = false;
                push_witness(rep, "subadditive", {pts[a], pts[b], s});
                break;
            }
        }
    }

    if (!cost.star_norm) {
        rep.sublinear_iii_prime = TriState::Unknown;
    } else {
        rep.sublinear_iii_prime = TriState::True;
        const StarNorm& star = *cost.star_norm;
        for (std::size_t a = 0; a < n && rep.sublinear_iii_prime == TriState::True; ++a) {
            if (is_zero(pts[a])) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (is_zero(pts[b])) continue;
                // pts[b] precedes pts[a]: ratio at the larger point must not exceed
                // the ratio at the smaller one
                if (!leq_partial_order(pts[b], pts[a])) continue;
                if (vals[a] / star(pts[a]) > vals[b] / star(pts[b]) + kAxiomTol) {
                    rep.sublinear_iii_prime = TriState::False;
                    push_witness(rep, "sublinear", {pts[b], pts[a]});
                    break;
                }
            }
        }
    }

    rep.supersymmetric = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(vals[k] - value_of(abs_of(pts[k]))) > kAxiomTol) {
            rep.supersymmetric = false;
            push_witness(rep, "supersymmetric", {pts[k]});
            break;
        }
    }
    return rep;
}

MultiMaterialCost extend_from_rectangle(const MultiMaterialCost& cost, const IntVec& new_box) {
    MultiMaterialCost out;
    out.m = cost.m;
    out.box = new_box;
    out.star_norm = cost.star_norm;
    out.descriptor.kind = "extended";
    out.descriptor.m = cost.m;
    out.descriptor.box = new_box;
    out.descriptor.children = {cost.descriptor};
    const MultiMaterialCost base = cost;
    out.fn = [base](const IntVec& x) {
        // brute-force max over the down-set of x inside the base rectangle
        const int m = base.m;
        IntVec limit(m);
        for (int i = 0; i < m; ++i) limit[i] = std::min(std::abs(x[i]), base.box[i]);
        IntVec y(m, 0);
        double best = 0.0;
        while (true) {
            IntVec signed_y(m);
            for (int i = 0; i < m; ++i) signed_y[i] = sign_of(x[i]) * y[i];
            best = std::max(best, base.fn(signed_y));
            int i = m - 1;
            while (i >= 0 && y[i] == limit[i]) {
                y[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++y[i];
        }
        return best;
    };
    return out;
}

MultiMaterialCost symmetrize_for_orthant(const MultiMaterialCost& cost,
                                         const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != cost.m)
        throw DomainError("symmetrize_for_orthant: sign vector has wrong dimension");
    MultiMaterialCost out;
    out.m = cost.m;
    out.box = cost.box;
    out.star_norm = cost.star_norm;
    out.descriptor.kind = "orthant_symmetrized";
    out.descriptor.m = cost.m;
    out.descriptor.box = cost.box;
    out.descriptor.children = {cost.descriptor};
    const auto base = cost.fn;
    const std::vector<int> s = signs;
    out.fn = [base, s](const IntVec& x) {
        IntVec rep(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) rep[i] = s[i] * std::abs(x[i]);
        return base(rep);
    };
    return out;
}

MultiMaterialCost steiner_cost(int box) {
    MultiMaterialCost c;
    c.m = 1;
    c.box = {box};
    c.fn = [](const IntVec& x) { return x[0] == 0 ? 0.0 : 1.0; };
    c.star_norm = StarNorm{kPInf, {}};
    c.descriptor.kind = "steiner";
    c.descriptor.box = c.box;
    return c;
}

MultiMaterialCost gilbert_steiner_cost(double alpha, int box) {
    MultiMaterialCost c;
    c.m = 1;
    c.box = {box};
    c.fn = [alpha](const IntVec& x) { return power0(x[0], alpha); };
    c.star_norm = StarNorm{1.0, {}};
    c.descriptor.kind = "gilbert_steiner";
    c.descriptor.alpha = alpha;
    c.descriptor.box = c.box;
    return c;
}

MultiMaterialCost linear_combination_cost(const std::vector<double>& lambdas,
                                          const std::vector<double>& alphas, int box) {
    if (lambdas.size() != alphas.size() || lambdas.empty())
        throw DomainError("linear_combination: lambdas/alphas size mismatch");
    MultiMaterialCost c;
    c.m = 1;
    c.box = {box};
    c.fn = [lambdas, alphas](const IntVec& x) {
        double s = 0.0;
        for (std::size_t k = 0; k < lambdas.size(); ++k) s += lambdas[k] * power0(x[0], alphas[k]);
        return s;
    };
    c.star_norm = StarNorm{1.0, {}};
    c.descriptor.kind = "linear_combination";
    c.descriptor.lambdas = lambdas;
    c.descriptor.alphas = alphas;
    c.descriptor.box = c.box;
    return c;
}

MultiMaterialCost max_of_cost(const std::vector<MultiMaterialCost>& parts) {
    if (parts.empty()) throw DomainError("max_of: no parts");
    MultiMaterialCost c;
    c.m = parts.front().m;
    c.box = parts.front().box;
    for (const MultiMaterialCost& p : parts) {
        if (p.m != c.m) throw DomainError("max_of: mixed material counts");
        for (int i = 0; i < c.m; ++i) c.box[i] = std::min(c.box[i], p.box[i]);
    }
    std::vector<std::function<double(const IntVec&)>> fns;
    for (const MultiMaterialCost& p : parts) fns.push_back(p.fn);
    c.fn = [fns](const IntVec& x) {
        double best = 0.0;
        for (const auto& f : fns) best = std::max(best, f(x));
        return best;
    };
    c.star_norm = parts.front().star_norm;
    c.descriptor.kind = "max_of";
    c.descriptor.m = c.m;
    c.descriptor.box = c.box;
    for (const MultiMaterialCost& p : parts) c.descriptor.children.push_back(p.descriptor);
    return c;
}

MultiMaterialCost composite_cost(const StarNorm& star,
                                 const std::vector<MultiMaterialCost>& singles) {
    MultiMaterialCost c;
    c.m = static_cast<int>(singles.size());
    c.box.resize(c.m);
    std::vector<std::function<double(const IntVec&)>> fns;
    for (int i = 0; i < c.m; ++i) {
        if (singles[i].m != 1) throw DomainError("composite: children must be single-material");
        c.box[i] = singles[i].box[0];
        fns.push_back(singles[i].fn);
    }
    const StarNorm comb = star;
    c.fn = [fns, comb](const IntVec& x) {
        RealVec parts(fns.size());
        for (std::size_t i = 0; i < fns.size(); ++i) parts[i] = fns[i]({x[i]});
        return comb(parts);
    };
    c.star_norm = std::nullopt;
    c.descriptor.kind = "composite";
    c.descriptor.m = c.m;
    c.descriptor.box = c.box;
    c.descriptor.star = star;
    for (const MultiMaterialCost& p : singles) c.descriptor.children.push_back(p.descriptor);
    return c;
}

MultiMaterialCost plc_cost(double lambda1, double lambda2, double alpha1, double alpha2,
                           int box) {
    MultiMaterialCost c = composite_cost(
        StarNorm{kPInf, {}},
        {gilbert_steiner_cost(alpha1, box), gilbert_steiner_cost(alpha2, box)});
    const double l1 = lambda1, l2 = lambda2, a1 = alpha1, a2 = alpha2;
    c.fn = [l1, l2, a1, a2](const IntVec& x) {
        return std::max(l1 * power0(x[0], a1), l2 * power0(x[1], a2));
    };
    c.star_norm = std::nullopt;  // the max's crossover defeats any homogeneous witness
    c.descriptor = CostDescriptor{};
    c.descriptor.kind = "plc";
    c.descriptor.m = 2;
    c.descriptor.lambdas = {lambda1, lambda2};
    c.descriptor.alphas = {alpha1, alpha2};
    c.descriptor.box = c.box;
    return c;
}

MultiMaterialCost mailing_cost(int m, double alpha, int box) {
    MultiMaterialCost c;
    c.m = m;
    c.box.assign(m, box);
    c.fn = [alpha](const IntVec& x) {
        long long pos = 0, neg = 0;
        for (int v : x) {
            if (v >= 0)
                pos += v;
            else
                neg -= v;
        }
        return power0(static_cast<double>(pos), alpha) + power0(static_cast<double>(neg), alpha);
    };
    // no declared (iii') witness: adding one opposite-signed unit to a large
    // flow raises the cost by a constant, which no monotone norm can track
    if (alpha == 1.0) c.star_norm = StarNorm{1.0, {}};
    c.descriptor.kind = "mailing";
    c.descriptor.m = m;
    c.descriptor.alpha = alpha;
    c.descriptor.box = c.box;
    return c;
}

MultiMaterialCost urban_cost(double a, double b, int box) {
    MultiMaterialCost c;
    c.m = 1;
    c.box = {box};
    c.fn = [a, b](const IntVec& x) {
        if (x[0] == 0) return 0.0;
        const double z = std::abs(x[0]);
        return std::min(a * z, z + b);
    };
    c.star_norm = StarNorm{1.0, {}};
    c.descriptor.kind = "urban";
    c.descriptor.a = a;
    c.descriptor.b = b;
    c.descriptor.box = c.box;
    return c;
}

MultiMaterialCost table_cost(int m, const IntVec& box, const std::vector<double>& values) {
    std::size_t count = 1;
    for (int v : box) count *= static_cast<std::size_t>(2 * v + 1);
    if (values.size() != count) throw DomainError("table: value count does not match the box");
    MultiMaterialCost c;
    c.m = m;
    c.box = box;
    const IntVec bx = box;
    const std::vector<double> vals = values;
    c.fn = [bx, vals](const IntVec& x) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            idx = idx * (2 * bx[i] + 1) + (x[i] + bx[i]);
        return vals[idx];
    };
    c.descriptor.kind = "table";
    c.descriptor.m = m;
    c.descriptor.box = box;
    c.descriptor.table = values;
    return c;
}

MultiMaterialCost custom_cost(int m, const IntVec& box, std::function<double(const IntVec&)> fn,
                              std::optional<StarNorm> star) {
    MultiMaterialCost c;
    c.m = m;
    c.box = box;
    c.fn = std::move(fn);
    c.star_norm = std::move(star);
    c.descriptor.kind = "custom";
    c.descriptor.m = m;
    c.descriptor.box = box;
    return c;
}

MultiMaterialCost make_cost(const CostDescriptor& d) {
    const int bound = d.box.empty() ? 4 : d.box[0];
    if (d.kind == "steiner") return steiner_cost(bound);
    if (d.kind == "gilbert_steiner") return gilbert_steiner_cost(d.alpha, bound);
    if (d.kind == "linear_combination") return linear_combination_cost(d.lambdas, d.alphas, bound);
    if (d.kind == "max_of") {
        std::vector<MultiMaterialCost> parts;
        for (const CostDescriptor& ch : d.children) parts.push_back(make_cost(ch));
        return max_of_cost(parts);
    }
    if (d.kind == "plc")
        return plc_cost(d.lambdas.at(0), d.lambdas.at(1), d.alphas.at(0), d.alphas.at(1), bound);
    if (d.kind == "composite") {
        if (!d.star) throw ValidationError("composite cost requires a star norm");
        std::vector<MultiMaterialCost> singles;
        for (const CostDescriptor& ch : d.children) singles.push_back(make_cost(ch));
        return composite_cost(*d.star, singles);
    }
    if (d.kind == "mailing") return mailing_cost(d.m, d.alpha, bound);
    if (d.kind == "urban") return urban_cost(d.a, d.b, bound);
    if (d.kind == "table") return table_cost(d.m, d.box, d.table);
    throw ValidationError("unknown cost kind: " + d.kind);
}

}  // namespace mmt
