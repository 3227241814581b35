#include "mmt/calibration.hpp"

#include <cmath>

namespace mmt {

double ConstantForm::pair(const Point& tau, const IntVec& theta) const {
    double s = 0.0;
    for (std::size_t j = 0; j < rows.size(); ++j) s += dot(rows[j], tau) * theta[j];
    return s;
}

CalibrationReport verify_calibration(const ConstantForm& form, const LabeledNetwork& net,
                                     const NormBall& ball, double tol) {
    if (form.coeff_dim() != ball.labels)
        throw DomainError("verify_calibration: form rows do not match the ball dimension");
    if (net.coeff_dim != ball.labels)
        throw DomainError("verify_calibration: network labels do not match the ball dimension");
    if (!net.edges.empty() && form.ambient_dim() != net.dim)
        throw DomainError("verify_calibration: form columns do not match the ambient dimension");

    CalibrationReport rep;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const Edge& edge = net.edges[e];
        const Point tau = edge_direction(net, edge);
        const double pairing = form.pair(tau, edge.mult);
        const double g = gauge(ball, edge.mult);
        const double residual = std::abs(pairing - g);
        if (residual > rep.cond_i_max_residual) {
            rep.cond_i_max_residual = residual;
            rep.witness_edge = static_cast<int>(e);
            rep.witness_pairing = std::abs(pairing);
            rep.witness_gauge = g;
        }
    }

    // (iii): sup over |tau|=1 of <omega; tau, eta> is |sum_j eta_j row_j|,
    // linear in eta, so the maximum over the ball sits at an extreme point.
    const int d = form.ambient_dim();
    for (const RealVec& g : extreme_points(ball)) {
        RealVec covector(d, 0.0);
        for (int j = 0; j < ball.labels; ++j)
            for (int k = 0; k < d; ++k) covector[k] += g[j] * form.rows[j][k];
        rep.cond_iii_max_value = std::max(rep.cond_iii_max_value, norm2(covector));
    }

    rep.verdict = rep.cond_i_max_residual <= tol && rep.cond_iii_max_value <= 1.0 + tol;
    return rep;
}

double form_pairing(const ConstantForm& form, const LabeledNetwork& net) {
    double total = 0.0;
    for (const Edge& e : net.edges)
        total += edge_length(net, e) * form.pair(edge_direction(net, e), e.mult);
    return total;
}

MassGapReport mass_gap_certificate(const ConstantForm& form, const LabeledNetwork& calibrated,
                                   const LabeledNetwork& competitor, const NormBall& ball,
                                   double tol) {
    if (!same_boundary(boundary_of(calibrated), boundary_of(competitor)))
        throw ValidationError("mass_gap_certificate: the networks have different boundaries");
    MassGapReport rep;
    rep.mass_calibrated = mass(calibrated, ball);
    rep.pairing_calibrated = form_pairing(form, calibrated);
    rep.pairing_competitor = form_pairing(form, competitor);
    rep.mass_competitor = mass(competitor, ball);
    rep.gap = rep.mass_competitor - rep.mass_calibrated;
    rep.calibration_ok = verify_calibration(form, calibrated, ball, tol).verdict;
    rep.pairing_equal = std::abs(rep.pairing_calibrated - rep.pairing_competitor) <= tol;
    rep.chain_ok = rep.calibration_ok && rep.pairing_equal &&
                   rep.pairing_competitor <= rep.mass_competitor + tol;
    return rep;
}

}  // namespace mmt
