#pragma once

#include <string>
#include <vector>

#include "mmt/core.hpp"
#include "mmt/norm_ball.hpp"

namespace mmt {

// Constant vector-valued 1-form: row j is the classical covector paired
// with label j, acting on a direction tau by inner product.
struct ConstantForm {
    std::vector<RealVec> rows;  // n rows of dimension d

    int coeff_dim() const { return static_cast<int>(rows.size()); }
    int ambient_dim() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

    // <omega; tau, theta> = sum_j (row_j . tau) theta_j
    double pair(const Point& tau, const IntVec& theta) const;
};

struct CalibrationReport {
    double cond_i_max_residual = 0.0;
    bool cond_ii = true;  // constant forms are closed
    double cond_iii_max_value = 0.0;
    bool verdict = false;
    // first edge violating (i), with the pairing magnitude recorded
    int witness_edge = -1;
    double witness_pairing = 0.0;
    double witness_gauge = 0.0;
};

// Checks the three calibration conditions of a constant form against a
// labeled network and the norm ball: (i) the pairing attains the gauge on
// every edge, (ii) closedness (automatic), (iii) comass at most one,
// evaluated at the ball's extreme points where the linear-in-eta supremum
// is attained.
CalibrationReport verify_calibration(const ConstantForm& form, const LabeledNetwork& net,
                                     const NormBall& ball, double tol = kResidualTol);

struct MassGapReport {
    double mass_calibrated = 0.0;
    double pairing_calibrated = 0.0;
    double pairing_competitor = 0.0;
    double mass_competitor = 0.0;
    double gap = 0.0;  // mass_competitor - mass_calibrated
    bool calibration_ok = false;
    bool pairing_equal = false;  // discrete Stokes for constant forms
    bool chain_ok = false;
};

// Replays the minimality inequality chain
//   mass(T) = T(omega) = T'(omega) <= mass(T')
// for a calibrated network T and a competitor T' with the same boundary.
MassGapReport mass_gap_certificate(const ConstantForm& form, const LabeledNetwork& calibrated,
                                   const LabeledNetwork& competitor, const NormBall& ball,
                                   double tol = kResidualTol);

// Integral of the form over a labeled network: sum_e length * <omega; tau_e, theta_e>.
double form_pairing(const ConstantForm& form, const LabeledNetwork& net);

}  // namespace mmt
