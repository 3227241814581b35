#pragma once

#include <vector>

namespace mmt {

// Dense two-phase primal simplex for the tiny LPs arising in gauge
// evaluation. Deterministic: Bland's rule for entering and leaving
// variables, absolute tolerance 1e-9.

enum class RowSense { LE, GE, EQ };

struct LinearProgram {
    // minimize c.x  subject to  A x (sense) b,  x >= 0
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<RowSense> sense;
    std::vector<double> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    std::vector<double> x;
};

LpResult solve_lp(const LinearProgram& lp);

}  // namespace mmt
