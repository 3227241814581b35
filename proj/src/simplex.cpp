#include "mmt/simplex.hpp"

#include <cmath>
#include <limits>

namespace mmt {

namespace {

constexpr double kTol = 1e-9;

struct Tableau {
    // rows x cols coefficient matrix, rhs column, objective row.
    int rows = 0;
    int cols = 0;
    int entering_limit = 0;  // artificial columns beyond this may never re-enter
    std::vector<std::vector<double>> a;
    std::vector<double> rhs;
    std::vector<double> obj;  // reduced costs
    double obj_rhs = 0.0;
    std::vector<int> basis;  // basic variable per row

    void pivot(int r, int e) {
        const double p = a[r][e];
        for (int j = 0; j < cols; ++j) a[r][j] /= p;
        rhs[r] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = a[i][e];
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        const double f = obj[e];
        if (f != 0.0) {
            for (int j = 0; j < cols; ++j) obj[j] -= f * a[r][j];
            obj_rhs -= f * rhs[r];
        }
        basis[r] = e;
    }

    // Bland's rule: lowest-index column with negative reduced cost; among
    // minimum-ratio rows, the one whose basic variable has lowest index.
    // Returns false when optimal, throws unbounded via status flag.
    enum class Step { Optimal, Pivoted, Unbounded };

    Step iterate() {
        int e = -1;
        for (int j = 0; j < entering_limit; ++j) {
            if (obj[j] < -kTol) {
                e = j;
                break;
            }
        }
        if (e < 0) return Step::Optimal;
        int r = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < rows; ++i) {
            if (a[i][e] > kTol) {
                const double ratio = rhs[i] / a[i][e];
                if (ratio < best - kTol || (ratio < best + kTol && (r < 0 || basis[i] < basis[r]))) {
                    best = ratio;
                    r = i;
                }
            }
        }
        if (r < 0) return Step::Unbounded;
        pivot(r, e);
        return Step::Pivoted;
    }

    LpStatus run() {
        while (true) {
            switch (iterate()) {
                case Step::Optimal: return LpStatus::Optimal;
                case Step::Unbounded: return LpStatus::Unbounded;
                case Step::Pivoted: break;
            }
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.a.size());
    const int n = static_cast<int>(lp.c.size());

    // Normalize to b >= 0, then append slack/surplus and artificial columns.
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m);
    std::vector<RowSense> sense(m);
    for (int i = 0; i < m; ++i) {
        a[i] = lp.a[i];
        b[i] = lp.b[i];
        sense[i] = lp.sense[i];
        if (b[i] < 0) {
            for (double& v : a[i]) v = -v;
            b[i] = -b[i];
            if (sense[i] == RowSense::LE)
                sense[i] = RowSense::GE;
            else if (sense[i] == RowSense::GE)
                sense[i] = RowSense::LE;
        }
    }

    int slack_count = 0;
    for (int i = 0; i < m; ++i)
        if (sense[i] != RowSense::EQ) ++slack_count;

    Tableau t;
    t.rows = m;
    t.cols = n + slack_count + m;  // artificials for every row; unused ones stay zero
    t.entering_limit = n + slack_count;
    t.a.assign(m, std::vector<double>(t.cols, 0.0));
    t.rhs = b;
    t.basis.assign(m, -1);

    int next_slack = n;
    const int art0 = n + slack_count;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = a[i][j];
        if (sense[i] == RowSense::LE) {
            t.a[i][next_slack] = 1.0;
            t.basis[i] = next_slack;
            ++next_slack;
        } else if (sense[i] == RowSense::GE) {
            t.a[i][next_slack] = -1.0;
            ++next_slack;
        }
        if (t.basis[i] < 0) {
            t.a[i][art0 + i] = 1.0;
            t.basis[i] = art0 + i;
        }
    }

    // Phase 1: minimize sum of artificials.
    t.obj.assign(t.cols, 0.0);
    t.obj_rhs = 0.0;
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= art0) {
            for (int j = 0; j < t.cols; ++j) t.obj[j] -= t.a[i][j];
            t.obj_rhs -= t.rhs[i];
        }
    }
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= art0) t.obj[t.basis[i]] = 0.0;

    if (t.run() == LpStatus::Unbounded) return {LpStatus::Infeasible, 0.0, {}};
    if (-t.obj_rhs > kTol) return {LpStatus::Infeasible, 0.0, {}};

    // Drive leftover artificials out of the basis; rows that cannot pivot
    // are redundant and harmless to keep.
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= art0) {
            for (int j = 0; j < art0; ++j) {
                if (std::abs(t.a[i][j]) > kTol) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2 objective with artificial columns frozen.
    t.obj.assign(t.cols, 0.0);
    t.obj_rhs = 0.0;
    for (int j = 0; j < n; ++j) t.obj[j] = lp.c[j];
    for (int i = 0; i < m; ++i) {
        const int bj = t.basis[i];
        if (bj < n && lp.c[bj] != 0.0) {
            const double f = lp.c[bj];
            for (int j = 0; j < t.cols; ++j) t.obj[j] -= f * t.a[i][j];
            t.obj_rhs -= f * t.rhs[i];
        }
    }
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= art0) {
            for (int r = 0; r < m; ++r) t.a[r][t.basis[i]] = (r == i) ? 1.0 : 0.0;
        }
    for (int j = art0; j < t.cols; ++j) t.obj[j] = 0.0;

    const LpStatus status = t.run();
    if (status == LpStatus::Unbounded) return {LpStatus::Unbounded, 0.0, {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
    double value = 0.0;
    for (int j = 0; j < n; ++j) value += lp.c[j] * res.x[j];
    res.value = value;
    return res;
}

}  // namespace mmt
