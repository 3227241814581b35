#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmt {

using Point = std::vector<double>;
using IntVec = std::vector<int>;
using RealVec = std::vector<double>;

// Absolute tolerance for geometric predicates (interior-overlap detection,
// vertex/atom coincidence). Coordinates are assumed O(1).
inline constexpr double kGeomTol = 1e-9;

// Absolute tolerance for floating comparisons in axiom checks.
inline constexpr double kAxiomTol = 1e-12;

// Default tolerance for gauge/calibration residuals.
inline constexpr double kResidualTol = 1e-9;

// Bad input data (invalid network, malformed boundary, unparsable file).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A value outside an operation's declared domain (e.g. multiplicity outside
// a cost's box).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An instance exceeding the implementation's hard resource caps.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign_of(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Componentwise partial order: x <= y iff |x_j| <= |y_j| and x_j*y_j >= 0
// for every coordinate.
template <typename T>
bool leq_partial_order(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size())
        throw DomainError("leq_partial_order: length mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::abs(x[j]) > std::abs(y[j])) return false;
        if (static_cast<double>(x[j]) * static_cast<double>(y[j]) < 0) return false;
    }
    return true;
}

template <typename T>
std::vector<T> abs_of(const std::vector<T>& x) {
    std::vector<T> r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = std::abs(x[j]);
    return r;
}

inline bool is_zero(const IntVec& x) {
    for (int v : x)
        if (v != 0) return false;
    return true;
}

inline double dot(const Point& a, const Point& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline double dist(const Point& a, const Point& b) { return norm2(sub(a, b)); }

inline bool points_equal(const Point& a, const Point& b, double tol = kGeomTol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace mmt
