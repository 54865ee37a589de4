#pragma once

// One-dimensional search primitives shared by the geometry oracle, the
// special-function suprema and the root solves.

#include <cmath>
#include <cstddef>
#include <utility>

namespace hyplam::search {

struct Extremum {
    double x;
    double value;
    bool converged = true;
};

inline constexpr double kInvPhi = 0.6180339887498948482;

/// Golden-section minimisation of a unimodal f on [lo, hi]. Stops when the
/// bracket is narrower than tol or after max_iter steps.
template <typename F>
Extremum golden_min(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    for (; it < max_iter && (hi - lo) > tol; ++it) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvPhi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvPhi * (hi - lo);
            fd = f(d);
        }
    }
    const bool converged = (hi - lo) <= tol;
    return fc <= fd ? Extremum{c, fc, converged} : Extremum{d, fd, converged};
}

template <typename F>
Extremum golden_max(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    auto r = golden_min([&](double x) { return -f(x); }, lo, hi, tol, max_iter);
    return {r.x, -r.value, r.converged};
}

/// Grid scan over x_k = lo + k (hi - lo) / (n - 1) followed by golden-section
/// refinement in the two cells around the best grid point.
template <typename F>
Extremum grid_then_golden_min(F&& f, double lo, double hi, std::size_t n, double tol,
                              int max_iter = 200) {
    const double step = (hi - lo) / static_cast<double>(n - 1);
    std::size_t best = 0;
    double best_val = f(lo);
    for (std::size_t k = 1; k < n; ++k) {
        const double v = f(lo + step * static_cast<double>(k));
        if (v < best_val) {
            best_val = v;
            best = k;
        }
    }
    const double a = best == 0 ? lo : lo + step * static_cast<double>(best - 1);
    const double b = best + 1 >= n ? hi : lo + step * static_cast<double>(best + 1);
    auto refined = golden_min(f, a, b, tol, max_iter);
    if (refined.value <= best_val) return refined;
    return {lo + step * static_cast<double>(best), best_val, refined.converged};
}

template <typename F>
Extremum grid_then_golden_max(F&& f, double lo, double hi, std::size_t n, double tol,
                              int max_iter = 200) {
    auto r = grid_then_golden_min([&](double x) { return -f(x); }, lo, hi, n, tol, max_iter);
    return {r.x, -r.value, r.converged};
}

/// Bisection for a sign change of g on [lo, hi]; g(lo) and g(hi) must have
/// opposite signs. Runs until the midpoint no longer splits the bracket.
template <typename G>
double bisect(G&& g, double lo, double hi, int max_iter = 400) {
    const bool lo_negative = g(lo) < 0.0;
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if ((g(mid) < 0.0) == lo_negative) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hyplam::search
