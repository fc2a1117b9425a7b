// solve.hpp — scalar search primitives: golden-section maximization, sign-scan
// root bracketing, bisection, predicate bisection, and a deterministic
// parallel-for used by grid scans.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace renyi_ci {

struct ScalarOpt {
    double x;
    double value;
};

// Golden-section maximization of f over [lo, hi] to the given interval width.
// Deterministic; never evaluates outside [lo, hi]. Intervals narrower than
// 1e-14 are treated as singletons.
template <typename F>
ScalarOpt golden_max(F&& f, double lo, double hi, double width_tol = 1e-12,
                     int max_iter = 400) {
    if (hi < lo) std::swap(lo, hi);
    if (hi - lo < 1e-14) {
        double mid = 0.5 * (lo + hi);
        return {mid, f(mid)};
    }
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (hi - lo) > width_tol; ++i) {
        if (f1 > f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 > f2 ? ScalarOpt{x1, f1} : ScalarOpt{x2, f2};
}

// Scan [lo, hi] in n equal subintervals and return every bracket [a,b] with
// f(a) and f(b) of opposite (or vanishing) sign. Endpoints with |f| <= 0 count
// as crossings.
template <typename F>
std::vector<std::pair<double, double>> sign_change_brackets(F&& f, double lo, double hi,
                                                            int n) {
    std::vector<std::pair<double, double>> out;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / n;
        double fx = f(x);
        if ((prev_f <= 0.0 && fx >= 0.0) || (prev_f >= 0.0 && fx <= 0.0))
            out.emplace_back(prev_x, x);
        prev_x = x;
        prev_f = fx;
    }
    return out;
}

// Bisection for a root of f inside a bracket where f changes sign; refines to
// x-interval width xtol and returns the midpoint.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double xtol = 1e-15, int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("bisect_root: endpoints do not bracket a sign change (f(lo)=" +
                                    std::to_string(flo) + ", f(hi)=" + std::to_string(fhi) + ")");
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid; flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Bisection on a boolean predicate that is false at lo and true at hi;
// returns the transition point to within xtol.
template <typename P>
double bisect_predicate(P&& pred, double lo, double hi, double xtol) {
    for (int i = 0; i < 300 && (hi - lo) > xtol; ++i) {
        double mid = 0.5 * (lo + hi);
        if (pred(mid)) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Worker cap: RENYI_CI_THREADS if set, else hardware concurrency (>=1).
inline int worker_count() {
    if (const char* env = std::getenv("RENYI_CI_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Deterministic parallel loop: body(i) for i in [0, n). Each index writes only
// to its own slot of any output; chunking never affects results.
inline void parallel_for(long n, const std::function<void(long)>& body) {
    int workers = std::min<long>(worker_count(), n);
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (long i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace renyi_ci
