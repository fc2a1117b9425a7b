// negative_orders.cpp — the negative-order upper bound and the phase condition.
#include "renyi_ci/negative_orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "renyi_ci/relaxed_wyner.hpp"
#include "renyi_ci/solve.hpp"

namespace renyi_ci {

namespace {

double cube(double x) { return x * x * x; }

double s_range_end(Prob eps) {
    return (1.0 - 2.0 * eps) / ((1.0 - eps) * (1.0 - eps));
}

}  // namespace

double omega(Prob eps, double s) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("omega: eps must be in (0, 1/2)");
    const double send = s_range_end(eps);
    if (!(s >= 0.0 && s <= send + 1e-15))
        throw std::domain_error("omega: s outside [0, (1-2 eps)/(1-eps)^2]");
    if (s == 0.0) return 0.0;
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    const double lambda = std::log2((1.0 - eps) / eps);
    const double m = (1.0 - eps) / (1.0 - 2.0 * eps);
    const double coef = 4.0 * d.eta * d.eta * m * lambda;
    return cube(std::log2(1.0 - s)) + coef * s * s / (1.0 - s) * (m * m * s - 1.0);
}

Condition1Report condition1_holds(Prob eps, int grid) {
    if (!(eps > 0.0 && eps <= 0.5))
        throw std::domain_error("condition1_holds: eps must be in (0, 1/2]");
    if (grid < 1000)
        throw std::domain_error("condition1_holds: grid must be >= 1000");
    Condition1Report rep;
    rep.epsilon = eps;
    rep.grid_points = grid;
    rep.s_range_end = eps == 0.5 ? 0.0 : s_range_end(eps);
    rep.worst_s = 0.0;
    rep.worst_omega = 0.0;
    if (rep.s_range_end <= 0.0) {  // degenerate range: only s = 0 remains
        rep.holds = true;
        return rep;
    }
    const double h = rep.s_range_end / (grid - 1);
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < grid; ++i) {
        const double s = i + 1 == grid ? rep.s_range_end : h * i;
        const double w = omega(eps, s);
        if (w > best) {
            best = w;
            best_i = i;
        }
    }
    const double s_best = best_i + 1 == grid ? rep.s_range_end : h * best_i;
    const double lo = std::max(0.0, s_best - h);
    const double hi = std::min(rep.s_range_end, s_best + h);
    const ScalarOpt fine =
        golden_max([&](double s) { return omega(eps, s); }, lo, hi, 1e-10);
    if (fine.value > best) {
        rep.worst_s = fine.x;
        rep.worst_omega = fine.value;
    } else {
        rep.worst_s = s_best;
        rep.worst_omega = best;
    }
    rep.holds = rep.worst_omega <= 0.0;
    return rep;
}

Prob epsilon0(double tolerance, Prob bracket_lo, Prob bracket_hi) {
    if (!(tolerance >= 1e-12 && tolerance <= 1e-3))
        throw std::domain_error("epsilon0: tolerance must be in [1e-12, 1e-3]");
    if (!(bracket_lo > 0.0 && bracket_lo < bracket_hi && bracket_hi <= 0.5))
        throw std::domain_error("epsilon0: need 0 < lo < hi <= 1/2");
    auto verdict = [](double e) { return condition1_holds(e).holds; };
    constexpr int kScan = 64;
    std::vector<char> v(kScan + 1);
    std::vector<double> es(kScan + 1);
    for (int i = 0; i <= kScan; ++i) {
        es[i] = bracket_lo + (bracket_hi - bracket_lo) * i / kScan;
        v[i] = verdict(es[i]);
    }
    if (v[0])
        throw std::runtime_error(
            "epsilon0: the condition already holds at the lower bracket end; "
            "widen the bracket downward");
    if (!v[kScan])
        throw std::runtime_error(
            "epsilon0: the condition still fails at the upper bracket end; "
            "widen the bracket upward");
    int flips = 0, first_true = kScan;
    for (int i = 1; i <= kScan; ++i) {
        if (v[i] != v[i - 1]) {
            ++flips;
            if (v[i] && first_true == kScan) first_true = i;
        }
    }
    if (flips != 1)
        throw std::runtime_error(
            "epsilon0: the verdict changes more than once across the bracket; "
            "refusing to bisect a non-monotone range");
    return bisect_predicate(verdict, es[first_true - 1], es[first_true],
                            tolerance);
}

CiResult gamma_ub_negative(Prob eps, const Order& order) {
    if (!(eps > 0.0 && eps <= 0.5))
        throw std::domain_error("gamma_ub_negative: eps must be in (0, 1/2]");
    if (order.tag != Order::Tag::NegativeFinite &&
        order.tag != Order::Tag::MinusInfinity)
        throw std::domain_error("gamma_ub_negative: order must be negative");
    // Budget multiplier on the divergence: 1 - 1/alpha, exactly 1 at -inf.
    const double factor = order.tag == Order::Tag::MinusInfinity
                              ? 1.0
                              : 1.0 - 1.0 / order.value;
    // D(r||eps) can round a hair below zero at r = eps; clamp the budget.
    auto budget = [&](double r) {
        return std::max(0.0, factor * binary_relative_entropy(r, eps));
    };
    auto value_at = [&](double r) { return relaxed_ci(r, budget(r)).value; };
    constexpr int kGrid = 10000;
    const double h = eps / (kGrid - 1);
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < kGrid; ++i) {
        const double r = i + 1 == kGrid ? static_cast<double>(eps) : h * i;
        const double v = value_at(r);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double r_best = best_i + 1 == kGrid ? static_cast<double>(eps) : h * best_i;
    const ScalarOpt fine =
        golden_max(value_at, std::max(0.0, r_best - h),
                   std::min(static_cast<double>(eps), r_best + h), 1e-12);
    if (fine.value > best) {
        best = fine.value;
        r_best = fine.x;
    }
    const RelaxedCiWitness wit = relaxed_ci(r_best, budget(r_best));
    CiResult res;
    res.value = best;
    res.order = order;
    res.epsilon = eps;
    res.r_star = r_best;
    res.q = wit.q;
    return res;
}

double g_domain_start(Prob eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("g_domain_start: eps must be in (0, 1/2)");
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    auto fn = [&](double t) {
        return 1.0 - binary_entropy((1.0 - t) / 2.0) - d.eta * t;
    };
    // fn < 0 just above 0 (slope -eta), fn > 0 at c_len, and it is convex, so
    // the crossing is unique.
    return bisect_root(fn, 1e-12, d.c_len, 1e-15);
}

double g_condition(double t, Prob eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("g_condition: eps must be in (0, 1/2)");
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    if (!(t > 0.0 && t <= d.c_len + 1e-12))
        throw std::domain_error("g_condition: t outside (0, c_len]");
    const double tstar = g_domain_start(eps);
    if (t <= tstar) {
        std::ostringstream msg;
        msg << "g_condition: undefined at t <= t* = " << tstar
            << " (the log argument changes sign there)";
        throw std::domain_error(msg.str());
    }
    const double cap = 1.0 - binary_entropy((1.0 - t) / 2.0);
    const double lambda = std::log2((1.0 - eps) / eps);
    const double l1 = std::log2(1.0 + t), l2 = std::log2(1.0 - t);
    return std::log2((cap + d.eta * t) / (cap - d.eta * t)) +
           (l1 - l2) / (l1 + l2) * lambda;
}

double g_condition_deriv(double t, Prob eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("g_condition_deriv: eps must be in (0, 1/2)");
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    if (!(t > 0.0 && t <= d.c_len + 1e-12))
        throw std::domain_error("g_condition_deriv: t outside (0, c_len]");
    const double tstar = g_domain_start(eps);
    if (t <= tstar) {
        std::ostringstream msg;
        msg << "g_condition_deriv: undefined at t <= t* = " << tstar;
        throw std::domain_error(msg.str());
    }
    const double cap = 1.0 - binary_entropy((1.0 - t) / 2.0);
    const double lambda = std::log2((1.0 - eps) / eps);
    const double one_t2 = 1.0 - t * t;
    const double big_l = std::log2(one_t2);
    const double quad = cap * cap - d.eta * d.eta * t * t;
    return (d.eta * big_l / quad +
            4.0 * cap / (one_t2 * big_l * big_l) * lambda) /
           std::numbers::ln2;
}

std::vector<PhasePoint> phase_scan(Prob eps_min, Prob eps_max, int points) {
    if (!(eps_min > 0.0 && eps_min < eps_max && eps_max <= 0.5))
        throw std::domain_error("phase_scan: need 0 < eps_min < eps_max <= 1/2");
    if (points < 2) throw std::domain_error("phase_scan: points must be >= 2");
    std::vector<PhasePoint> out(points);
    parallel_for(points, [&](long i) {
        const double e =
            eps_min + (eps_max - eps_min) * static_cast<double>(i) / (points - 1);
        const CiResult ub = gamma_ub_negative(e, Order::minus_infinity());
        PhasePoint p;
        p.epsilon = e;
        p.gamma_ub_minus_inf = ub.value;
        p.wyner = wyner_ci(e);
        p.gap = ub.value - p.wyner;
        p.r_star = ub.r_star.value_or(e);
        out[i] = p;
    });
    return out;
}

}  // namespace renyi_ci
