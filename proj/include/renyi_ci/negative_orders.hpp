// negative_orders.hpp — the negative-order upper bound Gamma_alpha^UB via the
// DSBS reduction sup_{r in [0,eps]} C(r, (1-1/alpha) D(r||eps)), the
// phase-condition checker omega(eps,s) <= 0, the threshold epsilon0 where the
// condition starts to hold, and a scan of the resulting gap over eps.
#pragma once

#include <vector>

#include "renyi_ci/dsbs_core.hpp"

namespace renyi_ci {

// Verdict of the phase condition at one eps: omega(eps,s) <= 0 for all
// s in [0, s_range_end], decided on a grid plus local refinement.
struct Condition1Report {
    Prob epsilon;
    bool holds;
    double s_range_end;  // (1-2 eps)/(1-eps)^2
    double worst_s;
    double worst_omega;
    int grid_points;
};

// One row of the negative-order phase scan.
struct PhasePoint {
    Prob epsilon;
    Bits gamma_ub_minus_inf;
    Bits wyner;
    Bits gap;     // gamma_ub_minus_inf - wyner
    Prob r_star;  // outer argmax witness
};

// omega(eps,s) = log2^3(1-s) + (d s^2/(1-s)) (((1-eps)/(1-2eps))^2 s - 1)
// with d = 4 eta^2 ((1-eps)/(1-2eps)) log2((1-eps)/eps).
// Domain: eps in (0,1/2), s in [0, (1-2 eps)/(1-eps)^2]; omega(eps,0) = 0.
double omega(Prob eps, double s);

// Decide the phase condition at eps on a uniform s-grid (grid >= 1000 points)
// with golden-section refinement around the grid maximum to 1e-10 in s.
// eps = 1/2 degenerates to the single point s = 0.
Condition1Report condition1_holds(Prob eps, int grid = 10000);

// Threshold where the phase-condition verdict flips from false to true.
// Pre-scans the bracket to confirm a single false->true crossing, then
// bisects the verdict to the requested tolerance in eps.
Prob epsilon0(double tolerance, Prob bracket_lo = 0.01, Prob bracket_hi = 0.10);

// Gamma_alpha^UB for alpha < 0 (alpha = -inf uses the exact factor 1):
// maximize r -> relaxed_ci(r, (1-1/alpha) D(r||eps)).value over r in [0,eps]
// by a 10^4-point grid plus golden-section refinement; the result carries the
// r* and inner-q witnesses.
CiResult gamma_ub_negative(Prob eps, const Order& order);

// Start of the natural domain of g_condition: the root t* of
// 1 - H((1-t)/2) = eta t in (0, c_len); below t* the first log in g has a
// nonpositive argument and g is undefined.
double g_domain_start(Prob eps);

// g(t) = log2[(A + eta t)/(A - eta t)]
//        + [log2(1+t) - log2(1-t)]/log2(1-t^2) * log2((1-eps)/eps),
// A = 1 - H((1-t)/2). Nonnegativity of g on its natural domain
// (t*, c_len] is the integrated form of the phase condition; g(c_len) = 0.
// Requests at or below t* throw with the domain start in the message.
double g_condition(double t, Prob eps);

// Derivative of g in bits:
//   eta log2(1-t^2) / ((A)^2 - eta^2 t^2)
// + 4 A / ((1-t^2) log2^2(1-t^2)) * log2((1-eps)/eps), all divided by ln 2
// (the quotient matches finite differences of g_condition).
double g_condition_deriv(double t, Prob eps);

// Gap scan over uniformly spaced eps in [eps_min, eps_max], parallel per eps,
// emitted in eps order.
std::vector<PhasePoint> phase_scan(Prob eps_min, Prob eps_max, int points);

}  // namespace renyi_ci
