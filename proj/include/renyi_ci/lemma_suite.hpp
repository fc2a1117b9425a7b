// lemma_suite.hpp — grid-based numerical verification of the supporting
// inequalities behind the closed forms: entropy splitting for 2x2 couplings,
// convexity/monotonicity and derivative formulas of the chi kernel, the
// relative-entropy ratio monotonicity, and the implication chain that reduces
// the phase condition to a scalar inequality.
#pragma once

#include <string>
#include <vector>

#include "renyi_ci/scalar_kernels.hpp"

namespace renyi_ci {

// Outcome of one verification sweep. Suites with a single tolerance class
// report the raw worst violation against tolerance_used; suites mixing
// tolerance classes (sign slack vs derivative agreement) normalize each
// violation by its own tolerance and report the worst ratio with
// tolerance_used = 1. Either way: pass iff worst_violation <= tolerance_used.
struct VerificationReport {
    std::string suite;
    bool pass = true;
    double worst_violation = 0.0;
    std::vector<double> worst_location;  // parameter tuple of the worst point
    long points_checked = 0;
    double tolerance_used = 0.0;
    long skipped_points = 0;  // domain-edge points with no analytic limit
};

// Entropy-splitting defect for the coupling family with symmetric marginal
// split gamma1 = gamma+t, gamma2 = gamma-t and cell split p1 = p+s, p2 = p-s:
//   phi(s,t) = H4(p, gamma1-p, gamma2-p, 1+p-gamma1-gamma2)
//            - 1/2 [H4(p1, gamma1-p1, gamma1-p1, 1+p1-2 gamma1)
//                 + H4(p2, gamma2-p2, gamma2-p2, 1+p2-2 gamma2)].
// Requires max{0, 2 gamma - 1} <= p <= gamma^2 and (s,t) in the region where
// every cell above is nonnegative and t^2 <= gamma^2 - p; out-of-region
// points are rejected naming the violated constraint.
double phi_split(double p, double gamma, double s, double t);

// chi kernel chi(t,kappa) (bits): the s-free core of the convex certificate,
//   -2H(1/2+sqrt(t)) - (c+sqrt t)log(c+sqrt t) - 2(1/2-c)log(1/2-c)
//   - (c-sqrt t)log(c-sqrt t) - c log2(kappa),
// with c = (1+4 kappa t) / (2 (sqrt(kappa(1+4(kappa-1)t)) + 1)).
// Identically 0 at kappa = 1.
double chi_core(double t, double kappa);

// Analytic t-derivative of chi_core (bits):
//   (1/(2 sqrt t)) log2[ ((1/2+sqrt t)/(1/2-sqrt t))^2 / ((c+sqrt t)/(c-sqrt t)) ].
double chi_core_dt(double t, double kappa);

// Analytic second t-derivative of chi_core (bits): the bracketed form
// (1/(4 t^{3/2})) [ -(4 sqrt t (4(k-1)t - sqrt(4(k-1)k t + k) + 1))
//                    / ((4t-1)(4(k-1)t+1)) / ln 2
//                   + log2(...) - 2 log2((1/2+sqrt t)/(1/2-sqrt t)) ].
// Undefined at t = 1/4 (the 4t-1 denominator).
double chi_core_dt2(double t, double kappa);

// Analytic kappa-derivative of chi_core_dt2 (bits):
//   2(k-1)k / (4(k-1)k t + k)^{3/2} / ln 2.
double chi_core_dt2_dkappa(double t, double kappa);

// Sweep of both splitting statements (independence bound and phi >= 0) plus
// the (s,t) <-> (-s,-t) substitution symmetry, over admissible (p, gamma)
// grids of the given per-axis density and the full region grid in (s,t),
// including the degenerate slices gamma = 1/2 and p = gamma - 1/4.
// Single tolerance class: 1e-10 slack.
VerificationReport verify_entropy_splitting(int grid_density);

// Checks at face value, on kappa geometric in [1+1e-6, 64], s geometric in
// [0.1, 10], t uniform in (0, 1/4]:
//   (i)  convexity: second central t-differences of chi_core and of the
//        kappa-explicit chi_s >= -1e-8;
//   (ii) monotonicity: first t-differences of both >= -1e-8;
//   (iii) chi_core_dt vs central differences of chi_core, and chi_core_dt2 vs
//        central differences of chi_core_dt, to relative 1e-5 (t = 1/4 is
//        skipped: the second-derivative formula has a pole there);
//   (iv) chi_core_dt2_dkappa >= -1e-8, cross-checked against kappa-finite
//        differences of chi_core_dt2.
// Mixed tolerance classes: normalized report. Item (ii) is expected to fail:
// the kernel is genuinely decreasing near t = 0 whenever sqrt(kappa) exceeds
// 2s+1 (see verify_chi_corrected for the repaired statement).
VerificationReport verify_chi_properties(int kappa_grid, int s_grid, int t_grid);

// The corrected monotonicity facts that the main argument actually needs:
//   (a) lim_{t->0} chi_core_dt = 2(1-sqrt(kappa))/ln 2 (not 0);
//   (b) convexity via analytic chi_core_dt2 >= -1e-8;
//   (c) chi_core_dt2_dkappa >= -1e-8;
//   (d) with kappa coupled to (eps,s) as ((1-eps)/eps)^{2s}, the full chi_s
//       is nondecreasing on [(1-2 eps)/4, 1/4] — the interval on which the
//       lower-bound argument evaluates it.
// Normalized report; expected to pass.
VerificationReport verify_chi_corrected(int kappa_grid, int s_grid, int t_grid);

// First differences of D((1-t)/2 || 1/2)/t^2 >= -1e-10 on (0,1], plus
// psi(t) = -(2-t)log2(1-t) - (t+2)log2(1+t) >= -1e-10 and psi(0) = 0.
// Single tolerance class: 1e-10.
VerificationReport verify_phi_ratio_monotone(int grid);

// Implication chain at one eps: [omega <= 0 on its s-range] => [the scalar
// inequality eta(1-t^2)log2^3(1-t^2) + 4A(A^2-eta^2 t^2)log2((1-eps)/eps) <= 0
// on [0, c_len]] => [g' <= 0 on (t*, c_len]] => [g >= 0 on (t*, c_len]].
// Reports broken only when a link's premise holds and its conclusion fails
// beyond 1e-8; a false first premise is reported as "premise-false" in the
// suite name and passes. g' is additionally cross-checked against central
// differences of g to relative 1e-5.
VerificationReport verify_condition_chain(Prob eps, int grid);

}  // namespace renyi_ci
