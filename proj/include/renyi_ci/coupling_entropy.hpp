// coupling_entropy.hpp — maximal s-mixed entropy over 2x2 couplings with
// prescribed Bernoulli marginals: the closed-form stationary cell p*, an
// independent golden-section oracle, and the order-(1+s) upper-bound
// construction built from them.
#pragma once

#include <utility>

#include "renyi_ci/scalar_kernels.hpp"

namespace renyi_ci {

// A 2x2 coupling with row marginal gamma1 and column marginal gamma2 for
// symbol 0, parameterized by the free cell p = Q(0,0). Cells are
// (p, gamma1-p, gamma2-p, 1+p-gamma1-gamma2).
struct Coupling2x2 {
    Prob p;
    Prob gamma1;
    Prob gamma2;

    double feasible_lo() const { return std::max(0.0, gamma1 + gamma2 - 1.0); }
    double feasible_hi() const { return std::min(gamma1, gamma2); }
    bool feasible(double tol = kCellTol) const {
        return p >= feasible_lo() - tol && p <= feasible_hi() + tol;
    }
};

// Four-cell coupling entropy plus the s-weighted cross-entropy against
// DSBS(eps):
//   f = H4(p, g1-p, g2-p, 1+p-g1-g2)
//       - s (1+2p-g1-g2) log((1-eps)/2) - s (g1+g2-2p) log(eps/2).
Bits f_objective(const Coupling2x2& c, Prob eps, double s);

// The p-dependent core of f for a given kappa = ((1-eps)/eps)^{2s}:
//   H4(cells) - p log2(kappa).
// f and this core share their argmax; the core lets the oracle probe kappa
// directly (including kappa -> 1 and very large kappa) without an (eps, s)
// counterpart.
Bits f_core(double p, Prob gamma1, Prob gamma2, double log2_kappa);

// Stationary cell of p -> f. Computed from the stationarity quadratic
//   (kappa-1) p^2 + beta p - g1 g2 = 0,  beta = (kappa-1)(1-g1-g2) + 1,
// in the rationalized form p* = 2 g1 g2 / (beta + sqrt(beta^2 + 4(kappa-1) g1 g2)),
// which is exact at kappa = 1 (p* = g1 g2) and stays inside the feasible
// interval on the whole square, including gamma1 + gamma2 > 1.
Prob p_star_general(Prob gamma1, Prob gamma2, double kappa);

// Same, taking kappa - 1 (e.g. from expm1) for accuracy near kappa = 1.
Prob p_star_general_km1(Prob gamma1, Prob gamma2, double kappa_minus_1);

// log2 of the stationarity ratio (g1-p)(g2-p) / (p (1+p-g1-g2)) minus
// log2(kappa); zero at the stationary cell. Diagnostic for tests.
double stationarity_residual(double p, Prob gamma1, Prob gamma2, double log2_kappa);

// Golden-section maximization of the kappa-core over the feasible interval,
// evaluated in extended precision so the comparison floor for an interior
// maximum sits below 3e-10; logically independent of the closed form it
// validates. Returns (argmax, core value).
std::pair<Prob, Bits> coupling_oracle_kappa(Prob gamma1, Prob gamma2, double kappa);

// Convenience overload in (eps, s) parameterization; returns (argmax, full
// f_objective value at the argmax).
std::pair<Prob, Bits> coupling_oracle(Prob gamma1, Prob gamma2, Prob eps, double s);

// Order-(1+s) upper-bound construction: splitting off a uniform common bit
// leaves symmetric Bernoulli(a) conditionals, and the inner maximum over the
// coupling is attained at p*:
//   -((1+s)/s) 2H(a) + (1/s) f(a, a, p*).
Bits gamma_ub_super1(Prob eps, double s);

}  // namespace renyi_ci
