// coupling_entropy.cpp — closed-form stationary coupling cell and its
// independent 1-D maximization oracle.

#include "renyi_ci/coupling_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace renyi_ci {

Bits f_objective(const Coupling2x2& c, Prob eps, double s) {
    require_probability(c.gamma1, "f_objective: gamma1");
    require_probability(c.gamma2, "f_objective: gamma2");
    if (!(eps > 0.0 && eps <= 0.5))
        throw std::domain_error("f_objective: eps must be in (0, 1/2]");
    if (!(s > 0.0)) throw std::domain_error("f_objective: s must be positive");
    if (!c.feasible())
        throw std::domain_error("f_objective: infeasible coupling cell p");
    double h4 = entropy4(c.p, c.gamma1 - c.p, c.gamma2 - c.p,
                         1.0 + c.p - c.gamma1 - c.gamma2);
    return h4 - s * (1.0 + 2.0 * c.p - c.gamma1 - c.gamma2) * std::log2((1.0 - eps) / 2.0)
              - s * (c.gamma1 + c.gamma2 - 2.0 * c.p) * std::log2(eps / 2.0);
}

Bits f_core(double p, Prob gamma1, Prob gamma2, double log2_kappa) {
    return entropy4(p, gamma1 - p, gamma2 - p, 1.0 + p - gamma1 - gamma2) - p * log2_kappa;
}

Prob p_star_general_km1(Prob gamma1, Prob gamma2, double km1) {
    require_probability(gamma1, "p_star_general: gamma1");
    require_probability(gamma2, "p_star_general: gamma2");
    if (!(km1 >= 0.0)) throw std::domain_error("p_star_general: kappa must be >= 1");
    double lo = std::max(0.0, gamma1 + gamma2 - 1.0);
    double hi = std::min(gamma1, gamma2);
    if (std::isinf(km1)) return lo;  // log-kappa penalty drives p to the lower end
    double prod = gamma1 * gamma2;
    double m = 1.0 - gamma1 - gamma2;
    double beta = km1 * m + 1.0;
    // beta + sqrt(beta^2 + 4 km1 prod) > 0 on the whole domain (beta <= 0
    // forces prod > 0 and km1 > 0), so the rationalized root is safe.
    double root;
    if (beta >= 0.0) {
        // avoid beta^2 overflow for huge kappa: beta*sqrt(1+u), u = 4 prod km1 / beta^2
        double u = (beta > 0.0) ? (4.0 * prod / beta) * (km1 / beta) : 0.0;
        root = beta > 0.0 ? beta * std::sqrt(1.0 + u) : 2.0 * std::sqrt(prod * km1);
        double denom = beta + root;
        if (denom == 0.0) return std::clamp(lo, lo, hi);
        double p = 2.0 * prod / denom;
        return std::clamp(p, lo, hi);
    }
    double u = (4.0 * prod / (-beta)) * (km1 / (-beta));
    root = -beta * std::sqrt(1.0 + u);
    double p = (root - beta) / (2.0 * km1);
    return std::clamp(p, lo, hi);
}

Prob p_star_general(Prob gamma1, Prob gamma2, double kappa) {
    return p_star_general_km1(gamma1, gamma2, kappa - 1.0);
}

double stationarity_residual(double p, Prob gamma1, Prob gamma2, double log2_kappa) {
    double num = (gamma1 - p) * (gamma2 - p);
    double den = p * (1.0 + p - gamma1 - gamma2);
    if (num <= 0.0 || den <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::log2(num / den) - log2_kappa;
}

namespace {

// Extended-precision core for the oracle's golden search. A comparison-based
// maximizer can localize an interior maximum only to sqrt(2 eps_f / |f''|);
// with double evaluation that floor sits near 4e-9 on flat cells, above the
// 1e-9 agreement the oracle is meant to certify. 80-bit evaluation pushes it
// below 3e-10.
long double xlog2x_ld(long double x) { return x > 0.0L ? x * std::log2(x) : 0.0L; }

long double f_core_ld(long double p, long double g1, long double g2, long double l2k) {
    return -(xlog2x_ld(p) + xlog2x_ld(g1 - p) + xlog2x_ld(g2 - p) +
             xlog2x_ld(1.0L + p - g1 - g2)) -
           p * l2k;
}

}  // namespace

std::pair<Prob, Bits> coupling_oracle_kappa(Prob gamma1, Prob gamma2, double kappa) {
    require_probability(gamma1, "coupling_oracle: gamma1");
    require_probability(gamma2, "coupling_oracle: gamma2");
    if (!(kappa >= 1.0)) throw std::domain_error("coupling_oracle: kappa must be >= 1");
    double lo = std::max(0.0, gamma1 + gamma2 - 1.0);
    double hi = std::min(gamma1, gamma2);
    double l2k = std::log2(kappa);
    if (hi - lo < 1e-14) {  // singleton feasible interval
        double p = 0.5 * (lo + hi);
        return {p, f_core(p, gamma1, gamma2, l2k)};
    }
    const long double inv_phi = 0.61803398874989484820L;
    const long double g1 = gamma1, g2 = gamma2, l2kl = std::log2(static_cast<long double>(kappa));
    long double a = lo, b = hi;
    long double x1 = b - inv_phi * (b - a);
    long double x2 = a + inv_phi * (b - a);
    long double f1 = f_core_ld(x1, g1, g2, l2kl);
    long double f2 = f_core_ld(x2, g1, g2, l2kl);
    while (b - a > 1e-13L) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f_core_ld(x2, g1, g2, l2kl);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f_core_ld(x1, g1, g2, l2kl);
        }
    }
    double p = static_cast<double>(0.5L * (a + b));
    return {p, f_core(p, gamma1, gamma2, l2k)};
}

std::pair<Prob, Bits> coupling_oracle(Prob gamma1, Prob gamma2, Prob eps, double s) {
    if (!(eps > 0.0 && eps < 1.0) || !(s > 0.0))
        throw std::domain_error("coupling_oracle: need eps in (0,1), s > 0");
    double kappa = std::exp2(2.0 * s * std::log2((1.0 - eps) / eps));
    auto [p, core] = coupling_oracle_kappa(gamma1, gamma2, kappa);
    (void)core;
    return {p, f_objective({p, gamma1, gamma2}, eps, s)};
}

Bits gamma_ub_super1(Prob eps, double s) {
    if (!(eps > 0.0 && eps < 0.5)) {
        if (eps == 0.5) return 0.0;  // degenerate source
        throw std::domain_error("gamma_ub_super1: eps must be in (0, 1/2]");
    }
    if (!(s > 0.0)) throw std::domain_error("gamma_ub_super1: s must be positive");
    double a = eps / (1.0 + std::sqrt(1.0 - 2.0 * eps));
    double lambda = std::log2((1.0 - eps) / eps);
    double km1 = std::expm1(2.0 * s * lambda * std::numbers::ln2);
    Prob p = p_star_general_km1(a, a, km1);
    Bits inner = f_objective({p, a, a}, eps, s);
    return -((1.0 + s) / s) * 2.0 * binary_entropy(a) + inner / s;
}

}  // namespace renyi_ci
