// dsbs_core.hpp — closed-form Rényi common information of the doubly
// symmetric binary source DSBS(eps) for orders alpha in [0, +inf], plus the
// chi_s pathway that certifies the order-(1+s) value.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "renyi_ci/scalar_kernels.hpp"

namespace renyi_ci {

// Derived constants of DSBS(eps): X = W xor U, Y = W xor V with U,V ~ Bern(a)
// and eps = 2a(1-a); b is the conditional disagreement bias a^2/(a^2+(1-a)^2),
// c_len = 1-2b, and eta the Wyner value (1-eps)(1-H(b)) = 1+H(eps)-2H(a).
struct DsbsParams {
    Prob epsilon;
    Prob a;
    Prob b;
    double c_len;
    Bits eta;

    static DsbsParams from_epsilon(Prob eps);
};

// Extended-real order tag for Gamma_alpha.
struct Order {
    enum class Tag { Zero, UnitInterval, Super1, PlusInfinity, NegativeFinite, MinusInfinity };
    Tag tag;
    double value;  // finite alpha where applicable; +/-inf for the infinite tags

    // Classify a (possibly infinite) alpha.
    static Order from_alpha(double alpha);
    static Order minus_infinity();
    static Order plus_infinity();
    std::string describe() const;
};

// A computed common-information value with its optimizer witness where one
// exists (p* for orders above 1; (q, r*) for the negative-order upper bound).
struct CiResult {
    Bits value = 0.0;
    Order order{Order::Tag::Zero, 0.0};
    Prob epsilon = 0.0;
    std::optional<double> p_star;  // orders in (1, inf)
    std::optional<double> q;       // negative orders: inner root
    std::optional<double> r_star;  // negative orders: outer argmax
};

// Thrown when a negative-order value is requested where only the upper bound
// is certified (Condition 1 fails), and by CLI-level domain checks.
struct PhaseUncertainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Wyner common information 1 + H(eps) - 2H(a); the value for all orders in
// (0, 1]. Domain eps in [0, 1/2].
Bits wyner_ci(Prob eps);

// Exact (order-infinity) common information
// 1 - (1-2a) log(1-eps) - 2a log(eps) - 2H(a); eps = 0 returns the continuous
// limit 1. Domain eps in [0, 1/2].
Bits exact_ci(Prob eps);

// kappa = ((1-eps)/eps)^{2s}. Overflows to +inf for large s*log((1-eps)/eps);
// eps = 0 has no finite kappa and throws (callers use limits).
double kappa(Prob eps, double s);

// Stationary coupling cell for the order-(1+s) closed form (gamma1 = gamma2 =
// a case of the general 2x2 stationary cell), in [max{0, 2a-1}, a^2].
// Limits: s -> 0 gives a^2, s -> inf gives max{0, 2a-1}.
Prob p_star(Prob eps, double s);

// Gamma_alpha for any order tag. Orders in [0, inf] use the closed forms;
// negative orders require the phase condition to hold (then the value is the
// Wyner value) and otherwise throw PhaseUncertainError directing the caller
// to the upper-bound computation.
CiResult renyi_ci(Prob eps, const Order& order);

// chi_s(t) for t in [0, 1/4]: the single-variable convex certificate whose
// value at t = (1-2 eps)/4 equals Gamma_{1+s}. The inner cell is
// c = (1 + 4 kappa t) / (2 (sqrt(kappa (1 + 4 (kappa-1) t)) + 1)), exact and
// regular at kappa = 1 (c = 1/4 + t).
Bits chi_s(double t, Prob eps, double s);

}  // namespace renyi_ci
