// dsbs_core.cpp — closed-form Rényi common information of DSBS(eps).
#include "renyi_ci/dsbs_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "renyi_ci/coupling_entropy.hpp"
#include "renyi_ci/negative_orders.hpp"
#include "renyi_ci/relaxed_wyner.hpp"

namespace renyi_ci {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// log2((1-eps)/eps); +inf at eps = 0.
double log2_odds(Prob eps) { return std::log2((1.0 - eps) / eps); }

// kappa - 1 without overflow for moderate s, +inf when kappa overflows.
double kappa_minus_one(Prob eps, double s) {
    return std::expm1(2.0 * s * log2_odds(eps) * std::numbers::ln2);
}
}  // namespace

DsbsParams DsbsParams::from_epsilon(Prob eps) {
    require_in(eps, 0.0, 0.5, "eps");
    const double u = std::sqrt(1.0 - 2.0 * eps);
    DsbsParams d;
    d.epsilon = eps;
    d.a = eps / (1.0 + u);  // (1 - sqrt(1-2 eps))/2, rationalized
    const double aa = d.a * d.a;
    const double cc = (1.0 - d.a) * (1.0 - d.a);
    d.b = aa / (aa + cc);
    d.c_len = u / (1.0 - eps);  // 1 - 2b, rationalized
    d.eta = (1.0 - eps) * (1.0 - binary_entropy(d.b));
    return d;
}

Order Order::from_alpha(double alpha) {
    if (std::isnan(alpha)) throw std::domain_error("order: alpha is NaN");
    if (alpha == 0.0) return {Tag::Zero, 0.0};
    if (alpha == kInf) return {Tag::PlusInfinity, kInf};
    if (alpha == -kInf) return {Tag::MinusInfinity, -kInf};
    if (alpha > 1.0) return {Tag::Super1, alpha};
    if (alpha > 0.0) return {Tag::UnitInterval, alpha};
    return {Tag::NegativeFinite, alpha};
}

Order Order::minus_infinity() { return {Tag::MinusInfinity, -kInf}; }
Order Order::plus_infinity() { return {Tag::PlusInfinity, kInf}; }

std::string Order::describe() const {
    switch (tag) {
        case Tag::Zero: return "zero";
        case Tag::UnitInterval: return "(0,1]";
        case Tag::Super1: return "(1,inf)";
        case Tag::PlusInfinity: return "+inf";
        case Tag::NegativeFinite: return "negative-finite";
        case Tag::MinusInfinity: return "-inf";
    }
    return "?";
}

Bits wyner_ci(Prob eps) {
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    return 1.0 + binary_entropy(eps) - 2.0 * binary_entropy(d.a);
}

Bits exact_ci(Prob eps) {
    require_in(eps, 0.0, 0.5, "eps");
    if (eps == 0.0) return 1.0;  // continuous limit
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    return 1.0 - (1.0 - 2.0 * d.a) * std::log2(1.0 - eps) -
           2.0 * d.a * std::log2(eps) - 2.0 * binary_entropy(d.a);
}

double kappa(Prob eps, double s) {
    require_in(eps, 0.0, 0.5, "eps");
    if (eps == 0.0)
        throw std::domain_error(
            "kappa: infinite at eps = 0; use the limiting forms");
    if (!(s >= 0.0)) throw std::domain_error("kappa: s must be >= 0");
    return std::exp2(2.0 * s * log2_odds(eps));
}

Prob p_star(Prob eps, double s) {
    require_in(eps, 0.0, 0.5, "eps");
    if (eps == 0.0) throw std::domain_error("p_star: eps must be > 0");
    if (!(s > 0.0)) throw std::domain_error("p_star: s must be > 0");
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    return p_star_general_km1(d.a, d.a, kappa_minus_one(eps, s));
}

CiResult renyi_ci(Prob eps, const Order& order) {
    require_in(eps, 0.0, 0.5, "eps");
    CiResult res;
    res.order = order;
    res.epsilon = eps;
    switch (order.tag) {
        case Order::Tag::Zero:
            res.value = 0.0;
            return res;
        case Order::Tag::UnitInterval:
            res.value = wyner_ci(eps);
            return res;
        case Order::Tag::PlusInfinity:
            res.value = exact_ci(eps);
            return res;
        case Order::Tag::Super1: {
            if (eps == 0.0) {  // analytic limit: fully correlated bits
                res.value = 1.0;
                res.p_star = 0.0;
                return res;
            }
            const double s = order.value - 1.0;
            res.p_star = p_star(eps, s);
            res.value = gamma_ub_super1(eps, s);
            return res;
        }
        case Order::Tag::NegativeFinite:
        case Order::Tag::MinusInfinity: {
            if (eps == 0.0) {
                res.value = 1.0;
                return res;
            }
            const Condition1Report cond = condition1_holds(eps);
            if (!cond.holds)
                throw PhaseUncertainError(
                    "renyi_ci: the negative-order value at this eps is phase-"
                    "uncertain (the sufficient condition fails); only the "
                    "upper bound is certified — use gamma_ub_negative");
            res.value = wyner_ci(eps);
            res.r_star = eps;  // the outer supremum sits at r = eps here
            res.q = q0(eps);
            return res;
        }
    }
    throw std::logic_error("renyi_ci: unhandled order tag");
}

Bits chi_s(double t, Prob eps, double s) {
    require_in(t, 0.0, 0.25, "t");
    if (!(eps > 0.0 && eps <= 0.5)) throw std::domain_error("chi_s: eps must be in (0, 1/2]");
    if (!(s > 0.0)) throw std::domain_error("chi_s: s must be > 0");

    const double rt = std::sqrt(t);
    const double log2_kap = 2.0 * s * log2_odds(eps);
    const double km1 = kappa_minus_one(eps, s);
    double c;
    if (std::isinf(km1)) {
        c = rt;  // kappa -> inf limit of the inner cell
    } else {
        const double kap = km1 + 1.0;
        const double x = kap * (1.0 + 4.0 * km1 * t);
        // (sqrt(kappa + 4 kappa (kappa-1) t) - 1) / (2 (kappa-1)),
        // rationalized so kappa = 1 gives exactly 1/4 + t.
        c = (1.0 + 4.0 * kap * t) / (2.0 * (std::sqrt(x) + 1.0));
    }
    const Bits h2 = binary_entropy(0.5 - rt);
    const Bits bracket = -xlogx(c + rt) - 2.0 * xlogx(0.5 - c) - xlogx(c - rt) -
                         c * log2_kap - s * std::log2(eps / 2.0);
    return -((1.0 + s) / s) * 2.0 * h2 + bracket / s;
}

}  // namespace renyi_ci
