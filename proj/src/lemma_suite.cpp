// lemma_suite.cpp — grid verification of the supporting inequalities.
#include "renyi_ci/lemma_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "renyi_ci/dsbs_core.hpp"
#include "renyi_ci/negative_orders.hpp"
#include "renyi_ci/solve.hpp"

namespace renyi_ci {

namespace {

constexpr double kSignTol = 1e-8;    // slack for proven sign constraints
constexpr double kExactTol = 1e-10;  // slack for proven inequalities (no FD)
constexpr double kFdTol = 1e-5;      // relative derivative agreement

// Running worst-violation accumulator; locations are parameter tuples.
struct Tracker {
    double worst = 0.0;
    std::vector<double> where;
    long checked = 0;
    void note(double violation, std::initializer_list<double> loc) {
        ++checked;
        if (violation > worst) {
            worst = violation;
            where.assign(loc);
        }
    }
};

VerificationReport finish(std::string name, const Tracker& trk, double tol,
                          long skipped = 0) {
    VerificationReport rep;
    rep.suite = std::move(name);
    rep.worst_violation = trk.worst;
    rep.worst_location = trk.where;
    rep.points_checked = trk.checked;
    rep.tolerance_used = tol;
    rep.skipped_points = skipped;
    rep.pass = trk.worst <= tol;
    return rep;
}

double cube(double x) { return x * x * x; }

// phi without the region re-checks, for sweep interiors.
double phi_core(double p, double gamma, double s, double t) {
    const double g1 = gamma + t, g2 = gamma - t;
    const double p1 = p + s, p2 = p - s;
    return entropy4(p, g1 - p, g2 - p, 1.0 + p - g1 - g2) -
           0.5 * (entropy4(p1, g1 - p1, g1 - p1, 1.0 + p1 - 2.0 * g1) +
                  entropy4(p2, g2 - p2, g2 - p2, 1.0 + p2 - 2.0 * g2));
}

bool in_region(double p, double gamma, double s, double t) {
    constexpr double tol = 1e-14;
    const double g1 = gamma + t, g2 = gamma - t;
    const double p1 = p + s, p2 = p - s;
    return std::abs(s) <= p + tol && std::abs(t) <= gamma + tol &&
           p1 >= std::max(0.0, 2.0 * g1 - 1.0) - tol && p1 <= g1 + tol &&
           p2 >= std::max(0.0, 2.0 * g2 - 1.0) - tol && p2 <= g2 + tol &&
           t * t <= gamma * gamma - p + tol;
}

// Uniform grid of n points on [lo, hi]; a degenerate span yields {lo}.
std::vector<double> linspace(double lo, double hi, int n) {
    if (hi - lo < 1e-15 || n <= 1) return {lo};
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

std::vector<double> geomspace(double lo, double hi, int n) {
    if (n <= 1) return {lo};
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return out;
}

// Richardson-extrapolated central difference of f at x.
template <typename F>
double central_deriv(F&& f, double x, double h) {
    const double e1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double e2 = (f(x + h / 2) - f(x - h / 2)) / h;
    return (4.0 * e2 - e1) / 3.0;
}

// Sweep one admissible (p, gamma) against all region grid points.
void splitting_point(double p, double gamma, int density, Tracker& trk) {
    const int n = density % 2 ? density : density + 1;  // keep 0 on the grids
    const auto s_vals = linspace(-p, p, n);
    const auto t_vals = linspace(-gamma, gamma, n);
    for (double s : s_vals) {
        for (double t : t_vals) {
            if (!in_region(p, gamma, s, t)) continue;
            const double phi = phi_core(p, gamma, s, t);
            const double phi_swap = phi_core(p, gamma, -s, -t);
            const double h4 = entropy4(p, gamma + t - p, gamma - t - p,
                                       1.0 + p - 2.0 * gamma);
            const double indep =
                binary_entropy(gamma + t) + binary_entropy(gamma - t);
            trk.note(-phi, {p, gamma, s, t});
            trk.note(h4 - indep, {p, gamma, s, t});
            trk.note(std::abs(phi - phi_swap), {p, gamma, s, t});
        }
    }
}

}  // namespace

double phi_split(double p, double gamma, double s, double t) {
    constexpr double tol = 1e-12;
    auto reject = [](const char* what) {
        throw std::domain_error(std::string("phi_split: ") + what);
    };
    if (!(p >= -tol && p <= 1.0 + tol && gamma >= -tol && gamma <= 1.0 + tol))
        reject("p and gamma must lie in [0,1]");
    if (p < std::max(0.0, 2.0 * gamma - 1.0) - tol) reject("p < max{0, 2 gamma - 1}");
    if (p > gamma * gamma + tol) reject("p > gamma^2");
    if (std::abs(s) > p + tol) reject("|s| > p");
    if (std::abs(t) > gamma + tol) reject("|t| > gamma");
    if (p + s < std::max(0.0, 2.0 * (gamma + t) - 1.0) - tol)
        reject("p+s < max{0, 2(gamma+t) - 1}");
    if (p + s > gamma + t + tol) reject("p+s > gamma+t");
    if (p - s < std::max(0.0, 2.0 * (gamma - t) - 1.0) - tol)
        reject("p-s < max{0, 2(gamma-t) - 1}");
    if (p - s > gamma - t + tol) reject("p-s > gamma-t");
    if (t * t > gamma * gamma - p + tol) reject("t^2 > gamma^2 - p");
    return phi_core(p, gamma, s, t);
}

double chi_core(double t, double kappa) {
    require_in(t, 0.0, 0.25, "t");
    if (!(kappa >= 1.0)) throw std::domain_error("chi_core: kappa must be >= 1");
    const double rt = std::sqrt(t);
    const double x = kappa * (1.0 + 4.0 * (kappa - 1.0) * t);
    const double c = (1.0 + 4.0 * kappa * t) / (2.0 * (std::sqrt(x) + 1.0));
    return -2.0 * binary_entropy(0.5 + rt) - xlogx(c + rt) -
           2.0 * xlogx(0.5 - c) - xlogx(c - rt) - c * std::log2(kappa);
}

double chi_core_dt(double t, double kappa) {
    if (!(t > 0.0 && t < 0.25))
        throw std::domain_error("chi_core_dt: t must be in (0, 1/4)");
    if (!(kappa >= 1.0)) throw std::domain_error("chi_core_dt: kappa must be >= 1");
    const double rt = std::sqrt(t);
    const double x = kappa * (1.0 + 4.0 * (kappa - 1.0) * t);
    const double c = (1.0 + 4.0 * kappa * t) / (2.0 * (std::sqrt(x) + 1.0));
    return (2.0 * (std::log2(0.5 + rt) - std::log2(0.5 - rt)) -
            (std::log2(c + rt) - std::log2(c - rt))) /
           (2.0 * rt);
}

double chi_core_dt2(double t, double kappa) {
    if (!(t > 0.0 && t < 0.25))
        throw std::domain_error("chi_core_dt2: t must be in (0, 1/4)");
    if (!(kappa >= 1.0)) throw std::domain_error("chi_core_dt2: kappa must be >= 1");
    const double km1 = kappa - 1.0;
    if (km1 < 1e-14) return 0.0;  // the kernel vanishes identically
    const double rt = std::sqrt(t);
    const double x0 = 4.0 * km1 * kappa * t + kappa;
    const double sx = std::sqrt(x0);
    // The raw form pairs sqrt(x0)-1 against 2(kappa-1)sqrt(t), whose
    // difference is second order in kappa-1; both log arguments and the
    // rational numerator are rewritten through conjugates so no catastrophic
    // cancellation remains near kappa = 1. Uses the exact factorization
    // (4 kappa t + 1 - 2 sqrt(t))^2 - 4 t x0 = (1 + 4 kappa t)(1 - 2 sqrt(t))^2.
    const double fourkt = 4.0 * kappa * t;
    const double z = fourkt + 1.0 - 2.0 * rt;
    const double logterm =
        std::log2((fourkt + 1.0 + 2.0 * rt * (sx + 1.0)) * (z + 2.0 * rt * sx) /
                  ((1.0 + fourkt) * (1.0 - 2.0 * rt) * (1.0 - 2.0 * rt)));
    // 4(kappa-1)t - sqrt(x0) + 1 = (kappa-1)(4 t sx - 4(kappa-1)t - 1)/(sx+1)
    const double rational = -4.0 * rt * km1 *
                            (4.0 * t * sx - 4.0 * km1 * t - 1.0) / (sx + 1.0) /
                            ((4.0 * t - 1.0) * (4.0 * km1 * t + 1.0)) /
                            std::numbers::ln2;
    const double last = 2.0 * std::log2((0.5 + rt) / (0.5 - rt));
    return (rational + logterm - last) / (4.0 * t * rt);
}

double chi_core_dt2_dkappa(double t, double kappa) {
    require_in(t, 0.0, 0.25, "t");
    if (!(kappa >= 1.0))
        throw std::domain_error("chi_core_dt2_dkappa: kappa must be >= 1");
    const double km1 = kappa - 1.0;
    const double x0 = 4.0 * km1 * kappa * t + kappa;
    return 2.0 * km1 * kappa / (x0 * std::sqrt(x0)) / std::numbers::ln2;
}

VerificationReport verify_entropy_splitting(int grid_density) {
    if (grid_density < 50)
        throw std::domain_error("verify_entropy_splitting: density must be >= 50");
    Tracker trk;
    // Main sweep: gamma in [0,1], p across [max{0, 2 gamma - 1}, gamma^2].
    for (double gamma : linspace(0.0, 1.0, grid_density)) {
        const double plo = std::max(0.0, 2.0 * gamma - 1.0);
        for (double p : linspace(plo, gamma * gamma, grid_density))
            splitting_point(p, gamma, grid_density, trk);
    }
    // Degenerate slices called out explicitly: gamma = 1/2, and the tangency
    // curve p = gamma - 1/4 (which meets p = gamma^2 at gamma = 1/2).
    for (double p : linspace(0.0, 0.25, grid_density))
        splitting_point(p, 0.5, grid_density, trk);
    for (double gamma : linspace(0.25, 0.75, grid_density)) {
        const double p = gamma - 0.25;
        if (p >= std::max(0.0, 2.0 * gamma - 1.0) && p <= gamma * gamma)
            splitting_point(p, gamma, grid_density, trk);
    }
    return finish("entropy_splitting", trk, kExactTol);
}

VerificationReport verify_chi_properties(int kappa_grid, int s_grid, int t_grid) {
    if (kappa_grid < 2 || s_grid < 2 || t_grid < 8)
        throw std::domain_error("verify_chi_properties: grids too small");
    const auto kappas = geomspace(1.0 + 1e-6, 64.0, kappa_grid);
    const auto ss = geomspace(0.1, 10.0, s_grid);
    std::vector<double> ts(t_grid);
    for (int k = 0; k < t_grid; ++k) ts[k] = 0.25 * (k + 1) / t_grid;

    Tracker trk;
    long skipped = 0;
    for (double kap : kappas) {
        // (i)/(ii) on the kernel.
        std::vector<double> vals(ts.size());
        for (std::size_t k = 0; k < ts.size(); ++k) vals[k] = chi_core(ts[k], kap);
        for (std::size_t k = 0; k + 1 < vals.size(); ++k)
            trk.note((vals[k] - vals[k + 1]) / kSignTol, {kap, ts[k]});
        for (std::size_t k = 1; k + 1 < vals.size(); ++k)
            trk.note((2.0 * vals[k] - vals[k - 1] - vals[k + 1]) / kSignTol,
                     {kap, ts[k]});
        // (i)/(ii) on the kappa-explicit chi_s.
        for (double s : ss) {
            std::vector<double> vs(ts.size());
            for (std::size_t k = 0; k < ts.size(); ++k)
                vs[k] = -((1.0 + s) / s) * 2.0 *
                            binary_entropy(0.5 - std::sqrt(ts[k])) +
                        vals[k] / s;
            for (std::size_t k = 0; k + 1 < vs.size(); ++k)
                trk.note((vs[k] - vs[k + 1]) / kSignTol, {kap, s, ts[k]});
            for (std::size_t k = 1; k + 1 < vs.size(); ++k)
                trk.note((2.0 * vs[k] - vs[k - 1] - vs[k + 1]) / kSignTol,
                         {kap, s, ts[k]});
        }
        // (iii)/(iv): derivative formulas. The second-derivative formula has a
        // pole at t = 1/4, so that edge is skipped (no analytic limit given).
        for (double t : ts) {
            if (t > 0.25 - 1e-7) {
                ++skipped;
                continue;
            }
            const double h = std::max(1e-6, 1e-6 * t);
            const double a1 = chi_core_dt(t, kap);
            const double fd1 =
                central_deriv([&](double u) { return chi_core(u, kap); }, t, h);
            trk.note(std::abs(a1 - fd1) / std::max(1.0, std::abs(a1)) / kFdTol,
                     {kap, t});
            const double a2 = chi_core_dt2(t, kap);
            const double fd2 =
                central_deriv([&](double u) { return chi_core_dt(u, kap); }, t, h);
            trk.note(std::abs(a2 - fd2) / std::max(1.0, std::abs(a2)) / kFdTol,
                     {kap, t});
            const double a3 = chi_core_dt2_dkappa(t, kap);
            trk.note(-a3 / kSignTol, {kap, t});
            const double hk = 1e-6 * std::max(1.0, kap);
            // The lower stencil point can round just below 1; clamp (the
            // kernel's limit value there is exactly 0, which chi_core_dt2
            // already returns at kappa = 1).
            const double fd3 = central_deriv(
                [&](double u) { return chi_core_dt2(t, std::max(1.0, u)); },
                kap, hk);
            trk.note(std::abs(a3 - fd3) / std::max(1.0, std::abs(a3)) / kFdTol,
                     {kap, t});
        }
    }
    return finish("chi_properties", trk, 1.0, skipped);
}

VerificationReport verify_chi_corrected(int kappa_grid, int s_grid, int t_grid) {
    if (kappa_grid < 2 || s_grid < 2 || t_grid < 8)
        throw std::domain_error("verify_chi_corrected: grids too small");
    const auto kappas = geomspace(1.0 + 1e-6, 64.0, kappa_grid);
    const auto ss = geomspace(0.1, 10.0, s_grid);
    Tracker trk;
    long skipped = 0;
    // (a) slope limit at t -> 0 is 2(1-sqrt(kappa))/ln 2, not 0.
    for (double kap : kappas) {
        const double lim = 2.0 * (1.0 - std::sqrt(kap)) / std::numbers::ln2;
        const double near = chi_core_dt(1e-10, kap);
        trk.note(std::abs(near - lim) / std::max(1.0, std::abs(lim)) / 1e-4,
                 {kap});
        // (b)/(c) analytic convexity and its kappa-monotonicity.
        for (int k = 0; k < t_grid; ++k) {
            const double t = 0.25 * (k + 1) / t_grid;
            if (t > 0.25 - 1e-7) {
                ++skipped;
                continue;
            }
            trk.note(-chi_core_dt2(t, kap) / kSignTol, {kap, t});
            trk.note(-chi_core_dt2_dkappa(t, kap) / kSignTol, {kap, t});
        }
    }
    // (d) with kappa coupled to (eps, s): chi_s nondecreasing on the interval
    // [(1-2 eps)/4, 1/4] where the lower-bound argument uses it.
    for (double eps : linspace(0.02, 0.49, kappa_grid)) {
        for (double s : ss) {
            const double t0 = (1.0 - 2.0 * eps) / 4.0;
            const auto grid = linspace(t0, 0.25, t_grid);
            double prev = chi_s(grid.front(), eps, s);
            for (std::size_t k = 1; k < grid.size(); ++k) {
                const double cur = chi_s(grid[k], eps, s);
                trk.note((prev - cur) / kSignTol, {eps, s, grid[k]});
                prev = cur;
            }
        }
    }
    return finish("chi_corrected", trk, 1.0, skipped);
}

VerificationReport verify_phi_ratio_monotone(int grid) {
    if (grid < 1000)
        throw std::domain_error("verify_phi_ratio_monotone: grid must be >= 1000");
    Tracker trk;
    auto ratio = [](double t) {
        return (1.0 - binary_entropy((1.0 - t) / 2.0)) / (t * t);
    };
    auto psi = [](double t) {
        return -(2.0 - t) * std::log2(1.0 - t) - (t + 2.0) * std::log2(1.0 + t);
    };
    double prev = ratio(1.0 / grid);
    for (int k = 1; k <= grid; ++k) {
        const double t = static_cast<double>(k) / grid;
        const double cur = ratio(t);
        if (k > 1) trk.note(prev - cur, {t});
        trk.note(-psi(t), {t});
        prev = cur;
    }
    trk.note(std::abs(psi(0.0)), {0.0});
    return finish("phi_ratio_monotone", trk, kExactTol);
}

VerificationReport verify_condition_chain(Prob eps, int grid) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("verify_condition_chain: eps must be in (0, 1/2)");
    grid = std::max(grid, 100);
    const DsbsParams d = DsbsParams::from_epsilon(eps);
    const double lambda = std::log2((1.0 - eps) / eps);

    Tracker trk;
    long skipped = 0;

    // Link premise: the phase condition itself.
    const Condition1Report c1 = condition1_holds(eps, std::max(grid, 1000));
    trk.checked += c1.grid_points;
    const bool link_a = c1.worst_omega <= kSignTol;

    // Scalar inequality on [0, c_len].
    double eq17_max = -1e300, eq17_at = 0.0;
    for (int j = 0; j <= grid; ++j) {
        const double t = d.c_len * j / grid;
        const double cap = 1.0 - binary_entropy((1.0 - t) / 2.0);
        const double one_t2 = 1.0 - t * t;
        const double v = d.eta * one_t2 * cube(std::log2(one_t2)) +
                         4.0 * cap * (cap * cap - d.eta * d.eta * t * t) * lambda;
        ++trk.checked;
        if (v > eq17_max) {
            eq17_max = v;
            eq17_at = t;
        }
    }
    const bool link_b = eq17_max <= kSignTol;

    // g' <= 0 and g >= 0 on the natural domain (t*, c_len].
    const double tstar = g_domain_start(eps);
    double gp_max = -1e300, gp_at = 0.0, g_min = 1e300, g_at = 0.0, fd_worst = 0.0,
           fd_at = 0.0;
    for (int j = 1; j <= grid; ++j) {
        const double t = tstar + (d.c_len - tstar) * j / grid;
        const double gp = g_condition_deriv(t, eps);
        const double gv = g_condition(t, eps);
        ++trk.checked;
        if (gp > gp_max) {
            gp_max = gp;
            gp_at = t;
        }
        if (gv < g_min) {
            g_min = gv;
            g_at = t;
        }
        // derivative formula vs central difference of g itself
        const double h = std::max(1e-8, 1e-6 * (d.c_len - tstar));
        if (t - h <= tstar || t + h > d.c_len) {
            ++skipped;
            continue;
        }
        const double fd =
            central_deriv([&](double u) { return g_condition(u, eps); }, t, h);
        const double rel = std::abs(gp - fd) / std::max(1.0, std::abs(gp));
        if (rel > fd_worst) {
            fd_worst = rel;
            fd_at = t;
        }
    }
    const bool link_c = gp_max <= kSignTol;
    const bool link_d = g_min >= -kSignTol;

    if (link_a && !link_b) trk.note(eq17_max / kSignTol, {eq17_at});
    if (link_b && !link_c) trk.note(gp_max / kSignTol, {gp_at});
    if (link_c && !link_d) trk.note(-g_min / kSignTol, {g_at});
    trk.note(fd_worst / kFdTol, {fd_at});

    char name[64];
    std::snprintf(name, sizeof(name), "condition_chain(eps=%.6g)%s", eps,
                  link_a ? "" : ": premise-false");
    return finish(name, trk, 1.0, skipped);
}

}  // namespace renyi_ci
