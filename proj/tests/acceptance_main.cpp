// acceptance_main.cpp — the release gate: one line per shipped guarantee.
// Usage: acceptance <path-to-cli> [criterion 1..10 | all]
// Exits 0 iff every requested criterion passes.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "renyi_ci/coupling_entropy.hpp"
#include "renyi_ci/dsbs_core.hpp"
#include "renyi_ci/lemma_suite.hpp"
#include "renyi_ci/negative_orders.hpp"
#include "renyi_ci/relaxed_wyner.hpp"

namespace rc = renyi_ci;
using json = nlohmann::json;

namespace {

std::string g_cli;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string run_cli(const std::string& args, int* status) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *status = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    int rcode = pclose(p);
    *status = WIFEXITED(rcode) ? WEXITSTATUS(rcode) : -1;
    return out;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// 1. The phase threshold from the CLI matches the known crossing.
Outcome criterion_threshold() {
    const double t0 = now_s();
    int status = 0;
    std::string out = run_cli("epsilon0 --tol 1e-6", &status);
    const double wall = now_s() - t0;
    if (status != 0) return {false, fmt("cli exited %d", status)};
    const double e0 = json::parse(out)["epsilon0"].get<double>();
    const double diff = std::abs(e0 - 0.05510465170298144);
    const bool ok = diff <= 1e-6 && wall < 60.0;
    return {ok, fmt("epsilon0=%.10g |diff|=%.2e wall=%.2fs (limits 1e-6, 60s)", e0,
                    diff, wall)};
}

// 2. Condition verdicts on both sides of the threshold, each within 5 s.
Outcome criterion_verdicts() {
    const struct {
        double eps;
        bool want;
    } cases[] = {{0.3, true}, {0.10, true}, {0.03, false}, {0.05, false}};
    std::string detail;
    bool ok = true;
    for (const auto& c : cases) {
        const double t0 = now_s();
        const bool got = rc::condition1_holds(c.eps).holds;
        const double wall = now_s() - t0;
        const bool good = got == c.want && wall < 5.0;
        ok = ok && good;
        detail += fmt("%seps=%.2f:%s(%.2fs)", detail.empty() ? "" : " ", c.eps,
                      got == c.want ? "ok" : "WRONG", wall);
    }
    return {ok, detail};
}

// 3. The closed-form family is continuous at its regime boundaries and meets
//    the single-variable certificate on a 20-point s-grid.
Outcome criterion_order_limits() {
    const double t0 = now_s();
    double worst_lo = 0.0, worst_hi = 0.0, worst_chi = 0.0;
    for (double eps : {0.05, 0.1, 0.2, 0.3, 0.45}) {
        const double wyner = rc::wyner_ci(eps), exact = rc::exact_ci(eps);
        worst_lo = std::max(
            worst_lo,
            std::abs(rc::renyi_ci(eps, rc::Order::from_alpha(1.0 + 1e-6)).value - wyner));
        worst_hi = std::max(
            worst_hi,
            std::abs(rc::renyi_ci(eps, rc::Order::from_alpha(1.0 + 1e4)).value - exact));
        const double tt = (1.0 - 2.0 * eps) / 4.0;
        for (int i = 0; i < 20; ++i) {
            const double s = 0.01 * std::pow(3000.0, i / 19.0);
            worst_chi = std::max(
                worst_chi,
                std::abs(rc::chi_s(tt, eps, s) -
                         rc::renyi_ci(eps, rc::Order::from_alpha(1.0 + s)).value));
        }
    }
    const double wall = now_s() - t0;
    const bool ok =
        worst_lo <= 1e-4 && worst_hi <= 1e-3 && worst_chi <= 1e-9 && wall < 5.0;
    return {ok, fmt("near-1 gap=%.2e (<=1e-4) large-order gap=%.2e (<=1e-3) "
                    "certificate gap=%.2e (<=1e-9) wall=%.2fs",
                    worst_lo, worst_hi, worst_chi, wall)};
}

// 4. The stationary-cell closed form against the golden-section oracle on
//    seeded random (gamma1, gamma2, kappa) triples.
Outcome criterion_coupling_oracle() {
    const double t0 = now_s();
    std::mt19937 rng(0);
    std::uniform_real_distribution<double> ug(0.05, 0.95), ulog(0.0, std::log(1e3));
    double worst_p = 0.0, worst_f = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double g1 = ug(rng), g2 = ug(rng);
        const double kappa = std::exp(ulog(rng));
        const auto [p_oracle, f_oracle] = rc::coupling_oracle_kappa(g1, g2, kappa);
        const double p_closed = rc::p_star_general(g1, g2, kappa);
        worst_p = std::max(worst_p, std::abs(p_closed - p_oracle));
        const double f_closed = rc::f_core(p_closed, g1, g2, std::log2(kappa));
        worst_f = std::max(worst_f, f_oracle - f_closed);
    }
    const double wall = now_s() - t0;
    const bool ok = worst_p <= 1e-9 && worst_f <= 1e-12 && wall < 10.0;
    return {ok, fmt("argmax gap=%.2e (<=1e-9) objective gap=%.2e (<=1e-12) "
                    "wall=%.2fs over 1000 seeded triples",
                    worst_p, worst_f, wall)};
}

// 5. Relaxed solver anchors: zero budget = Wyner closed form, saturated
//    budget = 0 exactly, and the inner root satisfies its equation.
Outcome criterion_relaxed_anchors() {
    const double t0 = now_s();
    double worst_anchor = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double r = 0.5 * i / 100.0;
        worst_anchor =
            std::max(worst_anchor, std::abs(rc::relaxed_ci(r, 0.0).value - rc::wyner_ci(r)));
    }
    bool sat_exact = true;
    for (double r : {0.05, 0.2, 0.35, 0.45}) {
        const double cap = 1.0 - rc::binary_entropy(r);
        sat_exact = sat_exact && rc::relaxed_ci(r, cap).value == 0.0 &&
                    rc::relaxed_ci(r, cap + 0.05).value == 0.0;
    }
    double worst_res = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double r = 0.02 + (0.48 - 0.02) * i / 19.0;
        const double cap = 1.0 - rc::binary_entropy(r);
        for (int j = 0; j < 20; ++j) {
            const double t = cap * (0.05 + 0.9 * j / 19.0);
            const auto w = rc::relaxed_ci(r, t);
            worst_res = std::max(worst_res, std::abs(rc::conditional_mi(r, w.q) - t));
        }
    }
    const double wall = now_s() - t0;
    const bool ok = worst_anchor <= 1e-9 && sat_exact && worst_res <= 1e-10 && wall < 10.0;
    return {ok, fmt("zero-budget gap=%.2e (<=1e-9) saturated-exact=%s "
                    "root residual=%.2e (<=1e-10) wall=%.2fs",
                    worst_anchor, sat_exact ? "yes" : "NO", worst_res, wall)};
}

// 6. The grid oracle brackets the solver on seeded (r, t) pairs.
Outcome criterion_brute_sandwich() {
    const double t0 = now_s();
    std::mt19937 rng(0);
    std::uniform_real_distribution<double> ur(0.05, 0.45), uf(0.2, 0.8);
    double worst_below = 0.0, worst_above = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double r = ur(rng);
        const double t = uf(rng) * (1.0 - rc::binary_entropy(r));
        const double c = rc::relaxed_ci(r, t).value;
        const double b = rc::brute_force_relaxed_ci(r, t, 0.02);
        worst_below = std::max(worst_below, c - b);
        worst_above = std::max(worst_above, b - c);
    }
    const double wall = now_s() - t0;
    const bool ok = worst_below <= 1e-9 && worst_above <= 5e-3 && wall < 600.0;
    return {ok, fmt("undercut=%.2e (<=1e-9) overshoot=%.2e (<=5e-3) wall=%.1fs "
                    "over 10 seeded pairs at step 0.02",
                    worst_below, worst_above, wall)};
}

// 7. Negative-order gap: collapses onto Wyner above the threshold, exceeds
//    1e-4 below it.
Outcome criterion_negative_gap() {
    const double t0 = now_s();
    std::string detail;
    bool ok = true;
    for (double eps : {0.06, 0.1, 0.3, 0.45}) {
        const double gap = rc::gamma_ub_negative(eps, rc::Order::minus_infinity()).value -
                           rc::wyner_ci(eps);
        const bool good = std::abs(gap) <= 1e-6;
        ok = ok && good;
        detail += fmt("%.2f:|gap|=%.1e%s ", eps, std::abs(gap), good ? "" : "(>1e-6)");
    }
    for (double eps : {0.02, 0.03, 0.04}) {
        const double gap = rc::gamma_ub_negative(eps, rc::Order::minus_infinity()).value -
                           rc::wyner_ci(eps);
        const bool good = gap > 1e-4;
        ok = ok && good;
        detail += fmt("%.2f:gap=%.4e%s ", eps, gap, good ? "" : "(NOT >1e-4)");
    }
    const double wall = now_s() - t0;
    ok = ok && wall < 120.0;
    detail += fmt("wall=%.1fs", wall);
    return {ok, detail};
}

// 8. Relaxed solver: monotone in both arguments, symmetric in the crossover.
Outcome criterion_relaxed_monotone() {
    const double t0 = now_s();
    const int n = 50;
    std::vector<std::vector<double>> v(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        const double r = 0.5 * i / (n - 1);
        for (int j = 0; j < n; ++j) v[i][j] = rc::relaxed_ci(r, 1.0 * j / (n - 1)).value;
    }
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j) worst = std::max(worst, v[i][j + 1] - v[i][j]);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i + 1 < n; ++i) worst = std::max(worst, v[i + 1][j] - v[i][j]);
    double worst_sym = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = 0.5 * i / (n - 1);
        for (double t : {0.0, 0.1, 0.3})
            worst_sym = std::max(worst_sym, std::abs(rc::relaxed_ci(1.0 - r, t).value -
                                                     rc::relaxed_ci(r, t).value));
    }
    const double wall = now_s() - t0;
    const bool ok = worst <= 1e-12 && worst_sym <= 1e-12 && wall < 10.0;
    return {ok, fmt("monotonicity slack=%.2e symmetry gap=%.2e (<=1e-12) wall=%.2fs",
                    worst, worst_sym, wall)};
}

// 9. The verification suites at their shipped grids.
Outcome criterion_suites() {
    const double t0 = now_s();
    std::vector<rc::VerificationReport> reps;
    reps.push_back(rc::verify_entropy_splitting(50));
    reps.push_back(rc::verify_chi_properties(10, 10, 50));
    reps.push_back(rc::verify_phi_ratio_monotone(1000));
    reps.push_back(rc::verify_condition_chain(0.3, 1000));
    reps.push_back(rc::verify_condition_chain(0.03, 1000));
    bool ok = true;
    std::string detail;
    for (const auto& r : reps) {
        ok = ok && r.pass;
        detail += fmt("%s:%s ", r.suite.c_str(), r.pass ? "pass" : "FAIL");
    }
    const double wall = now_s() - t0;
    ok = ok && wall < 300.0;
    detail += fmt("wall=%.1fs", wall);
    return {ok, detail};
}

// 10. The exported curve is monotone and sits between its two closed-form
//     envelopes.
Outcome criterion_curve() {
    const double t0 = now_s();
    int status = 0;
    const std::string out = run_cli("curve --epsilon 0.3", &status);
    const double wall = now_s() - t0;
    if (status != 0) return {false, fmt("cli exited %d", status)};
    const double wyner = rc::wyner_ci(0.3), exact = rc::exact_ci(0.3);
    std::istringstream ss(out);
    std::string line;
    std::getline(ss, line);
    if (line != "alpha,gamma_bits,regime") return {false, "bad header: " + line};
    bool ok = true;
    double prev = -1.0;
    int rows = 0;
    bool zero_ok = false;
    std::string why;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        ++rows;
        const auto c1 = line.find(',');
        const auto c2 = line.rfind(',');
        const std::string alpha = line.substr(0, c1);
        const double gamma = std::strtod(line.c_str() + c1 + 1, nullptr);
        (void)c2;
        if (alpha == "0") {
            zero_ok = gamma == 0.0;
            continue;
        }
        if (gamma < prev - 1e-9) {
            ok = false;
            why = "not monotone at alpha=" + alpha;
        }
        if (gamma < wyner - 1e-9 || gamma > exact + 1e-9) {
            ok = false;
            why = "out of envelope at alpha=" + alpha;
        }
        prev = gamma;
    }
    ok = ok && zero_ok && rows > 10 && wall < 5.0;
    return {ok, fmt("%d rows, zero row %s, envelopes [%.6f, %.6f] %s wall=%.2fs",
                    rows, zero_ok ? "ok" : "BAD", wyner, exact,
                    why.empty() ? "held" : why.c_str(), wall)};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli> [1..10|all]\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    const std::string which = argc > 2 ? argv[2] : "all";

    const struct {
        const char* name;
        Outcome (*fn)();
    } table[] = {
        {"phase threshold", criterion_threshold},
        {"condition verdicts", criterion_verdicts},
        {"order-limit consistency", criterion_order_limits},
        {"coupling closed form vs oracle", criterion_coupling_oracle},
        {"relaxed-solver anchors", criterion_relaxed_anchors},
        {"brute-force sandwich", criterion_brute_sandwich},
        {"negative-order gap split", criterion_negative_gap},
        {"relaxed-solver monotonicity", criterion_relaxed_monotone},
        {"verification suites", criterion_suites},
        {"order curve envelopes", criterion_curve},
    };

    bool all_pass = true;
    bool ran_any = false;
    for (int i = 0; i < 10; ++i) {
        if (which != "all" && which != std::to_string(i + 1)) continue;
        ran_any = true;
        Outcome o;
        try {
            o = table[i].fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::printf("criterion %2d %-32s: %s — %s\n", i + 1, table[i].name,
                    o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    if (!ran_any) {
        std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
        return 2;
    }
    return all_pass ? 0 : 1;
}
