// renyi_ci_cli.cpp — command line front end: closed-form values, curve
// export, the negative-order phase threshold, and the verification suites.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "renyi_ci/dsbs_core.hpp"
#include "renyi_ci/lemma_suite.hpp"
#include "renyi_ci/negative_orders.hpp"
#include "renyi_ci/relaxed_wyner.hpp"

namespace rc = renyi_ci;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

// All serialized numbers carry 12 significant digits.
double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

json alpha_json(double alpha) {
    if (std::isinf(alpha)) return alpha > 0 ? json("inf") : json("-inf");
    return json(round12(alpha));
}

std::string alpha_csv(double alpha) {
    if (std::isinf(alpha)) return alpha > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", alpha);
    return buf;
}

double parse_alpha(const std::string& s) {
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size())
        throw std::domain_error("cannot parse alpha '" + s +
                                "' (expected a decimal, inf, or -inf)");
    return v;
}

const char* regime_name(const rc::Order& o) {
    switch (o.tag) {
        case rc::Order::Tag::Zero: return "zero";
        case rc::Order::Tag::UnitInterval: return "wyner";
        case rc::Order::Tag::Super1: return "super1";
        case rc::Order::Tag::PlusInfinity: return "exact";
        default: return "negative-ub";
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

json make_manifest(const std::string& cmdline, json tolerances, json grids,
                   long seed, double wall) {
    json m;
    m["command_line"] = cmdline;
    m["tolerances"] = std::move(tolerances);
    m["grid_sizes"] = std::move(grids);
    m["seed"] = seed;
    m["artifact_version"] = kVersion;
    m["wall_time_s"] = round12(wall);
    return m;
}

// Write to the path, or to stdout when the path is empty. Returns the exit
// code (3 when the path cannot be written).
int write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 3;
    }
    f << text;
    f.close();
    if (!f) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return 3;
    }
    return 0;
}

json report_json(const rc::VerificationReport& r) {
    json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass;
    j["worst_violation"] = round12(r.worst_violation);
    json loc = json::array();
    for (double x : r.worst_location) loc.push_back(round12(x));
    j["worst_location"] = std::move(loc);
    j["points_checked"] = r.points_checked;
    j["tolerance_used"] = round12(r.tolerance_used);
    j["skipped_points"] = r.skipped_points;
    return j;
}

std::vector<double> geom_grid(double lo, double hi, int n) {
    std::vector<double> out;
    if (hi < lo || n < 1) return out;
    if (n == 1 || hi - lo < 1e-300) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return out;
}

int cmd_compute(const std::string& cmdline, double eps,
                const std::string& alpha_str, bool upper_bound, long seed,
                const std::string& out) {
    Timer tm;
    const rc::Order order = rc::Order::from_alpha(parse_alpha(alpha_str));
    const bool negative = order.tag == rc::Order::Tag::NegativeFinite ||
                          order.tag == rc::Order::Tag::MinusInfinity;
    rc::CiResult res;
    json doc;
    bool exact = true;
    bool cond_holds = false;
    if (negative) {
        cond_holds = eps == 0.0 ? true : rc::condition1_holds(eps).holds;
        if (!cond_holds && !upper_bound) {
            std::cerr << "error: the negative-order value at epsilon=" << eps
                      << " is not certified exact (the sufficient phase "
                         "condition fails); pass --upper-bound to compute the "
                         "upper bound instead\n";
            return 2;
        }
        if (upper_bound) {
            res = rc::gamma_ub_negative(eps, order);
            exact = false;
        } else {
            res = rc::renyi_ci(eps, order);
            exact = true;
        }
    } else {
        res = rc::renyi_ci(eps, order);
    }
    doc["epsilon"] = round12(eps);
    doc["alpha"] = alpha_json(order.value);
    doc["order"] = order.describe();
    doc["regime"] = regime_name(order);
    doc["gamma_bits"] = round12(res.value);
    if (res.p_star) doc["p_star"] = round12(*res.p_star);
    if (res.q) doc["q"] = round12(*res.q);
    if (res.r_star) doc["r_star"] = round12(*res.r_star);
    if (negative) {
        doc["exact"] = exact;
        doc["condition_holds"] = cond_holds;
        if (!exact) doc["wyner_gap"] = round12(res.value - rc::wyner_ci(eps));
    }
    doc["manifest"] = make_manifest(cmdline, json::object(), json::object(),
                                    seed, tm.secs());
    return write_text(out, doc.dump(2) + "\n");
}

int cmd_curve(const std::string& cmdline, double eps,
              const std::string& amin_str, const std::string& amax_str,
              int points, long seed, const std::string& out) {
    Timer tm;
    const double amin = parse_alpha(amin_str);
    const double amax = parse_alpha(amax_str);
    if (!(amin < amax)) throw std::domain_error("need --alpha-min < --alpha-max");
    if (points < 2) throw std::domain_error("need --points >= 2");
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> alphas;
    auto add = [&](double a) {
        if (a >= amin && a <= amax) alphas.push_back(a);
    };
    // Negative side: log-spaced in |alpha| (the variation concentrates near
    // 0-), plus the -inf sentinel when the range is unbounded below.
    if (amin < 0.0) {
        if (std::isinf(amin)) alphas.push_back(-inf);
        const double hi_mag = std::isinf(amin) ? 1e3 : -amin;
        const double lo_mag = amax < 0.0 ? -amax : 1e-3;
        auto mags = geom_grid(lo_mag, hi_mag, points);
        for (auto it = mags.rbegin(); it != mags.rend(); ++it) add(-*it);
    }
    // Positive side: fixed anchors at {0, 1/4, 1/2, 1}, log-spaced in
    // alpha - 1 above 1, plus the inf sentinel.
    add(0.0);
    add(0.25);
    add(0.5);
    add(1.0);
    if (amax > 1.0) {
        const double s_hi = std::isinf(amax) ? 1e3 : amax - 1.0;
        for (double s : geom_grid(1e-3, s_hi, points)) add(1.0 + s);
    }
    if (std::isinf(amax)) alphas.push_back(inf);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    std::string csv = "alpha,gamma_bits,regime\n";
    for (double a : alphas) {
        const rc::Order order = rc::Order::from_alpha(a);
        const bool negative = order.tag == rc::Order::Tag::NegativeFinite ||
                              order.tag == rc::Order::Tag::MinusInfinity;
        // The negative side of the curve is always the certified upper bound;
        // the positive side uses the closed forms.
        const double gamma = negative ? rc::gamma_ub_negative(eps, order).value
                                      : rc::renyi_ci(eps, order).value;
        char line[96];
        std::snprintf(line, sizeof(line), "%s,%.12g,%s\n", alpha_csv(a).c_str(),
                      gamma, regime_name(order));
        csv += line;
    }
    const int rcode = write_text(out, csv);
    if (rcode != 0) return rcode;
    if (!out.empty()) {
        json side;
        side["manifest"] = make_manifest(
            cmdline, json::object(), json{{"points", points}}, seed, tm.secs());
        return write_text(out + ".manifest.json", side.dump(2) + "\n");
    }
    return 0;
}

int cmd_condition1(const std::string& cmdline, double eps, int grid, long seed,
                   const std::string& out) {
    Timer tm;
    const rc::Condition1Report rep = rc::condition1_holds(eps, grid);
    json doc;
    doc["epsilon"] = round12(rep.epsilon);
    doc["holds"] = rep.holds;
    doc["s_range_end"] = round12(rep.s_range_end);
    doc["worst_s"] = round12(rep.worst_s);
    doc["worst_omega"] = round12(rep.worst_omega);
    doc["grid_points"] = rep.grid_points;
    doc["manifest"] = make_manifest(cmdline, json{{"refine_s", 1e-10}},
                                    json{{"s_grid", grid}}, seed, tm.secs());
    return write_text(out, doc.dump(2) + "\n");
}

int cmd_epsilon0(const std::string& cmdline, double tol, double lo, double hi,
                 long seed, const std::string& out) {
    Timer tm;
    const double e0 = rc::epsilon0(tol, lo, hi);
    json doc;
    doc["epsilon0"] = round12(e0);
    doc["tolerance"] = round12(tol);
    doc["bracket"] = json::array({round12(lo), round12(hi)});
    doc["manifest"] = make_manifest(cmdline, json{{"eps", tol}},
                                    json{{"prescan", 64}}, seed, tm.secs());
    return write_text(out, doc.dump(2) + "\n");
}

int cmd_phase_scan(const std::string& cmdline, double eps_min, double eps_max,
                   int points, long seed, const std::string& out) {
    Timer tm;
    const auto rows = rc::phase_scan(eps_min, eps_max, points);
    json arr = json::array();
    for (const auto& p : rows) {
        json j;
        j["epsilon"] = round12(p.epsilon);
        j["gamma_ub_minus_inf"] = round12(p.gamma_ub_minus_inf);
        j["wyner"] = round12(p.wyner);
        j["gap"] = round12(p.gap);
        j["r_star"] = round12(p.r_star);
        arr.push_back(std::move(j));
    }
    json doc;
    doc["rows"] = std::move(arr);
    doc["manifest"] = make_manifest(cmdline, json::object(),
                                    json{{"eps_points", points}}, seed, tm.secs());
    return write_text(out, doc.dump(2) + "\n");
}

int cmd_verify(const std::string& cmdline, const std::string& suite, int grid,
               bool eps_set, double eps, long seed, const std::string& out) {
    Timer tm;
    std::vector<rc::VerificationReport> reports;
    const bool all = suite == "all";
    if (all || suite == "entropy-splitting")
        reports.push_back(rc::verify_entropy_splitting(50));
    if (all || suite == "chi-properties")
        reports.push_back(rc::verify_chi_properties(10, 10, 50));
    if (all || suite == "chi-corrected")
        reports.push_back(rc::verify_chi_corrected(10, 10, 50));
    if (all || suite == "phi-ratio")
        reports.push_back(rc::verify_phi_ratio_monotone(std::max(grid, 1000)));
    if (all || suite == "condition-chain") {
        if (eps_set) {
            reports.push_back(rc::verify_condition_chain(eps, grid));
        } else {
            reports.push_back(rc::verify_condition_chain(0.3, grid));
            reports.push_back(rc::verify_condition_chain(0.03, grid));
        }
    }
    if (reports.empty())
        throw std::domain_error(
            "unknown --suite '" + suite +
            "' (expected entropy-splitting, chi-properties, chi-corrected, "
            "phi-ratio, condition-chain, or all)");
    bool all_pass = true;
    json arr = json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        arr.push_back(report_json(r));
    }
    json doc;
    doc["reports"] = std::move(arr);
    doc["all_pass"] = all_pass;
    doc["manifest"] = make_manifest(
        cmdline,
        json{{"sign", 1e-8}, {"exact", 1e-10}, {"fd_rel", 1e-5}},
        json{{"grid", grid},
             {"splitting_density", 50},
             {"chi_grids", json::array({10, 10, 50})}},
        seed, tm.secs());
    const int rcode = write_text(out, doc.dump(2) + "\n");
    if (rcode != 0) return rcode;
    return all_pass ? 0 : 1;
}

const char* kSchemaText =
    "curve CSV (v0.1.0)\n"
    "  header exactly: alpha,gamma_bits,regime\n"
    "  alpha: decimal or inf/-inf; rows ascending, -inf first, inf last\n"
    "  gamma_bits: decimal, 12 significant digits\n"
    "  regime: zero | wyner | super1 | exact | negative-ub\n"
    "  a curve written to FILE is accompanied by FILE.manifest.json\n"
    "JSON reports (v0.1.0); every top-level object carries\n"
    "  manifest: {command_line, tolerances, grid_sizes, seed,\n"
    "             artifact_version, wall_time_s}\n"
    "  compute:    {epsilon, alpha, order, regime, gamma_bits, p_star?, q?,\n"
    "               r_star?, exact?, condition_holds?, wyner_gap?, manifest}\n"
    "  condition1: {epsilon, holds, s_range_end, worst_s, worst_omega,\n"
    "               grid_points, manifest}\n"
    "  epsilon0:   {epsilon0, tolerance, bracket, manifest}\n"
    "  phase-scan: {rows: [{epsilon, gamma_ub_minus_inf, wyner, gap,\n"
    "               r_star}], manifest}\n"
    "  verify:     {reports: [{suite, pass, worst_violation, worst_location,\n"
    "               points_checked, tolerance_used, skipped_points}],\n"
    "               all_pass, manifest}\n";

}  // namespace

int main(int argc, char** argv) {
    std::string cmdline;
    for (int i = 0; i < argc; ++i) {
        if (i) cmdline += ' ';
        cmdline += argv[i];
    }

    CLI::App app{
        "Renyi common information of the doubly symmetric binary source: "
        "closed forms for all orders, the relaxed-Wyner reduction for "
        "negative orders, the phase threshold, and verification suites"};
    app.require_subcommand(0, 1);
    bool schema = false;
    app.add_flag("--schema", schema, "print the CSV/JSON schemas and exit");

    double eps = 0.3;
    std::string alpha_str = "1";
    std::string amin_str = "0", amax_str = "inf";
    int curve_points = 33;
    double tol = 1e-6;
    int cond_grid = 10000;
    int verify_grid = 1000;
    long seed = 0;
    std::string out;
    bool upper_bound = false;
    std::string suite = "all";
    double e0_lo = 0.01, e0_hi = 0.10;
    double eps_min = 0.02, eps_max = 0.10;
    int scan_points = 9;

    auto* compute = app.add_subcommand(
        "compute", "one Gamma_alpha value with witnesses (JSON)");
    compute->add_option("--epsilon", eps, "crossover probability")->required();
    compute->add_option("--alpha", alpha_str, "order (decimal, inf, or -inf)")
        ->required();
    compute->add_flag("--upper-bound", upper_bound,
                      "for negative orders, report the upper bound even when "
                      "the exact value is not certified");
    compute->add_option("--seed", seed, "recorded in the manifest");
    compute->add_option("--out", out, "output path (default stdout)");

    auto* curve = app.add_subcommand(
        "curve", "Gamma_alpha curve over an order range (CSV)");
    curve->add_option("--epsilon", eps, "crossover probability")->required();
    curve->add_option("--alpha-min", amin_str, "lower end of the order range");
    curve->add_option("--alpha-max", amax_str, "upper end of the order range");
    curve->add_option("--points", curve_points,
                      "log-grid points per side (anchors are always included)");
    curve->add_option("--seed", seed, "recorded in the manifest");
    curve->add_option("--out", out, "CSV path (default stdout; a file gets a "
                                    ".manifest.json sidecar)");

    auto* cond = app.add_subcommand(
        "condition1", "check the negative-order sufficient condition (JSON)");
    cond->add_option("--epsilon", eps, "crossover probability")->required();
    cond->add_option("--grid", cond_grid, "s-grid points (>= 1000)");
    cond->add_option("--seed", seed, "recorded in the manifest");
    cond->add_option("--out", out, "output path (default stdout)");

    auto* e0 = app.add_subcommand(
        "epsilon0", "bisect the phase-condition threshold (JSON)");
    e0->add_option("--tol", tol, "bisection tolerance in epsilon");
    e0->add_option("--eps-min", e0_lo, "bracket lower end");
    e0->add_option("--eps-max", e0_hi, "bracket upper end");
    e0->add_option("--seed", seed, "recorded in the manifest");
    e0->add_option("--out", out, "output path (default stdout)");

    auto* scan = app.add_subcommand(
        "phase-scan", "negative-order gap scan over epsilon (JSON)");
    scan->add_option("--eps-min", eps_min, "scan lower end")->required();
    scan->add_option("--eps-max", eps_max, "scan upper end")->required();
    scan->add_option("--points", scan_points, "epsilon grid points");
    scan->add_option("--seed", seed, "recorded in the manifest");
    scan->add_option("--out", out, "output path (default stdout)");

    auto* verify = app.add_subcommand(
        "verify", "run the numerical verification suites (JSON; exit 0 iff "
                  "all selected suites pass)");
    verify->add_option("--suite", suite,
                       "entropy-splitting | chi-properties | chi-corrected | "
                       "phi-ratio | condition-chain | all");
    verify->add_option("--grid", verify_grid,
                       "grid for phi-ratio and condition-chain sweeps");
    verify->add_option("--epsilon", eps,
                       "run condition-chain at this epsilon only");
    verify->add_option("--seed", seed, "recorded in the manifest");
    verify->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (schema) {
        std::cout << kSchemaText;
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(cmdline, eps, alpha_str, upper_bound, seed, out);
        if (curve->parsed())
            return cmd_curve(cmdline, eps, amin_str, amax_str, curve_points,
                             seed, out);
        if (cond->parsed())
            return cmd_condition1(cmdline, eps, cond_grid, seed, out);
        if (e0->parsed())
            return cmd_epsilon0(cmdline, tol, e0_lo, e0_hi, seed, out);
        if (scan->parsed())
            return cmd_phase_scan(cmdline, eps_min, eps_max, scan_points, seed,
                                  out);
        if (verify->parsed())
            return cmd_verify(cmdline, suite, verify_grid,
                              verify->count("--epsilon") > 0, eps, seed, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << app.help();
    return 2;
}
