// relaxed_wyner.cpp — C(r,t) closed form, witness, and brute-force oracle.
#include "renyi_ci/relaxed_wyner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "renyi_ci/solve.hpp"

namespace renyi_ci {

namespace {

// (1 - sqrt(1-2r)) / 2, rationalized for small r.
double bias_b(Prob r) { return r / (1.0 + std::sqrt(1.0 - 2.0 * r)); }

// One candidate conditional Q(W=0|X,Y): four cells in (x,y) order
// (0,0), (0,1), (1,0), (1,1), with its objective I(XY;W).
struct Candidate {
    double value;
    std::array<double, 4> cells;
    bool operator<(const Candidate& o) const {
        if (value != o.value) return value < o.value;
        return cells < o.cells;
    }
};

// I(X;Y|W) in bits for DSBS(r) cell masses pi and conditional cells q.
double cond_info(const std::array<double, 4>& pi, const std::array<double, 4>& q) {
    double total = 0.0;
    for (int w = 0; w < 2; ++w) {
        std::array<double, 4> c;
        for (int i = 0; i < 4; ++i) c[i] = pi[i] * (w == 0 ? q[i] : 1.0 - q[i]);
        const double pw = c[0] + c[1] + c[2] + c[3];
        if (pw <= 0.0) continue;
        const double rx0 = c[0] + c[1], rx1 = c[2] + c[3];
        const double cy0 = c[0] + c[2], cy1 = c[1] + c[3];
        auto term = [&](double ci, double rx, double cy) {
            return ci > 0.0 ? ci * std::log2(ci * pw / (rx * cy)) : 0.0;
        };
        total += term(c[0], rx0, cy0) + term(c[1], rx0, cy1) +
                 term(c[2], rx1, cy0) + term(c[3], rx1, cy1);
    }
    return std::max(0.0, total);
}

// I(XY;W) in bits.
double objective(const std::array<double, 4>& pi, const std::array<double, 4>& q) {
    double pw = 0.0, hw_given = 0.0;
    for (int i = 0; i < 4; ++i) {
        pw += pi[i] * q[i];
        hw_given += pi[i] * binary_entropy(q[i]);
    }
    return std::max(0.0, binary_entropy(pw) - hw_given);
}

// Evaluate every cell combination from per-axis value lists, keep the best
// `keep` feasible candidates ordered by (value, cells). The outer axis is
// scanned in parallel with one result slot per outer value.
std::vector<Candidate> scan_grid(const std::array<double, 4>& pi, Bits t,
                                 const std::array<std::vector<double>, 4>& vals,
                                 std::size_t keep) {
    const long n0 = static_cast<long>(vals[0].size());
    std::vector<std::vector<Candidate>> slots(n0);
    parallel_for(n0, [&](long i0) {
        std::vector<Candidate>& best = slots[i0];
        std::array<double, 4> q;
        q[0] = vals[0][i0];
        for (double v1 : vals[1]) {
            q[1] = v1;
            for (double v2 : vals[2]) {
                q[2] = v2;
                for (double v3 : vals[3]) {
                    q[3] = v3;
                    if (cond_info(pi, q) > t + 1e-12) continue;
                    Candidate cand{objective(pi, q), q};
                    auto pos = std::lower_bound(best.begin(), best.end(), cand);
                    best.insert(pos, cand);
                    if (best.size() > keep) best.pop_back();
                }
            }
        }
    });
    std::vector<Candidate> merged;
    for (const auto& s : slots) merged.insert(merged.end(), s.begin(), s.end());
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep) merged.resize(keep);
    return merged;
}

std::vector<double> axis_box(double center, double half_width, double step) {
    std::vector<double> out;
    const int half = static_cast<int>(std::round(half_width / step));
    for (int j = -half; j <= half; ++j)
        out.push_back(std::clamp(center + j * step, 0.0, 1.0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Prob q0(Prob r) {
    require_in(r, 0.0, 0.5, "r");
    const double b = bias_b(r);
    return b * b / (1.0 - r);
}

Bits conditional_mi(Prob r, Prob q) {
    require_in(r, 0.0, 0.5, "r");
    const Prob lo = q0(r);
    if (!(q >= lo - 1e-12 && q <= 0.5 + 1e-12))
        throw std::domain_error("conditional_mi: q outside [q0(r), 1/2]");
    return 2.0 * binary_entropy((1.0 - r) * q + r / 2.0) -
           (1.0 - r) * binary_entropy(q) - r - binary_entropy(r);
}

RelaxedCiWitness relaxed_ci(Prob r, Bits t) {
    require_in(r, 0.0, 1.0, "r");
    if (!(t >= 0.0)) throw std::domain_error("relaxed_ci: t must be >= 0");
    if (r > 0.5) r = 1.0 - r;  // source symmetry
    const double b = bias_b(r);
    const Bits cap = 1.0 - binary_entropy(r);
    RelaxedCiWitness w;
    w.r = r;
    w.t = t;
    w.b = b;
    if (t >= cap) {
        w.q = 0.5;
        w.b0 = 0.5;
        w.value = 0.0;
        return w;
    }
    const Prob qlo = q0(r);  // r < 1/2 here, so qlo < 1/2
    Prob q;
    if (t == 0.0) {
        // The constraint function is 0 with zero slope at qlo, so there is no
        // sign change to scan for; the root is the endpoint itself.
        q = qlo;
    } else {
        auto fn = [&](double x) { return conditional_mi(r, x) - t; };
        const auto brackets = sign_change_brackets(fn, qlo, 0.5, 64);
        if (brackets.empty()) {
            // The constraint evaluates to 0 +/- rounding noise at qlo; a
            // budget inside that noise band can leave the left residual
            // already positive. The root is then qlo to working precision.
            if (fn(qlo) >= 0.0 && fn(qlo) <= 1e-12) {
                const double value = (1.0 - r) * (1.0 - binary_entropy(qlo));
                return {r, t, qlo, b, (qlo - b) / (1.0 - 2.0 * b), value};
            }
            std::ostringstream msg;
            msg << "relaxed_ci: no sign change on [" << qlo << ", 0.5]; residuals "
                << fn(qlo) << " and " << fn(0.5);
            throw std::runtime_error(msg.str());
        }
        q = bisect_root(fn, brackets.front().first, brackets.front().second, 1e-15);
        if (brackets.size() > 1) {
            const Prob q_last =
                bisect_root(fn, brackets.back().first, brackets.back().second, 1e-15);
            if (std::abs(q_last - q) > 1e-8) {
                std::ostringstream msg;
                msg << "relaxed_ci: " << brackets.size()
                    << " sign changes on [q0, 1/2] (roots " << q << " and " << q_last
                    << "); the constraint map is expected single-crossing";
                throw std::runtime_error(msg.str());
            }
        }
    }
    w.q = q;
    w.b0 = (q - b) / (1.0 - 2.0 * b);
    w.value = (1.0 - r) * (1.0 - binary_entropy(q));
    return w;
}

Bits brute_force_relaxed_ci(Prob r, Bits t, double grid_step) {
    if (!(r > 0.0 && r < 0.5))
        throw std::domain_error("brute_force_relaxed_ci: r must be in (0, 1/2)");
    if (!(t >= 0.0)) throw std::domain_error("brute_force_relaxed_ci: t must be >= 0");
    require_in(grid_step, 1e-3, 0.1, "grid_step");

    const std::array<double, 4> pi = {(1.0 - r) / 2.0, r / 2.0, r / 2.0, (1.0 - r) / 2.0};

    std::vector<double> base;
    for (double v = 0.0; v < 1.0 - 1e-12; v += grid_step) base.push_back(v);
    base.push_back(1.0);
    std::array<std::vector<double>, 4> vals = {base, base, base, base};

    std::vector<Candidate> best = scan_grid(pi, t, vals, 8);
    if (best.empty())
        throw std::runtime_error(
            "brute_force_relaxed_ci: empty feasible set at this grid step; "
            "use a finer step");

    double step = grid_step;
    for (int round = 0; round < 3; ++round) {
        const double sub = step / 4.0;
        std::vector<Candidate> pool = best;
        for (const Candidate& c : best) {
            std::array<std::vector<double>, 4> box;
            for (int axis = 0; axis < 4; ++axis)
                box[axis] = axis_box(c.cells[axis], 2.0 * step, sub);
            std::vector<Candidate> refined = scan_grid(pi, t, box, 8);
            pool.insert(pool.end(), refined.begin(), refined.end());
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end(),
                               [](const Candidate& a, const Candidate& b) {
                                   return a.cells == b.cells;
                               }),
                   pool.end());
        if (pool.size() > 8) pool.resize(8);
        best = pool;
        step = sub;
    }
    return best.front().value;
}

}  // namespace renyi_ci
