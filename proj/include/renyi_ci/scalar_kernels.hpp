// scalar_kernels.hpp — binary-source entropy primitives shared by every module.
//
// All information quantities are in bits (log base 2). The 0*log(0) = 0
// convention is applied uniformly through xlogx().
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace renyi_ci {

using Prob = double;  // a probability in [0,1]
using Bits = double;  // an information quantity in bits

inline constexpr double kCellTol = 1e-12;  // slack allowed for rounded-off cells

// x*log2(x) with the continuous-extension convention xlogx(0) = 0.
inline double xlogx(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

// Binary entropy H(p) in bits.
inline Bits binary_entropy(Prob p) {
    return -xlogx(p) - xlogx(1.0 - p);
}

// Binary relative entropy D(p || q) in bits; q must be in (0,1).
inline Bits binary_relative_entropy(Prob p, Prob q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("binary_relative_entropy: q must be interior to (0,1)");
    double term0 = p > 0.0 ? p * std::log2(p / q) : 0.0;
    double term1 = p < 1.0 ? (1.0 - p) * std::log2((1.0 - p) / (1.0 - q)) : 0.0;
    return term0 + term1;
}

// Binary convolution a*b = a(1-b) + b(1-a): crossover of two cascaded BSCs.
inline Prob binary_convolution(Prob a, Prob b) {
    return a * (1.0 - b) + b * (1.0 - a);
}

// Entropy of a four-cell distribution in bits. Cells may carry tiny negative
// rounding noise (>= -kCellTol), which is clamped to zero; anything more
// negative is a caller bug.
inline Bits entropy4(double x0, double x1, double x2, double x3) {
    double h = 0.0;
    for (double x : {x0, x1, x2, x3}) {
        if (x < 0.0) {
            if (x < -kCellTol)
                throw std::domain_error("entropy4: cell " + std::to_string(x) +
                                        " below -tolerance");
            continue;  // clamp to 0, contributes nothing
        }
        h -= xlogx(x);
    }
    return h;
}

inline void require_probability(Prob p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error(std::string(what) + ": expected a probability in [0,1], got " +
                                std::to_string(p));
}

inline void require_in(double x, double lo, double hi, const char* what) {
    if (!(x >= lo && x <= hi))
        throw std::domain_error(std::string(what) + ": value " + std::to_string(x) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace renyi_ci
