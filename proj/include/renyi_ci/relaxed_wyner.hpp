// relaxed_wyner.hpp — relaxed Wyner common information C(r,t) of a doubly
// symmetric binary source: the closed form via a scalar root equation, the
// optimal binary-W construction witness, and an independent brute-force grid
// oracle over conditionals Q_{W|XY}.
#pragma once

#include "renyi_ci/scalar_kernels.hpp"

namespace renyi_ci {

// Solution record for C(r,t) = (1-r)(1-H(q)) with the additive-noise witness
// W = W0 xor V0, X = W0 xor V1, Y = W0 xor V2: V1,V2 ~ Bern(b), V0 ~ Bern(b0),
// so that b conv b = r and b0 conv b = q.
struct RelaxedCiWitness {
    Prob r;      // canonical crossover (reflected into [0, 1/2])
    Bits t;      // conditional-information budget
    Prob q;      // inner root in [q0(r), 1/2]
    Prob b;      // (1 - sqrt(1-2r)) / 2
    Prob b0;     // (q - b) / (1 - 2b)
    Bits value;  // (1-r)(1-H(q))
};

// q0(r) = (1 - sqrt(1-2r))^2 / (4(1-r)) = b^2/(1-r): the q at which the
// constraint function reaches 0 (Markov point). q0(1/2) = 1/2 by continuity
// (the formula itself is exact there).
Prob q0(Prob r);

// Left side of the constraint equation:
//   2H((1-r)q + r/2) - (1-r)H(q) - r - H(r),
// defined for q in [q0(r), 1/2]; equals 0 at q0 and 1-H(r) at 1/2.
Bits conditional_mi(Prob r, Prob q);

// C(r,t) with witness. r in [0,1] (r > 1/2 reflects to 1-r); t >= 0 in bits.
// t >= 1-H(r) gives 0 with q = 1/2; t = 0 gives the Wyner point q = q0(r);
// interior t solves conditional_mi(r,q) = t by a 64-subinterval sign scan
// followed by bisection (the scan guards against multiple crossings, which
// would be reported rather than silently resolved).
RelaxedCiWitness relaxed_ci(Prob r, Bits t);

// Independent oracle: minimizes I(XY;W) over binary-W conditionals Q_{W|XY}
// whose four cells Q(W=0|x,y) range over a uniform grid of the given step,
// subject to I(X;Y|W) <= t + 1e-12 under DSBS(r). The best grid cells are
// refined on nested sub-grids (top 8 candidates, +/-2 steps, step/4, three
// rounds). Deterministic under any worker count.
Bits brute_force_relaxed_ci(Prob r, Bits t, double grid_step);

}  // namespace renyi_ci
