// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_FIT_REPORT_HPP
#define HETBLOCK_FIT_REPORT_HPP

#include <vector>

namespace hetblock {

struct SolverOptions {
    double tolerance = 1e-10;      // max-abs gap between observed and expected margins
    int max_iterations = 5000;
    double divergence_floor = 1e-8;
    double divergence_ceiling = 1e8;
    double init_value = 1.0;
};

enum class Drift {
    Finite,
    ToZero,      // parameter tends to 0 (log-scale -inf)
    ToInfinity,  // parameter tends to +inf
    Undefined,   // no data constrains the coordinate
};

struct Divergence {
    int index = 0;
    bool column = false;  // bipartite fits: false = row/b side, true = column/g side
    Drift direction = Drift::Finite;
};

struct FitReport {
    int iterations = 0;
    double final_residual = 0.0;
    std::vector<Divergence> diverged;
    double loglik = 0.0;
    bool converged = false;  // implies residual <= tolerance and diverged empty
};

}  // namespace hetblock

#endif
