#pragma once

// Three-valued classification of radial profiles.  No finite sample proves a
// supremum finite or a limit zero, so both classifiers keep an explicit
// inconclusive zone and decide only on plateau vs geometric trend.

#include <vector>

namespace lipop {

struct ClassifierParams {
    double rel_tol = 0.05;       // plateau slack for finiteness
    double growth_factor = 2.0;  // geometric growth over the last 5 steps
    double abs_tol = 1e-3;       // absolute annulus tolerance (compactness)
    double decay_drop = 0.5;     // geometric decay over the last 5 steps
    double abs_decay = 1e-6;     // absolute decay floor
    std::vector<double> deltas = {0.5, 0.9, 0.99, 0.999, 0.9999};
};

enum class Finiteness { finite, infinite, inconclusive };
enum class Trend { decays, plateaus, inconclusive };

// `cumulative` is a running-max profile over the radius schedule:
//   finite      last <= (1 + rel_tol) * mid      (plateau)
//   infinite    last >= growth_factor * S[J-6]   (geometric growth)
Finiteness classify_finiteness(const std::vector<double>& cumulative,
                               const ClassifierParams& p);

// `per_circle` is a per-radius profile; `scale` sets the absolute floor:
//   decays      last <= abs_decay * (1 + scale), or halved over 5 steps
//   plateaus    last >= decay_drop * peak > 0
Trend classify_decay(const std::vector<double>& per_circle, double scale,
                     const ClassifierParams& p);

const char* to_string(Finiteness f);
const char* to_string(Trend t);

} // namespace lipop
