#pragma once

// Deterministic radial-angular sampling of the unit disk with local
// refinement; realizes every sup_{z in D} the criteria take.
//
// Grid: the origin plus circles of radius r_j = 1 - 2^-j, j = 1..depth,
// each sampled at `angles` equispaced angles.  After the grid pass the best
// cell is refined by golden-section search in radius and ternary search in
// angle, staying inside [0, r_depth].  Ties break to the smallest radius,
// then the smallest angle index, applied after the (possibly parallel)
// evaluation in a fixed sequential reduction.

#include <complex>
#include <functional>
#include <vector>

#include "lipop/fn.hpp"

namespace lipop {

struct DiskSampler {
    int depth = 20;  // radius schedule length J
    int angles = 256;
    int refine = 24; // iterations per refinement stage

    std::vector<double> radii() const;
    double r_max() const;
};

struct SupResult {
    double value = 0.0;
    cplx witness = cplx(0.0, 0.0);
    // cumulative[j]: running max over the origin and circles 1..j+1
    std::vector<double> cumulative;
    // per_circle[j]: max over circle j+1 alone
    std::vector<double> per_circle;
    bool divergent = false;           // evaluator returned +inf somewhere
    cplx divergence_point = cplx(0.0, 0.0);
};

using DiskEvaluator = std::function<double(cplx)>;

// Grid maximum plus refinement; NaN from the evaluator raises EvalError with
// the offending point, +inf sets the divergence flag.  `extra` points are
// folded into the maximum (not into the profiles).
SupResult sup_over_disk(const DiskEvaluator& g, const DiskSampler& sampler,
                        const std::vector<cplx>& extra = {});

// Worker cap honoured by the grid pass; reads LIPOP_THREADS once.
int worker_count();

} // namespace lipop
