#pragma once

#include <optional>
#include <vector>

#include "bounds.hpp"
#include "conditions.hpp"
#include "poly.hpp"

namespace rootdisk {

/// Grid-search knobs. tol is a scale-relative condition tolerance: the
/// absolute tolerance used is tol * max_j |a_j|.
struct SearchConfig {
    double t1_max_factor = 2.0;  // search t1 up to this multiple of the Cauchy bound
    int grid_points = 64;        // grid intervals per axis (grid_points + 1 samples)
    int refine_iterations = 3;   // each round shrinks the window by 8x
    double tol = 1e-10;
};

/// One feasible parameter assignment with its canonical split indices.
struct FeasiblePoint {
    double t1 = 0.0;
    double t2 = 0.0;
    int k = 0;
    std::optional<int> m;
};

struct SearchResult {
    std::optional<BoundReport> best;  // nullopt when the whole grid is infeasible
    long long evaluations = 0;
    double feasible_fraction = 0.0;  // over the initial grid
};

/// Minimizes the enclosing radius of the named bound over its parameters.
///
/// Two-parameter bounds are scanned in the substituted coordinates
/// (u, v) = (t1*t2, t1-t2), where every condition value is linear, over
/// [0, T^2] x [0, T] with T = t1_max_factor * cauchy_bound(p); grid samples
/// include both endpoints, t1 stays within [1e-6 * cauchy_bound, T]. The
/// single-parameter chain bounds scan t over the same t1 interval. The
/// canonical parameter points t = 1 and t = cauchy_bound are always
/// evaluated too, then refine_iterations rounds re-grid an 8x-smaller
/// window around the incumbent. Equal radii tie toward smaller
/// (t1, t2, k, m).
///
/// Throws std::invalid_argument for the parameter-free bounds (EK,
/// GovilRahman) and for invalid configs; whole-grid infeasibility is a
/// result, not an error.
SearchResult optimize_params(const Polynomial& p, Theorem thm,
                             const SearchConfig& cfg = {});

/// All initial-grid points where the theorem's hypotheses hold, with
/// canonical split indices. Same domain as optimize_params, no refinement.
std::vector<FeasiblePoint> feasible_region_sample(const Polynomial& p, Theorem thm,
                                                  const SearchConfig& cfg = {});

}  // namespace rootdisk
