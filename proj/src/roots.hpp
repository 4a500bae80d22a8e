#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace rootdisk {

/// Simultaneous-iteration scheme. Aberth (third-order) is the default;
/// Weierstrass is kept selectable so the two can cross-validate each other.
enum class RootMethod { Aberth, Weierstrass };

/// All n roots (with multiplicity), sorted by (modulus, argument) so equal
/// inputs produce identical output. residuals[i] = |p(z_i)| / Σ_j |a_j||z_i|^j
/// is the backward-error certificate for roots[i].
struct RootSet {
    std::vector<cplx> roots;
    std::vector<double> residuals;
    bool converged = false;
};

/// Thrown when an operation needs a converged root set but got an
/// unconverged one.
struct UnconvergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finds all roots of p. Exact zero roots are stripped beforehand; the rest
/// start equally spaced on a circle of radius |a_0/a_n|^{1/n} (fallback:
/// half the Cauchy bound) with a 0.4 rad phase offset, and are refined with
/// full Jacobi sweeps until every scaled residual is <= tol or max_iter
/// sweeps have run. Throws on degree 0 or invalid tol/max_iter.
RootSet find_roots(const Polynomial& p, double tol = 1e-12, int max_iter = 500,
                   RootMethod method = RootMethod::Aberth);

/// Whether every root lies in d up to tol, together with
/// max_i (|z_i - center| - radius) (negative when strictly inside).
/// Requires rs.converged.
std::pair<bool, double> verify_containment(const RootSet& rs, const Disk& d, double tol);

/// max_i |z_i| / enclosing_radius(d), in [0, 1] for sound bounds. Requires
/// rs.converged and a nonzero enclosing radius.
double tightness(const RootSet& rs, const Disk& d);

}  // namespace rootdisk
