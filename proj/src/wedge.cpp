#include "wedge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace rootdisk {

namespace {

std::vector<double> nonzero_arguments(const Polynomial& p) {
    std::vector<double> args;
    for (const cplx& c : p.coeffs()) {
        if (std::abs(c) > 0.0) args.push_back(std::arg(c));
    }
    return args;
}

}  // namespace

std::optional<Wedge> fit_wedge(const Polynomial& p) {
    constexpr double pi = std::numbers::pi;
    std::vector<double> args = nonzero_arguments(p);
    if (args.empty()) {
        throw std::invalid_argument("cannot fit a sector to the zero polynomial");
    }
    std::sort(args.begin(), args.end());

    // The minimal covering arc is the complement of the largest gap between
    // consecutive arguments on the circle. Several gaps can tie (up to float
    // equality); among tied candidates pick the axis closest to direction 0.
    const size_t n = args.size();
    double best_gap = -1.0;
    Wedge best{};
    for (size_t i = 0; i < n; ++i) {
        const double lo = args[i];  // arc start: first argument after the gap
        const double hi = (i == 0) ? args[n - 1] : args[i - 1] + 2.0 * pi;
        const double gap = 2.0 * pi - (hi - lo);
        const double alpha = (hi - lo) / 2.0;
        const double beta = wrap_angle(lo + alpha);
        const bool better =
            gap > best_gap + 1e-15 ||
            (gap > best_gap - 1e-15 && std::abs(beta) < std::abs(best.beta) - 1e-15);
        if (better) {
            best_gap = std::max(gap, best_gap);
            best = Wedge{beta, alpha};
        }
    }
    if (best.alpha > pi / 2.0 + kWedgeAngularTol) return std::nullopt;
    best.alpha = std::min(best.alpha, pi / 2.0);
    return best;
}

bool wedge_contains_coeffs(const Polynomial& p, const Wedge& w) {
    for (const cplx& c : p.coeffs()) {
        if (std::abs(c) == 0.0) continue;
        if (angular_distance(std::arg(c), w.beta) > w.alpha + kWedgeAngularTol) {
            return false;
        }
    }
    return true;
}

double lemma21_rhs(double t1, double t2, double m_j, double m_jm1, double m_jm2,
                   double alpha) {
    if (!(t1 > t2) || !(t2 >= 0.0)) {
        throw std::invalid_argument("majorant requires t1 > t2 >= 0");
    }
    if (m_j < 0.0 || m_jm1 < 0.0 || m_jm2 < 0.0) {
        throw std::invalid_argument("majorant requires nonnegative moduli");
    }
    if (!(alpha >= 0.0) || alpha > std::numbers::pi / 2.0) {
        throw std::invalid_argument("majorant requires 0 <= alpha <= pi/2");
    }
    const double chain = t1 * t2 * m_j + (t1 - t2) * m_jm1;
    return std::abs(chain - m_jm2) * std::cos(alpha) + (chain + m_jm2) * std::sin(alpha);
}

}  // namespace rootdisk
