#include "generate.hpp"

#include <cmath>
#include <fmt/core.h>
#include <numbers>
#include <stdexcept>

#include "conditions.hpp"
#include "numeric.hpp"

namespace rootdisk {

namespace {

constexpr int kMaxResamples = 100;

std::string spec_string(const GenSpec& s) {
    return fmt::format("n={} k={} m={} t1={:g} t2={:g} alpha={:g} seed={}", s.n, s.k,
                       s.m ? std::to_string(*s.m) : "none", s.t1, s.t2, s.alpha, s.seed);
}

void require_common(const GenSpec& s) {
    if (!(s.t1 > 0.0) || !(s.t2 >= 0.0) || !(s.t1 >= s.t2)) {
        throw std::invalid_argument("generator requires t1 > 0 and t1 >= t2 >= 0");
    }
    if (!(s.alpha >= 0.0) || s.alpha > std::numbers::pi / 2.0) {
        throw std::invalid_argument("generator requires 0 <= alpha <= pi/2");
    }
}

// True when every condition value is clear of the tolerance band, so the
// instance does not merely graze the hypothesis boundary.
bool clear_margins(const std::vector<double>& c, double t1, double t2, double tol) {
    for (double s : condition_seq(c, t1, t2).values) {
        if (std::abs(s) < tol) return false;
    }
    return true;
}

}  // namespace

std::vector<double> unimodal_chain(int n, int k, double t, Rng& rng, double ratio_lo,
                                   double ratio_hi) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("chain needs 0 <= k <= n");
    if (!(t > 0.0)) throw std::invalid_argument("chain needs t > 0");
    if (!(1.0 < ratio_lo && ratio_lo <= ratio_hi)) {
        throw std::invalid_argument("chain needs 1 < ratio_lo <= ratio_hi");
    }
    std::vector<double> scaled(static_cast<size_t>(n) + 1);
    scaled[static_cast<size_t>(k)] = 1.0;
    for (int j = k - 1; j >= 0; --j) {
        scaled[static_cast<size_t>(j)] =
            scaled[static_cast<size_t>(j + 1)] / rng.uniform(ratio_lo, ratio_hi);
    }
    for (int j = k + 1; j <= n; ++j) {
        scaled[static_cast<size_t>(j)] =
            scaled[static_cast<size_t>(j - 1)] / rng.uniform(ratio_lo, ratio_hi);
    }
    std::vector<double> values(scaled.size());
    for (int j = 0; j <= n; ++j) {
        values[static_cast<size_t>(j)] = pow_quotient(scaled[static_cast<size_t>(j)], t, j);
    }
    return values;
}

Polynomial gen_thm17_instance(const GenSpec& spec) {
    if (spec.n < 3 || spec.k < 0 || spec.k > spec.n - 3) {
        throw std::invalid_argument("generator gates require n >= 3 and 0 <= k <= n-3");
    }
    require_common(spec);
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        const std::vector<double> moduli = unimodal_chain(spec.n, spec.k, spec.t1, rng);
        std::vector<cplx> coeffs(moduli.size());
        for (size_t j = 0; j < moduli.size(); ++j) {
            const double arg = rng.uniform(-spec.alpha, spec.alpha);
            coeffs[j] = moduli[j] * cplx{std::cos(arg), std::sin(arg)};
        }
        Polynomial p(std::move(coeffs));
        if (!clear_margins(p.moduli(), spec.t1, spec.t2, default_condition_tol(p))) {
            continue;
        }
        const HypothesisReport rep = check_thm17(p, spec.t1, spec.t2, -1.0);
        if (rep.ok && rep.k_range->lo <= spec.k) return p;
    }
    throw std::runtime_error(
        fmt::format("instance generation exhausted {} resamples ({})", kMaxResamples,
                    spec_string(spec)));
}

Polynomial gen_thm110_instance(const GenSpec& spec) {
    if (spec.n < 1 || spec.k < 0 || spec.k > spec.n - 1) {
        throw std::invalid_argument("generator gates require n >= 1 and 0 <= k <= n-1");
    }
    if (spec.m && (*spec.m < 0 || *spec.m > spec.n - 1)) {
        throw std::invalid_argument("generator gates require 0 <= m <= n-1");
    }
    require_common(spec);
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        const std::vector<double> real = unimodal_chain(spec.n, spec.k, spec.t1, rng);
        std::vector<double> imag(real.size(), 0.0);
        if (spec.m) {
            const std::vector<double> chain = unimodal_chain(spec.n, *spec.m, spec.t1, rng);
            // Keep the imaginary magnitudes a modest fraction of the real
            // ones so instances stay well scaled.
            const double scale = rng.uniform(0.1, 1.0);
            for (size_t j = 0; j < chain.size(); ++j) imag[j] = scale * chain[j];
        }
        std::vector<cplx> coeffs(real.size());
        for (size_t j = 0; j < real.size(); ++j) coeffs[j] = cplx{real[j], imag[j]};
        Polynomial p(std::move(coeffs));
        const double tol = default_condition_tol(p);
        if (!clear_margins(p.real_parts(), spec.t1, spec.t2, tol)) continue;
        if (spec.m && !clear_margins(p.imag_parts(), spec.t1, spec.t2, tol)) continue;
        const HypothesisReport rep = check_thm110(p, spec.t1, spec.t2, -1.0);
        if (rep.ok && rep.k_range->lo <= spec.k &&
            (!spec.m || rep.m_range->lo <= *spec.m)) {
            return p;
        }
    }
    throw std::runtime_error(
        fmt::format("instance generation exhausted {} resamples ({})", kMaxResamples,
                    spec_string(spec)));
}

}  // namespace rootdisk
