#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rootdisk {

namespace {

// Horner evaluation of value and derivative in one pass.
struct EvalPair {
    cplx value;
    cplx deriv;
};

EvalPair eval_pair(const std::vector<cplx>& c, cplx z) {
    cplx v{};
    cplx d{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
    }
    return {v, d};
}

double scaled_residual(const std::vector<cplx>& c, cplx z) {
    const double az = std::abs(z);
    double denom = 0.0;
    double zpow = 1.0;
    for (const cplx& cj : c) {
        denom += std::abs(cj) * zpow;
        zpow *= az;
    }
    const double num = std::abs(eval_pair(c, z).value);
    return denom > 0.0 ? num / denom : num;
}

// Deterministic nudge used when an iterate collides with another or the
// update degenerates.
cplx nudged(cplx z) { return z * cplx{1.0001, 0.0002} + cplx{1e-8, 1e-8}; }

}  // namespace

RootSet find_roots(const Polynomial& p, double tol, int max_iter, RootMethod method) {
    if (p.degree() < 1) throw std::invalid_argument("root finding requires degree >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("root tolerance must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

    std::vector<cplx> c = p.coeffs();
    int zero_roots = 0;
    while (c.size() > 1 && c.front() == cplx{}) {
        c.erase(c.begin());
        ++zero_roots;
    }
    const int n = static_cast<int>(c.size()) - 1;

    std::vector<std::pair<cplx, double>> found;
    found.reserve(static_cast<size_t>(p.degree()));
    for (int i = 0; i < zero_roots; ++i) found.emplace_back(cplx{}, 0.0);

    bool converged = true;
    if (n >= 1) {
        // Roots are invariant under coefficient scaling; normalize to dodge
        // overflow in products of differences.
        double max_mod = 0.0;
        for (const cplx& cc : c) max_mod = std::max(max_mod, std::abs(cc));
        for (cplx& cc : c) cc /= max_mod;

        double r0 = std::pow(std::abs(c.front() / c.back()), 1.0 / n);
        if (!std::isfinite(r0) || !(r0 > 0.0)) {
            double m = 0.0;
            for (int j = 0; j < n; ++j) m = std::max(m, std::abs(c[static_cast<size_t>(j)]));
            r0 = 0.5 * (1.0 + m / std::abs(c.back()));
        }

        std::vector<cplx> z(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * std::numbers::pi * i / n + 0.4;
            z[static_cast<size_t>(i)] = r0 * cplx{std::cos(th), std::sin(th)};
        }

        std::vector<cplx> next = z;
        converged = false;
        for (int sweep = 0; sweep < max_iter && !converged; ++sweep) {
            for (int i = 0; i < n; ++i) {
                const cplx zi = z[static_cast<size_t>(i)];
                const auto [pv, pd] = eval_pair(c, zi);
                if (pv == cplx{}) {
                    next[static_cast<size_t>(i)] = zi;
                    continue;
                }
                cplx update;
                if (method == RootMethod::Weierstrass) {
                    cplx denom = c.back();
                    bool collision = false;
                    for (int j = 0; j < n && !collision; ++j) {
                        if (j == i) continue;
                        const cplx d = zi - z[static_cast<size_t>(j)];
                        collision = (d == cplx{});
                        denom *= d;
                    }
                    if (collision || denom == cplx{}) {
                        next[static_cast<size_t>(i)] = nudged(zi);
                        continue;
                    }
                    update = pv / denom;
                } else {
                    if (pd == cplx{}) {
                        next[static_cast<size_t>(i)] = nudged(zi);
                        continue;
                    }
                    const cplx newton = pv / pd;
                    cplx sum{};
                    bool collision = false;
                    for (int j = 0; j < n && !collision; ++j) {
                        if (j == i) continue;
                        const cplx d = zi - z[static_cast<size_t>(j)];
                        collision = (d == cplx{});
                        if (!collision) sum += 1.0 / d;
                    }
                    if (collision) {
                        next[static_cast<size_t>(i)] = nudged(zi);
                        continue;
                    }
                    const cplx denom = 1.0 - newton * sum;
                    update = (denom == cplx{}) ? newton : newton / denom;
                }
                cplx zn = zi - update;
                if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag())) zn = zi * 0.5;
                next[static_cast<size_t>(i)] = zn;
            }
            z.swap(next);
            double worst = 0.0;
            for (const cplx& zi : z) worst = std::max(worst, scaled_residual(c, zi));
            converged = (worst <= tol);
        }
        for (const cplx& zi : z) found.emplace_back(zi, scaled_residual(c, zi));
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a.first);
        const double mb = std::abs(b.first);
        if (ma != mb) return ma < mb;
        return std::arg(a.first) < std::arg(b.first);
    });

    RootSet rs;
    rs.converged = converged;
    for (const auto& [root, res] : found) {
        rs.roots.push_back(root);
        rs.residuals.push_back(res);
    }
    return rs;
}

std::pair<bool, double> verify_containment(const RootSet& rs, const Disk& d, double tol) {
    if (!rs.converged) {
        throw UnconvergedError("containment check requires a converged root set");
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (const cplx& z : rs.roots) {
        worst = std::max(worst, std::abs(z - d.center) - d.radius);
    }
    return {worst <= tol, worst};
}

double tightness(const RootSet& rs, const Disk& d) {
    if (!rs.converged) {
        throw UnconvergedError("tightness requires a converged root set");
    }
    const double enc = enclosing_radius(d);
    if (!(enc > 0.0)) {
        throw std::invalid_argument("tightness needs a nonzero enclosing radius");
    }
    double max_mod = 0.0;
    for (const cplx& z : rs.roots) max_mod = std::max(max_mod, std::abs(z));
    return max_mod / enc;
}

}  // namespace rootdisk
