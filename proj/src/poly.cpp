#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rootdisk {

Polynomial::Polynomial(std::vector<cplx> coeffs, double zero_threshold)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    for (const cplx& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("polynomial coefficients must be finite");
        }
    }
    double max_mod = 0.0;
    for (const cplx& c : coeffs_) max_mod = std::max(max_mod, std::abs(c));
    const double cut = zero_threshold * max_mod;
    // Trim leading coefficients that are (relatively) zero, keeping a_0.
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= cut) {
        coeffs_.pop_back();
    }
    if (std::abs(coeffs_.back()) == 0.0) {
        throw std::invalid_argument("polynomial must not be identically zero");
    }
}

double Polynomial::max_modulus() const {
    double m = 0.0;
    for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

std::vector<double> Polynomial::moduli() const {
    std::vector<double> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                   [](const cplx& c) { return std::abs(c); });
    return out;
}

std::vector<double> Polynomial::real_parts() const {
    std::vector<double> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                   [](const cplx& c) { return c.real(); });
    return out;
}

std::vector<double> Polynomial::imag_parts() const {
    std::vector<double> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                   [](const cplx& c) { return c.imag(); });
    return out;
}

double enclosing_radius(const Disk& d) { return std::abs(d.center) + d.radius; }

cplx eval(const Polynomial& p, cplx z) {
    cplx acc{};
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

double cauchy_bound(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) {
        throw std::invalid_argument("cauchy bound requires degree >= 1");
    }
    double m = 0.0;
    for (int j = 0; j < n; ++j) m = std::max(m, p.modulus(j));
    return 1.0 + m / p.modulus(n);
}

Polynomial multiply_enestrom_factors(const Polynomial& p, double t1, double t2) {
    if (!(t1 > 0.0) || !(t2 >= 0.0)) {
        throw std::invalid_argument("factor construction requires t1 > 0 and t2 >= 0");
    }
    const int n = p.degree();
    // (t1 - z)(t2 + z) = t1 t2 + (t1 - t2) z - z^2, so the product has
    // b_nu = t1 t2 a_nu + (t1 - t2) a_{nu-1} - a_{nu-2} for nu = 0..n+2,
    // using the zero-padding convention of Polynomial::coeff.
    std::vector<cplx> b(static_cast<size_t>(n) + 3);
    for (int nu = 0; nu <= n + 2; ++nu) {
        b[static_cast<size_t>(nu)] =
            t1 * t2 * p.coeff(nu) + (t1 - t2) * p.coeff(nu - 1) - p.coeff(nu - 2);
    }
    return Polynomial(std::move(b));
}

double default_condition_tol(const Polynomial& p) { return 1e-10 * p.max_modulus(); }

}  // namespace rootdisk
