#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rootdisk {

using cplx = std::complex<double>;

/// Complex polynomial a_0 + a_1 z + ... + a_n z^n, coefficients stored
/// ascending. The leading coefficient must be nonzero; a relative
/// zero-threshold may be supplied for noisy input (0 means exact-zero only).
class Polynomial {
  public:
    explicit Polynomial(std::vector<cplx> coeffs, double zero_threshold = 0.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient a_j, with a_j = 0 outside 0..n. Out-of-range access is the
    // padding convention a_{-1} = a_{-2} = a_{n+1} = 0 used by the bound
    // formulas.
    cplx coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(coeffs_.size())) return {};
        return coeffs_[static_cast<size_t>(j)];
    }
    double real_part(int j) const { return coeff(j).real(); }
    double imag_part(int j) const { return coeff(j).imag(); }
    double modulus(int j) const { return std::abs(coeff(j)); }

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    double max_modulus() const;

    std::vector<double> moduli() const;
    std::vector<double> real_parts() const;
    std::vector<double> imag_parts() const;

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

  private:
    std::vector<cplx> coeffs_;
};

/// Closed disk |z - center| <= radius in the complex plane.
struct Disk {
    cplx center;
    double radius = 0.0;
};

/// Radius of the smallest origin-centered disk containing d: |center| + radius.
double enclosing_radius(const Disk& d);

/// Horner evaluation of p at z.
cplx eval(const Polynomial& p, cplx z);

/// Classical containment radius 1 + max_{j<n} |a_j| / |a_n|. Requires n >= 1.
double cauchy_bound(const Polynomial& p);

/// The degree n+2 polynomial (t1 - z)(t2 + z) p(z). Requires t1 > 0, t2 >= 0.
Polynomial multiply_enestrom_factors(const Polynomial& p, double t1, double t2);

/// Default tolerance for coefficient-condition sign tests: 1e-10 * max_j |a_j|.
double default_condition_tol(const Polynomial& p);

}  // namespace rootdisk
