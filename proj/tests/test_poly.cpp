#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"

#include "generate.hpp"
#include "numeric.hpp"
#include "poly.hpp"

using namespace rootdisk;

TEST_SUITE_BEGIN("poly");

TEST_CASE("construction keeps ascending coefficients and degree") {
    Polynomial p({cplx{4, 0}, cplx{1, 0}, cplx{1, 0}, cplx{1, 0}});
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0) == cplx{4, 0});
    CHECK(p.coeff(3) == cplx{1, 0});
}

TEST_CASE("out-of-range coefficients read as zero") {
    Polynomial p({1.0, 2.0});
    CHECK(p.coeff(-1) == cplx{0, 0});
    CHECK(p.coeff(5) == cplx{0, 0});
}

TEST_CASE("exact leading zeros are trimmed") {
    Polynomial p({cplx{1, 0}, cplx{2, 0}, cplx{0, 0}, cplx{0, 0}});
    CHECK(p.degree() == 1);
}

TEST_CASE("relative threshold trims tiny leading coefficients") {
    Polynomial p({cplx{1, 0}, cplx{1e-300, 0}}, 1e-12);
    CHECK(p.degree() == 0);
}

TEST_CASE("invalid inputs throw") {
    CHECK_THROWS_AS(Polynomial({}), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial({cplx{0, 0}, cplx{0, 0}}), std::invalid_argument);
    double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Polynomial({cplx{inf, 0}, cplx{1, 0}}), std::invalid_argument);
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Polynomial({cplx{0, nan}, cplx{1, 0}}), std::invalid_argument);
}

TEST_CASE("nonzero constants survive; the zero polynomial is rejected") {
    Polynomial c({cplx{3, 1}});
    CHECK(c.degree() == 0);
    CHECK_THROWS_AS(Polynomial({cplx{0, 0}}), std::invalid_argument);
}

TEST_CASE("views expose parts and moduli") {
    Polynomial p({cplx{3, -4}, cplx{0, 2}});
    CHECK(p.real_part(0) == 3.0);
    CHECK(p.imag_part(0) == -4.0);
    CHECK(p.modulus(0) == doctest::Approx(5.0));
    CHECK(p.max_modulus() == doctest::Approx(5.0));
    CHECK(p.real_parts() == std::vector<double>{3.0, 0.0});
    CHECK(p.imag_parts() == std::vector<double>{-4.0, 2.0});
}

TEST_CASE("evaluation matches the expanded sum") {
    Polynomial p({1.0, 2.0, 3.0});
    CHECK(eval(p, cplx{2, 0}) == cplx{17, 0});
    cplx z{0.5, -1.25};
    cplx direct = cplx{1, 0} + cplx{2, 0} * z + cplx{3, 0} * z * z;
    CHECK(std::abs(eval(p, z) - direct) < 1e-14);
}

TEST_CASE("cauchy bound is 1 + max ratio and needs degree >= 1") {
    Polynomial p({1.0, 2.0, 3.0});
    CHECK(cauchy_bound(p) == doctest::Approx(1.0 + 2.0 / 3.0));
    CHECK_THROWS_AS(cauchy_bound(Polynomial({cplx{1, 0}})), std::invalid_argument);
}

TEST_CASE("enclosing radius adds center modulus") {
    Disk d{cplx{3, 4}, 2.0};
    CHECK(enclosing_radius(d) == doctest::Approx(7.0));
}

TEST_CASE("factor product has fixed coefficients on the worked example") {
    Polynomial p({4.0, 1.0, 1.0, 1.0});
    Polynomial f = multiply_enestrom_factors(p, 1.0, 0.0);
    CHECK(f.degree() == 5);
    const cplx expected[] = {{0, 0}, {4, 0}, {-3, 0}, {0, 0}, {0, 0}, {-1, 0}};
    for (int j = 0; j <= 5; ++j) CHECK(f.coeff(j) == expected[j]);
}

TEST_CASE("factor product of a constant") {
    Polynomial f = multiply_enestrom_factors(Polynomial({cplx{1, 0}}), 2.0, 1.0);
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0) == cplx{2, 0});
    CHECK(f.coeff(1) == cplx{1, 0});
    CHECK(f.coeff(2) == cplx{-1, 0});
}

TEST_CASE("factor product agrees with direct evaluation") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(0, 6));
        std::vector<cplx> coeffs;
        for (int j = 0; j <= n; ++j)
            coeffs.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
        coeffs.back() += cplx{3, 0};  // keep the leading coefficient nonzero
        Polynomial p(coeffs);
        double t1 = rng.uniform(0.2, 3.0);
        double t2 = rng.uniform(0.0, t1);
        Polynomial f = multiply_enestrom_factors(p, t1, t2);
        cplx z{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        cplx direct = (t1 - z) * (t2 + z) * eval(p, z);
        CHECK(std::abs(eval(f, z) - direct) < 1e-10 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("factor product validates parameters") {
    Polynomial p({1.0, 1.0});
    CHECK_THROWS_AS(multiply_enestrom_factors(p, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(multiply_enestrom_factors(p, 1.0, -0.5), std::invalid_argument);
}

TEST_CASE("default condition tolerance scales with the coefficients") {
    Polynomial p({4.0, 1.0, 1.0, 1.0});
    CHECK(default_condition_tol(p) == doctest::Approx(4e-10));
}

TEST_CASE("scaled quotient matches direct division in the normal range") {
    CHECK(pow_quotient(8.0, 2.0, 3) == doctest::Approx(1.0));
    CHECK(pow_quotient(3.0, 2.0, -2) == doctest::Approx(12.0));
    CHECK(pow_quotient(0.0, 2.0, 100) == 0.0);
    CHECK(pow_quotient(-8.0, 2.0, 3) == doctest::Approx(-1.0));
}

TEST_CASE("scaled quotient survives denominators outside the double range") {
    // 1e300 / 10^350 = 1e-50: the naive power overflows to infinity.
    CHECK(pow_quotient(1e300, 10.0, 350) == doctest::Approx(1e-50));
    // 1e-300 * 10^350 = 1e50: the naive power underflows to zero.
    CHECK(pow_quotient(1e-300, 10.0, -350) == doctest::Approx(1e50));
}

TEST_SUITE_END();
