#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "bounds.hpp"
#include "poly.hpp"
#include "roots.hpp"

using namespace rootdisk;
using std::numbers::pi;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("classical unit disk") {
    BoundReport rep = bound_ek(Polynomial({1.0, 2.0, 3.0}));
    CHECK(rep.ok());
    CHECK(rep.disk.center == cplx{0, 0});
    CHECK(rep.disk.radius == 1.0);
    CHECK(rep.enclosing() == 1.0);
    CHECK_FALSE(bound_ek(Polynomial({3.0, 2.0, 1.0})).ok());
}

TEST_CASE("one-sided real bound radius is t1") {
    Polynomial p({6.0, 5.0, 1.0});
    BoundReport rep = bound_aziz_real(p, 5.0, 0.0);
    CHECK(rep.ok());
    CHECK(rep.disk.radius == 5.0);
    // roots are -2 and -3, well inside
    CHECK_FALSE(bound_aziz_real(p, 3.0, 0.0).ok());
}

TEST_CASE("sector chain bound on a rotated coefficient") {
    // args (0, pi/6, 0) fit in a sector with alpha = beta = pi/12.
    Polynomial p({cplx{1, 0}, std::polar(2.0, pi / 6), cplx{3, 0}});
    BoundReport rep = bound_govil_rahman(p);
    REQUIRE(rep.ok());
    double a = pi / 12;
    double expected = std::cos(a) + std::sin(a) + 2.0 * std::sin(a) / 3.0 * (1.0 + 2.0 + 3.0);
    CHECK(rep.disk.radius == doctest::Approx(expected));
    REQUIRE(rep.hypothesis.wedge.has_value());
    CHECK(rep.hypothesis.wedge->alpha == doctest::Approx(a));
    CHECK(rep.hypothesis.wedge->beta == doctest::Approx(a));
}

TEST_CASE("sector chain bound is exactly 1 for positive nondecreasing chains") {
    BoundReport rep = bound_govil_rahman(Polynomial({1.0, 2.0, 3.0}));
    REQUIRE(rep.ok());
    CHECK(rep.disk.radius == 1.0);  // alpha = 0 collapses every sector term
}

TEST_CASE("scaled chain bound at an interior peak") {
    Polynomial p({1.0, 3.0, 1.0});
    BoundReport rep = bound_aziz_t(p, 1.0);
    REQUIRE(rep.ok());
    CHECK(rep.hypothesis.k == 1);
    CHECK(rep.disk.radius == doctest::Approx(5.0));  // t(2|a_k| - 1) at alpha = 0
    RootSet roots = find_roots(p);
    CHECK(verify_containment(roots, rep.disk, 1e-10).first);
}

TEST_CASE("origin-centered modulus-split bound is tight on [1,1,1,1]") {
    Polynomial p({1.0, 1.0, 1.0, 1.0});
    BoundReport rep = bound_rsm_complex(p, 1.0, 0.0, 0);
    REQUIRE(rep.ok());
    CHECK(rep.disk.radius == doctest::Approx(1.0));
    RootSet roots = find_roots(p);  // -1, i, -i all on the unit circle
    CHECK(tightness(roots, rep.disk) == doctest::Approx(1.0));
}

TEST_CASE("worked fixture yields radius 7 under all four split bounds") {
    Polynomial p({4.0, 1.0, 1.0, 1.0});
    for (Theorem thm : {Theorem::RsmComplex, Theorem::RsmParts, Theorem::Thm17,
                        Theorem::Thm110}) {
        CAPTURE(theorem_name(thm));
        BoundReport rep = bound_theorem(p, thm, 1.0, 0.0, {});
        REQUIRE(rep.ok());
        CHECK(rep.disk.radius == 7.0);
        CHECK(std::abs(rep.disk.center) == 0.0);
        CHECK(rep.hypothesis.k == 0);
    }
}

TEST_CASE("positive-real off-center bound keeps its printed larger radius") {
    BoundReport rep = bound_cor112(Polynomial({4.0, 1.0, 1.0, 1.0}), 1.0, 0.0);
    REQUIRE(rep.ok());
    CHECK(rep.disk.center == cplx{0, 0});
    CHECK(rep.disk.radius == 9.0);  // t2 + a_{n-1}/a_n + 2(t2 a_{k+1} + a_k)/(t1^{n-k-1} a_n)
}

TEST_CASE("explicit split index outside the feasible range is rejected") {
    Polynomial p({4.0, 1.0, 1.0, 1.0});
    BoundReport rep = bound_rsm_complex(p, 1.0, 0.0, 2);
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.hypothesis.violations.empty());
    CHECK(rep.hypothesis.violations.front().find("outside feasible range") !=
          std::string::npos);
}

TEST_CASE("automatic index scan picks the smallest disk") {
    // [1,1,1] at t1 = 1 splits anywhere in [0,2]; radii differ per k.
    Polynomial p({1.0, 1.0, 1.0});
    BoundReport autok = bound_rsm_complex(p, 1.0, 0.0);
    REQUIRE(autok.ok());
    for (int k = 0; k <= 2; ++k) {
        BoundReport at = bound_rsm_complex(p, 1.0, 0.0, k);
        REQUIRE(at.ok());
        CHECK(autok.disk.radius <= at.disk.radius + 1e-15);
    }
}

TEST_CASE("sector override widens the bound but stays sound") {
    Polynomial p({1.0, 1.0, 1.0, 1.0});
    BoundReport base = bound_rsm_complex(p, 1.0, 0.0, 0);
    BoundReport wide = bound_rsm_complex(p, 1.0, 0.0, 0, -1.0, Wedge{0.0, 0.3});
    REQUIRE(base.ok());
    REQUIRE(wide.ok());
    CHECK(wide.disk.radius > base.disk.radius);
    RootSet roots = find_roots(p);
    CHECK(verify_containment(roots, wide.disk, 1e-10).first);
}

TEST_CASE("sector override must contain the coefficients") {
    Polynomial p({cplx{1, 0}, std::polar(1.0, 0.5), cplx{1, 0}, cplx{1, 0}});
    BoundReport rep = bound_rsm_complex(p, 1.0, 0.0, {}, -1.0, Wedge{0.0, 0.1});
    CHECK_FALSE(rep.ok());
}

TEST_CASE("sector override validates the half-angle") {
    Polynomial p({1.0, 1.0, 1.0, 1.0});
    CHECK_FALSE(bound_rsm_complex(p, 1.0, 0.0, {}, -1.0, Wedge{0.0, 2.0}).ok());
}

TEST_CASE("off-center bound at t1 = t2 = 1 stays sound") {
    Polynomial p({1.0, 1.0, 1.0, 1.0});
    BoundReport rep = bound_thm17(p, 1.0, 1.0);
    REQUIRE(rep.ok());
    RootSet roots = find_roots(p);
    CHECK(verify_containment(roots, rep.disk, 1e-10).first);
}

TEST_CASE("parameter validation surfaces as violations, not exceptions") {
    Polynomial p({4.0, 1.0, 1.0, 1.0});
    CHECK_FALSE(bound_thm17(p, 0.0, 0.0).ok());
    CHECK_FALSE(bound_rsm_complex(p, 1.0, 1.0).ok());  // strict t1 > t2 here
    CHECK_FALSE(bound_cor112(p, 1.0, -0.5).ok());
}

TEST_CASE("dispatcher covers every theorem") {
    Polynomial p({1.0, 2.0, 3.0});
    for (Theorem thm : kAllTheorems) {
        CAPTURE(theorem_name(thm));
        BoundReport rep = bound_theorem(p, thm, 1.5, 0.0, {});
        CHECK(rep.theorem == thm);
    }
}

TEST_CASE("best bound picks the smallest enclosing radius") {
    Polynomial p({1.0, 2.0, 3.0});
    std::vector<BoundReport> reports{bound_ek(p), bound_govil_rahman(p),
                                     bound_aziz_real(p, 1.0, 0.0)};
    for (const auto& r : reports) REQUIRE(r.ok());
    BoundReport best = best_bound(reports);
    CHECK(best.enclosing() == 1.0);
    CHECK(best.theorem == Theorem::EK);  // tie with govil_rahman resolves by order
}

TEST_CASE("best bound rejects empty and infeasible input") {
    CHECK_THROWS_AS(best_bound({}), std::invalid_argument);
    std::vector<BoundReport> bad{bound_ek(Polynomial({3.0, 2.0, 1.0}))};
    CHECK_THROWS_AS(best_bound(bad), std::invalid_argument);
}

TEST_CASE("degree-400 chain evaluates without overflow") {
    std::vector<cplx> coeffs(401, cplx{1.0, 0.0});
    Polynomial p(coeffs);
    BoundReport rep = bound_rsm_complex(p, 50.0, 0.0);
    REQUIRE(rep.ok());
    CHECK(rep.hypothesis.k == 400);  // strictly rising conditions force k = n
    CHECK(rep.disk.radius == 50.0);
}

TEST_SUITE_END();
