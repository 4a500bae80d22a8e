#include <cmath>

#include "doctest.h"

#include "bounds.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "search.hpp"

using namespace rootdisk;

TEST_SUITE_BEGIN("search");

TEST_CASE("one-sided real optimum at t1 = 1 for [1,1,1]") {
    SearchResult result = optimize_params(Polynomial({1.0, 1.0, 1.0}), Theorem::AzizReal);
    REQUIRE(result.best.has_value());
    CHECK(std::abs(result.best->hypothesis.t1 - 1.0) <= 1e-6);
    CHECK(result.best->disk.radius == doctest::Approx(1.0));
    CHECK(result.evaluations > 0);
    CHECK(result.feasible_fraction > 0.0);
    CHECK(result.feasible_fraction < 1.0);
}

TEST_CASE("one-sided real optimum approaches t1 = 5 for [6,5,1]") {
    SearchResult result = optimize_params(Polynomial({6.0, 5.0, 1.0}), Theorem::AzizReal);
    REQUIRE(result.best.has_value());
    double t1 = result.best->hypothesis.t1;
    CHECK(t1 >= 5.0 - 1e-12);  // anything below 5 violates the conditions
    CHECK(t1 <= 5.0 + 1e-4);
}

TEST_CASE("off-center search on the worked fixture reaches radius 7") {
    SearchResult result = optimize_params(Polynomial({4.0, 1.0, 1.0, 1.0}), Theorem::Thm17);
    REQUIRE(result.best.has_value());
    CHECK(result.best->enclosing() <= 7.0);
    CHECK(result.best->hypothesis.t1 == 1.0);
    CHECK(result.best->hypothesis.t2 == 0.0);
}

TEST_CASE("search result never loses to the canonical parameter points") {
    Polynomial p({4.0, 1.0, 1.0, 1.0});
    for (Theorem thm : {Theorem::AzizT, Theorem::RsmComplex, Theorem::Thm110}) {
        CAPTURE(theorem_name(thm));
        SearchResult result = optimize_params(p, thm);
        REQUIRE(result.best.has_value());
        BoundReport at_one = bound_theorem(p, thm, 1.0, 0.0, {});
        if (at_one.ok()) CHECK(result.best->enclosing() <= at_one.enclosing() + 1e-12);
    }
}

TEST_CASE("single-parameter search beats the default scale when possible") {
    // [1,3,1]: radius 5t at t = 1; smaller t shrinks it until the peak moves.
    SearchResult result = optimize_params(Polynomial({1.0, 3.0, 1.0}), Theorem::AzizT);
    REQUIRE(result.best.has_value());
    BoundReport at_one = bound_aziz_t(Polynomial({1.0, 3.0, 1.0}), 1.0);
    REQUIRE(at_one.ok());
    CHECK(result.best->enclosing() < at_one.enclosing());
    RootSet roots = find_roots(Polynomial({1.0, 3.0, 1.0}));
    CHECK(verify_containment(roots, result.best->disk, 1e-10).first);
}

TEST_CASE("parameter-free bounds cannot be searched") {
    Polynomial p({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(optimize_params(p, Theorem::EK), std::invalid_argument);
    CHECK_THROWS_AS(optimize_params(p, Theorem::GovilRahman), std::invalid_argument);
    CHECK_THROWS_AS(feasible_region_sample(p, Theorem::EK), std::invalid_argument);
}

TEST_CASE("invalid configs throw") {
    Polynomial p({1.0, 2.0, 3.0});
    SearchConfig bad;
    bad.grid_points = 1;
    CHECK_THROWS_AS(optimize_params(p, Theorem::AzizReal, bad), std::invalid_argument);
    bad = {};
    bad.t1_max_factor = 0.0;
    CHECK_THROWS_AS(optimize_params(p, Theorem::AzizReal, bad), std::invalid_argument);
    bad = {};
    bad.refine_iterations = -1;
    CHECK_THROWS_AS(optimize_params(p, Theorem::AzizReal, bad), std::invalid_argument);
}

TEST_CASE("an infeasible family yields a result, not an exception") {
    // Complex coefficients can never satisfy the positive-real hypotheses.
    Polynomial p({cplx{1, 1}, cplx{2, -1}, cplx{3, 0.5}});
    SearchResult result = optimize_params(p, Theorem::Cor112);
    CHECK_FALSE(result.best.has_value());
    CHECK(result.evaluations > 0);
    CHECK(result.feasible_fraction == 0.0);
}

TEST_CASE("feasible sample points all re-verify") {
    Polynomial p({6.0, 5.0, 1.0});
    SearchConfig cfg;
    cfg.grid_points = 16;
    auto points = feasible_region_sample(p, Theorem::AzizReal, cfg);
    REQUIRE_FALSE(points.empty());
    for (const auto& pt : points) {
        CAPTURE(pt.t1);
        CAPTURE(pt.t2);
        HypothesisReport rep = check_aziz_real(p, pt.t1, pt.t2, -1.0);
        CHECK(rep.ok);
        CHECK(rep.k == pt.k);
        CHECK(pt.t1 >= 5.0 - 1e-9);  // the feasible region starts at t1 = 5
    }
}

TEST_CASE("sample grid hits the boundary optimum exactly for [1,1,1]") {
    auto points = feasible_region_sample(Polynomial({1.0, 1.0, 1.0}), Theorem::AzizReal);
    bool has_unit = false;
    for (const auto& pt : points)
        if (pt.t1 == 1.0 && pt.t2 == 0.0) has_unit = true;
    CHECK(has_unit);
}

TEST_CASE("second split index is reported for the part-split families") {
    SearchResult result =
        optimize_params(Polynomial({4.0, 1.0, 1.0, 1.0}), Theorem::Thm110);
    REQUIRE(result.best.has_value());
    CHECK(result.best->hypothesis.m.has_value());
}

TEST_SUITE_END();
