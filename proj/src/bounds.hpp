#pragma once

#include <optional>
#include <vector>

#include "conditions.hpp"
#include "poly.hpp"
#include "wedge.hpp"

namespace rootdisk {

enum class BoundStatus {
    Ok,          // hypotheses hold, disk is valid
    Infeasible,  // hypotheses fail (see hypothesis.violations)
    Anomaly,     // hypotheses hold but the computed radius is negative
};

/// A containment disk together with the hypothesis evaluation that produced
/// it. When the status is Anomaly the disk carries the offending negative
/// radius for diagnosis; it is never clamped.
struct BoundReport {
    Theorem theorem{};
    HypothesisReport hypothesis;
    Disk disk{};
    BoundStatus status = BoundStatus::Infeasible;
    std::vector<std::string> notes;  // diagnostics; not part of the wire format

    bool ok() const { return status == BoundStatus::Ok; }
    double enclosing() const { return enclosing_radius(disk); }
};

// Each bound evaluates its disk at an explicit split index k (and m where the
// theorem uses one); passing nullopt scans the feasible range and keeps the
// smallest disk (ties: smallest index). tol < 0 selects the relative default
// tolerance. Bounds that use a coefficient sector accept an explicit wedge
// override; it must still contain every coefficient argument. Hypothesis
// failures come back as Infeasible reports, never exceptions.

BoundReport bound_ek(const Polynomial& p, double tol = -1.0);

BoundReport bound_aziz_real(const Polynomial& p, double t1, double t2, double tol = -1.0);

BoundReport bound_govil_rahman(const Polynomial& p, double tol = -1.0,
                               const std::optional<Wedge>& wedge = {});

BoundReport bound_aziz_t(const Polynomial& p, double t, std::optional<int> k = {},
                         double tol = -1.0, const std::optional<Wedge>& wedge = {});

BoundReport bound_rsm_complex(const Polynomial& p, double t1, double t2,
                              std::optional<int> k = {}, double tol = -1.0,
                              const std::optional<Wedge>& wedge = {});

BoundReport bound_rsm_parts(const Polynomial& p, double t1, double t2,
                            std::optional<int> k = {}, std::optional<int> m = {},
                            double tol = -1.0);

BoundReport bound_thm17(const Polynomial& p, double t1, double t2,
                        std::optional<int> k = {}, double tol = -1.0,
                        const std::optional<Wedge>& wedge = {});

BoundReport bound_cor19(const Polynomial& p, double t, std::optional<int> k = {},
                        double tol = -1.0, const std::optional<Wedge>& wedge = {});

BoundReport bound_thm110(const Polynomial& p, double t1, double t2,
                         std::optional<int> k = {}, std::optional<int> m = {},
                         double tol = -1.0);

BoundReport bound_cor112(const Polynomial& p, double t1, double t2,
                         std::optional<int> k = {}, double tol = -1.0);

/// Optional knobs for the uniform dispatcher.
struct BoundOptions {
    std::optional<int> k;
    std::optional<int> m;
    double tol = -1.0;
    std::optional<Wedge> wedge;
};

/// Evaluates the named bound at (t1, t2); for the single-parameter chain
/// bounds t1 is the scale t, and EK / GovilRahman ignore the parameters.
BoundReport bound_theorem(const Polynomial& p, Theorem thm, double t1, double t2,
                          const BoundOptions& opt = {});

/// The report with minimal enclosing radius; ties broken by theorem enum
/// order. All inputs must be status-Ok; throws on an empty list or any
/// non-Ok entry.
BoundReport best_bound(const std::vector<BoundReport>& reports);

}  // namespace rootdisk
