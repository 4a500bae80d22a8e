#include "bounds.hpp"

#include <cmath>
#include <fmt/core.h>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "numeric.hpp"

namespace rootdisk {

namespace {

// sum over nu = from..to of |a_nu| / t^{n-nu-1}
double modulus_tail(const Polynomial& p, double t, int from, int to) {
    double s = 0.0;
    for (int j = from; j <= to; ++j) {
        s += pow_quotient(p.modulus(j), t, p.degree() - j - 1);
    }
    return s;
}

// Installs an explicit sector override: it must be a valid sector that still
// contains every coefficient argument, else the report turns infeasible.
bool apply_wedge_override(const Polynomial& p, const std::optional<Wedge>& wedge,
                          HypothesisReport& hyp) {
    if (!wedge) return true;
    constexpr double half_pi = std::numbers::pi / 2.0;
    Wedge w{wrap_angle(wedge->beta), wedge->alpha};
    if (!(w.alpha >= 0.0) || w.alpha > half_pi + kWedgeAngularTol) {
        hyp.violations.push_back("supplied sector half-angle must lie in [0, pi/2]");
        hyp.ok = false;
        return false;
    }
    if (!wedge_contains_coeffs(p, w)) {
        hyp.violations.push_back("supplied sector does not contain every coefficient");
        hyp.ok = false;
        return false;
    }
    w.alpha = std::min(w.alpha, half_pi);
    hyp.wedge = w;
    return true;
}

// Validates an explicit split index against the feasible range recorded in
// the hypothesis; records a violation and flips the report infeasible
// otherwise.
bool validate_index(BoundReport& rep, int idx, const std::optional<SplitRange>& range,
                    std::string_view label) {
    if (range && range->contains(idx)) return true;
    rep.hypothesis.ok = false;
    rep.status = BoundStatus::Infeasible;
    if (range) {
        rep.hypothesis.violations.push_back(fmt::format(
            "{} = {} outside feasible range [{}, {}]", label, idx, range->lo, range->hi));
    } else {
        rep.hypothesis.violations.push_back(
            fmt::format("{} = {} supplied but no feasible range exists", label, idx));
    }
    return false;
}

struct Choice {
    int idx = 0;
    double radius = 0.0;
};

// Minimizes radius_at over the range; candidates with nonnegative radius are
// preferred over negative ones (a negative radius is an anomaly, not a
// smaller disk), ties resolved toward the smaller index.
template <typename F>
Choice scan_min(const SplitRange& range, F&& radius_at) {
    Choice best{range.lo, radius_at(range.lo)};
    for (int k = range.lo + 1; k <= range.hi; ++k) {
        const double r = radius_at(k);
        const bool best_bad = best.radius < 0.0;
        const bool cur_bad = r < 0.0;
        if ((best_bad && !cur_bad) || (best_bad == cur_bad && r < best.radius)) {
            best = {k, r};
        }
    }
    return best;
}

// Plain minimizer for one additive term of a two-index radius: a negative
// term is legitimate there, only the total radius can be anomalous.
template <typename F>
Choice scan_min_plain(const SplitRange& range, F&& value_at) {
    Choice best{range.lo, value_at(range.lo)};
    for (int k = range.lo + 1; k <= range.hi; ++k) {
        const double v = value_at(k);
        if (v < best.radius) best = {k, v};
    }
    return best;
}

// Shared disk evaluation for the off-center modulus-split bound; the t2 = 0
// corollary routes through the same code so the two agree to the last bit.
Disk off_center_modulus_disk(const Polynomial& p, double t1, double t2, int k,
                             double alpha) {
    const int n = p.degree();
    const double ratio = std::abs(p.coeff(n - 1) / p.coeff(n));
    const double cos_a = std::cos(alpha);
    const double sin_a = std::sin(alpha);
    const double radius =
        pow_quotient(2.0 * (t2 * p.modulus(k + 1) + p.modulus(k)), t1, n - k - 1) /
            p.modulus(n) * cos_a +
        2.0 * sin_a / p.modulus(n) * modulus_tail(p, t1, 0, n - 2) +
        (t2 + ratio) * (sin_a - cos_a);
    const cplx center = cplx{t1 - t2, 0.0} - p.coeff(n - 1) / p.coeff(n);
    return Disk{center, radius};
}

// Applies the computed disk, downgrading to Anomaly on a negative radius.
void finish(BoundReport& rep, Disk disk) {
    rep.disk = disk;
    if (disk.radius < 0.0) {
        rep.status = BoundStatus::Anomaly;
        rep.notes.push_back(fmt::format(
            "negative radius {:g} under satisfied hypotheses", disk.radius));
    } else {
        rep.status = BoundStatus::Ok;
    }
}

BoundReport start(Theorem thm, HypothesisReport hyp) {
    BoundReport rep;
    rep.theorem = thm;
    rep.hypothesis = std::move(hyp);
    rep.status = BoundStatus::Infeasible;
    return rep;
}

}  // namespace

BoundReport bound_ek(const Polynomial& p, double tol) {
    BoundReport rep = start(Theorem::EK, check_theorem(p, Theorem::EK, 1.0, 0.0, tol));
    if (!rep.hypothesis.ok) return rep;
    finish(rep, Disk{cplx{}, 1.0});
    return rep;
}

BoundReport bound_aziz_real(const Polynomial& p, double t1, double t2, double tol) {
    BoundReport rep = start(Theorem::AzizReal, check_aziz_real(p, t1, t2, tol));
    if (!rep.hypothesis.ok) return rep;
    finish(rep, Disk{cplx{}, t1});
    return rep;
}

BoundReport bound_govil_rahman(const Polynomial& p, double tol,
                               const std::optional<Wedge>& wedge) {
    BoundReport rep =
        start(Theorem::GovilRahman, check_theorem(p, Theorem::GovilRahman, 1.0, 0.0, tol));
    if (!apply_wedge_override(p, wedge, rep.hypothesis)) return rep;
    if (!rep.hypothesis.ok) return rep;
    const double alpha = rep.hypothesis.wedge->alpha;
    double sum = 0.0;
    for (int j = 0; j <= p.degree(); ++j) sum += p.modulus(j);
    const double radius = std::cos(alpha) + std::sin(alpha) +
                          2.0 * std::sin(alpha) / p.modulus(p.degree()) * sum;
    finish(rep, Disk{cplx{}, radius});
    return rep;
}

BoundReport bound_aziz_t(const Polynomial& p, double t, std::optional<int> k, double tol,
                         const std::optional<Wedge>& wedge) {
    BoundReport rep = start(Theorem::AzizT, check_aziz_t(p, t, tol));
    if (!apply_wedge_override(p, wedge, rep.hypothesis)) return rep;
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    const int n = p.degree();
    const double alpha = rep.hypothesis.wedge->alpha;
    const double cos_a = std::cos(alpha);
    const double sin_a = std::sin(alpha);
    const double tail = 2.0 * sin_a * modulus_tail(p, t, 0, n) / p.modulus(n);
    auto radius_at = [&](int kk) {
        const double peak = 2.0 * pow_quotient(p.modulus(kk), t, n - kk) / p.modulus(n);
        return t * ((peak - 1.0) * cos_a + sin_a) + tail;
    };
    const Choice c = k ? Choice{*k, radius_at(*k)} : scan_min(*rep.hypothesis.k_range, radius_at);
    rep.hypothesis.k = c.idx;
    finish(rep, Disk{cplx{}, c.radius});
    return rep;
}

BoundReport bound_rsm_complex(const Polynomial& p, double t1, double t2,
                              std::optional<int> k, double tol,
                              const std::optional<Wedge>& wedge) {
    BoundReport rep = start(Theorem::RsmComplex, check_rsm_complex(p, t1, t2, tol));
    if (!apply_wedge_override(p, wedge, rep.hypothesis)) return rep;
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    const int n = p.degree();
    const double alpha = rep.hypothesis.wedge->alpha;
    const double cos_a = std::cos(alpha);
    const double sin_a = std::sin(alpha);
    const double tail = 2.0 * sin_a / p.modulus(n) * modulus_tail(p, t1, 0, n - 1);
    auto radius_at = [&](int kk) {
        const double peak =
            pow_quotient(2.0 * (p.modulus(kk) + t2 * p.modulus(kk + 1)), t1, n - kk) /
            p.modulus(n);
        return t1 * ((peak - 1.0) * cos_a + sin_a) + tail;
    };
    const Choice c = k ? Choice{*k, radius_at(*k)} : scan_min(*rep.hypothesis.k_range, radius_at);
    rep.hypothesis.k = c.idx;
    if (c.idx >= n - 1) {
        rep.notes.push_back("split index k > n-2 is an edge case for this bound formula");
    }
    finish(rep, Disk{cplx{}, c.radius});
    return rep;
}

BoundReport bound_rsm_parts(const Polynomial& p, double t1, double t2,
                            std::optional<int> k, std::optional<int> m, double tol) {
    BoundReport rep = start(Theorem::RsmParts, check_rsm_parts(p, t1, t2, tol));
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    if (m) {
        rep.hypothesis.m = *m;
        if (!validate_index(rep, *m, rep.hypothesis.m_range, "m")) return rep;
    }
    const int n = p.degree();
    auto k_term = [&](int kk) {
        return 2.0 * pow_quotient(p.real_part(kk) + t2 * p.real_part(kk + 1), t1, n - kk);
    };
    auto m_term = [&](int mm) {
        return 2.0 * pow_quotient(p.imag_part(mm) + t2 * p.imag_part(mm + 1), t1, n - mm);
    };
    // The radius is (k term) + (m term) + constant, so the two scans are
    // independent.
    const Choice ck =
        k ? Choice{*k, k_term(*k)} : scan_min_plain(*rep.hypothesis.k_range, k_term);
    const Choice cm =
        m ? Choice{*m, m_term(*m)} : scan_min_plain(*rep.hypothesis.m_range, m_term);
    rep.hypothesis.k = ck.idx;
    rep.hypothesis.m = cm.idx;
    const double radius =
        t1 / p.modulus(n) *
        (ck.radius + cm.radius - (p.real_part(n) + p.imag_part(n)));
    finish(rep, Disk{cplx{}, radius});
    return rep;
}

BoundReport bound_thm17(const Polynomial& p, double t1, double t2, std::optional<int> k,
                        double tol, const std::optional<Wedge>& wedge) {
    BoundReport rep = start(Theorem::Thm17, check_thm17(p, t1, t2, tol));
    if (!apply_wedge_override(p, wedge, rep.hypothesis)) return rep;
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    const double alpha = rep.hypothesis.wedge->alpha;
    auto radius_at = [&](int kk) {
        return off_center_modulus_disk(p, t1, t2, kk, alpha).radius;
    };
    const Choice c = k ? Choice{*k, radius_at(*k)} : scan_min(*rep.hypothesis.k_range, radius_at);
    rep.hypothesis.k = c.idx;
    finish(rep, off_center_modulus_disk(p, t1, t2, c.idx, alpha));
    return rep;
}

BoundReport bound_cor19(const Polynomial& p, double t, std::optional<int> k, double tol,
                        const std::optional<Wedge>& wedge) {
    BoundReport rep = start(Theorem::Cor19, check_cor19(p, t, tol));
    if (!apply_wedge_override(p, wedge, rep.hypothesis)) return rep;
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    const double alpha = rep.hypothesis.wedge->alpha;
    auto radius_at = [&](int kk) {
        return off_center_modulus_disk(p, t, 0.0, kk, alpha).radius;
    };
    const Choice c = k ? Choice{*k, radius_at(*k)} : scan_min(*rep.hypothesis.k_range, radius_at);
    rep.hypothesis.k = c.idx;
    finish(rep, off_center_modulus_disk(p, t, 0.0, c.idx, alpha));
    return rep;
}

BoundReport bound_thm110(const Polynomial& p, double t1, double t2, std::optional<int> k,
                         std::optional<int> m, double tol) {
    BoundReport rep = start(Theorem::Thm110, check_thm110(p, t1, t2, tol));
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    if (m) {
        rep.hypothesis.m = *m;
        if (!validate_index(rep, *m, rep.hypothesis.m_range, "m")) return rep;
    }
    const int n = p.degree();
    auto k_term = [&](int kk) {
        return 2.0 * pow_quotient(p.real_part(kk + 1) * t2 + p.real_part(kk), t1,
                                  n - kk - 1);
    };
    auto m_term = [&](int mm) {
        return 2.0 * pow_quotient(p.imag_part(mm + 1) * t2 + p.imag_part(mm), t1,
                                  n - mm - 1);
    };
    const Choice ck =
        k ? Choice{*k, k_term(*k)} : scan_min_plain(*rep.hypothesis.k_range, k_term);
    const Choice cm =
        m ? Choice{*m, m_term(*m)} : scan_min_plain(*rep.hypothesis.m_range, m_term);
    rep.hypothesis.k = ck.idx;
    rep.hypothesis.m = cm.idx;
    const double radius =
        (ck.radius + cm.radius -
         (t2 * p.real_part(n) + t1 * p.imag_part(n) + p.real_part(n - 1))) /
        p.modulus(n);
    const cplx center =
        -cplx{p.real_part(n - 1) - (t1 - t2) * p.real_part(n), 0.0} / p.coeff(n);
    finish(rep, Disk{center, radius});
    return rep;
}

BoundReport bound_cor112(const Polynomial& p, double t1, double t2, std::optional<int> k,
                         double tol) {
    BoundReport rep = start(Theorem::Cor112, check_cor112(p, t1, t2, tol));
    if (!rep.hypothesis.ok) return rep;
    if (k) {
        rep.hypothesis.k = *k;
        if (!validate_index(rep, *k, rep.hypothesis.k_range, "k")) return rep;
    }
    const int n = p.degree();
    const double an = p.real_part(n);
    const double ratio = p.real_part(n - 1) / an;
    auto radius_at = [&](int kk) {
        return t2 + ratio +
               pow_quotient(2.0 * t2 * p.real_part(kk + 1) + 2.0 * p.real_part(kk), t1,
                            n - kk - 1) /
                   an;
    };
    const Choice c = k ? Choice{*k, radius_at(*k)} : scan_min(*rep.hypothesis.k_range, radius_at);
    rep.hypothesis.k = c.idx;
    finish(rep, Disk{cplx{t1 - t2 - ratio, 0.0}, c.radius});
    return rep;
}

BoundReport bound_theorem(const Polynomial& p, Theorem thm, double t1, double t2,
                          const BoundOptions& opt) {
    switch (thm) {
        case Theorem::EK:
            return bound_ek(p, opt.tol);
        case Theorem::AzizReal:
            return bound_aziz_real(p, t1, t2, opt.tol);
        case Theorem::GovilRahman:
            return bound_govil_rahman(p, opt.tol, opt.wedge);
        case Theorem::AzizT:
            return bound_aziz_t(p, t1, opt.k, opt.tol, opt.wedge);
        case Theorem::RsmComplex:
            return bound_rsm_complex(p, t1, t2, opt.k, opt.tol, opt.wedge);
        case Theorem::RsmParts:
            return bound_rsm_parts(p, t1, t2, opt.k, opt.m, opt.tol);
        case Theorem::Thm17:
            return bound_thm17(p, t1, t2, opt.k, opt.tol, opt.wedge);
        case Theorem::Cor19:
            return bound_cor19(p, t1, opt.k, opt.tol, opt.wedge);
        case Theorem::Thm110:
            return bound_thm110(p, t1, t2, opt.k, opt.m, opt.tol);
        case Theorem::Cor112:
            return bound_cor112(p, t1, t2, opt.k, opt.tol);
    }
    throw std::logic_error("unknown theorem");
}

BoundReport best_bound(const std::vector<BoundReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("best_bound needs at least one report");
    const BoundReport* best = nullptr;
    for (const BoundReport& r : reports) {
        if (!r.ok()) throw std::invalid_argument("best_bound requires status-Ok reports");
        if (best == nullptr || r.enclosing() < best->enclosing() ||
            (r.enclosing() == best->enclosing() &&
             static_cast<int>(r.theorem) < static_cast<int>(best->theorem))) {
            best = &r;
        }
    }
    return *best;
}

}  // namespace rootdisk
