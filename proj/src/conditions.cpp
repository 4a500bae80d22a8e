#include "conditions.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/core.h>
#include <stdexcept>

namespace rootdisk {

namespace {

constexpr std::array<std::string_view, 10> kTheoremNames = {
    "ek",        "aziz_real", "govil_rahman", "aziz_t", "rsm_complex",
    "rsm_parts", "thm17",     "cor19",        "thm110", "cor112",
};

// Appends "coefficients must be real" style violations; returns true when all
// imaginary parts vanish within tol.
bool require_real(const Polynomial& p, double tol, std::vector<std::string>& viol) {
    bool ok = true;
    for (int j = 0; j <= p.degree(); ++j) {
        if (std::abs(p.imag_part(j)) > tol) {
            viol.push_back(fmt::format("coefficient a_{} is not real within tol", j));
            ok = false;
        }
    }
    return ok;
}

// Validates t1 != 0, t1 >= t2 >= 0 (strict = require t1 > t2 as well).
bool require_params(double t1, double t2, bool strict, std::vector<std::string>& viol) {
    if (!std::isfinite(t1) || !std::isfinite(t2)) {
        viol.push_back("t1 and t2 must be finite");
        return false;
    }
    if (strict) {
        if (!(t1 > t2 && t2 >= 0.0)) {
            viol.push_back("t1 > t2 >= 0 required");
            return false;
        }
        return true;
    }
    if (t1 == 0.0) {
        viol.push_back("t1 must be nonzero");
        return false;
    }
    if (!(t1 >= t2 && t2 >= 0.0)) {
        viol.push_back("t1 >= t2 >= 0 required");
        return false;
    }
    return true;
}

// Runs split_index on condition_seq(c, t1, t2), intersects the feasible range
// with [0, cap], and fills report.k / report.k_range (or the m slots when
// label is "m"). Returns true on success; appends a violation naming the
// sequence (`seq_name`) otherwise.
bool apply_split(HypothesisReport& rep, std::span<const double> c, double t1, double t2,
                 double tol, int cap, std::string_view label, std::string_view seq_name) {
    const auto split = split_index(condition_seq(c, t1, t2), tol);
    const bool is_m = (label == "m");
    if (!split) {
        rep.violations.push_back(
            fmt::format("{} condition sequence admits no sign split", seq_name));
        return false;
    }
    SplitRange r = split->k_range;
    r.lo = std::max(r.lo, 0);
    r.hi = std::min(r.hi, cap);
    if (r.size() == 0) {
        rep.violations.push_back(fmt::format("no split index {} in [0, {}] (feasible range [{}, {}])",
                                             label, cap, split->k_range.lo, split->k_range.hi));
        return false;
    }
    if (is_m) {
        rep.m = r.lo;
        rep.m_range = r;
    } else {
        rep.k = r.lo;
        rep.k_range = r;
    }
    return true;
}

}  // namespace

std::string_view theorem_name(Theorem t) {
    return kTheoremNames[static_cast<size_t>(t)];
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
    for (size_t i = 0; i < kTheoremNames.size(); ++i) {
        if (kTheoremNames[i] == name) return static_cast<Theorem>(i);
    }
    return std::nullopt;
}

bool theorem_is_parameterized(Theorem t) {
    return t != Theorem::EK && t != Theorem::GovilRahman;
}

bool theorem_uses_m(Theorem t) {
    return t == Theorem::RsmParts || t == Theorem::Thm110;
}

bool theorem_uses_wedge(Theorem t) {
    switch (t) {
        case Theorem::GovilRahman:
        case Theorem::AzizT:
        case Theorem::RsmComplex:
        case Theorem::Thm17:
        case Theorem::Cor19:
            return true;
        default:
            return false;
    }
}

double resolve_tol(const Polynomial& p, double tol) {
    return tol >= 0.0 ? tol : default_condition_tol(p);
}

ConditionSeq condition_seq(std::span<const double> c, double t1, double t2) {
    if (c.empty()) throw std::invalid_argument("condition sequence needs a nonempty input");
    if (!(t1 > 0.0) || !(t1 >= t2) || !(t2 >= 0.0)) {
        throw std::invalid_argument("condition sequence requires t1 > 0, t1 >= t2 >= 0");
    }
    const int n = static_cast<int>(c.size()) - 1;
    auto at = [&](int j) { return (j < 0 || j > n) ? 0.0 : c[static_cast<size_t>(j)]; };
    ConditionSeq s;
    s.values.resize(static_cast<size_t>(n) + 1);
    for (int r = 1; r <= n + 1; ++r) {
        s.values[static_cast<size_t>(r - 1)] =
            t1 * t2 * at(r) + (t1 - t2) * at(r - 1) - at(r - 2);
    }
    return s;
}

std::optional<SplitIndices> split_index(const ConditionSeq& s, double tol) {
    if (tol < 0.0) throw std::invalid_argument("split tolerance must be >= 0");
    const int len = static_cast<int>(s.values.size());  // n + 1
    if (len == 0) throw std::invalid_argument("empty condition sequence");
    // k is admissible iff entries 0..k are >= -tol and entries k+1.. are
    // <= tol, so the admissible set is the interval between the earliest
    // all-nonpositive suffix and the end of the nonnegative prefix.
    int prefix = 0;
    while (prefix < len && s.values[static_cast<size_t>(prefix)] >= -tol) ++prefix;
    int suffix_start = len;
    while (suffix_start > 0 && s.values[static_cast<size_t>(suffix_start - 1)] <= tol) {
        --suffix_start;
    }
    SplitRange r{std::max(0, suffix_start - 1), std::min(len - 1, prefix - 1)};
    if (r.size() == 0) return std::nullopt;
    return SplitIndices{r.lo, std::nullopt, r, std::nullopt};
}

bool check_ek(const Polynomial& p, double tol) {
    tol = resolve_tol(p, tol);
    std::vector<std::string> viol;
    if (!require_real(p, tol, viol)) return false;
    if (!(p.real_part(0) > 0.0)) return false;
    for (int j = 1; j <= p.degree(); ++j) {
        if (p.real_part(j) < p.real_part(j - 1) - tol) return false;
    }
    return true;
}

std::pair<std::optional<Wedge>, bool> check_govil_rahman(const Polynomial& p, double tol) {
    tol = resolve_tol(p, tol);
    std::optional<Wedge> w = fit_wedge(p);
    bool chain = true;
    for (int j = 1; j <= p.degree(); ++j) {
        if (p.modulus(j) < p.modulus(j - 1) - tol) {
            chain = false;
            break;
        }
    }
    return {w, chain};
}

std::optional<SplitIndices> check_monotone_t(const Polynomial& p, double t, double tol) {
    if (!(t > 0.0)) throw std::invalid_argument("scaled chain requires t > 0");
    tol = resolve_tol(p, tol);
    if (!(p.modulus(0) > 0.0)) return std::nullopt;
    const int n = p.degree();
    // g_j = t^j |a_j|; comparing g_j with g_{j-1} divides through by t^{j-1},
    // so each step reduces to t|a_j| vs |a_{j-1}| and never overflows.
    auto rising = [&](int j) { return t * p.modulus(j) >= p.modulus(j - 1) - tol; };
    auto falling = [&](int j) { return t * p.modulus(j) <= p.modulus(j - 1) + tol; };
    int hi = 0;
    while (hi < n && rising(hi + 1)) ++hi;
    int lo = n;
    while (lo > 0 && falling(lo)) --lo;
    if (lo > hi) return std::nullopt;
    return SplitIndices{lo, std::nullopt, SplitRange{lo, hi}, std::nullopt};
}

HypothesisReport check_aziz_real(const Polynomial& p, double t1, double t2, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::AzizReal, .t1 = t1, .t2 = t2};
    require_real(p, tol, rep.violations);
    if (require_params(t1, t2, /*strict=*/true, rep.violations) && rep.violations.empty()) {
        const ConditionSeq s = condition_seq(p.real_parts(), t1, t2);
        for (size_t i = 0; i < s.values.size(); ++i) {
            if (s.values[i] < -tol) {
                rep.violations.push_back(
                    fmt::format("condition s_{} = {:g} is negative", i + 1, s.values[i]));
            }
        }
    }
    rep.ok = rep.violations.empty();
    if (rep.ok) {
        rep.k = p.degree();
        rep.k_range = SplitRange{p.degree(), p.degree()};
    }
    return rep;
}

HypothesisReport check_aziz_t(const Polynomial& p, double t, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::AzizT, .t1 = t, .t2 = 0.0};
    if (!(std::isfinite(t) && t > 0.0)) {
        rep.violations.push_back("t > 0 required");
        return rep;
    }
    rep.wedge = fit_wedge(p);
    if (!rep.wedge) {
        rep.violations.push_back("no sector with half-angle <= pi/2 covers the coefficients");
    }
    if (const auto peaks = check_monotone_t(p, t, tol)) {
        rep.k = peaks->k;
        rep.k_range = peaks->k_range;
    } else if (!(p.modulus(0) > 0.0)) {
        rep.violations.push_back("|a_0| > 0 required");
    } else {
        rep.violations.push_back("scaled modulus chain is not unimodal at this t");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_rsm_complex(const Polynomial& p, double t1, double t2, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::RsmComplex, .t1 = t1, .t2 = t2};
    rep.wedge = fit_wedge(p);
    if (!rep.wedge) {
        rep.violations.push_back("no sector with half-angle <= pi/2 covers the coefficients");
    }
    if (require_params(t1, t2, /*strict=*/true, rep.violations)) {
        apply_split(rep, p.moduli(), t1, t2, tol, p.degree(), "k", "modulus");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_rsm_parts(const Polynomial& p, double t1, double t2, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::RsmParts, .t1 = t1, .t2 = t2};
    if (!(p.real_part(p.degree()) > 0.0)) {
        rep.violations.push_back("Re a_n > 0 required");
    }
    if (require_params(t1, t2, /*strict=*/true, rep.violations)) {
        apply_split(rep, p.real_parts(), t1, t2, tol, p.degree(), "k", "real-part");
        apply_split(rep, p.imag_parts(), t1, t2, tol, p.degree(), "m", "imaginary-part");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_thm17(const Polynomial& p, double t1, double t2, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::Thm17, .t1 = t1, .t2 = t2};
    const int n = p.degree();
    if (n < 3) rep.violations.push_back("n >= 3 required");
    rep.wedge = fit_wedge(p);
    if (!rep.wedge) {
        rep.violations.push_back("no sector with half-angle <= pi/2 covers the coefficients");
    }
    if (require_params(t1, t2, /*strict=*/false, rep.violations) && n >= 3) {
        apply_split(rep, p.moduli(), t1, t2, tol, n - 3, "k", "modulus");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_cor19(const Polynomial& p, double t, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::Cor19, .t1 = t, .t2 = 0.0};
    const int n = p.degree();
    if (n < 3) rep.violations.push_back("n >= 3 required");
    if (!(std::isfinite(t) && t > 0.0)) {
        rep.violations.push_back("t > 0 required");
        rep.ok = false;
        return rep;
    }
    rep.wedge = fit_wedge(p);
    if (!rep.wedge) {
        rep.violations.push_back("no sector with half-angle <= pi/2 covers the coefficients");
    }
    if (const auto peaks = check_monotone_t(p, t, tol); peaks && n >= 3) {
        SplitRange r{peaks->k_range.lo, std::min(peaks->k_range.hi, n - 3)};
        if (r.size() == 0) {
            rep.violations.push_back(fmt::format(
                "no split index k in [0, {}] (feasible range [{}, {}])", n - 3,
                peaks->k_range.lo, peaks->k_range.hi));
        } else {
            rep.k = r.lo;
            rep.k_range = r;
        }
    } else if (!peaks) {
        if (!(p.modulus(0) > 0.0)) {
            rep.violations.push_back("|a_0| > 0 required");
        } else {
            rep.violations.push_back("scaled modulus chain is not unimodal at this t");
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_thm110(const Polynomial& p, double t1, double t2, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::Thm110, .t1 = t1, .t2 = t2};
    const int n = p.degree();
    if (n < 1) rep.violations.push_back("n >= 1 required");
    if (!(p.real_part(n) > 0.0)) rep.violations.push_back("Re a_n > 0 required");
    if (require_params(t1, t2, /*strict=*/false, rep.violations) && n >= 1) {
        apply_split(rep, p.real_parts(), t1, t2, tol, n - 1, "k", "real-part");
        apply_split(rep, p.imag_parts(), t1, t2, tol, n - 1, "m", "imaginary-part");
        rep.notes.push_back("m gate [0, n-1] applied (mirrors the k gate)");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_cor112(const Polynomial& p, double t1, double t2, double tol) {
    tol = resolve_tol(p, tol);
    HypothesisReport rep{.theorem = Theorem::Cor112, .t1 = t1, .t2 = t2};
    const int n = p.degree();
    if (n < 1) rep.violations.push_back("n >= 1 required");
    require_real(p, tol, rep.violations);
    for (int j = 0; j <= n; ++j) {
        if (std::abs(p.imag_part(j)) <= tol && !(p.real_part(j) > 0.0)) {
            rep.violations.push_back(fmt::format("coefficient a_{} must be positive", j));
        }
    }
    if (require_params(t1, t2, /*strict=*/false, rep.violations) && rep.violations.empty()) {
        apply_split(rep, p.real_parts(), t1, t2, tol, n - 1, "k", "real-part");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HypothesisReport check_theorem(const Polynomial& p, Theorem thm, double t1, double t2,
                               double tol) {
    switch (thm) {
        case Theorem::EK: {
            HypothesisReport rep{.theorem = Theorem::EK, .t1 = 1.0, .t2 = 0.0};
            rep.ok = check_ek(p, tol);
            if (rep.ok) {
                rep.k = p.degree();
                rep.k_range = SplitRange{p.degree(), p.degree()};
            } else {
                rep.violations.push_back(
                    "chain 0 < a_0 <= a_1 <= ... <= a_n over real coefficients required");
            }
            return rep;
        }
        case Theorem::AzizReal:
            return check_aziz_real(p, t1, t2, tol);
        case Theorem::GovilRahman: {
            HypothesisReport rep{.theorem = Theorem::GovilRahman, .t1 = 1.0, .t2 = 0.0};
            auto [w, chain] = check_govil_rahman(p, tol);
            rep.wedge = w;
            if (!w) {
                rep.violations.push_back(
                    "no sector with half-angle <= pi/2 covers the coefficients");
            }
            if (!chain) {
                rep.violations.push_back("modulus chain |a_0| <= ... <= |a_n| required");
            }
            rep.ok = rep.violations.empty();
            if (rep.ok) {
                rep.k = p.degree();
                rep.k_range = SplitRange{p.degree(), p.degree()};
            }
            return rep;
        }
        case Theorem::AzizT:
            return check_aziz_t(p, t1, tol);
        case Theorem::RsmComplex:
            return check_rsm_complex(p, t1, t2, tol);
        case Theorem::RsmParts:
            return check_rsm_parts(p, t1, t2, tol);
        case Theorem::Thm17:
            return check_thm17(p, t1, t2, tol);
        case Theorem::Cor19:
            return check_cor19(p, t1, tol);
        case Theorem::Thm110:
            return check_thm110(p, t1, t2, tol);
        case Theorem::Cor112:
            return check_cor112(p, t1, t2, tol);
    }
    throw std::logic_error("unknown theorem");
}

}  // namespace rootdisk
