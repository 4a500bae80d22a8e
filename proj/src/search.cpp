#include "search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rootdisk {

namespace {

bool single_parameter(Theorem thm) {
    return thm == Theorem::AzizT || thm == Theorem::Cor19;
}

void validate_config(const SearchConfig& cfg) {
    if (!(cfg.t1_max_factor > 0.0) || !std::isfinite(cfg.t1_max_factor))
        throw std::invalid_argument("t1_max_factor must be positive");
    if (cfg.grid_points < 2) throw std::invalid_argument("grid_points must be at least 2");
    if (cfg.refine_iterations < 0)
        throw std::invalid_argument("refine_iterations must be nonnegative");
    if (!(cfg.tol >= 0.0)) throw std::invalid_argument("tol must be nonnegative");
}

struct Incumbent {
    BoundReport report;
    double enclosing = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    int k = -1;
    int m = -1;
};

bool improves(const Incumbent& cand, const std::optional<Incumbent>& best) {
    if (!best) return true;
    if (cand.enclosing != best->enclosing) return cand.enclosing < best->enclosing;
    if (cand.t1 != best->t1) return cand.t1 < best->t1;
    if (cand.t2 != best->t2) return cand.t2 < best->t2;
    if (cand.k != best->k) return cand.k < best->k;
    return cand.m < best->m;
}

class Scanner {
  public:
    Scanner(const Polynomial& p, Theorem thm, double abs_tol, double t1_lo, double t1_hi)
        : p_(p), thm_(thm), abs_tol_(abs_tol), t1_lo_(t1_lo), t1_hi_(t1_hi) {}

    // Evaluates the bound at (t1, t2); returns whether the hypotheses held.
    bool consider(double t1, double t2) {
        if (!(t1 >= t1_lo_ && t1 <= t1_hi_)) return false;
        t2 = std::max(t2, 0.0);
        BoundOptions opt;
        opt.tol = abs_tol_;
        BoundReport rep = bound_theorem(p_, thm_, t1, t2, opt);
        ++evaluations;
        if (!rep.ok()) return false;
        Incumbent cand{std::move(rep), 0.0, t1, t2, -1, -1};
        cand.enclosing = cand.report.enclosing();
        cand.k = cand.report.hypothesis.k.value_or(-1);
        cand.m = cand.report.hypothesis.m.value_or(-1);
        if (improves(cand, best)) best = std::move(cand);
        return true;
    }

    std::optional<Incumbent> best;
    long long evaluations = 0;

  private:
    const Polynomial& p_;
    Theorem thm_;
    double abs_tol_;
    double t1_lo_;
    double t1_hi_;
};

// t1 is the larger root of t^2 - v*t - u = 0, so t1*t2 = u and t1 - t2 = v.
std::pair<double, double> params_from_uv(double u, double v) {
    double t1 = 0.5 * (v + std::sqrt(v * v + 4.0 * u));
    return {t1, std::max(t1 - v, 0.0)};
}

}  // namespace

SearchResult optimize_params(const Polynomial& p, Theorem thm, const SearchConfig& cfg) {
    validate_config(cfg);
    if (!theorem_is_parameterized(thm))
        throw std::invalid_argument("bound has no free parameters to optimize");

    const double cauchy = cauchy_bound(p);
    const double t_hi = cfg.t1_max_factor * cauchy;
    const double t_lo = 1e-6 * cauchy;
    const double abs_tol = cfg.tol * p.max_modulus();
    const int g = cfg.grid_points;

    Scanner scan(p, thm, abs_tol, t_lo, t_hi);
    long long feasible = 0;
    long long visited = 0;

    if (single_parameter(thm)) {
        for (int i = 0; i <= g; ++i) {
            double t = t_lo + (t_hi - t_lo) * i / g;
            ++visited;
            if (scan.consider(t, 0.0)) ++feasible;
        }
        double fraction = visited > 0 ? double(feasible) / double(visited) : 0.0;
        scan.consider(1.0, 0.0);
        scan.consider(cauchy, 0.0);
        double span = t_hi - t_lo;
        for (int round = 0; round < cfg.refine_iterations && scan.best; ++round) {
            span /= 8.0;
            double lo = std::max(t_lo, scan.best->t1 - span / 2.0);
            double hi = std::min(t_hi, scan.best->t1 + span / 2.0);
            for (int i = 0; i <= g; ++i) scan.consider(lo + (hi - lo) * i / g, 0.0);
        }
        SearchResult result;
        result.evaluations = scan.evaluations;
        result.feasible_fraction = fraction;
        if (scan.best) result.best = std::move(scan.best->report);
        return result;
    }

    const double u_hi = t_hi * t_hi;
    for (int iu = 0; iu <= g; ++iu) {
        double u = u_hi * iu / g;
        for (int iv = 0; iv <= g; ++iv) {
            double v = t_hi * iv / g;
            auto [t1, t2] = params_from_uv(u, v);
            if (!(t1 >= t_lo && t1 <= t_hi)) continue;
            ++visited;
            if (scan.consider(t1, t2)) ++feasible;
        }
    }
    double fraction = visited > 0 ? double(feasible) / double(visited) : 0.0;
    scan.consider(1.0, 0.0);
    scan.consider(cauchy, 0.0);

    double u_span = u_hi;
    double v_span = t_hi;
    for (int round = 0; round < cfg.refine_iterations && scan.best; ++round) {
        u_span /= 8.0;
        v_span /= 8.0;
        double uc = scan.best->t1 * scan.best->t2;
        double vc = scan.best->t1 - scan.best->t2;
        double ulo = std::max(0.0, uc - u_span / 2.0);
        double uhi = std::min(u_hi, uc + u_span / 2.0);
        double vlo = std::max(0.0, vc - v_span / 2.0);
        double vhi = std::min(t_hi, vc + v_span / 2.0);
        for (int iu = 0; iu <= g; ++iu) {
            double u = ulo + (uhi - ulo) * iu / g;
            for (int iv = 0; iv <= g; ++iv) {
                double v = vlo + (vhi - vlo) * iv / g;
                auto [t1, t2] = params_from_uv(u, v);
                scan.consider(t1, t2);
            }
        }
    }

    SearchResult result;
    result.evaluations = scan.evaluations;
    result.feasible_fraction = fraction;
    if (scan.best) result.best = std::move(scan.best->report);
    return result;
}

std::vector<FeasiblePoint> feasible_region_sample(const Polynomial& p, Theorem thm,
                                                  const SearchConfig& cfg) {
    validate_config(cfg);
    if (!theorem_is_parameterized(thm))
        throw std::invalid_argument("bound has no free parameters to optimize");

    const double cauchy = cauchy_bound(p);
    const double t_hi = cfg.t1_max_factor * cauchy;
    const double t_lo = 1e-6 * cauchy;
    const double abs_tol = cfg.tol * p.max_modulus();
    const int g = cfg.grid_points;

    std::vector<FeasiblePoint> points;
    auto record = [&](double t1, double t2) {
        if (!(t1 >= t_lo && t1 <= t_hi)) return;
        HypothesisReport rep = check_theorem(p, thm, t1, std::max(t2, 0.0), abs_tol);
        if (!rep.ok || !rep.k) return;
        points.push_back({rep.t1, rep.t2, *rep.k, rep.m});
    };

    if (single_parameter(thm)) {
        for (int i = 0; i <= g; ++i) record(t_lo + (t_hi - t_lo) * i / g, 0.0);
        return points;
    }
    const double u_hi = t_hi * t_hi;
    for (int iu = 0; iu <= g; ++iu) {
        double u = u_hi * iu / g;
        for (int iv = 0; iv <= g; ++iv) {
            double v = t_hi * iv / g;
            auto [t1, t2] = params_from_uv(u, v);
            record(t1, t2);
        }
    }
    return points;
}

}  // namespace rootdisk
