// Acceptance gate: property-based checks over generated corpora, one
// pass/fail line per criterion. Exit is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "conditions.hpp"
#include "generate.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "search.hpp"
#include "wedge.hpp"

using namespace rootdisk;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool g_all_pass = true;
int g_anomalies = 0;  // anomalous reports + containment violations, must stay 0

void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) g_all_pass = false;
}

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

void note_report(const BoundReport& rep) {
    if (rep.status == BoundStatus::Anomaly) ++g_anomalies;
}

double max_root_modulus(const RootSet& rs) {
    double mx = 0.0;
    for (const cplx& z : rs.roots) mx = std::max(mx, std::abs(z));
    return mx;
}

// Worst distance under greedy nearest-neighbor matching of got against
// expected (equal sizes).
double greedy_match(std::vector<cplx> expected, const std::vector<cplx>& got) {
    double worst = 0.0;
    for (const cplx& z : got) {
        size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < expected.size(); ++i) {
            double d = std::abs(z - expected[i]);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        worst = std::max(worst, best_d);
        expected.erase(expected.begin() + static_cast<long>(best));
    }
    return worst;
}

struct StoredInstance {
    Polynomial p;
    GenSpec spec;
    RootSet roots;
    BoundReport rep;
};

}  // namespace

int main() {
    const auto t_total = Clock::now();

    // ---- 1: classical nondecreasing-chain soundness ------------------------
    std::vector<Polynomial> ek_corpus;
    {
        const auto t0 = Clock::now();
        Rng rng(20260823);
        bool pass = true;
        double worst_excess = -1.0;
        for (int i = 0; i < 500; ++i) {
            int n = 2 + static_cast<int>(rng.uniform(0, 11));
            std::vector<cplx> coeffs;
            double value = rng.uniform(0.1, 1.0);
            for (int j = 0; j <= n; ++j) {
                coeffs.emplace_back(value, 0.0);
                value *= rng.uniform(1.0, 1.6);
            }
            Polynomial p(std::move(coeffs));
            BoundReport rep = bound_ek(p);
            note_report(rep);
            pass = pass && rep.ok() && rep.disk.radius == 1.0;
            RootSet rs = find_roots(p);
            pass = pass && rs.converged;
            double excess = max_root_modulus(rs) - 1.0;
            worst_excess = std::max(worst_excess, excess);
            if (excess > 1e-8) {
                pass = false;
                ++g_anomalies;
            }
            ek_corpus.push_back(std::move(p));
        }
        double dt = seconds_since(t0);
        pass = pass && dt < 5.0;
        report(1, pass,
               fmt("500 unit-disk instances, worst root excess %.2e, %.2f s",
                   worst_excess, dt));
    }

    // ---- 2: off-center modulus-split soundness -----------------------------
    std::vector<StoredInstance> corpus17;
    {
        const auto t0 = Clock::now();
        Rng rng(7177);
        bool pass = true;
        double worst_margin = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 500; ++i) {
            GenSpec spec;
            spec.n = 3 + static_cast<int>(rng.uniform(0, 8));
            spec.k = static_cast<int>(rng.uniform(0, spec.n - 2));
            spec.alpha = rng.uniform(0.0, pi / 2);
            spec.t1 = 1.0;
            spec.t2 = (i % 2 == 0) ? 0.0 : rng.uniform(0.0, 0.2);
            spec.seed = 1000000 + static_cast<std::uint64_t>(i);
            Polynomial p = gen_thm17_instance(spec);
            BoundReport rep = bound_thm17(p, spec.t1, spec.t2);
            note_report(rep);
            pass = pass && rep.ok();
            RootSet rs = find_roots(p);
            pass = pass && rs.converged;
            auto [inside, margin] =
                verify_containment(rs, rep.disk, 1e-8 * cauchy_bound(p));
            worst_margin = std::max(worst_margin, margin);
            if (!inside) {
                pass = false;
                ++g_anomalies;
            }
            corpus17.push_back({std::move(p), spec, std::move(rs), std::move(rep)});
        }
        double dt = seconds_since(t0);
        pass = pass && dt < 20.0;
        report(2, pass,
               fmt("500 generated instances contained, worst margin %.2e, %.2f s",
                   worst_margin, dt));
    }

    // ---- 3: off-center disk nests inside the origin-centered one -----------
    {
        bool pass = true;
        int strict = 0;
        for (const StoredInstance& inst : corpus17) {
            BoundReport rsm =
                bound_rsm_complex(inst.p, inst.spec.t1, inst.spec.t2);
            note_report(rsm);
            if (!rsm.ok()) {
                pass = false;
                continue;
            }
            double scale = inst.p.max_modulus();
            double gap = rsm.disk.radius - inst.rep.enclosing();
            if (gap < -1e-10 * scale) pass = false;
            if (gap > 1e-6 * scale) ++strict;
        }
        pass = pass && 2 * strict >= static_cast<int>(corpus17.size());
        report(3, pass,
               fmt("enclosing radius within counterpart on all 500, strictly "
                   "smaller on %d",
                   strict));
    }

    // ---- 4: part-split soundness and enclosing comparison ------------------
    {
        Rng rng(110110);
        bool pass = true;
        double worst_gap = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 500; ++i) {
            GenSpec spec;
            spec.n = 2 + static_cast<int>(rng.uniform(0, 9));
            spec.k = static_cast<int>(rng.uniform(0, spec.n));
            if (i % 2 == 1) spec.m = static_cast<int>(rng.uniform(0, spec.n));
            spec.t1 = 1.0;
            spec.t2 = (i % 4 < 2) ? 0.0 : rng.uniform(0.0, 0.2);
            spec.seed = 2000000 + static_cast<std::uint64_t>(i);
            Polynomial p = gen_thm110_instance(spec);
            BoundReport rep = bound_thm110(p, spec.t1, spec.t2);
            note_report(rep);
            pass = pass && rep.ok();
            RootSet rs = find_roots(p);
            pass = pass && rs.converged;
            auto [inside, margin] =
                verify_containment(rs, rep.disk, 1e-8 * cauchy_bound(p));
            (void)margin;
            if (!inside) {
                pass = false;
                ++g_anomalies;
            }
            BoundReport parts = bound_rsm_parts(p, spec.t1, spec.t2);
            note_report(parts);
            if (!parts.ok()) {
                pass = false;
                continue;
            }
            double scale = p.max_modulus();
            double gap = parts.disk.radius - rep.enclosing();
            worst_gap = std::min(worst_gap, gap);
            if (gap < -1e-10 * scale) pass = false;
        }
        report(4, pass,
               fmt("500 part-split instances contained and nested (min slack "
                   "%.2e)",
                   worst_gap));
    }

    // ---- 5: worked fixture -------------------------------------------------
    {
        Polynomial fx({4.0, 1.0, 1.0, 1.0});
        BoundReport reps[] = {
            bound_rsm_complex(fx, 1.0, 0.0, 0),
            bound_rsm_parts(fx, 1.0, 0.0, 0, 0),
            bound_thm17(fx, 1.0, 0.0, 0),
            bound_thm110(fx, 1.0, 0.0, 0, 0),
        };
        bool pass = true;
        for (const BoundReport& rep : reps) {
            note_report(rep);
            pass = pass && rep.ok() && rep.disk.radius == 7.0 &&
                   std::abs(rep.disk.center) == 0.0;
        }
        RootSet rs = find_roots(fx);
        double mx = max_root_modulus(rs);
        pass = pass && rs.converged && mx < 7.0;
        report(5, pass,
               fmt("all four bounds give radius 7 at center 0; max root "
                   "modulus %.6f",
                   mx));
    }

    // ---- 6: specialization identities --------------------------------------
    {
        bool pass = true;
        int used = 0;
        double worst_rel = 0.0;
        for (const StoredInstance& inst : corpus17) {
            if (inst.spec.t2 != 0.0 || used >= 200) continue;
            ++used;
            BoundReport rep19 = bound_cor19(inst.p, inst.spec.t1);
            note_report(rep19);
            if (!rep19.ok()) {
                pass = false;
                continue;
            }
            double denom = std::max(1.0, std::abs(inst.rep.disk.radius));
            double rel = std::abs(rep19.disk.radius - inst.rep.disk.radius) / denom;
            rel = std::max(rel, std::abs(rep19.disk.center - inst.rep.disk.center) /
                                    std::max(1.0, std::abs(inst.rep.disk.center)));
            worst_rel = std::max(worst_rel, rel);
            if (rel > 1e-15) pass = false;
        }
        pass = pass && used == 200;
        int unit_radius = 0;
        for (const Polynomial& p : ek_corpus) {
            BoundReport gr = bound_govil_rahman(p);
            note_report(gr);
            if (gr.ok() && gr.disk.radius == 1.0) ++unit_radius;
        }
        pass = pass && unit_radius == static_cast<int>(ek_corpus.size());
        report(6, pass,
               fmt("specialized bound identical on %d instances (worst rel dev "
                   "%.1e); sector bound exactly 1 on %d/500",
                   used, worst_rel, unit_radius));
    }

    // ---- 7: sector-triple majorant -----------------------------------------
    {
        Rng rng(2121);
        bool pass = true;
        double worst = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 10000; ++i) {
            double beta = rng.uniform(-pi, pi);
            double alpha = rng.uniform(0.0, pi / 2);
            double t1 = rng.uniform(0.1, 5.0);
            double t2 = rng.uniform(0.0, 0.999) * t1;
            double m[3], arg[3];
            for (int j = 0; j < 3; ++j) {
                m[j] = rng.uniform(0.0, 10.0);
                arg[j] = beta + rng.uniform(-1.0, 1.0) * alpha;
            }
            cplx a = std::polar(m[0], arg[0]);
            cplx b = std::polar(m[1], arg[1]);
            cplx c = std::polar(m[2], arg[2]);
            double lhs = std::abs(t1 * t2 * a + (t1 - t2) * b - c);
            double rhs = lemma21_rhs(t1, t2, m[0], m[1], m[2], alpha);
            worst = std::max(worst, lhs - rhs);
            if (lhs > rhs + 1e-12) pass = false;
        }
        report(7, pass, fmt("10000 sector triples dominated, worst slack %.2e", worst));
    }

    // ---- 8: factor-product root identity -----------------------------------
    {
        Rng rng(888);
        bool pass = true;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            int n = 1 + static_cast<int>(rng.uniform(0, 7));
            std::vector<cplx> coeffs;
            for (int j = 0; j <= n; ++j)
                coeffs.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            if (std::abs(coeffs.back()) < 0.3) coeffs.back() += cplx{0.5, 0.5};
            Polynomial p(std::move(coeffs));
            double t1 = rng.uniform(0.2, 3.0);
            double t2 = (i % 3 == 0) ? 0.0 : rng.uniform(0.0, 2.0);
            Polynomial f = multiply_enestrom_factors(p, t1, t2);
            RootSet rp = find_roots(p);
            RootSet rf = find_roots(f);
            if (!rp.converged || !rf.converged) {
                pass = false;
                continue;
            }
            std::vector<cplx> expected = rp.roots;
            expected.push_back({t1, 0.0});
            expected.push_back({-t2, 0.0});
            double dist = greedy_match(expected, rf.roots);
            double scale = std::max(1.0, cauchy_bound(p));
            worst = std::max(worst, dist / scale);
            if (dist > 1e-8 * scale) pass = false;
        }
        report(8, pass,
               fmt("100 factor products matched parent roots plus {t1, -t2}, "
                   "worst scaled distance %.2e",
                   worst));
    }

    // ---- 9: search sanity over the corpus ----------------------------------
    {
        bool pass = true;
        SearchConfig dflt;
        SearchResult r1 =
            optimize_params(Polynomial({1.0, 1.0, 1.0}), Theorem::AzizReal, dflt);
        pass = pass && r1.best && std::abs(r1.best->hypothesis.t1 - 1.0) <= 1e-4;
        SearchResult r2 =
            optimize_params(Polynomial({6.0, 5.0, 1.0}), Theorem::AzizReal, dflt);
        pass = pass && r2.best && r2.best->hypothesis.t1 >= 3.0 &&
               r2.best->hypothesis.t1 <= 5.0 + 1e-4;

        SearchConfig small;
        small.grid_points = 12;
        small.refine_iterations = 2;
        int with_best = 0;
        for (const StoredInstance& inst : corpus17) {
            SearchResult res = optimize_params(inst.p, Theorem::Thm17, small);
            if (!res.best) continue;
            note_report(*res.best);
            ++with_best;
            double mx = max_root_modulus(inst.roots);
            if (res.best->enclosing() < mx - 1e-8) {
                pass = false;
                ++g_anomalies;
            }
        }
        pass = pass && with_best == static_cast<int>(corpus17.size());
        report(9, pass,
               fmt("canonical optima hit (t1 = %.6f and %.6f); corpus optimum "
                   "sound on %d/500",
                   r1.best ? r1.best->hypothesis.t1 : -1.0,
                   r2.best ? r2.best->hypothesis.t1 : -1.0, with_best));
    }

    // ---- 10: wall clock and anomaly count ----------------------------------
    {
        double dt = seconds_since(t_total);
        bool pass = dt < 90.0 && g_anomalies == 0;
        report(10, pass, fmt("total %.2f s, anomaly count %d", dt, g_anomalies));
    }

    return g_all_pass ? 0 : 1;
}
