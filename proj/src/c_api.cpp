#include "rootdisk/rootdisk.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "bounds.hpp"
#include "conditions.hpp"
#include "generate.hpp"
#include "json_io.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "search.hpp"

using namespace rootdisk;

struct rd_poly {
    Polynomial value;
};
struct rd_roots {
    RootSet value;
};
struct rd_report {
    BoundReport value;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs f, translating exceptions to statuses. parse_errors controls whether
// std::invalid_argument means malformed input text rather than a bad value.
template <typename F>
rd_status guarded(bool parse_errors, F&& f) {
    try {
        f();
        g_last_error.clear();
        return RD_OK;
    } catch (const IoError& e) {
        set_error(e.what());
        return RD_ERR_IO;
    } catch (const UnconvergedError& e) {
        set_error(e.what());
        return RD_ERR_UNCONVERGED;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return parse_errors ? RD_ERR_PARSE : RD_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return RD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return RD_ERR_INTERNAL;
    }
}

rd_status null_argument(const char* what) {
    set_error(std::string(what) + " must not be null");
    return RD_ERR_INVALID_ARGUMENT;
}

bool theorem_in_range(rd_theorem thm) { return thm >= 0 && thm < RD_THM_COUNT; }

Theorem to_theorem(rd_theorem thm) { return kAllTheorems[static_cast<int>(thm)]; }

BoundOptions to_options(const rd_bound_params& params) {
    BoundOptions opt;
    if (params.k >= 0) opt.k = params.k;
    if (params.m >= 0) opt.m = params.m;
    opt.tol = params.tol;
    return opt;
}

}  // namespace

extern "C" {

const char* rd_last_error(void) { return g_last_error.c_str(); }

void rd_string_free(char* s) { delete[] s; }

const char* rd_version(void) { return "0.1.0"; }

const char* rd_theorem_name(rd_theorem thm) {
    if (!theorem_in_range(thm)) return nullptr;
    // The name table is literal-backed, so .data() is NUL-terminated.
    return theorem_name(to_theorem(thm)).data();
}

rd_status rd_theorem_from_name(const char* name, rd_theorem* out) {
    if (!name) return null_argument("name");
    if (!out) return null_argument("out");
    std::optional<Theorem> thm = theorem_from_name(name);
    if (!thm) {
        set_error(std::string("unknown theorem: ") + name);
        return RD_ERR_INVALID_ARGUMENT;
    }
    *out = static_cast<rd_theorem>(static_cast<int>(*thm));
    g_last_error.clear();
    return RD_OK;
}

int rd_theorem_is_parameterized(rd_theorem thm) {
    if (!theorem_in_range(thm)) return 0;
    return theorem_is_parameterized(to_theorem(thm)) ? 1 : 0;
}

rd_status rd_poly_create(const double* res, const double* ims, int count,
                         rd_poly** out) {
    if (!res) return null_argument("res");
    if (!out) return null_argument("out");
    return guarded(false, [&] {
        if (count <= 0) throw std::invalid_argument("count must be positive");
        std::vector<cplx> coeffs(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) coeffs[i] = {res[i], ims ? ims[i] : 0.0};
        *out = new rd_poly{Polynomial(std::move(coeffs))};
    });
}

rd_status rd_poly_from_json(const char* text, rd_poly** out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    return guarded(true, [&] { *out = new rd_poly{parse_polynomial(text)}; });
}

rd_status rd_poly_from_inline(const char* text, rd_poly** out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    return guarded(true, [&] { *out = new rd_poly{parse_inline_coeffs(text)}; });
}

rd_status rd_poly_read_file(const char* path, rd_poly** out) {
    if (!path) return null_argument("path");
    if (!out) return null_argument("out");
    return guarded(true, [&] { *out = new rd_poly{load_polynomial(path)}; });
}

void rd_poly_free(rd_poly* p) { delete p; }

rd_status rd_poly_degree(const rd_poly* p, int* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    *out = p->value.degree();
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_poly_coeff(const rd_poly* p, int j, double* re, double* im) {
    if (!p) return null_argument("p");
    cplx c = p->value.coeff(j);
    if (re) *re = c.real();
    if (im) *im = c.imag();
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_poly_eval(const rd_poly* p, double re, double im, double* out_re,
                       double* out_im) {
    if (!p) return null_argument("p");
    cplx v = eval(p->value, {re, im});
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_poly_cauchy_bound(const rd_poly* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded(false, [&] { *out = cauchy_bound(p->value); });
}

rd_status rd_poly_multiply_factors(const rd_poly* p, double t1, double t2,
                                   rd_poly** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded(false, [&] {
        *out = new rd_poly{multiply_enestrom_factors(p->value, t1, t2)};
    });
}

rd_status rd_poly_to_json(const rd_poly* p, char** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded(false, [&] { *out = dup_string(polynomial_to_json(p->value).dump()); });
}

rd_bound_params rd_bound_params_default(void) { return {1.0, 0.0, -1, -1, -1.0}; }

rd_status rd_bound(const rd_poly* p, rd_theorem thm, const rd_bound_params* params,
                   rd_report** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    if (!theorem_in_range(thm)) {
        set_error("theorem selector out of range");
        return RD_ERR_INVALID_ARGUMENT;
    }
    rd_bound_params defaults = rd_bound_params_default();
    const rd_bound_params& pr = params ? *params : defaults;
    return guarded(false, [&] {
        BoundReport rep = bound_theorem(p->value, to_theorem(thm), pr.t1, pr.t2,
                                        to_options(pr));
        *out = new rd_report{std::move(rep)};
    });
}

rd_status rd_check(const rd_poly* p, rd_theorem thm, const rd_bound_params* params,
                   int* ok_out, char** json_out) {
    if (!p) return null_argument("p");
    if (!theorem_in_range(thm)) {
        set_error("theorem selector out of range");
        return RD_ERR_INVALID_ARGUMENT;
    }
    rd_bound_params defaults = rd_bound_params_default();
    const rd_bound_params& pr = params ? *params : defaults;
    return guarded(false, [&] {
        HypothesisReport rep =
            check_theorem(p->value, to_theorem(thm), pr.t1, pr.t2, pr.tol);
        if (ok_out) *ok_out = rep.ok ? 1 : 0;
        if (json_out) *json_out = dup_string(hypothesis_to_json(rep).dump());
    });
}

void rd_report_free(rd_report* r) { delete r; }

rd_status rd_report_ok(const rd_report* r, int* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    *out = r->value.ok() ? 1 : 0;
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_anomaly(const rd_report* r, int* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    *out = r->value.status == BoundStatus::Anomaly ? 1 : 0;
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_theorem(const rd_report* r, rd_theorem* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    *out = static_cast<rd_theorem>(static_cast<int>(r->value.theorem));
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_disk(const rd_report* r, double* center_re, double* center_im,
                         double* radius) {
    if (!r) return null_argument("r");
    if (center_re) *center_re = r->value.disk.center.real();
    if (center_im) *center_im = r->value.disk.center.imag();
    if (radius) *radius = r->value.disk.radius;
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_enclosing(const rd_report* r, double* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    *out = r->value.enclosing();
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_params(const rd_report* r, double* t1, double* t2, int* k,
                           int* m) {
    if (!r) return null_argument("r");
    const HypothesisReport& hyp = r->value.hypothesis;
    if (t1) *t1 = hyp.t1;
    if (t2) *t2 = hyp.t2;
    if (k) *k = hyp.k.value_or(-1);
    if (m) *m = hyp.m.value_or(-1);
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_wedge(const rd_report* r, double* alpha, double* beta) {
    if (!r) return null_argument("r");
    const std::optional<Wedge>& w = r->value.hypothesis.wedge;
    if (alpha) *alpha = w ? w->alpha : 0.0;
    if (beta) *beta = w ? w->beta : 0.0;
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_report_to_json(const rd_report* r, char** out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    return guarded(false, [&] { *out = dup_string(bound_to_json(r->value).dump()); });
}

rd_status rd_report_hypothesis_json(const rd_report* r, char** out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    return guarded(false,
                   [&] { *out = dup_string(hypothesis_to_json(r->value.hypothesis).dump()); });
}

rd_search_config rd_search_config_default(void) { return {2.0, 64, 3, 1e-10}; }

rd_status rd_search_config_parse(const char* text, rd_search_config* out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    return guarded(true, [&] {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("invalid config JSON: ") + e.what());
        }
        SearchConfig cfg = search_config_from_json(j);
        *out = {cfg.t1_max_factor, cfg.grid_points, cfg.refine_iterations, cfg.tol};
    });
}

rd_status rd_search(const rd_poly* p, rd_theorem thm, const rd_search_config* cfg,
                    rd_report** best_out, long long* evaluations,
                    double* feasible_fraction) {
    if (!p) return null_argument("p");
    if (!best_out) return null_argument("best_out");
    if (!theorem_in_range(thm)) {
        set_error("theorem selector out of range");
        return RD_ERR_INVALID_ARGUMENT;
    }
    SearchConfig config;
    if (cfg) {
        config.t1_max_factor = cfg->t1_max_factor;
        config.grid_points = cfg->grid_points;
        config.refine_iterations = cfg->refine_iterations;
        config.tol = cfg->tol;
    }
    bool infeasible = false;
    rd_status status = guarded(false, [&] {
        SearchResult result = optimize_params(p->value, to_theorem(thm), config);
        if (evaluations) *evaluations = result.evaluations;
        if (feasible_fraction) *feasible_fraction = result.feasible_fraction;
        if (result.best) {
            *best_out = new rd_report{std::move(*result.best)};
        } else {
            *best_out = nullptr;
            infeasible = true;
        }
    });
    if (status != RD_OK) return status;
    if (infeasible) {
        set_error("no feasible parameters on the search grid");
        return RD_ERR_INFEASIBLE;
    }
    return RD_OK;
}

rd_status rd_roots_find(const rd_poly* p, double tol, int max_iter, int method,
                        rd_roots** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    if (method != 0 && method != 1) {
        set_error("method must be 0 or 1");
        return RD_ERR_INVALID_ARGUMENT;
    }
    if (tol < 0) tol = 1e-12;
    if (max_iter <= 0) max_iter = 500;
    return guarded(false, [&] {
        RootMethod rm = method == 0 ? RootMethod::Aberth : RootMethod::Weierstrass;
        *out = new rd_roots{find_roots(p->value, tol, max_iter, rm)};
    });
}

void rd_roots_free(rd_roots* r) { delete r; }

rd_status rd_roots_count(const rd_roots* r, int* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    *out = static_cast<int>(r->value.roots.size());
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_roots_get(const rd_roots* r, int i, double* re, double* im) {
    if (!r) return null_argument("r");
    if (i < 0 || i >= static_cast<int>(r->value.roots.size())) {
        set_error("root index out of range");
        return RD_ERR_INVALID_ARGUMENT;
    }
    if (re) *re = r->value.roots[static_cast<size_t>(i)].real();
    if (im) *im = r->value.roots[static_cast<size_t>(i)].imag();
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_roots_residual(const rd_roots* r, int i, double* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    if (i < 0 || i >= static_cast<int>(r->value.residuals.size())) {
        set_error("root index out of range");
        return RD_ERR_INVALID_ARGUMENT;
    }
    *out = r->value.residuals[static_cast<size_t>(i)];
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_roots_converged(const rd_roots* r, int* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    *out = r->value.converged ? 1 : 0;
    g_last_error.clear();
    return RD_OK;
}

rd_status rd_roots_to_json(const rd_roots* r, char** out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    return guarded(false, [&] { *out = dup_string(roots_to_json(r->value).dump()); });
}

rd_status rd_verify_containment(const rd_roots* r, double center_re,
                                double center_im, double radius, double tol,
                                int* contained, double* worst_out) {
    if (!r) return null_argument("r");
    return guarded(false, [&] {
        Disk d{{center_re, center_im}, radius};
        auto [inside, worst] = verify_containment(r->value, d, tol);
        if (contained) *contained = inside ? 1 : 0;
        if (worst_out) *worst_out = worst;
    });
}

rd_status rd_tightness(const rd_roots* r, double enclosing, double* out) {
    if (!r) return null_argument("r");
    if (!out) return null_argument("out");
    return guarded(false, [&] { *out = tightness(r->value, Disk{{0.0, 0.0}, enclosing}); });
}

rd_status rd_gen(const char* checker, int n, int k, int m, double t1, double t2,
                 double alpha, unsigned long long seed, rd_poly** out) {
    if (!checker) return null_argument("checker");
    if (!out) return null_argument("out");
    return guarded(false, [&] {
        GenSpec spec;
        spec.n = n;
        spec.k = k;
        if (m >= 0) spec.m = m;
        spec.t1 = t1;
        spec.t2 = t2;
        spec.alpha = alpha;
        spec.seed = seed;
        std::string which(checker);
        if (which == "thm17") {
            *out = new rd_poly{gen_thm17_instance(spec)};
        } else if (which == "thm110") {
            *out = new rd_poly{gen_thm110_instance(spec)};
        } else {
            throw std::invalid_argument("checker must be \"thm17\" or \"thm110\"");
        }
    });
}

}  // extern "C"
