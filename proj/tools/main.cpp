// Command-line front end for the rootdisk shared library: computes
// containment disks for polynomial zeros, checks coefficient hypotheses,
// searches the (t1, t2) parameter space, verifies disks against numerically
// computed roots, compares all applicable bounds, and generates random
// instances with known-good hypotheses.
//
// Exit codes: 0 success; 1 hypotheses infeasible; 2 parse/config error;
// 3 anomaly (negative radius, containment violation, or numerical failure).

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rootdisk/rootdisk.h"

using nlohmann::json;

namespace {

constexpr const char* kCsvHeader =
    "theorem,t1,t2,k,m,alpha,beta,center_re,center_im,radius,enclosing,tightness,"
    "contained";

struct PolyDeleter {
    void operator()(rd_poly* p) const { rd_poly_free(p); }
};
struct ReportDeleter {
    void operator()(rd_report* r) const { rd_report_free(r); }
};
struct RootsDeleter {
    void operator()(rd_roots* r) const { rd_roots_free(r); }
};
using PolyPtr = std::unique_ptr<rd_poly, PolyDeleter>;
using ReportPtr = std::unique_ptr<rd_report, ReportDeleter>;
using RootsPtr = std::unique_ptr<rd_roots, RootsDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    rd_string_free(s);
    return out;
}

int status_exit(rd_status st) {
    switch (st) {
        case RD_OK:
            return 0;
        case RD_ERR_INFEASIBLE:
            return 1;
        case RD_ERR_INVALID_ARGUMENT:
        case RD_ERR_PARSE:
        case RD_ERR_IO:
            return 2;
        default:
            return 3;
    }
}

int fail(rd_status st) {
    std::cerr << "error: " << rd_last_error() << "\n";
    return status_exit(st);
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// Shortest decimal string that round-trips to the same double; the JSON
// serializer uses the same representation, so CSV and JSON agree.
std::string fmt_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

std::string fmt_complex(double re, double im) {
    return fmt_double(re) + (im < 0 ? " - " : " + ") + fmt_double(std::abs(im)) + "i";
}

// ---- input handling -------------------------------------------------------

struct InputOpts {
    std::string path;
    std::string coeffs;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--input", in.path, "Polynomial file: {\"coeffs\": [[re, im], ...]}");
    cmd->add_option("--coeffs", in.coeffs,
                    "Inline coefficients \"re,im;re,im;...\" ascending by power");
}

// Loads the polynomial or reports why it could not be loaded.
int load_input(const InputOpts& in, PolyPtr& out) {
    if (in.path.empty() == in.coeffs.empty())
        return fail_usage("exactly one of --input or --coeffs is required");
    rd_poly* p = nullptr;
    rd_status st = in.path.empty() ? rd_poly_from_inline(in.coeffs.c_str(), &p)
                                   : rd_poly_read_file(in.path.c_str(), &p);
    if (st != RD_OK) return fail(st);
    out.reset(p);
    return 0;
}

int parse_theorem(const std::string& name, rd_theorem& out) {
    rd_status st = rd_theorem_from_name(name.c_str(), &out);
    if (st != RD_OK) return fail(st);
    return 0;
}

double poly_scale(const rd_poly* p) {
    int n = 0;
    rd_poly_degree(p, &n);
    double scale = 0.0;
    for (int j = 0; j <= n; ++j) {
        double re = 0.0, im = 0.0;
        rd_poly_coeff(p, j, &re, &im);
        scale = std::max(scale, std::hypot(re, im));
    }
    return scale;
}

// ---- report presentation --------------------------------------------------

json report_json(const rd_report* rep) {
    char* text = nullptr;
    rd_report_to_json(rep, &text);
    return json::parse(take_string(text));
}

json hypothesis_json(const rd_report* rep) {
    char* text = nullptr;
    rd_report_hypothesis_json(rep, &text);
    return json::parse(take_string(text));
}

std::string csv_cell(const json& value) {
    if (value.is_null()) return "";
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number()) return fmt_double(value.get<double>());
    return value.get<std::string>();
}

// One row in the fixed 13-column order; absent oracle fields stay empty.
std::string csv_row(const json& row) {
    const char* cols[] = {"theorem", "t1",     "t2",        "k",
                          "m",       "alpha",  "beta",      "center_re",
                          "center_im", "radius", "enclosing", "tightness",
                          "contained"};
    json flat = row;
    if (row.contains("center")) {
        flat["center_re"] = row["center"][0];
        flat["center_im"] = row["center"][1];
    }
    std::string line;
    for (size_t i = 0; i < std::size(cols); ++i) {
        if (i) line += ',';
        if (flat.contains(cols[i])) line += csv_cell(flat[cols[i]]);
    }
    return line;
}

void print_report_text(std::ostream& os, const json& row) {
    os << "theorem:    " << row["theorem"].get<std::string>() << "\n";
    os << "ok:         " << (row["ok"].get<bool>() ? "yes" : "no") << "\n";
    os << "t1:         " << fmt_double(row["t1"].get<double>()) << "\n";
    os << "t2:         " << fmt_double(row["t2"].get<double>()) << "\n";
    os << "k:          " << row["k"].get<int>() << "\n";
    os << "m:          " << (row["m"].is_null() ? "-" : std::to_string(row["m"].get<int>()))
       << "\n";
    os << "alpha:      " << fmt_double(row["alpha"].get<double>()) << "\n";
    os << "beta:       " << fmt_double(row["beta"].get<double>()) << "\n";
    if (row["ok"].get<bool>()) {
        os << "center:     "
           << fmt_complex(row["center"][0].get<double>(), row["center"][1].get<double>())
           << "\n";
        os << "radius:     " << fmt_double(row["radius"].get<double>()) << "\n";
        os << "enclosing:  " << fmt_double(row["enclosing"].get<double>()) << "\n";
    }
    if (row.contains("tightness"))
        os << "tightness:  " << fmt_double(row["tightness"].get<double>()) << "\n";
    if (row.contains("contained"))
        os << "contained:  " << (row["contained"].get<bool>() ? "yes" : "no") << "\n";
}

void print_violations_text(std::ostream& os, const json& hyp) {
    for (const auto& v : hyp["violations"]) os << "violation:  " << v.get<std::string>() << "\n";
}

// ---- shared bound parameters ----------------------------------------------

struct BoundOpts {
    double t1 = 1.0;
    double t2 = 0.0;
    int k = -1;
    int m = -1;
    double tol = -1.0;
};

void add_bound_options(CLI::App* cmd, BoundOpts& b, bool with_indices) {
    cmd->add_option("--t1", b.t1, "First scale parameter (default 1)");
    cmd->add_option("--t2", b.t2, "Second scale parameter (default 0)");
    if (with_indices) {
        cmd->add_option("--k", b.k, "Explicit split index (default: canonical)");
        cmd->add_option("--m", b.m, "Explicit second split index (default: canonical)");
    }
    cmd->add_option("--tol", b.tol,
                    "Absolute condition tolerance (default: 1e-10 * max coefficient modulus)");
}

rd_bound_params to_params(const BoundOpts& b) { return {b.t1, b.t2, b.k, b.m, b.tol}; }

// ---- search configuration -------------------------------------------------

struct SearchOpts {
    std::string config_path;
    double t1_max_factor = 0.0;
    int grid_points = 0;
    int refine_iterations = 0;
    double tol = 0.0;
    CLI::Option* opt_factor = nullptr;
    CLI::Option* opt_grid = nullptr;
    CLI::Option* opt_refine = nullptr;
    CLI::Option* opt_tol = nullptr;
};

void add_search_options(CLI::App* cmd, SearchOpts& s) {
    cmd->add_option("--config", s.config_path,
                    "Search config JSON file (default: $ROOTDISK_CONFIG)");
    s.opt_factor = cmd->add_option("--t1-max-factor", s.t1_max_factor,
                                   "Search t1 up to this multiple of the Cauchy bound");
    s.opt_grid = cmd->add_option("--grid-points", s.grid_points, "Grid intervals per axis");
    s.opt_refine =
        cmd->add_option("--refine-iterations", s.refine_iterations, "Refinement rounds");
    s.opt_tol = cmd->add_option("--tol", s.tol,
                                "Relative condition tolerance (times max coefficient modulus)");
}

// Config file (flag wins over $ROOTDISK_CONFIG), then explicit flags on top.
int resolve_search_config(const SearchOpts& s, rd_search_config& cfg) {
    cfg = rd_search_config_default();
    std::string path = s.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("ROOTDISK_CONFIG")) path = env;
    }
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) return fail_usage("cannot read config file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        rd_status st = rd_search_config_parse(buffer.str().c_str(), &cfg);
        if (st != RD_OK) return fail(st);
    }
    if (s.opt_factor->count()) cfg.t1_max_factor = s.t1_max_factor;
    if (s.opt_grid->count()) cfg.grid_points = s.grid_points;
    if (s.opt_refine->count()) cfg.refine_iterations = s.refine_iterations;
    if (s.opt_tol->count()) cfg.tol = s.tol;
    return 0;
}

// ---- oracle helpers -------------------------------------------------------

int oracle_roots(const rd_poly* p, RootsPtr& out) {
    rd_roots* roots = nullptr;
    rd_status st = rd_roots_find(p, -1.0, 0, 0, &roots);
    if (st != RD_OK) return fail(st);
    out.reset(roots);
    return 0;
}

// Adds contained/tightness/worst to a report row. Containment slack is
// 1e-8 * cauchy_bound, the scale-aware default used throughout.
int attach_oracle(const rd_poly* p, const rd_roots* roots, const rd_report* rep, json& row) {
    double cauchy = 0.0;
    rd_status st = rd_poly_cauchy_bound(p, &cauchy);
    if (st != RD_OK) return fail(st);
    int contained = 0;
    double worst = 0.0;
    double cre = 0.0, cim = 0.0, radius = 0.0;
    rd_report_disk(rep, &cre, &cim, &radius);
    st = rd_verify_containment(roots, cre, cim, radius, 1e-8 * cauchy, &contained, &worst);
    if (st != RD_OK) return fail(st);
    double enclosing = 0.0;
    rd_report_enclosing(rep, &enclosing);
    double tight = 0.0;
    st = rd_tightness(roots, enclosing, &tight);
    if (st != RD_OK) return fail(st);
    row["contained"] = contained != 0;
    row["tightness"] = tight;
    row["worst"] = worst;
    return 0;
}

// ---- subcommands ----------------------------------------------------------

int run_bound(const InputOpts& in, const std::string& theorem, const BoundOpts& b,
              const std::string& format) {
    PolyPtr poly;
    if (int rc = load_input(in, poly)) return rc;
    rd_theorem thm;
    if (int rc = parse_theorem(theorem, thm)) return rc;
    rd_bound_params params = to_params(b);
    rd_report* raw = nullptr;
    rd_status st = rd_bound(poly.get(), thm, &params, &raw);
    if (st != RD_OK) return fail(st);
    ReportPtr rep(raw);
    json row = report_json(rep.get());
    if (format == "json") {
        std::cout << row.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << "\n" << csv_row(row) << "\n";
    } else {
        print_report_text(std::cout, row);
        print_violations_text(std::cout, hypothesis_json(rep.get()));
    }
    int ok = 0, anomaly = 0;
    rd_report_ok(rep.get(), &ok);
    rd_report_anomaly(rep.get(), &anomaly);
    if (anomaly) return 3;
    return ok ? 0 : 1;
}

int run_check(const InputOpts& in, const std::string& theorem, const BoundOpts& b,
              const std::string& format) {
    PolyPtr poly;
    if (int rc = load_input(in, poly)) return rc;
    rd_theorem thm;
    if (int rc = parse_theorem(theorem, thm)) return rc;
    if (format == "csv") return fail_usage("check has no csv form; use json or text");
    rd_bound_params params = to_params(b);
    int ok = 0;
    char* text = nullptr;
    rd_status st = rd_check(poly.get(), thm, &params, &ok, &text);
    if (st != RD_OK) return fail(st);
    json hyp = json::parse(take_string(text));
    if (format == "json") {
        std::cout << hyp.dump(2) << "\n";
    } else {
        std::cout << "theorem:    " << hyp["theorem"].get<std::string>() << "\n";
        std::cout << "ok:         " << (ok ? "yes" : "no") << "\n";
        std::cout << "t1:         " << fmt_double(hyp["t1"].get<double>()) << "\n";
        std::cout << "t2:         " << fmt_double(hyp["t2"].get<double>()) << "\n";
        std::cout << "k:          " << hyp["k"].get<int>() << "\n";
        std::cout << "m:          "
                  << (hyp["m"].is_null() ? "-" : std::to_string(hyp["m"].get<int>())) << "\n";
        std::cout << "alpha:      " << fmt_double(hyp["alpha"].get<double>()) << "\n";
        std::cout << "beta:       " << fmt_double(hyp["beta"].get<double>()) << "\n";
        print_violations_text(std::cout, hyp);
    }
    return ok ? 0 : 1;
}

int run_search(const InputOpts& in, const std::string& theorem, const SearchOpts& s,
               const std::string& format) {
    PolyPtr poly;
    if (int rc = load_input(in, poly)) return rc;
    rd_theorem thm;
    if (int rc = parse_theorem(theorem, thm)) return rc;
    rd_search_config cfg;
    if (int rc = resolve_search_config(s, cfg)) return rc;
    rd_report* raw = nullptr;
    long long evaluations = 0;
    double fraction = 0.0;
    rd_status st = rd_search(poly.get(), thm, &cfg, &raw, &evaluations, &fraction);
    if (st != RD_OK && st != RD_ERR_INFEASIBLE) return fail(st);
    ReportPtr best(raw);
    json result = {{"best", best ? report_json(best.get()) : json(nullptr)},
                   {"evaluations", evaluations},
                   {"feasible_fraction", fraction}};
    if (format == "json") {
        std::cout << result.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << "\n";
        if (best) std::cout << csv_row(result["best"]) << "\n";
    } else {
        if (best) {
            print_report_text(std::cout, result["best"]);
        } else {
            std::cout << "no feasible parameters on the search grid\n";
        }
        std::cout << "evaluations: " << evaluations << "\n";
        std::cout << "feasible fraction: " << fmt_double(fraction) << "\n";
    }
    return best ? 0 : 1;
}

int run_verify(const InputOpts& in, const std::string& theorem, const BoundOpts& b,
               const std::string& format) {
    PolyPtr poly;
    if (int rc = load_input(in, poly)) return rc;
    rd_theorem thm;
    if (int rc = parse_theorem(theorem, thm)) return rc;
    rd_bound_params params = to_params(b);
    rd_report* raw = nullptr;
    rd_status st = rd_bound(poly.get(), thm, &params, &raw);
    if (st != RD_OK) return fail(st);
    ReportPtr rep(raw);
    int ok = 0, anomaly = 0;
    rd_report_ok(rep.get(), &ok);
    rd_report_anomaly(rep.get(), &anomaly);
    json row = report_json(rep.get());
    if (!ok) {
        if (format == "json") {
            std::cout << row.dump(2) << "\n";
        } else {
            print_report_text(std::cout, row);
            print_violations_text(std::cout, hypothesis_json(rep.get()));
        }
        return anomaly ? 3 : 1;
    }
    RootsPtr roots;
    if (int rc = oracle_roots(poly.get(), roots)) return rc;
    if (int rc = attach_oracle(poly.get(), roots.get(), rep.get(), row)) return rc;
    if (format == "json") {
        std::cout << row.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << "\n" << csv_row(row) << "\n";
    } else {
        print_report_text(std::cout, row);
        std::cout << "worst margin: " << fmt_double(row["worst"].get<double>()) << "\n";
    }
    return row["contained"].get<bool>() ? 0 : 3;
}

int run_compare(const InputOpts& in, const SearchOpts& s, const std::string& format) {
    PolyPtr poly;
    if (int rc = load_input(in, poly)) return rc;
    rd_search_config cfg;
    if (int rc = resolve_search_config(s, cfg)) return rc;
    RootsPtr roots;
    if (int rc = oracle_roots(poly.get(), roots)) return rc;
    const double scale = poly_scale(poly.get());

    json rows = json::array();
    bool violation = false;
    std::string best_name;
    double best_enclosing = 0.0;
    for (int i = 0; i < RD_THM_COUNT; ++i) {
        rd_theorem thm = static_cast<rd_theorem>(i);
        ReportPtr rep;
        if (rd_theorem_is_parameterized(thm)) {
            rd_report* raw = nullptr;
            rd_status st = rd_search(poly.get(), thm, &cfg, &raw, nullptr, nullptr);
            if (st == RD_ERR_INFEASIBLE) continue;
            if (st != RD_OK) return fail(st);
            rep.reset(raw);
        } else {
            rd_bound_params params = rd_bound_params_default();
            rd_report* raw = nullptr;
            rd_status st = rd_bound(poly.get(), thm, &params, &raw);
            if (st != RD_OK) return fail(st);
            rep.reset(raw);
            int ok = 0;
            rd_report_ok(rep.get(), &ok);
            if (!ok) continue;
        }
        json row = report_json(rep.get());
        if (int rc = attach_oracle(poly.get(), roots.get(), rep.get(), row)) return rc;
        if (!row["contained"].get<bool>()) violation = true;

        // Off-center disks should nest inside their origin-centered
        // counterparts at the same parameters; record that as a flag
        // (json/text only -- the csv column set is fixed).
        std::optional<rd_theorem> counterpart;
        if (thm == RD_THM_THM17 || thm == RD_THM_COR19) counterpart = RD_THM_RSM_COMPLEX;
        if (thm == RD_THM_THM110) counterpart = RD_THM_RSM_PARTS;
        if (counterpart) {
            rd_bound_params params = rd_bound_params_default();
            rd_report_params(rep.get(), &params.t1, &params.t2, nullptr, nullptr);
            rd_report* raw = nullptr;
            rd_status st = rd_bound(poly.get(), *counterpart, &params, &raw);
            if (st != RD_OK) return fail(st);
            ReportPtr cp(raw);
            int cp_ok = 0;
            rd_report_ok(cp.get(), &cp_ok);
            if (cp_ok) {
                double cp_radius = 0.0;
                rd_report_disk(cp.get(), nullptr, nullptr, &cp_radius);
                double enclosing = 0.0;
                rd_report_enclosing(rep.get(), &enclosing);
                row["within_origin_bound"] = enclosing <= cp_radius + 1e-10 * scale;
            } else {
                row["within_origin_bound"] = nullptr;
            }
        }
        double enclosing = row["enclosing"].get<double>();
        if (best_name.empty() || enclosing < best_enclosing) {
            best_name = row["theorem"].get<std::string>();
            best_enclosing = enclosing;
        }
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        json out = {{"rows", rows}, {"best", best_name.empty() ? json(nullptr) : json(best_name)}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const auto& row : rows) std::cout << csv_row(row) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << row["theorem"].get<std::string>() << ": enclosing "
                      << fmt_double(row["enclosing"].get<double>()) << ", tightness "
                      << fmt_double(row["tightness"].get<double>()) << ", contained "
                      << (row["contained"].get<bool>() ? "yes" : "no");
            if (row.contains("within_origin_bound") && !row["within_origin_bound"].is_null())
                std::cout << ", within origin bound "
                          << (row["within_origin_bound"].get<bool>() ? "yes" : "no");
            std::cout << "\n";
        }
        if (!best_name.empty())
            std::cout << "best: " << best_name << " (" << fmt_double(best_enclosing) << ")\n";
    }
    if (violation) return 3;
    return rows.empty() ? 1 : 0;
}

struct GenOpts {
    std::string checker;
    int n = 3;
    int k = 0;
    int m = -1;
    double t1 = 1.0;
    double t2 = 0.0;
    double alpha = 0.0;
    unsigned long long seed = 0;
    std::string out;
};

int run_gen(const GenOpts& g, const std::string& format) {
    if (format == "csv") return fail_usage("gen has no csv form; use json or text");
    rd_poly* raw = nullptr;
    rd_status st = rd_gen(g.checker.c_str(), g.n, g.k, g.m, g.t1, g.t2, g.alpha, g.seed, &raw);
    if (st != RD_OK) return fail(st);
    PolyPtr poly(raw);
    char* text = nullptr;
    rd_poly_to_json(poly.get(), &text);
    json instance = json::parse(take_string(text));
    json sidecar = {{"spec",
                     {{"n", g.n},
                      {"k", g.k},
                      {"m", g.m < 0 ? json(nullptr) : json(g.m)},
                      {"t1", g.t1},
                      {"t2", g.t2},
                      {"alpha", g.alpha},
                      {"seed", g.seed}}},
                    {"checker", g.checker},
                    {"ok", true}};
    if (g.out.empty()) {
        std::cout << json{{"polynomial", instance}, {"sidecar", sidecar}}.dump(2) << "\n";
        return 0;
    }
    std::ofstream inst(g.out);
    if (!inst) return fail_usage("cannot write file: " + g.out);
    inst << instance.dump(2) << "\n";
    std::string meta_path = g.out + ".meta.json";
    std::ofstream meta(meta_path);
    if (!meta) return fail_usage("cannot write file: " + meta_path);
    meta << sidecar.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit containment disks for polynomial zeros"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags after the subcommand name
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    InputOpts in_bound, in_check, in_search, in_verify, in_compare;
    BoundOpts b_bound, b_check, b_verify;
    SearchOpts s_search, s_compare;
    std::string thm_bound, thm_check, thm_search, thm_verify;
    GenOpts gen;

    CLI::App* cmd_bound = app.add_subcommand("bound", "Evaluate one containment disk");
    add_input_options(cmd_bound, in_bound);
    cmd_bound->add_option("--theorem", thm_bound, "Bound to evaluate")->required();
    add_bound_options(cmd_bound, b_bound, true);

    CLI::App* cmd_check = app.add_subcommand("check", "Check coefficient hypotheses only");
    add_input_options(cmd_check, in_check);
    cmd_check->add_option("--theorem", thm_check, "Bound whose hypotheses to check")->required();
    add_bound_options(cmd_check, b_check, false);

    CLI::App* cmd_search =
        app.add_subcommand("search", "Minimize the enclosing radius over (t1, t2)");
    add_input_options(cmd_search, in_search);
    cmd_search->add_option("--theorem", thm_search, "Bound to optimize")->required();
    add_search_options(cmd_search, s_search);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Evaluate a disk and verify it against computed roots");
    add_input_options(cmd_verify, in_verify);
    cmd_verify->add_option("--theorem", thm_verify, "Bound to verify")->required();
    add_bound_options(cmd_verify, b_verify, true);

    CLI::App* cmd_compare =
        app.add_subcommand("compare", "Evaluate every applicable bound (search when needed)");
    add_input_options(cmd_compare, in_compare);
    add_search_options(cmd_compare, s_compare);

    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a random verified instance");
    cmd_gen->add_option("--checker", gen.checker, "Instance family: thm17 or thm110")
        ->required();
    cmd_gen->add_option("--n", gen.n, "Degree")->required();
    cmd_gen->add_option("--k", gen.k, "Split index")->required();
    cmd_gen->add_option("--m", gen.m, "Second split index (thm110; default none)");
    cmd_gen->add_option("--t1", gen.t1, "First scale parameter (default 1)");
    cmd_gen->add_option("--t2", gen.t2, "Second scale parameter (default 0)");
    cmd_gen->add_option("--alpha", gen.alpha, "Sector half-angle for argument jitter");
    cmd_gen->add_option("--seed", gen.seed, "Random seed");
    cmd_gen->add_option("--out", gen.out,
                        "Instance file path (sidecar: <out>.meta.json; default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_bound->parsed()) return run_bound(in_bound, thm_bound, b_bound, format);
    if (cmd_check->parsed()) return run_check(in_check, thm_check, b_check, format);
    if (cmd_search->parsed()) return run_search(in_search, thm_search, s_search, format);
    if (cmd_verify->parsed()) return run_verify(in_verify, thm_verify, b_verify, format);
    if (cmd_compare->parsed()) return run_compare(in_compare, s_compare, format);
    if (cmd_gen->parsed()) return run_gen(gen, format);
    return 2;  // unreachable: require_subcommand(1)
}
