#include "json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace rootdisk {

namespace {

double number_from(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string(what) + " must be a number");
    return j.get<double>();
}

cplx complex_from(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {number_from(j[0], what), number_from(j[1], what)};
    throw std::invalid_argument(std::string(what) + " must be a number or an [re, im] pair");
}

json complex_to(cplx z) { return json::array({z.real(), z.imag()}); }

double parse_real(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    while (last != first && (last[-1] == ' ' || last[-1] == '\t')) --last;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("invalid number: '" + text + "'");
    return value;
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const cplx& c : p.coeffs()) coeffs.push_back(complex_to(c));
    return json{{"coeffs", std::move(coeffs)}};
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("expected an object with a \"coeffs\" array");
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty())
        throw std::invalid_argument("\"coeffs\" must be a nonempty array");
    std::vector<cplx> values;
    values.reserve(coeffs.size());
    for (const json& c : coeffs) values.push_back(complex_from(c, "coefficient"));
    return Polynomial(std::move(values));
}

Polynomial parse_polynomial(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return polynomial_from_json(j);
}

Polynomial parse_inline_coeffs(const std::string& text) {
    std::vector<cplx> values;
    std::stringstream stream(text);
    std::string segment;
    while (std::getline(stream, segment, ';')) {
        if (segment.empty()) throw std::invalid_argument("empty coefficient segment");
        auto comma = segment.find(',');
        if (comma == std::string::npos) {
            values.emplace_back(parse_real(segment), 0.0);
        } else {
            values.emplace_back(parse_real(segment.substr(0, comma)),
                                parse_real(segment.substr(comma + 1)));
        }
    }
    if (values.empty()) throw std::invalid_argument("no coefficients given");
    return Polynomial(std::move(values));
}

Polynomial load_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_polynomial(buffer.str());
}

json hypothesis_to_json(const HypothesisReport& rep) {
    return json{{"theorem", theorem_name(rep.theorem)},
                {"ok", rep.ok},
                {"t1", rep.t1},
                {"t2", rep.t2},
                {"k", rep.k.value_or(-1)},
                {"m", rep.m ? json(*rep.m) : json(nullptr)},
                {"alpha", rep.wedge ? rep.wedge->alpha : 0.0},
                {"beta", rep.wedge ? rep.wedge->beta : 0.0},
                {"violations", rep.violations}};
}

json bound_to_json(const BoundReport& rep) {
    const HypothesisReport& hyp = rep.hypothesis;
    return json{{"theorem", theorem_name(rep.theorem)},
                {"t1", hyp.t1},
                {"t2", hyp.t2},
                {"k", hyp.k.value_or(-1)},
                {"m", hyp.m ? json(*hyp.m) : json(nullptr)},
                {"alpha", hyp.wedge ? hyp.wedge->alpha : 0.0},
                {"beta", hyp.wedge ? hyp.wedge->beta : 0.0},
                {"center", complex_to(rep.disk.center)},
                {"radius", rep.disk.radius},
                {"enclosing", rep.enclosing()},
                {"ok", rep.ok()}};
}

json roots_to_json(const RootSet& roots) {
    json zs = json::array();
    for (const cplx& z : roots.roots) zs.push_back(complex_to(z));
    return json{{"roots", std::move(zs)},
                {"residuals", roots.residuals},
                {"converged", roots.converged}};
}

json search_result_to_json(const SearchResult& result) {
    return json{{"best", result.best ? bound_to_json(*result.best) : json(nullptr)},
                {"evaluations", result.evaluations},
                {"feasible_fraction", result.feasible_fraction}};
}

json search_config_to_json(const SearchConfig& cfg) {
    return json{{"t1_max_factor", cfg.t1_max_factor},
                {"grid_points", cfg.grid_points},
                {"refine_iterations", cfg.refine_iterations},
                {"tol", cfg.tol}};
}

SearchConfig search_config_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    SearchConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "t1_max_factor") {
            cfg.t1_max_factor = number_from(value, "t1_max_factor");
        } else if (key == "grid_points") {
            if (!value.is_number_integer())
                throw std::invalid_argument("grid_points must be an integer");
            cfg.grid_points = value.get<int>();
        } else if (key == "refine_iterations") {
            if (!value.is_number_integer())
                throw std::invalid_argument("refine_iterations must be an integer");
            cfg.refine_iterations = value.get<int>();
        } else if (key == "tol") {
            cfg.tol = number_from(value, "tol");
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return cfg;
}

SearchConfig load_search_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json j;
    try {
        j = json::parse(buffer.str());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid config JSON: ") + e.what());
    }
    return search_config_from_json(j);
}

json gen_spec_to_json(const GenSpec& spec) {
    return json{{"n", spec.n},
                {"k", spec.k},
                {"m", spec.m ? json(*spec.m) : json(nullptr)},
                {"t1", spec.t1},
                {"t2", spec.t2},
                {"alpha", spec.alpha},
                {"seed", spec.seed}};
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) return "0";  // unreachable for finite doubles
    return std::string(buf, ptr);
}

}  // namespace rootdisk
