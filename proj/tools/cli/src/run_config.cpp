#include "hilfer/cli/run_config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "hilfer/error.hpp"

namespace hilfer::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_decimal(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty number");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string& text) {
    const double v = parse_decimal(text);
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw std::invalid_argument("expected a positive integer, got '" + trim(text) + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

double parse_number(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    const double p = parse_decimal(text.substr(0, slash));
    const double q = parse_decimal(text.substr(slash + 1));
    if (q == 0.0) throw std::invalid_argument("zero denominator in '" + trim(text) + "'");
    return p / q;
}

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto where = [&] { return "line " + std::to_string(lineno) + ", key '" + key + "': "; };
        if (!seen.insert(key).second) fail(ErrorCode::ConfigError, where() + "duplicate key");
        if (value.empty() && key != "rhs_params") fail(ErrorCode::ConfigError, where() + "missing value");

        try {
            if (key == "kernel") {
                cfg.kernel = value;
            } else if (key == "rhs") {
                cfg.rhs = value;
            } else if (key == "out") {
                cfg.out = value;
            } else if (key == "a") {
                cfg.a = parse_number(value);
            } else if (key == "b") {
                cfg.b = parse_number(value);
            } else if (key == "alpha") {
                cfg.alpha = parse_number(value);
            } else if (key == "beta") {
                cfg.beta = parse_number(value);
            } else if (key == "u_a") {
                cfg.u_a = parse_number(value);
            } else if (key == "M") {
                cfg.M = parse_number(value);
            } else if (key == "Mstar") {
                cfg.Mstar = parse_number(value);
            } else if (key == "mesh_N") {
                cfg.mesh_N = parse_count(value);
            } else if (key == "grading_r") {
                cfg.grading_r = parse_number(value);
            } else if (key == "picard_tol") {
                cfg.picard_tol = parse_number(value);
            } else if (key == "rhs_params") {
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ',')) cfg.rhs_params.push_back(parse_number(item));
            } else {
                fail(ErrorCode::ConfigError, where() + "unknown key");
            }
        } catch (const std::invalid_argument& e) {
            fail(ErrorCode::ConfigError, where() + e.what());
        }
    }
    for (const char* key : {"kernel", "alpha", "beta", "u_a", "rhs"}) {
        if (!seen.count(key)) fail(ErrorCode::ConfigError, std::string("missing required key '") + key + "'");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ConfigError, "cannot read config file '" + path + "'");
    return parse_config(in);
}

ProblemSpec RunConfig::problem() const {
    RhsSpec f = RhsSpec::from_name(rhs, rhs_params);
    PsiKernel k = builtin_kernel(kernel, a, b);
    FractionalOrder order(alpha, beta);
    if (!M && !Mstar) return {std::move(k), order, u_a, std::move(f)};
    if (Mstar && !(*Mstar >= 0.0 && *Mstar < 1.0)) {
        std::ostringstream os;
        os << "Mstar = " << *Mstar << " violates the requirement 0 <= M* < 1";
        fail(ErrorCode::ConfigError, os.str());
    }
    const double m = M.value_or(f.lipschitz_M());
    const double ms = Mstar.value_or(f.lipschitz_Mstar());
    return {std::move(k), order, u_a, std::move(f), m, ms};
}

SolveConfig RunConfig::solve_config() const {
    SolveConfig c;
    c.mesh_N = mesh_N;
    c.grading_r = grading_r;
    c.picard_tol = picard_tol;
    c.validate();
    return c;
}

}  // namespace hilfer::cli
