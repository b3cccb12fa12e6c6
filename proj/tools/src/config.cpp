#include "qisf/app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "qisf/errors.hpp"

namespace qisf::app {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw usage_error(std::string(key), "expected a finite number, got '" + std::string(text) + "'");
    return value;
}

template <class Int>
Int parse_integer(std::string_view key, std::string_view text) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw usage_error(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value)>;

Setter number(double RunConfig::*field) {
    return [field](RunConfig& c, std::string_view k, std::string_view v) { c.*field = parse_double(k, v); };
}

Setter count(std::size_t RunConfig::*field) {
    return [field](RunConfig& c, std::string_view k, std::string_view v) {
        c.*field = parse_integer<std::size_t>(k, v);
    };
}

const std::map<std::string_view, Setter>& setters() {
    static const std::map<std::string_view, Setter> table{
        {"mass_amu", number(&RunConfig::mass_amu)},
        {"temperature_K", number(&RunConfig::temperature_K)},
        {"gamma_ps_inv", number(&RunConfig::gamma_ps_inv)},
        {"omega_c_ps_inv", number(&RunConfig::omega_c_ps_inv)},
        {"omega0_ps_inv", number(&RunConfig::omega0_ps_inv)},
        {"dK_inv_A", number(&RunConfig::dK_inv_A)},
        {"n_modes", count(&RunConfig::n_modes)},
        {"omega_max_ps_inv",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.omega_max_ps_inv = v == "auto" ? 0.0 : parse_double(k, v);
         }},
        {"t_min_ps", number(&RunConfig::t_min_ps)},
        {"t_max_ps", number(&RunConfig::t_max_ps)},
        {"n_t", count(&RunConfig::n_t)},
        {"seed",
         [](RunConfig& c, std::string_view k, std::string_view v) { c.seed = parse_integer<std::uint64_t>(k, v); }},
        {"window", [](RunConfig& c, std::string_view, std::string_view v) { c.window = std::string(v); }},
        {"output_dir", [](RunConfig& c, std::string_view, std::string_view v) { c.output_dir = std::string(v); }},
        {"mc_samples", count(&RunConfig::mc_samples)},
        {"density_file", [](RunConfig& c, std::string_view, std::string_view v) { c.density_file = std::string(v); }},
    };
    return table;
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys = [] {
        std::vector<std::string_view> k;
        for (const auto& [name, setter] : setters()) k.push_back(name);
        return k;
    }();
    return keys;
}

void set_value(RunConfig& config, std::string_view key, std::string_view value) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw usage_error(std::string(key), "unknown configuration key");
    it->second(config, key, value);
}

void apply_override(RunConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw usage_error("", "expected key=value, got '" + std::string(assignment) + "'");
    set_value(config, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void read_config(RunConfig& config, std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw usage_error("", "line " + std::to_string(line_no) + ": expected key = value");
        set_value(config, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
    }
}

void read_config(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("", "cannot open config file " + path.string());
    read_config(config, in);
}

TimeGrid RunConfig::grid() const {
    try {
        return TimeGrid::from_range(t_min_ps, t_max_ps, n_t);
    } catch (const qisf::domain_error& e) {
        throw usage_error("n_t", e.what());
    }
}

dsf::Window RunConfig::dsf_window() const {
    if (window == "none") return dsf::Window::none();
    if (window == "gaussian") return dsf::Window::gaussian();
    constexpr std::string_view prefix = "gaussian:";
    if (window.starts_with(prefix)) {
        const double sigma = parse_double("window", std::string_view(window).substr(prefix.size()));
        if (sigma <= 0.0) throw usage_error("window", "gaussian width must be positive");
        return dsf::Window::gaussian(sigma);
    }
    throw usage_error("window", "expected none, gaussian or gaussian:<sigma_ps>, got '" + window + "'");
}

void validate(const RunConfig& c) {
    const auto require = [](bool ok, const char* key, const char* message) {
        if (!ok) throw usage_error(key, message);
    };
    require(c.mass_amu > 0.0, "mass_amu", "must be positive");
    require(c.temperature_K > 0.0, "temperature_K", "must be positive");
    require(c.gamma_ps_inv >= 0.0, "gamma_ps_inv", "must be non-negative");
    require(c.omega_c_ps_inv > 0.0, "omega_c_ps_inv", "must be positive");
    require(c.omega0_ps_inv >= 0.0, "omega0_ps_inv", "must be non-negative");
    require(c.n_modes >= 1, "n_modes", "must be at least 1");
    require(c.omega_max_ps_inv >= 0.0, "omega_max_ps_inv", "must be positive or auto");
    require(c.t_min_ps < 0.0, "t_min_ps", "must be negative");
    require(c.t_max_ps > 0.0, "t_max_ps", "must be positive");
    require(c.n_t >= 3, "n_t", "must be at least 3");
    require(c.n_t % 2 == 1, "n_t", "must be odd so the grid contains t = 0");
    require(c.mc_samples >= 1, "mc_samples", "must be at least 1");
    require(!c.output_dir.empty(), "output_dir", "must not be empty");
    (void)c.grid();
    (void)c.dsf_window();
}

}  // namespace qisf::app
