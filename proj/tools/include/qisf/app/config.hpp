// config.hpp: run configuration for the qisf command line tool
//
// File format: UTF-8 text, one `key = value` per line, '#' starts a
// comment, unknown keys are errors. `--set key=value` uses the same keys.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qisf/dsf.hpp"
#include "qisf/time_grid.hpp"

namespace qisf::app {

class usage_error : public std::runtime_error {
public:
    usage_error(std::string key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct RunConfig {
    double mass_amu = 7.0;
    double temperature_K = 150.0;
    double gamma_ps_inv = 1.0;
    double omega_c_ps_inv = 2.0;
    double omega0_ps_inv = 0.0;
    double dK_inv_A = 1.0;
    std::size_t n_modes = 2000;
    double omega_max_ps_inv = 0.0;  // 0 selects 50·max(ω_c, γ, ω₀)
    double t_min_ps = -10.0;
    double t_max_ps = 10.0;
    std::size_t n_t = 4001;
    std::uint64_t seed = 42;
    std::string window = "gaussian";  // none | gaussian | gaussian:<sigma_ps>
    std::filesystem::path output_dir = ".";
    std::size_t mc_samples = 100000;
    std::filesystem::path density_file;  // empty: Drude(γ, ω_c)

    TimeGrid grid() const;
    dsf::Window dsf_window() const;
};

const std::vector<std::string_view>& config_keys();

// Applies one assignment; throws usage_error naming the key.
void set_value(RunConfig& config, std::string_view key, std::string_view value);
// "key=value"
void apply_override(RunConfig& config, std::string_view assignment);
void read_config(RunConfig& config, std::istream& in);
void read_config(RunConfig& config, const std::filesystem::path& path);

// Cross-field checks (grid contains t = 0, n_t odd, positive physical parameters).
void validate(const RunConfig& config);

}  // namespace qisf::app
