// validation.hpp: cross-route residual report emitted by `qisf validate`

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qisf/app/config.hpp"

namespace qisf::app {

struct Check {
    enum class Kind { below, at_most, at_least } kind = Kind::below;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct SkippedCheck {
    std::string name;
    std::string reason;
};

struct ValidationReport {
    std::vector<Check> checks;
    std::vector<SkippedCheck> skipped;
    std::vector<std::string> warnings;

    bool passed() const;
    void add(std::string name, double value, Check::Kind kind, double threshold);
    nlohmann::json to_json(const RunConfig& config) const;
};

// Mode-sum route against the closed form (Drude bath, ω₀ = 0 only), the
// cumulant and quadrature routes, the MC oracle, structural invariants of
// the ISF and the spectral checks on the DSF.
ValidationReport run_validation(const RunConfig& config);

}  // namespace qisf::app
