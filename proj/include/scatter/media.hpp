#pragma once

#include "scatter/rational.hpp"

#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace scatter {

struct ImpedanceJump {
    Rational depth;  // x_j, travel-time units
    Rational jump;   // C_j, signed impedance step
};

// Piecewise-constant impedance C_0 + sum_j C_j H(x - x_j), normalized so the
// terminal half-space has impedance 1.
struct ImpedanceProfile {
    Rational surface_impedance;        // C_0
    std::vector<ImpedanceJump> jumps;  // depths strictly increasing, all > 0

    // Throws std::invalid_argument naming the offending layer index when
    // depths are not increasing, a jump is zero, a layer impedance is not
    // positive, or the terminal impedance is not 1.
    void validate() const;

    // Impedance value per layer: index 0 is layer 1 (above the first jump),
    // index n is the terminal half-space (always 1 after validation).
    std::vector<Rational> layer_impedances() const;
};

// The (tau, r) parameterization: two-way travel time per layer and
// reflectivity per interface.
struct MediumParams {
    std::vector<Rational> tau;
    std::vector<Rational> r;

    int layer_count() const { return static_cast<int>(tau.size()); }
    void validate() const;  // tau_j > 0, 0 < |r_j| < 1, equal lengths
};

MediumParams to_params(const ImpedanceProfile& profile);
ImpedanceProfile from_params(const MediumParams& params);

// {"C0":"3","jumps":[{"x":"1","C":"-2"}]}
nlohmann::json to_json(const ImpedanceProfile& profile);
// {"tau":["2","4"],"r":["1/7","1/5"]}
nlohmann::json to_json(const MediumParams& params);

ImpedanceProfile profile_from_json(const nlohmann::json& j);
MediumParams params_from_json(const nlohmann::json& j);

// Accepts either schema and returns the (tau, r) form.
MediumParams medium_from_json(const nlohmann::json& j);

}  // namespace scatter
