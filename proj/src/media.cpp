#include "scatter/media.hpp"

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace scatter {

namespace {
[[noreturn]] void fail_layer(const std::string& what, std::size_t index) {
    throw std::invalid_argument(what + " (layer " + std::to_string(index + 1) + ")");
}
}  // namespace

void ImpedanceProfile::validate() const {
    if (surface_impedance <= 0) throw std::invalid_argument("surface impedance must be positive");
    Rational prev_depth(0);
    Rational impedance = surface_impedance;
    for (std::size_t j = 0; j < jumps.size(); ++j) {
        if (jumps[j].depth <= prev_depth) fail_layer("jump depths must be strictly increasing", j);
        if (jumps[j].jump == 0) fail_layer("zero impedance jump", j);
        impedance += jumps[j].jump;
        if (impedance <= 0) fail_layer("impedance must stay positive", j);
        prev_depth = jumps[j].depth;
    }
    if (impedance != 1)
        throw std::invalid_argument("terminal impedance must normalize to 1, got " +
                                    to_fraction_string(impedance));
}

std::vector<Rational> ImpedanceProfile::layer_impedances() const {
    std::vector<Rational> zeta;
    zeta.reserve(jumps.size() + 1);
    Rational value = surface_impedance;
    zeta.push_back(value);
    for (const auto& jump : jumps) {
        value += jump.jump;
        zeta.push_back(value);
    }
    return zeta;
}

void MediumParams::validate() const {
    if (tau.size() != r.size())
        throw std::invalid_argument("tau and r must have equal length");
    if (tau.empty()) throw std::invalid_argument("medium needs at least one layer");
    for (std::size_t j = 0; j < tau.size(); ++j) {
        if (tau[j] <= 0) fail_layer("travel time must be positive", j);
        if (r[j] == 0) fail_layer("zero reflectivity", j);
        if (abs(r[j]) >= 1) fail_layer("reflectivity magnitude must be below 1", j);
    }
}

MediumParams to_params(const ImpedanceProfile& profile) {
    profile.validate();
    const std::vector<Rational> zeta = profile.layer_impedances();
    const std::size_t n = profile.jumps.size();

    MediumParams params;
    params.tau.reserve(n);
    params.r.reserve(n);
    Rational prev_depth(0);
    for (std::size_t j = 0; j < n; ++j) {
        params.tau.push_back(Rational(2) * (profile.jumps[j].depth - prev_depth));
        params.r.push_back((zeta[j] - zeta[j + 1]) / (zeta[j] + zeta[j + 1]));
        params.r.back().canonicalize();
        prev_depth = profile.jumps[j].depth;
    }
    params.validate();
    return params;
}

ImpedanceProfile from_params(const MediumParams& params) {
    params.validate();
    const std::size_t n = params.tau.size();

    // zeta_{n+1} = 1, then backwards zeta_j = zeta_{j+1} (1 + r_j)/(1 - r_j).
    std::vector<Rational> zeta(n + 1);
    zeta[n] = 1;
    for (std::size_t j = n; j-- > 0;) {
        zeta[j] = zeta[j + 1] * (Rational(1) + params.r[j]) / (Rational(1) - params.r[j]);
        zeta[j].canonicalize();
    }

    ImpedanceProfile profile;
    profile.surface_impedance = zeta[0];
    Rational depth(0);
    for (std::size_t j = 0; j < n; ++j) {
        depth += params.tau[j] / 2;
        profile.jumps.push_back({depth, zeta[j + 1] - zeta[j]});
    }
    profile.validate();
    return profile;
}

nlohmann::json to_json(const ImpedanceProfile& profile) {
    nlohmann::json jumps = nlohmann::json::array();
    for (const auto& jump : profile.jumps)
        jumps.push_back({{"x", to_fraction_string(jump.depth)},
                         {"C", to_fraction_string(jump.jump)}});
    return {{"C0", to_fraction_string(profile.surface_impedance)}, {"jumps", std::move(jumps)}};
}

nlohmann::json to_json(const MediumParams& params) {
    nlohmann::json tau = nlohmann::json::array();
    nlohmann::json r = nlohmann::json::array();
    for (const auto& t : params.tau) tau.push_back(to_fraction_string(t));
    for (const auto& v : params.r) r.push_back(to_fraction_string(v));
    return {{"tau", std::move(tau)}, {"r", std::move(r)}};
}

ImpedanceProfile profile_from_json(const nlohmann::json& j) {
    ImpedanceProfile profile;
    profile.surface_impedance = rational_from_string(j.at("C0").get<std::string>());
    for (const auto& jump : j.at("jumps"))
        profile.jumps.push_back({rational_from_string(jump.at("x").get<std::string>()),
                                 rational_from_string(jump.at("C").get<std::string>())});
    profile.validate();
    return profile;
}

MediumParams params_from_json(const nlohmann::json& j) {
    MediumParams params;
    for (const auto& t : j.at("tau")) params.tau.push_back(rational_from_string(t.get<std::string>()));
    for (const auto& v : j.at("r")) params.r.push_back(rational_from_string(v.get<std::string>()));
    params.validate();
    return params;
}

MediumParams medium_from_json(const nlohmann::json& j) {
    if (j.contains("tau")) return params_from_json(j);
    if (j.contains("C0")) return to_params(profile_from_json(j));
    throw std::invalid_argument("medium JSON needs either {tau, r} or {C0, jumps}");
}

}  // namespace scatter
