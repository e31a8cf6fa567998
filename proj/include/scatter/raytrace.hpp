#pragma once

#include "scatter/greens.hpp"
#include "scatter/media.hpp"
#include "scatter/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace scatter {

inline constexpr std::size_t kDefaultRayBudget = 100'000'000;

struct RayBudgetExceeded : std::runtime_error {
    RayBudgetExceeded(std::size_t budget, std::size_t segments)
        : std::runtime_error("ray walk exceeded the segment budget of " + std::to_string(budget) +
                             " after " + std::to_string(segments) + " segments") {}
};

// Brute-force enumeration of physical scattering sequences. Independent of
// the lattice/polynomial route: amplitudes are accumulated as products of
// interface reflection/transmission factors only.
struct TraceResult {
    GreensTruncation truncation;
    std::size_t segments = 0;
    bool complete = true;  // false when the segment budget cut the walk short
};

// Depth-first walk of every ray path of a unit downgoing surface impulse.
// A downgoing ray at interface j reflects with r_j or transmits down with
// 1 + r_j; an upgoing ray at interface j reflects with -r_j or transmits up
// with 1 - r_j; rays below interface n never return; a ray reaching the
// surface records its arrival and stops. Arrivals merge by exact time.
TraceResult trace_paths(const MediumParams& params, const Rational& T,
                        std::size_t segment_budget = kDefaultRayBudget);

struct OracleDiff {
    Rational time;
    std::optional<Rational> ray_amplitude;
    std::optional<Rational> lattice_amplitude;
};

struct OracleReport {
    bool match = false;
    std::size_t arrival_count = 0;      // arrivals in the lattice synthesis
    std::size_t merged_collisions = 0;  // arrivals fed by more than one lattice class
    std::vector<OracleDiff> diffs;      // empty iff match
};

// Runs both routes and demands identical (time, amplitude) lists, exact
// rational equality. Throws on budget exhaustion.
OracleReport compare_oracle(const MediumParams& params, const Rational& T,
                            std::size_t lattice_budget = kDefaultLatticeBudget,
                            std::size_t segment_budget = kDefaultRayBudget);

// [{"time":"..","oracleAmp":"..","latticeAmp":".."}]
nlohmann::json to_json(const OracleReport& report);

}  // namespace scatter
