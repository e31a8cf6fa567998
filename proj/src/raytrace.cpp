#include "scatter/raytrace.hpp"

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

namespace scatter {

namespace {

struct RayState {
    int layer;  // layer currently being traversed, 1-based
    bool down;
    Rational elapsed;
    Rational amplitude;
};

}  // namespace

TraceResult trace_paths(const MediumParams& params, const Rational& T,
                        std::size_t segment_budget) {
    params.validate();
    const int n = params.layer_count();
    const auto& tau = params.tau;
    const auto& r = params.r;

    // up_time[j]: straight-up travel time from interface j to the surface,
    // used to prune branches that cannot arrive before the horizon.
    std::vector<Rational> up_time(n + 1, Rational(0));
    for (int j = 1; j <= n; ++j) up_time[j] = up_time[j - 1] + tau[j - 1] / 2;

    TraceResult result;
    result.truncation.horizon = T;
    result.truncation.params = params;

    std::map<Rational, Rational> merged;
    std::vector<RayState> stack;
    stack.push_back({1, true, Rational(0), Rational(1)});

    while (!stack.empty()) {
        if (++result.segments > segment_budget) {
            result.complete = false;
            break;
        }
        RayState s = std::move(stack.back());
        stack.pop_back();

        const Rational t = s.elapsed + tau[s.layer - 1] / 2;
        if (s.down) {
            // Hits interface s.layer from above.
            if (t + up_time[s.layer] < T)
                stack.push_back({s.layer, false, t, s.amplitude * r[s.layer - 1]});
            if (s.layer < n && t + tau[s.layer] / 2 + up_time[s.layer + 1] < T)
                stack.push_back({s.layer + 1, true, t, s.amplitude * (Rational(1) + r[s.layer - 1])});
        } else {
            // Hits interface s.layer - 1 from below.
            const int iface = s.layer - 1;
            if (iface == 0) {
                if (t < T) merged[t] += s.amplitude;
                continue;
            }
            if (t + tau[s.layer - 1] / 2 + up_time[s.layer] < T)
                stack.push_back({s.layer, true, t, s.amplitude * (-r[iface - 1])});
            if (t + up_time[iface] < T)
                stack.push_back({iface, false, t, s.amplitude * (Rational(1) - r[iface - 1])});
        }
    }

    if (result.complete) {
        for (const auto& [time, amp] : merged)
            if (amp != 0) result.truncation.arrivals.push_back({time, amp, {}});
    }
    return result;
}

OracleReport compare_oracle(const MediumParams& params, const Rational& T,
                            std::size_t lattice_budget, std::size_t segment_budget) {
    const TraceResult traced = trace_paths(params, T, segment_budget);
    if (!traced.complete) throw RayBudgetExceeded(segment_budget, traced.segments);
    const GreensTruncation synth = synthesize(params, T, lattice_budget);

    OracleReport report;
    report.arrival_count = synth.arrivals.size();
    for (const auto& a : synth.arrivals)
        if (a.contributors.size() > 1) ++report.merged_collisions;

    std::map<Rational, OracleDiff> by_time;
    for (const auto& a : traced.truncation.arrivals) {
        by_time[a.time].time = a.time;
        by_time[a.time].ray_amplitude = a.amplitude;
    }
    for (const auto& a : synth.arrivals) {
        by_time[a.time].time = a.time;
        by_time[a.time].lattice_amplitude = a.amplitude;
    }
    for (auto& [time, diff] : by_time) {
        if (diff.ray_amplitude.has_value() && diff.lattice_amplitude.has_value() &&
            *diff.ray_amplitude == *diff.lattice_amplitude)
            continue;
        report.diffs.push_back(std::move(diff));
    }
    report.match = report.diffs.empty();
    return report;
}

nlohmann::json to_json(const OracleReport& report) {
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : report.diffs) {
        diffs.push_back(
            {{"time", to_fraction_string(d.time)},
             {"oracleAmp", d.ray_amplitude ? to_fraction_string(*d.ray_amplitude) : "absent"},
             {"latticeAmp",
              d.lattice_amplitude ? to_fraction_string(*d.lattice_amplitude) : "absent"}});
    }
    return {{"match", report.match},
            {"arrivals", report.arrival_count},
            {"diffs", std::move(diffs)}};
}

}  // namespace scatter
