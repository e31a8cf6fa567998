#include "scatter/greens.hpp"

#include "scatter/scattering_poly.hpp"

#include <map>
#include <ostream>
#include <utility>

#include <nlohmann/json.hpp>

namespace scatter {

namespace {

// Radial evaluations f^{(p,q)}(r_j) reused across lattice points. Keyed by
// (layer, p, q); read-only during the parallel product phase.
class AmplitudeTable {
public:
    AmplitudeTable(const std::vector<Rational>& r, const std::vector<LatticePoint>& points) {
        for (const auto& k : points) {
            for (std::size_t j = 0; j < r.size(); ++j) {
                const int p = k[j];
                const int q = (j + 1 < k.size()) ? k[j + 1] : 0;
                const Key key{j, {p, q}};
                if (values_.find(key) == values_.end())
                    values_.emplace(key, eval_radial_exact(closed_form_radial(p, q), r[j]));
            }
        }
    }

    Rational product(const LatticePoint& k, std::size_t n) const {
        Rational acc(1);
        for (std::size_t j = 0; j < n; ++j) {
            const int p = k[j];
            const int q = (j + 1 < k.size()) ? k[j + 1] : 0;
            acc *= values_.at(Key{j, {p, q}});
            if (acc == 0) break;
        }
        return acc;
    }

private:
    using Key = std::pair<std::size_t, std::pair<int, int>>;
    std::map<Key, Rational> values_;
};

}  // namespace

Rational amplitude(const std::vector<Rational>& r, const LatticePoint& k) {
    Rational acc(1);
    for (std::size_t j = 0; j < r.size(); ++j) {
        const int p = j < k.size() ? k[j] : 0;
        const int q = (j + 1 < k.size()) ? k[j + 1] : 0;
        acc *= eval_radial_exact(closed_form_radial(p, q), r[j]);
        if (acc == 0) break;
    }
    return acc;
}

std::vector<Rational> amplitudes(const std::vector<Rational>& r,
                                 const std::vector<LatticePoint>& points, Exec exec) {
    std::vector<Rational> out(points.size());
    const AmplitudeTable table(r, points);
    const std::size_t n = r.size();
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(points.size()); ++i)
            out[i] = table.product(points[i], n);
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = table.product(points[i], n);
    }
    return out;
}

GreensTruncation synthesize(const MediumParams& params, const Rational& T,
                            std::size_t lattice_budget, Exec exec) {
    params.validate();
    GreensTruncation g;
    g.horizon = T;
    g.params = params;

    const auto points = enumerate_lattice(params.tau, T, lattice_budget);
    const auto amps = amplitudes(params.r, points, exec);

    // Deterministic merge keyed by exact arrival time.
    std::map<Rational, Arrival> merged;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational t = arrival_time(params.tau, points[i]);
        auto& slot = merged[t];
        slot.time = t;
        slot.amplitude += amps[i];
        slot.contributors.push_back(points[i]);
    }
    for (auto& [t, arrival] : merged)
        if (arrival.amplitude != 0) g.arrivals.push_back(std::move(arrival));
    return g;
}

Rational energy(const MediumParams& params, const Rational& T, std::size_t lattice_budget) {
    params.validate();
    const auto points = enumerate_lattice(params.tau, T, lattice_budget);
    const auto amps = amplitudes(params.r, points);
    Rational total(0);
    for (const auto& a : amps) total += a * a;
    return total;
}

std::complex<double> spectrum_poly(const GreensTruncation& g, double sigma) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& arrival : g.arrivals)
        acc += to_double(arrival.amplitude) * std::polar(1.0, to_double(arrival.time) * sigma);
    return acc;
}

std::complex<double> spectrum_poly(const MediumParams& params, const Rational& T, double sigma,
                                   std::size_t lattice_budget) {
    return spectrum_poly(synthesize(params, T, lattice_budget), sigma);
}

std::vector<std::complex<double>> spectrum_poly_sweep(const GreensTruncation& g,
                                                      std::span<const double> sigmas, Exec exec) {
    std::vector<std::complex<double>> out(sigmas.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(sigmas.size()); ++i)
            out[i] = spectrum_poly(g, sigmas[i]);
    } else {
        for (std::size_t i = 0; i < sigmas.size(); ++i) out[i] = spectrum_poly(g, sigmas[i]);
    }
    return out;
}

namespace {
std::string contributors_field(const std::vector<LatticePoint>& contributors) {
    std::string field;
    for (std::size_t c = 0; c < contributors.size(); ++c) {
        if (c) field += '|';
        for (std::size_t j = 0; j < contributors[c].size(); ++j) {
            if (j) field += ' ';
            field += std::to_string(contributors[c][j]);
        }
    }
    return field;
}
}  // namespace

void write_arrivals_csv(std::ostream& os, const GreensTruncation& g) {
    os << "time,amplitude,time_float,amplitude_float,contributors\n";
    for (const auto& a : g.arrivals) {
        os << to_fraction_string(a.time) << ',' << to_fraction_string(a.amplitude) << ','
           << to_float_string(a.time) << ',' << to_float_string(a.amplitude) << ','
           << contributors_field(a.contributors) << '\n';
    }
}

nlohmann::json to_json(const GreensTruncation& g) {
    nlohmann::json arrivals = nlohmann::json::array();
    for (const auto& a : g.arrivals) {
        nlohmann::json contributors = nlohmann::json::array();
        for (const auto& k : a.contributors) contributors.push_back(k);
        arrivals.push_back({{"time", to_fraction_string(a.time)},
                            {"amplitude", to_fraction_string(a.amplitude)},
                            {"time_float", to_double(a.time)},
                            {"amplitude_float", to_double(a.amplitude)},
                            {"contributors", std::move(contributors)}});
    }
    nlohmann::json j = to_json(g.params);
    j["T"] = to_fraction_string(g.horizon);
    j["arrivals"] = std::move(arrivals);
    return j;
}

}  // namespace scatter
