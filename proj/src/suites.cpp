#include "scatter/suites.hpp"

#include "scatter/greens.hpp"
#include "scatter/lattice.hpp"
#include "scatter/raytrace.hpp"
#include "scatter/scattering_poly.hpp"
#include "scatter/torus.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace scatter {

namespace {

constexpr std::size_t kSuiteLatticeBudget = 1'000'000;
constexpr std::size_t kSizingLatticeBudget = 200'000;
constexpr std::size_t kSuiteRayBudget = 8'000'000;

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// Scattering polynomials built once per (p, q) within a suite run.
class PolyCache {
public:
    const ScatteringPoly& get(int p, int q) {
        auto it = cache_.find({p, q});
        if (it == cache_.end()) it = cache_.emplace(std::pair{p, q}, make_scattering_poly(p, q)).first;
        return it->second;
    }

    std::complex<double> product(const DiskTuple& w, const std::vector<int>& k) {
        std::complex<double> acc{1.0, 0.0};
        for (std::size_t j = 0; j < w.size(); ++j) {
            const int p = k[j];
            const int q = (j + 1 < k.size()) ? k[j + 1] : 0;
            acc *= get(p, q).poly.eval(w[j].value);
        }
        return acc;
    }

private:
    std::map<std::pair<int, int>, ScatteringPoly> cache_;
};

}  // namespace

MediumParams random_medium(std::mt19937_64& rng, int layers) {
    MediumParams params;
    params.tau.reserve(layers);
    params.r.reserve(layers);
    for (int j = 0; j < layers; ++j) {
        const auto tau_idx = static_cast<long>(rng() % 8);      // {1/2, 1, ..., 4}
        const auto r_idx = static_cast<long>(rng() % 18);       // {±1/10, ..., ±9/10}
        params.tau.emplace_back(tau_idx + 1, 2);
        params.tau.back().canonicalize();
        const long magnitude = r_idx % 9 + 1;
        params.r.emplace_back(r_idx < 9 ? magnitude : -magnitude, 10);
        params.r.back().canonicalize();
    }
    params.validate();
    return params;
}

namespace {

// Distinct arrival times below T, counted from the bare lattice walk. Zero
// merged sums are not detected here; sizing only needs the time count.
std::optional<std::size_t> count_arrival_times(const MediumParams& params, const Rational& T,
                                               std::size_t budget) {
    try {
        const auto points = enumerate_lattice(params.tau, T, budget);
        std::set<Rational> times;
        for (const auto& k : points) times.insert(arrival_time(params.tau, k));
        return times.size();
    } catch (const LatticeBudgetExceeded&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<Rational> size_horizon(const MediumParams& params, std::size_t min_arrivals,
                                     std::size_t max_arrivals) {
    Rational T = params.tau[0];
    for (int step = 0; step < 96; ++step) {
        T = T * Rational(5, 4);
        const auto count = count_arrival_times(params, T, kSizingLatticeBudget);
        if (!count || *count > max_arrivals) return std::nullopt;
        if (*count >= min_arrivals) return T;
    }
    return std::nullopt;
}

CheckResult check_construction_agreement(int pq_max) {
    CheckResult res{"Rodrigues vs closed-form radial lift, exact", false, ""};
    for (int p = 1; p <= pq_max; ++p) {
        for (int q = 1; q <= pq_max; ++q) {
            if (!(rodrigues(p, q) == lift_radial(p, q, closed_form_radial(p, q)))) {
                res.detail = "mismatch at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                return res;
            }
        }
    }
    res.pass = true;
    res.detail = "all pairs 1 <= p,q <= " + std::to_string(pq_max);
    return res;
}

CheckResult check_eigen_identity(int pq_max) {
    CheckResult res{"weighted-laplacian eigenfunction identity, exact", false, ""};
    for (int p = 1; p <= pq_max; ++p) {
        for (int q = 1; q <= pq_max; ++q) {
            if (!eigen_check(p, q).ok) {
                res.detail = "residual nonzero at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")";
                return res;
            }
        }
    }
    res.pass = true;
    res.detail = "all pairs 1 <= p,q <= " + std::to_string(pq_max);
    return res;
}

CheckResult check_orthogonality(int pq_max, int order, double tol, double stability_tol) {
    CheckResult res{"orthogonality under the weighted area measure", false, ""};
    std::vector<ScatteringPoly> polys;
    for (int p = 1; p <= pq_max; ++p)
        for (int q = 1; q <= pq_max; ++q) polys.push_back(make_scattering_poly(p, q));

    double worst = 0.0, worst_drift = 0.0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = 0; j < polys.size(); ++j) {
            if (i == j) continue;
            const auto base = inner_product(polys[i], polys[j], order, order);
            const auto refined = inner_product(polys[i], polys[j], 2 * order, 2 * order);
            worst = std::max(worst, std::abs(base));
            worst_drift = std::max(worst_drift, std::abs(base - refined));
        }
    }
    res.pass = worst <= tol && worst_drift <= stability_tol;
    res.detail = "max |<a,b>| = " + format_double(worst) +
                 ", max drift under order doubling = " + format_double(worst_drift);
    return res;
}

CheckResult check_oracle_equivalence(std::uint64_t seed, int media) {
    CheckResult res{"ray-path oracle vs lattice synthesis, exact", false, ""};
    std::mt19937_64 rng(seed);

    int done = 0, collisions = 0, skipped = 0;
    std::size_t arrivals_total = 0;
    // A single-interface medium has exactly one arrival, so the 20..200
    // band is filled with n in {2..5}; n = 1 media are checked separately.
    for (int attempt = 0; attempt < 100 * media && done < media; ++attempt) {
        const int n = 2 + done % 4;
        const MediumParams params = random_medium(rng, n);
        const auto T = size_horizon(params, 20, 200);
        if (!T) {
            ++skipped;
            continue;
        }
        OracleReport report;
        try {
            report = compare_oracle(params, *T, kSuiteLatticeBudget, kSuiteRayBudget);
        } catch (const RayBudgetExceeded&) {
            ++skipped;
            continue;
        }
        if (!report.match) {
            res.detail = "mismatch on medium " + std::to_string(done) + " (seed " +
                         std::to_string(seed) + ")";
            return res;
        }
        arrivals_total += report.arrival_count;
        collisions += static_cast<int>(report.merged_collisions);
        ++done;
    }

    for (int i = 0; i < 5; ++i) {
        const MediumParams params = random_medium(rng, 1);
        const auto report = compare_oracle(params, params.tau[0] * 2, kSuiteLatticeBudget,
                                           kSuiteRayBudget);
        if (!report.match || report.arrival_count != 1) {
            res.detail = "single-interface medium mismatch";
            return res;
        }
    }

    res.pass = done == media && collisions > 0;
    res.detail = std::to_string(done) + " media matched exactly, " +
                 std::to_string(arrivals_total) + " arrivals, " + std::to_string(collisions) +
                 " merged collisions, " + std::to_string(skipped) + " resized out of budget";
    return res;
}

CheckResult check_fourier_identity(std::uint64_t seed, int tuples_per_n, double tol) {
    CheckResult res{"composition Fourier coefficients vs polynomial products", false, ""};
    std::mt19937_64 rng(seed);
    PolyCache cache;

    const auto random_interior = [&rng](int n, double radius_max) {
        DiskTuple w;
        std::uniform_real_distribution<double> radius(0.05, radius_max);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        for (int j = 0; j < n; ++j) w.push_back(DiskPoint::polar(radius(rng), angle(rng)));
        return w;
    };

    double worst = 0.0, worst_spurious = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const int grid = (n == 3) ? 32 : 64;
        const double radius_max = (n == 3) ? 0.55 : 0.7;

        // entry-sum <= 6 is exactly <1, k> < 7
        const std::vector<Rational> ones(n, Rational(1));
        const auto lattice = enumerate_lattice(ones, Rational(7));

        std::vector<std::vector<int>> spurious;
        if (n == 1) spurious = {{0}, {2}, {-1}};
        if (n == 2) spurious = {{0, 1}, {2, 0}, {1, -1}, {0, 0}};
        if (n == 3) spurious = {{1, 0, 1}, {0, 1, 1}, {1, -1, 2}, {2, 1, 0}};

        for (int t = 0; t < tuples_per_n; ++t) {
            const DiskTuple w = random_interior(n, radius_max);
            for (const auto& k : lattice) {
                const auto dft = fourier_coefficient(w, k, grid);
                const auto prod = cache.product(w, k);
                worst = std::max(worst, std::abs(dft - prod));
            }
            for (const auto& k : spurious)
                worst_spurious = std::max(worst_spurious, std::abs(fourier_coefficient(w, k, grid)));
        }
    }
    res.pass = worst <= tol && worst_spurious <= tol;
    res.detail = "max |DFT - product| = " + format_double(worst) +
                 ", max off-lattice coefficient = " + format_double(worst_spurious);
    return res;
}

CheckResult check_spectrum_convergence() {
    CheckResult res{"backward recurrence vs truncated spectrum convergence", false, ""};

    std::vector<double> sigmas(256);
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        sigmas[i] = M_PI * static_cast<double>(i) / sigmas.size();

    MediumParams two_layer;
    two_layer.tau = {Rational(2), Rational(4)};
    two_layer.r = {Rational(1, 2), Rational(1, 3)};

    std::vector<double> max_err;
    Rational T(9);
    for (int step = 0; step < 4; ++step, T *= 2) {
        const auto err = truncation_error(two_layer, T, sigmas);
        max_err.push_back(*std::max_element(err.begin(), err.end()));
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < max_err.size(); ++i)
        decreasing = decreasing && max_err[i] < max_err[i - 1];

    MediumParams single;
    single.tau = {Rational(2)};
    single.r = {Rational(1, 2)};
    const auto err1 = truncation_error(single, Rational(3), sigmas);
    const double single_err = *std::max_element(err1.begin(), err1.end());

    res.pass = decreasing && single_err <= 1e-14;
    std::string series;
    for (double e : max_err) series += format_double(e) + " ";
    res.detail = "max error over T doubling: " + series +
                 "; single-interface residual = " + format_double(single_err);
    return res;
}

CheckResult check_recurrence_machinery(int m_max, int nu_max, long lambda_max) {
    CheckResult res{"power-series recurrence vs closed form; eigenvalue quantization", false, ""};

    for (int m = 0; m <= m_max; ++m) {
        for (int nu = 1; nu <= nu_max; ++nu) {
            const long lambda = static_cast<long>(nu) * (m + nu);
            const RadialSolution sol = recurrence_radial(m, lambda);
            for (const auto [p, q] : {std::pair{m + nu, nu}, std::pair{nu, m + nu}}) {
                const RadialCoeffs f = closed_form_radial(p, q);
                // Proportionality constant from the leading power, never assumed.
                Rational ratio(0);
                for (std::size_t t = 0; t < sol.coeffs.size(); ++t) {
                    if (sol.coeffs[t] != 0) {
                        ratio = f.at(t) / sol.coeffs[t];
                        break;
                    }
                }
                if (ratio == 0) {
                    res.detail = "zero proportionality constant";
                    return res;
                }
                const std::size_t width = std::max(f.size(), sol.coeffs.size());
                for (std::size_t t = 0; t < width; ++t) {
                    const Rational lhs = t < f.size() ? f[t] : Rational(0);
                    const Rational rhs =
                        (t < sol.coeffs.size() ? sol.coeffs[t] : Rational(0)) * ratio;
                    if (lhs != rhs) {
                        res.detail = "proportionality fails at m=" + std::to_string(m) +
                                     " nu=" + std::to_string(nu);
                        return res;
                    }
                }
            }
        }
    }

    for (int m = 0; m <= m_max; ++m) {
        for (long lambda = 1; lambda <= lambda_max; ++lambda) {
            // Independent route: integer square root of the discriminant.
            const long disc = static_cast<long>(m) * m + 4 * lambda;
            const auto root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
            bool expected = false;
            for (long s = std::max(root - 2, 0L); s <= root + 2; ++s)
                if (s * s == disc && (s - m) % 2 == 0 && (s - m) / 2 >= 1) expected = true;
            if (eigenvalue_quantization(m, lambda) != expected) {
                res.detail = "quantization disagrees at m=" + std::to_string(m) +
                             " lambda=" + std::to_string(lambda);
                return res;
            }
        }
    }

    res.pass = true;
    res.detail = "m <= " + std::to_string(m_max) + ", nu <= " + std::to_string(nu_max) +
                 ", lambda <= " + std::to_string(lambda_max);
    return res;
}

CheckResult check_pde_residuals(std::uint64_t seed, int points, double h, double tol) {
    CheckResult res{"PDE system residuals, second-order convergence", false, ""};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.05, 0.45);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    // Ratio checks need truncation error to dominate the second-difference
    // roundoff floor eps/h^2 (~1e-10 at h = 1e-3, ~4e-10 at h/2).
    constexpr double kFloor = 5e-8;
    double worst = 0.0;
    int floor_level = 0;
    for (int i = 0; i < points; ++i) {
        const int n = 1 + i % 3;
        DiskTuple w;
        PhaseTuple z;
        for (int j = 0; j < n; ++j) {
            w.push_back(DiskPoint::polar(radius(rng), angle(rng)));
            z.push_back(angle(rng));
        }
        for (int j = 1; j <= n; ++j) {
            const PdeResidual coarse = pde_residual(w, z, j, h);
            const PdeResidual fine = pde_residual(w, z, j, h / 2);
            const double coarse_all[] = {coarse.wave, coarse.coupling, coarse.quadratic};
            const double fine_all[] = {fine.wave, fine.coupling, fine.quadratic};
            for (int c = 0; c < 3; ++c) {
                worst = std::max(worst, coarse_all[c]);
                if (coarse_all[c] > tol) {
                    res.detail = "residual " + format_double(coarse_all[c]) + " above " +
                                 format_double(tol) + " (n=" + std::to_string(n) + ")";
                    return res;
                }
                if (coarse_all[c] <= kFloor && fine_all[c] <= kFloor) {
                    ++floor_level;  // identically satisfied; nothing to converge
                    continue;
                }
                const double ratio = coarse_all[c] / fine_all[c];
                if (ratio < 3.5 || ratio > 4.5) {
                    res.detail = "convergence ratio " + format_double(ratio) +
                                 " outside [3.5, 4.5] (n=" + std::to_string(n) +
                                 ", j=" + std::to_string(j) + ")";
                    return res;
                }
            }
        }
    }
    res.pass = true;
    res.detail = std::to_string(points) + " points, max residual " + format_double(worst) +
                 ", " + std::to_string(floor_level) + " operator instances at roundoff floor";
    return res;
}

CheckResult check_energy_bound(std::uint64_t seed, int media) {
    CheckResult res{"energy bound and monotonicity in the horizon", false, ""};
    std::mt19937_64 rng(seed);

    Rational worst(0);
    int done = 0;
    for (int attempt = 0; attempt < 100 * media && done < media; ++attempt) {
        const int n = 1 + done % 5;
        const MediumParams params = random_medium(rng, n);
        const auto sized = n == 1 ? std::optional<Rational>(params.tau[0] * 4)
                                  : size_horizon(params, 20, 200);
        if (!sized) continue;

        Rational prev(-1);
        for (const Rational& T : {Rational(*sized / 4), Rational(*sized / 2), *sized}) {
            Rational e;
            try {
                e = energy(params, T, kSuiteLatticeBudget);
            } catch (const LatticeBudgetExceeded&) {
                break;
            }
            if (e > 1) {
                res.detail = "energy " + to_fraction_string(e) + " exceeds 1 (medium " +
                             std::to_string(done) + ")";
                return res;
            }
            if (e < prev) {
                res.detail = "energy not monotone (medium " + std::to_string(done) + ")";
                return res;
            }
            prev = e;
            if (e > worst) worst = e;
        }
        ++done;
    }
    res.pass = done == media;
    res.detail = std::to_string(done) + " media, max energy " + to_float_string(worst);
    return res;
}

}  // namespace scatter
