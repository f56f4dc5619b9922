#include "w3pl/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "w3pl/densities.hpp"
#include "w3pl/rng.hpp"

namespace w3pl {

namespace detail {

std::pair<std::vector<double>, std::vector<double>> monotone_repair(
    const std::vector<double>& levels, const std::vector<double>& angles, double thin_eps) {
    std::vector<double> out_levels;
    std::vector<double> out_angles;
    out_levels.reserve(levels.size());
    out_angles.reserve(angles.size());

    double running_max = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        double level = std::clamp(levels[i], 0.0, 1.0);
        running_max = std::max(running_max, level);
        if (out_levels.empty()) {
            out_levels.push_back(running_max);
            out_angles.push_back(angles[i]);
        } else if (running_max - out_levels.back() >= thin_eps) {
            out_levels.push_back(running_max);
            out_angles.push_back(angles[i]);
        }
    }
    return {std::move(out_levels), std::move(out_angles)};
}

}  // namespace detail

InverseCdfTable build_inverse_table(const W3plParams& params, int grid_size, double thin_eps) {
    if (grid_size < 16) {
        throw std::domain_error("build_inverse_table: grid_size must be >= 16");
    }

    std::vector<double> levels(grid_size);
    std::vector<double> angles(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        const double theta = two_pi * static_cast<double>(i) / (grid_size - 1);
        angles[i] = theta;
        levels[i] = w3pl_cdf(std::min(theta, two_pi), params);
    }

    auto [kept_levels, kept_angles] = detail::monotone_repair(levels, angles, thin_eps);

    // Thinning can drop the closure point; reinstate the exact endpoint.
    if (kept_levels.back() < 1.0) {
        kept_levels.push_back(1.0);
        kept_angles.push_back(two_pi);
    }
    if (kept_levels.size() < 2) {
        throw std::runtime_error("build_inverse_table: degenerate table");
    }
    return InverseCdfTable{std::move(kept_levels), std::move(kept_angles), params};
}

double inverse_cdf(double u, const InverseCdfTable& table) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::domain_error("inverse_cdf: u must lie in [0, 1]");
    }
    const auto& levels = table.levels;
    const auto& angles = table.angles;
    if (u <= levels.front()) return angles.front();
    if (u >= levels.back()) return angles.back();

    const auto upper = std::upper_bound(levels.begin(), levels.end(), u);
    const std::size_t hi = static_cast<std::size_t>(upper - levels.begin());
    const std::size_t lo = hi - 1;
    const double span = levels[hi] - levels[lo];
    const double w = (u - levels[lo]) / span;
    return angles[lo] + w * (angles[hi] - angles[lo]);
}

CircularSample sample(const InverseCdfTable& table, int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::domain_error("sample: n must be >= 1");
    }
    Xoshiro256pp rng(seed);
    std::vector<Angle> draws;
    draws.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        draws.push_back(normalize_angle(inverse_cdf(rng.uniform01(), table)));
    }
    return CircularSample(std::move(draws), AngleUnit::Radians);
}

CircularSample sample(const W3plParams& params, int n, std::uint64_t seed, int grid_size) {
    return sample(build_inverse_table(params, grid_size), n, seed);
}

}  // namespace w3pl
