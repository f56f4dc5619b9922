#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "w3pl/angle.hpp"
#include "w3pl/params.hpp"

namespace w3pl {

/// Monotone grid approximation to the inverse CDF: strictly increasing CDF
/// levels paired with nondecreasing angles in [0, 2*pi]. Built by evaluating
/// the analytic CDF on a dense grid, clamping into [0,1], enforcing
/// monotonicity with a running maximum, and thinning near-duplicate levels.
struct InverseCdfTable {
    std::vector<double> levels;
    std::vector<double> angles;
    W3plParams params;
};

InverseCdfTable build_inverse_table(const W3plParams& params, int grid_size = 4096,
                                    double thin_eps = 1e-12);

/// Quantile at u in [0, 1] by linear interpolation between bracketing table
/// entries. Returns the angle as a plain double in the closed interval
/// [0, 2*pi] so that the map stays monotone up to and including u = 1;
/// callers forming samples reduce the endpoint case modulo 2*pi.
double inverse_cdf(double u, const InverseCdfTable& table);

/// n independent draws via inverse transform sampling, deterministic per
/// seed. The two-argument form reuses a prebuilt table so parallel callers
/// can share it read-only.
CircularSample sample(const W3plParams& params, int n, std::uint64_t seed,
                      int grid_size = 4096);
CircularSample sample(const InverseCdfTable& table, int n, std::uint64_t seed);

namespace detail {

/// clamp + running maximum + thinning pass used by build_inverse_table;
/// exposed so its idempotence can be checked directly.
std::pair<std::vector<double>, std::vector<double>> monotone_repair(
    const std::vector<double>& levels, const std::vector<double>& angles, double thin_eps);

}  // namespace detail

}  // namespace w3pl
