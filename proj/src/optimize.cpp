#include "w3pl/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace w3pl {

namespace {

using Vec = std::vector<double>;

Vec clamp_to_box(Vec x, const BoxBounds& bounds) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds.lower[i], bounds.upper[i]);
    }
    return x;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double inf_norm(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

// Gradient with components pointing out of the box zeroed; the usual
// first-order measure for bound-constrained problems.
Vec projected_gradient(const Vec& x, const Vec& g, const BoxBounds& bounds) {
    Vec pg = g;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool at_lower = x[i] <= bounds.lower[i];
        const bool at_upper = x[i] >= bounds.upper[i];
        if ((at_lower && g[i] > 0.0) || (at_upper && g[i] < 0.0)) {
            pg[i] = 0.0;
        }
    }
    return pg;
}

}  // namespace

std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x,
                                double step, int* evaluations) {
    Vec g(x.size());
    Vec probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + step;
        const double f_plus = f(probe);
        probe[i] = x[i] - step;
        const double f_minus = f(probe);
        probe[i] = x[i];
        g[i] = (f_plus - f_minus) / (2.0 * step);
    }
    if (evaluations) *evaluations += 2 * static_cast<int>(x.size());
    return g;
}

OptimResult minimize_bounded(const Objective& f, std::vector<double> x0,
                             const BoxBounds& bounds, const OptimOptions& options) {
    const std::size_t d = x0.size();
    if (bounds.lower.size() != d || bounds.upper.size() != d) {
        throw std::invalid_argument("minimize_bounded: bounds dimension mismatch");
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (!(bounds.lower[i] < bounds.upper[i])) {
            throw std::invalid_argument("minimize_bounded: empty box");
        }
    }

    OptimResult result;
    Vec x = clamp_to_box(std::move(x0), bounds);
    double fx = f(x);
    ++result.evaluations;
    if (!std::isfinite(fx)) {
        throw std::invalid_argument("minimize_bounded: objective not finite at start");
    }
    Vec g = fd_gradient(f, x, options.fd_step, &result.evaluations);

    // Inverse Hessian approximation, row-major d*d.
    Vec h(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) h[i * d + i] = 1.0;
    bool first_update = true;

    // Armijo backtracking along a direction; returns false when no
    // acceptable projected step exists.
    const auto line_search = [&](const Vec& dir, Vec& x_out, double& f_out) {
        double t = 1.0;
        for (int halvings = 0; halvings < 60; ++halvings, t *= 0.5) {
            Vec x_trial(d);
            for (std::size_t i = 0; i < d; ++i) {
                x_trial[i] = std::clamp(x[i] + t * dir[i], bounds.lower[i], bounds.upper[i]);
            }
            Vec step(d);
            double step_norm = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                step[i] = x_trial[i] - x[i];
                step_norm = std::max(step_norm, std::abs(step[i]));
            }
            if (step_norm == 0.0) return false;
            const double slope = dot(g, step);
            if (slope >= 0.0) continue;  // projection turned it uphill; shorten
            const double f_trial = f(x_trial);
            ++result.evaluations;
            if (std::isfinite(f_trial) && f_trial <= fx + 1e-4 * slope) {
                x_out = std::move(x_trial);
                f_out = f_trial;
                return true;
            }
        }
        return false;
    };

    for (result.iterations = 0; result.iterations < options.max_iterations;
         ++result.iterations) {
        const Vec pg = projected_gradient(x, g, bounds);
        if (inf_norm(pg) < options.gradient_tol) {
            result.converged = true;
            break;
        }

        Vec direction(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) direction[i] -= h[i * d + j] * g[j];
        }

        Vec x_next;
        double f_next = 0.0;
        bool moved = line_search(direction, x_next, f_next);
        if (!moved) {
            // Quasi-Newton direction rejected; retry from steepest descent.
            std::fill(h.begin(), h.end(), 0.0);
            for (std::size_t i = 0; i < d; ++i) h[i * d + i] = 1.0;
            first_update = true;
            Vec steepest(d);
            for (std::size_t i = 0; i < d; ++i) steepest[i] = -pg[i];
            moved = line_search(steepest, x_next, f_next);
        }
        if (!moved) {
            // No descent step representable; at this resolution the point is
            // stationary for practical purposes.
            result.converged = inf_norm(pg) < 1e-5;
            break;
        }

        Vec g_next = fd_gradient(f, x_next, options.fd_step, &result.evaluations);
        const double f_change = std::abs(fx - f_next);

        Vec s(d);
        Vec y(d);
        for (std::size_t i = 0; i < d; ++i) {
            s[i] = x_next[i] - x[i];
            y[i] = g_next[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
            if (first_update) {
                const double scale = sy / dot(y, y);
                std::fill(h.begin(), h.end(), 0.0);
                for (std::size_t i = 0; i < d; ++i) h[i * d + i] = scale;
                first_update = false;
            }
            const double rho = 1.0 / sy;
            Vec hy(d, 0.0);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) hy[i] += h[i * d + j] * y[j];
            }
            const double yhy = dot(y, hy);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    h[i * d + j] += -rho * (s[i] * hy[j] + hy[i] * s[j]) +
                                    (rho * rho * yhy + rho) * s[i] * s[j];
                }
            }
        }

        x = std::move(x_next);
        fx = f_next;
        g = std::move(g_next);

        if (f_change < options.objective_tol) {
            result.converged = true;
            break;
        }
    }

    result.x = std::move(x);
    result.value = fx;
    return result;
}

}  // namespace w3pl
