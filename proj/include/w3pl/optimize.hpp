#pragma once

#include <functional>
#include <vector>

namespace w3pl {

using Objective = std::function<double(const std::vector<double>&)>;

struct BoxBounds {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct OptimOptions {
    int max_iterations = 500;
    double objective_tol = 1e-10;  // stop when |f_k - f_{k+1}| drops below
    double gradient_tol = 1e-8;    // stop when the projected gradient does
    double fd_step = 1e-6;         // central-difference step
};

struct OptimResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
    int evaluations = 0;
};

/// Central finite-difference gradient.
std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x,
                                double step, int* evaluations = nullptr);

/// Box-constrained quasi-Newton minimizer: BFGS on the inverse Hessian with
/// an Armijo backtracking line search, steps projected onto the box, and
/// bound-blocked gradient components treated as inactive. Gradients come
/// from central differences. Intended for the low-dimensional smooth
/// objectives used by the fitting routines.
OptimResult minimize_bounded(const Objective& f, std::vector<double> x0,
                             const BoxBounds& bounds, const OptimOptions& options = {});

}  // namespace w3pl
