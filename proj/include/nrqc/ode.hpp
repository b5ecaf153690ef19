#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace nrqc {

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double init_dt = 1e-3;
    // Abort (IntegratorFailure) if more steps than this are taken between two
    // consecutive grid points.
    int max_steps_between = 2'000'000;
};

using OdeRhs = std::function<void(const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt, double t)>;
using OdeObserver = std::function<void(const Eigen::VectorXcd& y, double t)>;

// Integrates dy/dt = rhs(y, t) with an adaptive embedded Runge-Kutta scheme
// (Dormand-Prince 5(4)), calling observer at every time in grid. grid must be
// strictly increasing and grid.front() is the time of the initial state.
// Throws IntegratorFailure on step-size collapse.
void integrate_grid(const OdeRhs& rhs, Eigen::VectorXcd y, const std::vector<double>& grid,
                    const OdeObserver& observer, const OdeOptions& opt = {});

}  // namespace nrqc
