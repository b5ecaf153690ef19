#include "nrqc/ode.hpp"

#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>

#include "nrqc/errors.hpp"

namespace boost::numeric::odeint {

// The stock Eigen adapter returns a complex norm for complex states; the
// error control needs a real one.
template <>
struct vector_space_norm_inf<Eigen::VectorXcd> {
    typedef double result_type;
    double operator()(const Eigen::VectorXcd& x) const {
        return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
    }
};

}  // namespace boost::numeric::odeint

namespace nrqc {

void integrate_grid(const OdeRhs& rhs, Eigen::VectorXcd y, const std::vector<double>& grid,
                    const OdeObserver& observer, const OdeOptions& opt) {
    namespace ode = boost::numeric::odeint;
    using State = Eigen::VectorXcd;

    if (grid.size() < 1) throw ConfigError("integrate_grid: empty time grid");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1]))
            throw ConfigError("integrate_grid: grid not strictly increasing");
    }

    auto stepper = ode::make_controlled(
        opt.abs_tol, opt.rel_tol,
        ode::runge_kutta_dopri5<State, double, State, double, ode::vector_space_algebra>());

    auto system = [&rhs](const State& x, State& dxdt, double t) { rhs(x, dxdt, t); };

    try {
        ode::integrate_times(stepper, system, y, grid.begin(), grid.end(), opt.init_dt,
                             [&observer](const State& x, double t) { observer(x, t); },
                             ode::max_step_checker(opt.max_steps_between));
    } catch (const ode::no_progress_error& e) {
        throw IntegratorFailure(std::string("IntegratorFailure: ") + e.what());
    } catch (const std::overflow_error& e) {
        throw IntegratorFailure(std::string("IntegratorFailure: ") + e.what());
    }
}

}  // namespace nrqc
