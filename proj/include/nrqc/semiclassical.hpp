#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrqc/effective_params.hpp"

namespace nrqc {

// Piecewise-constant cavity drive. epsilon is the amplitude of the
// H_dr = eps a^ + eps* a term (rad/us); zero outside all segments. delta_d is
// the drive detuning from the reference frame.
struct DriveSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    Complex epsilon{0.0, 0.0};
};

struct DriveEnvelope {
    std::vector<DriveSegment> segments;  // ordered, non-overlapping
    double delta_d = 0.0;

    static DriveEnvelope none() { return {}; }
    static DriveEnvelope square_pulse(double t_on, double width, Complex eps,
                                      double delta_d = 0.0);

    void validate() const;  // throws ConfigError
    Complex amplitude_at(double t) const;
    // Segment boundaries that fall strictly inside (t0, t1).
    std::vector<double> breakpoints_within(double t0, double t1) const;
};

struct SolverStats {
    std::string method;
    int intervals = 0;
};

// Time series of the conditional cavity amplitudes and, after
// evolve_coherence, the qubit coherence. Records produced by
// evolve_amplitudes retain the generating parameters and drive so the
// coherence integral can be evaluated segment-exactly.
struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<Complex> a_up;
    std::vector<Complex> a_down;
    std::vector<Complex> sigma_minus;  // empty until evolve_coherence
    SolverStats meta;

    struct AnalyticContext {
        EffectiveParams params;
        DriveEnvelope drive;
    };
    std::optional<AnalyticContext> analytic;
};

// (exp(z) - 1)/z, series-guarded near z = 0.
Complex phi1(Complex z);

// Solves i d(a_s)/dt = (E_s - delta_d) a_s + eps(t) for both qubit sectors by
// exact propagation over each constant-drive interval. grid must be strictly
// increasing; the initial amplitudes are taken at grid.front().
TrajectoryRecord evolve_amplitudes(const EffectiveParams& p, const DriveEnvelope& drive,
                                   Complex a0_up, Complex a0_down,
                                   const std::vector<double>& grid);

// Fills sigma_minus(t) = sigma0 * exp(C * Integral_t0^t a_up a_down^* dt').
// Uses the segment-exact closed form when the record carries its analytic
// context, otherwise composite Simpson on the stored samples.
TrajectoryRecord evolve_coherence(const EffectiveParams& p, TrajectoryRecord traj,
                                  Complex sigma0);

// ln(<s_-(t_f)>/<s_-(0)>) for free decay from equal conditional amplitudes
// sqrt(n0): n0 * C/(i lambda + kappa + Gamma cosh eta) * (1 - e^{-(...) t_f}).
// Imag part is the accumulated phase phi, real part is ln(zeta).
Complex free_decay_closed_form(const EffectiveParams& p, double n0, double t_f);

// t_f -> infinity limit of the above.
Complex long_time_ratio(const EffectiveParams& p, double n0);

struct CwResponse {
    double stark_shift;     // rad/us
    double dephasing_rate;  // 1/us
};

// Qubit Stark shift and dephasing rate under a CW drive of amplitude epsilon
// at detuning delta_d: i Dq - Gq = C |eps|^2 / (E_up E_down^*), with the
// conditional energies evaluated at detuning delta_c - delta_d.
CwResponse cw_steady_state(const EffectiveParams& p, Complex epsilon, double delta_d);

// <s_-(inf)>/<s_-(0)> for an initial single-photon Fock state:
// (kappa + Gamma e^{i theta}) / (i lambda + kappa + Gamma cosh eta).
Complex fock_steady_ratio(const EffectiveParams& p);

}  // namespace nrqc
