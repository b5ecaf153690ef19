#pragma once

#include <complex>

#include "nrqc/errors.hpp"

namespace nrqc {

using Complex = std::complex<double>;

// Qubit sigma_z eigenstate. Up is the ground state |g> (the convention used
// throughout: solid-line curves, kappa_g, omega_g all refer to Up).
enum class QubitSector : int { Up = +1, Down = -1 };

inline constexpr int sector_sign(QubitSector s) { return static_cast<int>(s); }

// Folds an angle into (-pi, pi].
double normalize_angle(double theta);

// The six real parameters of the effective qubit-cavity master equation:
//
//   drho/dt = -i[delta_c a^ a + (lambda/2) sz a^ a, rho]
//             + kappa D[a] rho + gamma_nr D[exp((i theta + eta)/2 sz) a] rho
//
// All angular frequencies and rates in rad/us. theta is stored normalized
// to (-pi, pi].
struct EffectiveParams {
    double delta_c = 0.0;   // cavity detuning from the reference frame
    double lambda = 0.0;    // reciprocal dispersive shift
    double kappa = 0.0;     // qubit-independent cavity decay rate
    double gamma_nr = 0.0;  // collective (non-reciprocal) dissipation rate
    double theta = 0.0;     // jump phase imprinted on the qubit per photon loss
    double eta = 0.0;       // qubit-conditional decay asymmetry

    // Validating constructor path; normalizes theta.
    static EffectiveParams make(double delta_c, double lambda, double kappa,
                                double gamma_nr, double theta, double eta);

    // Throws ConfigError on non-finite fields or negative rates.
    void validate() const;

    // kappa + gamma_nr*cosh(eta): total decay scale of a|g/e|-averaged photon.
    double total_decay() const;
};

// Conditional cavity self-energy E_s = delta_c + (lambda/2) s
//                                      - i (kappa + gamma_nr e^{eta s})/2.
struct ConditionalEnergy {
    Complex value;
};

// Coefficient of a_up a_down^* in the qubit-coherence equation of motion:
// C = -i lambda + gamma_nr (e^{i theta} - cosh eta). Re(C) <= 0 for real eta.
struct CoherenceCoefficient {
    Complex value;
};

ConditionalEnergy conditional_energy(const EffectiveParams& p, QubitSector s);
CoherenceCoefficient coherence_coefficient(const EffectiveParams& p);

// Algebraic inverse of the two maps above. Throws NoPhysicalSolution when the
// inputs are inconsistent with kappa, gamma_nr >= 0; the exception names the
// violated constraint. kappa within -1e-9*(|kappa+Gamma cosh eta|+1) of zero
// is clamped to zero, larger violations are reported.
EffectiveParams params_from_energies(const ConditionalEnergy& e_up,
                                     const ConditionalEnergy& e_down,
                                     const CoherenceCoefficient& coeff);

}  // namespace nrqc
