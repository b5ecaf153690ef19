#include "nrqc/effective_params.hpp"

#include <cmath>
#include <sstream>

#include "nrqc/units.hpp"

namespace nrqc {

double normalize_angle(double theta) {
    double t = std::remainder(theta, kTwoPi);  // [-pi, pi]
    if (t <= -kPi) t = kPi;                    // fold -pi onto +pi
    return t;
}

EffectiveParams EffectiveParams::make(double delta_c, double lambda, double kappa,
                                      double gamma_nr, double theta, double eta) {
    EffectiveParams p{delta_c, lambda, kappa, gamma_nr, normalize_angle(theta), eta};
    p.validate();
    return p;
}

void EffectiveParams::validate() const {
    const double fields[] = {delta_c, lambda, kappa, gamma_nr, theta, eta};
    for (double f : fields) {
        if (!std::isfinite(f)) throw ConfigError("EffectiveParams: non-finite field");
    }
    if (kappa < 0.0) throw ConfigError("EffectiveParams: kappa < 0");
    if (gamma_nr < 0.0) throw ConfigError("EffectiveParams: gamma_nr < 0");
}

double EffectiveParams::total_decay() const {
    return kappa + gamma_nr * std::cosh(eta);
}

ConditionalEnergy conditional_energy(const EffectiveParams& p, QubitSector s) {
    const double sz = sector_sign(s);
    const double decay = p.kappa + p.gamma_nr * std::exp(p.eta * sz);
    return {Complex(p.delta_c + 0.5 * p.lambda * sz, -0.5 * decay)};
}

CoherenceCoefficient coherence_coefficient(const EffectiveParams& p) {
    const Complex phase(std::cos(p.theta), std::sin(p.theta));
    return {Complex(0.0, -p.lambda) + p.gamma_nr * (phase - std::cosh(p.eta))};
}

namespace {

[[noreturn]] void fail(const char* constraint, double value) {
    std::ostringstream os;
    os << "value " << value;
    throw NoPhysicalSolution(constraint, os.str());
}

}  // namespace

EffectiveParams params_from_energies(const ConditionalEnergy& e_up,
                                     const ConditionalEnergy& e_down,
                                     const CoherenceCoefficient& coeff) {
    const Complex eu = e_up.value;
    const Complex ed = e_down.value;
    const Complex c = coeff.value;

    const double delta_c = 0.5 * (eu + ed).real();
    const double lambda = (eu - ed).real();
    const double a = -(eu - ed).imag();       // Gamma sinh(eta)
    const double b = -(eu + ed).imag();       // kappa + Gamma cosh(eta)
    const double cs = lambda + c.imag();      // Gamma sin(theta)
    const double d = -c.real();               // Gamma (cosh(eta) - cos(theta))

    const double kappa_tol = 1e-9 * (std::abs(b) + 1.0);

    double gamma = 0.0, theta = 0.0, eta = 0.0, kappa = b;
    if (d == 0.0) {
        // Degenerate branch: only consistent with Gamma = 0 (reciprocal limit,
        // theta and eta indeterminate and reported as zero).
        const double scale = std::abs(lambda) + std::abs(b) + 1.0;
        if (std::abs(a) > 1e-12 * scale || std::abs(cs) > 1e-12 * scale) {
            fail("Gamma(cosh eta - cos theta) == 0 with asymmetric decay or frequency pull",
                 std::abs(a) + std::abs(cs));
        }
    } else {
        const double x = (a * a + cs * cs + d * d) / (2.0 * d);  // Gamma cosh(eta)
        if (x < 0.0) fail("Gamma cosh(eta) < 0", x);
        const double g2 = x * x - a * a;
        if (g2 < -1e-12 * (x * x + a * a + 1.0)) fail("Gamma^2 < 0", g2);
        gamma = std::sqrt(std::max(g2, 0.0));
        if (gamma == 0.0) {
            // x = |a| and cs = 0; consistent only if a = d = 0, handled above.
            fail("Gamma == 0 with Gamma cosh(eta) > 0", x);
        }
        eta = std::asinh(a / gamma);
        theta = std::atan2(cs, x - d);  // atan2(Gamma sin, Gamma cos)
        kappa = b - x;
    }

    if (kappa < 0.0) {
        if (kappa < -kappa_tol) fail("kappa < 0", kappa);
        kappa = 0.0;
    }
    return EffectiveParams::make(delta_c, lambda, kappa, gamma, theta, eta);
}

}  // namespace nrqc
