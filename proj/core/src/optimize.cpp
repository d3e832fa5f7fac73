#include "cvteleport/optimize.hpp"

#include <cmath>
#include <sstream>

#include "cvteleport/errors.hpp"
#include "cvteleport/fidelity.hpp"
#include "cvteleport/moments.hpp"

namespace cvt {

namespace {

// Sigma|_{g~=1} at the optimal phases (pi, 0), as a function of delta.
double sigma_at(double delta, double r, const ChannelParams& unity) {
    return sigma_excess(ResourceSpec::squeezed_bell(r, M_PI, delta, 0.0), unity);
}

double golden_minimize(const std::function<double(double)>& f, double a, double b) {
    const double gr = (std::sqrt(5.0) + 1.0) / 2.0;
    double c = b - (b - a) / gr;
    double d = a + (b - a) / gr;
    while (std::abs(b - a) > 1e-12) {
        if (f(c) < f(d))
            b = d;
        else
            a = c;
        c = b - (b - a) / gr;
        d = a + (b - a) / gr;
    }
    return 0.5 * (a + b);
}

} // namespace

double delta_opt_fidelity(double input_s, double r, const ChannelParams& params) {
    const ChannelParams unity = params.unity_effective_gain();
    const InputState input(Complex{0.0, 0.0}, input_s, 0.0);
    const ResourceSpec res = ResourceSpec::squeezed_bell(r, M_PI, 0.0, 0.0);
    const DerivedQuantities q = derived_quantities(input, res, unity);

    const double l1 = q.lambda1, l2 = q.lambda2;
    const double num = 4.0 * q.delta2 * l1 * l2 * (l1 + l2);
    const double den = 4.0 * q.delta1 * l1 * l2 * (l1 + l2) -
                       std::exp(-2.0 * r - unity.tau) * q.delta2 * q.delta2 *
                           (3.0 * l1 * l1 + 2.0 * l1 * l2 + 3.0 * l2 * l2);
    return 0.5 * std::atan(num / den);
}

double delta_subopt(double s_bar, double r, const ChannelParams& params) {
    return delta_opt_fidelity(s_bar, r, params);
}

double delta_opt_variance(double r, double tau) {
    if (!(r >= 0.0) || !(tau >= 0.0))
        throw DomainError("delta_opt_variance requires r >= 0 and tau >= 0");
    const double p = (1.0 + std::exp(0.5 * tau)) * (1.0 + std::exp(0.5 * tau));
    const double q = std::exp(4.0 * r) * (1.0 - std::exp(0.5 * tau)) * (1.0 - std::exp(0.5 * tau));
    return 0.5 * std::atan((p - q) / (p + q));
}

double argmin_sigma_bruteforce(double r, const ChannelParams& params, int grid_size) {
    if (grid_size < 8) throw DomainError("grid_size must be >= 8");
    const ChannelParams unity = params.unity_effective_gain();
    const auto objective = [&](double d) { return sigma_at(d, r, unity); };

    // coarse scan over the full period (-pi/2, pi/2], then golden refinement
    double best_d = 0.0;
    double best = objective(0.0);
    const double lo = -0.5 * M_PI, span = M_PI;
    for (int i = 0; i <= grid_size; ++i) {
        const double d = lo + span * static_cast<double>(i) / grid_size;
        const double v = objective(d);
        if (v < best) {
            best = v;
            best_d = d;
        }
    }
    const double cell = span / grid_size;
    const double refined = golden_minimize(objective, best_d - cell, best_d + cell);

    // the closed form lives on the principal branch; a minimum elsewhere
    // would mean the two disagree about the period
    if (!(refined > -0.25 * M_PI - 1e-9 && refined <= 0.25 * M_PI + 1e-9)) {
        std::ostringstream msg;
        msg << "Sigma argmin " << refined << " fell outside the principal branch (-pi/4, pi/4]";
        throw ConvergenceError(msg.str());
    }
    return refined;
}

OptimizationResult optimize_fidelity(double s_bar, double r, const ChannelParams& params) {
    OptimizationResult out;
    out.procedure = OptimizationProcedure::FidelityMax;
    out.r = r;
    out.params = params;
    out.delta_star = delta_subopt(s_bar, r, params);
    out.objective_value = fidelity_beta_independent(
        s_bar, ResourceSpec::squeezed_bell(r, M_PI, out.delta_star, 0.0), params);
    return out;
}

OptimizationResult optimize_variance(double r, const ChannelParams& params) {
    OptimizationResult out;
    out.procedure = OptimizationProcedure::VarianceMin;
    out.r = r;
    out.params = params;
    out.delta_star = delta_opt_variance(r, params.tau);
    out.objective_value =
        sigma_at(out.delta_star, r, params.unity_effective_gain());
    return out;
}

} // namespace cvt
