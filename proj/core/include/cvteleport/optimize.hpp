#pragma once

#include "cvteleport/channel.hpp"
#include "cvteleport/units.hpp"

namespace cvt {

enum class OptimizationProcedure { FidelityMax, VarianceMin };

/// Result of one of the two optimization procedures over the squeezed-Bell
/// mixing angle delta, with the context it was computed in.
struct OptimizationResult {
    double delta_star = 0.0;
    double objective_value = 0.0; ///< fidelity at delta_star, or Sigma|_{g~=1}
    OptimizationProcedure procedure = OptimizationProcedure::FidelityMax;
    double r = 0.0;
    ChannelParams params;
};

/// Fidelity-maximizing angle
///   delta_opt = (1/2) arctan[ 4 D2 L1 L2 (L1+L2) /
///               (4 D1 L1 L2 (L1+L2) - e^{-2r-tau} D2^2 (3L1^2 + 2L1L2 + 3L2^2)) ]
/// in the g~ = 1 context (the gain in `params` is ignored and pinned to 1/T).
/// Principal arctan branch, delta in (-pi/4, pi/4).
double delta_opt_fidelity(double input_s, double r, const ChannelParams& params);

/// Practical variant with the unknown input squeezing replaced by a fixed
/// effective value s_bar (default choice in the literature: 5 dB).
double delta_subopt(double s_bar, double r, const ChannelParams& params);

/// Variance-minimizing angle
///   delta_optvar = (1/2) arctan[ ((1+e^{tau/2})^2 - e^{4r}(1-e^{tau/2})^2) /
///                                ((1+e^{tau/2})^2 + e^{4r}(1-e^{tau/2})^2) ],
/// independent of R and n_th; equals pi/8 for tau = 0.
double delta_opt_variance(double r, double tau);

/// Brute-force oracle for delta_opt_variance: coarse scan of
/// Sigma|_{g~=1, phi_res=pi, theta=0} over delta in (-pi/2, pi/2] followed by
/// golden-section refinement. Throws ConvergenceError if the minimum lands
/// outside the principal branch (-pi/4, pi/4] of the closed form.
double argmin_sigma_bruteforce(double r, const ChannelParams& params, int grid_size = 720);

/// delta_subopt packaged with the fidelity it attains.
OptimizationResult optimize_fidelity(double s_bar, double r, const ChannelParams& params);
/// delta_opt_variance packaged with the Sigma it attains.
OptimizationResult optimize_variance(double r, const ChannelParams& params);

} // namespace cvt
