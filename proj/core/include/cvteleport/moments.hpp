#pragma once

#include <functional>

#include "cvteleport/channel.hpp"

namespace cvt {

/// First and second moments of the quadratures X = (a + ad)/sqrt2,
/// P = i(ad - a)/sqrt2. cov_xp is the symmetrized cross variance
/// <XP + PX> - 2<X><P>.
struct QuadratureMoments {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double cov_xp = 0.0;
};

/// Output-minus-input moment differences D(X), D(P), D(dX^2), D(dP^2),
/// D(d(XP)_S); all vanish when output == input.
struct MomentDeviations {
    double d_x = 0.0;
    double d_p = 0.0;
    double d_var_x = 0.0;
    double d_var_p = 0.0;
    double d_cov_xp = 0.0;
};

/// Heisenberg determinant var_x var_p - (cov_xp/2)^2; >= 1/4 for any state.
double heisenberg_det(const QuadratureMoments& m);

/// Input moments: means (beta +- beta*)/sqrt2 and
///   var_x = (cosh 2s - cos varphi sinh 2s)/2,
///   var_p = (cosh 2s + cos varphi sinh 2s)/2,
///   cov   = -sin varphi sinh 2s.
QuadratureMoments input_moments(const InputState& state);

/// Additive excess variance Sigma appearing in both output quadrature
/// variances, in full (delta, theta, phi_res, g~) generality:
///
///   Sigma = Gamma - e^{-tau/2} g~ sin(theta + phi) sin(phi) sin 2delta
///         - (1/4) e^{-2r-tau} (1 + e^{tau} g~^2 - 2 e^{tau/2} g~ cos phi)
///                 [cos 2delta - cos(theta + phi) sin 2delta - 2]
///         - (1/4) e^{+2r-tau} (1 + e^{tau} g~^2 + 2 e^{tau/2} g~ cos phi)
///                 [cos 2delta + cos(theta + phi) sin 2delta - 2]
///
/// derived from chi_out; equals the literature expression at phi = pi (the
/// working point of every reduction: the two agree up to the sign convention
/// of the resource squeezing phase).
double sigma_excess(const ResourceSpec& res, const ChannelParams& params);

/// Output moments: means scaled by g~, var_z = g~^2 var_z_in + Sigma,
/// cross variance scaled by g~^2.
QuadratureMoments output_moments(const InputState& input, const ResourceSpec& res,
                                 const ChannelParams& params);

/// The five deviation measures; at g~ = 1 only the variances deviate,
/// both by Sigma.
MomentDeviations deviations(const InputState& input, const ResourceSpec& res,
                            const ChannelParams& params);

/// Moment extraction from an arbitrary characteristic function via central
/// finite differences with two Richardson levels, using
/// chi(i u / sqrt2) = <e^{iuX}> and chi(-u / sqrt2) = <e^{iuP}>.
/// step must lie in (0, 0.1]. Throws ConvergenceError when the Richardson
/// ladder fails to settle within `tol`.
QuadratureMoments moments_from_chi(const std::function<Complex(ComplexPoint)>& chi,
                                   double step = 1e-3, double tol = 1e-6);

/// Finite-difference oracle on chi_out; must reproduce output_moments.
QuadratureMoments moments_numeric(const InputState& input, const ResourceSpec& res,
                                  const ChannelParams& params, double step = 1e-3,
                                  double tol = 1e-6);

} // namespace cvt
