#pragma once

#include "cvteleport/channel.hpp"

namespace cvt {

/// The Delta/Lambda/omega bundle entering the closed-form fidelities:
///   Delta1 = 1 + e^{4r} + 2 e^{tau/2} (1 - e^{4r}) g~ + e^{tau} (1 + e^{4r}) g~^2
///   Delta2 = 1 - e^{4r} + 2 e^{tau/2} (1 + e^{4r}) g~ + e^{tau} (1 - e^{4r}) g~^2
///   Lambda1 = e^{-2r-tau} Delta1 + 2 e^{+2s} (1 + g~^2) + 4 Gamma
///   Lambda2 = e^{-2r-tau} Delta1 + 2 e^{-2s} (1 + g~^2) + 4 Gamma
///   omega1^2 = (1 - g~)^2 (beta - beta*)^2   (real, <= 0)
///   omega2^2 = (1 - g~)^2 (beta + beta*)^2   (real, >= 0)
///
/// omega1_sq is a *signed* quantity: (beta - beta*)^2 = -4 Im(beta)^2. The
/// prefactor exp(omega1_sq/Lambda1 - omega2_sq/Lambda2) therefore always has
/// magnitude <= 1. Both omegas vanish at g~ = 1.
struct DerivedQuantities {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double omega1_sq = 0.0;
    double omega2_sq = 0.0;
};

DerivedQuantities derived_quantities(const InputState& input, const ResourceSpec& res,
                                     const ChannelParams& params);

/// Tensor-product Gauss-Legendre rule for the overlap integral.
/// half_width <= 0 selects the box automatically as L = 6 / sqrt(lambda_min)
/// from the integrand's Gaussian envelope (tail mass < 1e-12).
struct QuadratureRule {
    int order = 96;          ///< nodes per axis, >= 8
    double half_width = 0.0; ///< integration box half-side, > 0 or auto
};

/// Closed-form one-shot fidelity F_CS for squeezed-Bell resources in the
/// non-ideal protocol. Valid only at the optimal resource phases
/// (phi_res, theta) = (pi, 0); other phases throw PhaseConventionError.
///
/// At g~ != 1 the fidelity genuinely depends on the input squeezing phase;
/// this expression corresponds to varphi = 0. At g~ = 1 (or beta = 0, or
/// s = 0) it is exact for every varphi.
double fidelity_closed_form(const InputState& input, const ResourceSpec& res,
                            const ChannelParams& params);

/// beta-independent fidelity F_S: the closed form at gain pinned to
/// g = 1/T (g~ = 1). Takes the input squeezing only.
double fidelity_beta_independent(double input_s, const ResourceSpec& res,
                                 const ChannelParams& params);

/// Quadrature oracle for F = (1/pi) Int d^2a chi_in(a) chi_out(-a).
/// Any resource phases allowed. Evaluates the rule at `order` and
/// `2 * order` nodes per axis and throws ConvergenceError when the two
/// results differ by more than `convergence_tol`; returns the finer value.
double fidelity_numeric(const InputState& input, const ResourceSpec& res,
                        const ChannelParams& params, QuadratureRule rule = {},
                        double convergence_tol = 1e-9);

} // namespace cvt
