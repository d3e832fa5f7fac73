#pragma once

#include "cvteleport/states.hpp"

namespace cvt {

/// Parameters of the imperfect Vaidman-Braunstein-Kimble channel:
/// detector beam-splitter transmissivity T (R^2 = 1 - T^2), scaled fiber
/// time tau = gamma t, bath mean photon number n_th, and protocol gain g.
struct ChannelParams {
    double T = 1.0;    ///< in (0, 1]
    double tau = 0.0;  ///< >= 0
    double n_th = 0.0; ///< >= 0
    double g = 1.0;    ///< > 0

    ChannelParams() = default;
    ChannelParams(double T_, double tau_, double n_th_, double g_);

    /// Lossless protocol: T = 1, tau = 0, n_th = 0, g = 1.
    static ChannelParams ideal() { return {}; }
    /// Same losses, gain pinned at g = 1/T so the effective gain is 1.
    static ChannelParams with_unity_effective_gain(double T_, double tau_, double n_th_);
    /// Construct from the detector reflectivity R^2 instead of T.
    static ChannelParams from_r2(double R2, double tau_, double n_th_, double g_);

    double R2() const { return 1.0 - T * T; }
    double R() const;
    /// g~ = g T; g~ = 1 makes output means equal input means.
    double effective_gain() const { return g * T; }
    /// Copy with g replaced by 1/T.
    ChannelParams unity_effective_gain() const;
};

/// Gamma_{tau,R} = (1 - e^{-tau})(1/2 + n_th) + g^2 R^2, the Gaussian
/// excess-noise exponent of the imperfect protocol.
double gamma_factor(const ChannelParams& params);

/// Output characteristic function of the teleported state,
///   chi_out(a) = e^{-Gamma |a|^2} chi_in(g~ a) chi_res(g~ a*, e^{-tau/2} a).
/// The first resource slot (Alice's mode) takes g~ a*, the second (Bob's
/// fiber mode) takes e^{-tau/2} a; this orientation is encoded only here.
Complex chi_output(const InputState& input, const ResourceSpec& res,
                   const ChannelParams& params, ComplexPoint alpha);

} // namespace cvt
