#include "cvteleport/channel.hpp"

#include <cmath>

#include "cvteleport/errors.hpp"

namespace cvt {

ChannelParams::ChannelParams(double T_, double tau_, double n_th_, double g_)
    : T(T_), tau(tau_), n_th(n_th_), g(g_) {
    if (!(T_ > 0.0 && T_ <= 1.0))
        throw DomainError("transmissivity T must lie in (0, 1]");
    if (!(tau_ >= 0.0) || !std::isfinite(tau_))
        throw DomainError("scaled fiber time tau must be >= 0");
    if (!(n_th_ >= 0.0) || !std::isfinite(n_th_))
        throw DomainError("bath photon number n_th must be >= 0");
    if (!(g_ > 0.0) || !std::isfinite(g_))
        throw DomainError("protocol gain g must be > 0");
}

ChannelParams ChannelParams::with_unity_effective_gain(double T_, double tau_, double n_th_) {
    return ChannelParams(T_, tau_, n_th_, 1.0 / T_);
}

ChannelParams ChannelParams::from_r2(double R2, double tau_, double n_th_, double g_) {
    if (!(R2 >= 0.0 && R2 < 1.0))
        throw DomainError("detector reflectivity R^2 must lie in [0, 1)");
    return ChannelParams(std::sqrt(1.0 - R2), tau_, n_th_, g_);
}

double ChannelParams::R() const { return std::sqrt(R2()); }

ChannelParams ChannelParams::unity_effective_gain() const {
    return ChannelParams(T, tau, n_th, 1.0 / T);
}

double gamma_factor(const ChannelParams& params) {
    return (1.0 - std::exp(-params.tau)) * (0.5 + params.n_th) +
           params.g * params.g * params.R2();
}

Complex chi_output(const InputState& input, const ResourceSpec& res,
                   const ChannelParams& params, ComplexPoint alpha) {
    const double gt = params.effective_gain();
    const double gamma = gamma_factor(params);
    return std::exp(-gamma * std::norm(alpha)) * chi_input(input, gt * alpha) *
           chi_resource(res, gt * std::conj(alpha), std::exp(-0.5 * params.tau) * alpha);
}

} // namespace cvt
