#include "cvteleport/states.hpp"

#include <cmath>

#include "cvteleport/errors.hpp"

namespace cvt {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double wrap_angle(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

} // namespace

InputState::InputState(Complex beta_, double s_, double varphi_)
    : beta(beta_), s(s_), varphi(wrap_angle(varphi_)) {
    if (!(s_ >= 0.0) || !std::isfinite(s_))
        throw DomainError("input squeezing magnitude must be >= 0");
    if (!std::isfinite(beta_.real()) || !std::isfinite(beta_.imag()) || !std::isfinite(varphi_))
        throw DomainError("input state parameters must be finite");
}

InputState InputState::from_db(Complex beta_, double s_db, double varphi_) {
    return InputState(beta_, db_to_natural(s_db), varphi_);
}

ResourceSpec ResourceSpec::squeezed_bell(double r, double phi_res, double delta, double theta) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw DomainError("resource squeezing magnitude must be >= 0");
    if (!std::isfinite(phi_res) || !std::isfinite(delta) || !std::isfinite(theta))
        throw DomainError("resource angles must be finite");
    return ResourceSpec{ResourceKind::SqueezedBell, r, phi_res, delta, theta};
}

ResourceSpec preset_resource(ResourceKind kind, double r, double phi_res) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw DomainError("resource squeezing magnitude must be >= 0");
    if (!std::isfinite(phi_res))
        throw DomainError("resource squeezing phase must be finite");

    ResourceSpec res;
    res.kind = kind;
    res.r = r;
    res.phi_res = phi_res;
    switch (kind) {
    case ResourceKind::TwinBeam:
        res.delta = 0.0;
        res.theta = 0.0;
        break;
    case ResourceKind::PhotonAdded:
        res.delta = std::acos(std::sinh(r) / std::sqrt(std::cosh(2.0 * r)));
        res.theta = phi_res - M_PI;
        break;
    case ResourceKind::PhotonSubtracted:
        // degenerate at r = 0: arccos(1) = 0, the vacuum (see states.hpp)
        res.delta = std::acos(std::cosh(r) / std::sqrt(std::cosh(2.0 * r)));
        res.theta = phi_res - M_PI;
        break;
    case ResourceKind::SqueezedBell:
        res.delta = 0.0; // free parameters, placeholders
        res.theta = 0.0;
        break;
    }
    return res;
}

Complex chi_input(const InputState& state, ComplexPoint alpha) {
    const Complex ac = std::conj(alpha);
    const Complex squeezed =
        alpha * std::cosh(state.s) + ac * std::polar(std::sinh(state.s), state.varphi);
    const Complex exponent =
        alpha * std::conj(state.beta) - ac * state.beta - 0.5 * std::norm(squeezed);
    return std::exp(exponent);
}

Complex chi_resource(const ResourceSpec& res, ComplexPoint alpha1, ComplexPoint alpha2) {
    const double ch = std::cosh(res.r);
    const Complex sh = std::polar(std::sinh(res.r), res.phi_res);
    const Complex xi1 = alpha1 * ch + std::conj(alpha2) * sh;
    const Complex xi2 = alpha2 * ch + std::conj(alpha1) * sh;

    const double n1 = std::norm(xi1);
    const double n2 = std::norm(xi2);
    const double sd = std::sin(res.delta);
    const double cd = std::cos(res.delta);
    // e^{i th} x1 x2 + c.c. is real
    const double cross = 2.0 * (std::polar(1.0, res.theta) * xi1 * xi2).real();
    const double bracket = 1.0 + sd * cd * cross + sd * sd * (n1 * n2 - n1 - n2);
    return std::exp(-0.5 * (n1 + n2)) * bracket;
}

} // namespace cvt
