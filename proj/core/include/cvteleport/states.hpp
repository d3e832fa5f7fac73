#pragma once

#include <complex>

#include "cvteleport/units.hpp"

namespace cvt {

using Complex = std::complex<double>;

/// A point alpha in the complex phase-space plane, d^2alpha = d(Re) d(Im).
using ComplexPoint = std::complex<double>;

/// Single-mode coherent squeezed input |psi> = D(beta) S(s e^{i varphi}) |0>,
/// with the Glauber convention D(a) = exp(a ad - a* a) and
/// S(eps) = exp(-eps ad^2/2 + eps* a^2/2).
struct InputState {
    Complex beta{0.0, 0.0}; ///< coherent amplitude
    double s = 0.0;         ///< squeezing magnitude, natural units, >= 0
    double varphi = 0.0;    ///< squeezing phase, stored in [0, 2pi)

    InputState() = default;
    InputState(Complex beta_, double s_, double varphi_);

    static InputState vacuum() { return {}; }
    /// Construct with the squeezing magnitude given in dB.
    static InputState from_db(Complex beta_, double s_db, double varphi_);

    /// s expressed in dB: s_dB = 10 log10 e^{2s}.
    double s_db() const { return natural_to_db(s); }
};

enum class ResourceKind {
    TwinBeam,         ///< delta = 0, Gaussian two-mode squeezed vacuum
    PhotonAdded,      ///< ad1 ad2 applied to a twin beam (normalized)
    PhotonSubtracted, ///< a1 a2 applied to a twin beam (normalized)
    SqueezedBell      ///< free (delta, theta)
};

/// Two-mode entangled resource S12(r e^{i phi_res}) {cos delta |0,0> +
/// e^{i theta} sin delta |1,1>}, with S12(z) = exp(-z ad1 ad2 + z* a1 a2).
///
/// The photon-added/subtracted presets pin delta(r) and theta = phi_res - pi;
/// note PSS collapses onto the twin-beam vacuum at r = 0 (delta = arccos 1 = 0):
/// the normalized photon-subtracted state does not exist there and the preset
/// simply follows the formula.
struct ResourceSpec {
    ResourceKind kind = ResourceKind::TwinBeam;
    double r = 0.0;        ///< two-mode squeezing magnitude, >= 0
    double phi_res = 0.0;  ///< two-mode squeezing phase
    double delta = 0.0;    ///< mixing angle
    double theta = 0.0;    ///< mixing phase

    static ResourceSpec squeezed_bell(double r, double phi_res, double delta, double theta);
};

/// Preset constructor for TwB / PAS / PSS / free SB (delta = theta = 0
/// placeholders for the latter). Throws DomainError for r < 0.
ResourceSpec preset_resource(ResourceKind kind, double r, double phi_res);

/// chi_in(alpha) = exp[alpha beta* - alpha* beta
///                     - |alpha cosh s + alpha* e^{i varphi} sinh s|^2 / 2].
/// Normalized: chi_input(state, 0) = 1.
Complex chi_input(const InputState& state, ComplexPoint alpha);

/// Characteristic function of the squeezed-Bell resource,
///   chi(a1, a2) = e^{-(|x1|^2+|x2|^2)/2} [1 + sin d cos d (e^{i th} x1 x2 + c.c.)
///                 + sin^2 d (|x1|^2 |x2|^2 - |x1|^2 - |x2|^2)],
/// with x_k = a_k cosh r + a_l* e^{i phi_res} sinh r (k != l).
/// Reduces to the Gaussian twin-beam for delta = 0.
Complex chi_resource(const ResourceSpec& res, ComplexPoint alpha1, ComplexPoint alpha2);

} // namespace cvt
