#include "cvteleport/moments.hpp"

#include <cmath>
#include <sstream>

#include "cvteleport/errors.hpp"

namespace cvt {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Two-level Richardson ladder over central-difference estimates D(h),
// D(h/2), D(h/4); each level removes one O(h^2) error term.
double richardson(const std::function<double(double)>& estimate, double h, double tol,
                  const char* what) {
    const double d0 = estimate(h);
    const double d1 = estimate(0.5 * h);
    const double d2 = estimate(0.25 * h);
    const double r1a = (4.0 * d1 - d0) / 3.0;
    const double r1b = (4.0 * d2 - d1) / 3.0;
    const double r2 = (16.0 * r1b - r1a) / 15.0;
    if (!(std::abs(r2 - r1b) < tol)) {
        std::ostringstream msg;
        msg << "finite-difference estimate of " << what
            << " unstable: Richardson correction " << std::abs(r2 - r1b) << " > " << tol;
        throw ConvergenceError(msg.str());
    }
    return r2;
}

} // namespace

double heisenberg_det(const QuadratureMoments& m) {
    return m.var_x * m.var_p - 0.25 * m.cov_xp * m.cov_xp;
}

QuadratureMoments input_moments(const InputState& state) {
    QuadratureMoments m;
    m.mean_x = std::sqrt(2.0) * state.beta.real();
    m.mean_p = std::sqrt(2.0) * state.beta.imag();
    const double c2s = std::cosh(2.0 * state.s);
    const double s2s = std::sinh(2.0 * state.s);
    m.var_x = 0.5 * (c2s - std::cos(state.varphi) * s2s);
    m.var_p = 0.5 * (c2s + std::cos(state.varphi) * s2s);
    m.cov_xp = -std::sin(state.varphi) * s2s;
    return m;
}

double sigma_excess(const ResourceSpec& res, const ChannelParams& params) {
    const double gt = params.effective_gain();
    const double gamma = gamma_factor(params);
    const double et2 = std::exp(0.5 * params.tau);
    const double et = std::exp(params.tau);
    const double c2d = std::cos(2.0 * res.delta);
    const double s2d = std::sin(2.0 * res.delta);
    const double cp = std::cos(res.phi_res);
    const double ctp = std::cos(res.theta + res.phi_res);
    const double stp = std::sin(res.theta + res.phi_res);

    return gamma - std::exp(-0.5 * params.tau) * gt * stp * std::sin(res.phi_res) * s2d -
           0.25 * std::exp(-2.0 * res.r - params.tau) * (1.0 + et * gt * gt - 2.0 * et2 * gt * cp) *
               (c2d - ctp * s2d - 2.0) -
           0.25 * std::exp(2.0 * res.r - params.tau) * (1.0 + et * gt * gt + 2.0 * et2 * gt * cp) *
               (c2d + ctp * s2d - 2.0);
}

QuadratureMoments output_moments(const InputState& input, const ResourceSpec& res,
                                 const ChannelParams& params) {
    const double gt = params.effective_gain();
    const double sig = sigma_excess(res, params);
    const QuadratureMoments in = input_moments(input);
    QuadratureMoments m;
    m.mean_x = gt * in.mean_x;
    m.mean_p = gt * in.mean_p;
    m.var_x = gt * gt * in.var_x + sig;
    m.var_p = gt * gt * in.var_p + sig;
    m.cov_xp = gt * gt * in.cov_xp;
    return m;
}

MomentDeviations deviations(const InputState& input, const ResourceSpec& res,
                            const ChannelParams& params) {
    const double gt = params.effective_gain();
    const double sig = sigma_excess(res, params);
    const QuadratureMoments in = input_moments(input);
    MomentDeviations d;
    d.d_x = (gt - 1.0) * in.mean_x;
    d.d_p = (gt - 1.0) * in.mean_p;
    d.d_var_x = (gt * gt - 1.0) * in.var_x + sig;
    d.d_var_p = (gt * gt - 1.0) * in.var_p + sig;
    d.d_cov_xp = (gt * gt - 1.0) * in.cov_xp;
    return d;
}

QuadratureMoments moments_from_chi(const std::function<Complex(ComplexPoint)>& chi,
                                   double step, double tol) {
    if (!(step > 0.0 && step <= 0.1))
        throw DomainError("finite-difference step must lie in (0, 0.1]");

    // chi(i u / sqrt2) = <e^{iuX}>, chi(-u / sqrt2) = <e^{iuP}>; Hermitian
    // symmetry chi(-a) = chi(a)* folds the stencils onto two evaluations.
    const auto on_x = [&chi](double u) { return chi(Complex{0.0, u * kInvSqrt2}); };
    const auto on_p = [&chi](double u) { return chi(Complex{-u * kInvSqrt2, 0.0}); };
    const auto mixed = [&chi](double u, double v) {
        return chi(Complex{-v * kInvSqrt2, u * kInvSqrt2});
    };

    QuadratureMoments m;
    m.mean_x = richardson([&](double h) { return on_x(h).imag() / h; }, step, tol, "<X>");
    m.mean_p = richardson([&](double h) { return on_p(h).imag() / h; }, step, tol, "<P>");
    const double x2 = richardson(
        [&](double h) { return (2.0 - 2.0 * on_x(h).real()) / (h * h); }, step, tol, "<X^2>");
    const double p2 = richardson(
        [&](double h) { return (2.0 - 2.0 * on_p(h).real()) / (h * h); }, step, tol, "<P^2>");
    const double xppx = richardson(
        [&](double h) { return (mixed(h, -h).real() - mixed(h, h).real()) / (h * h); }, step,
        tol, "<XP+PX>");
    m.var_x = x2 - m.mean_x * m.mean_x;
    m.var_p = p2 - m.mean_p * m.mean_p;
    m.cov_xp = xppx - 2.0 * m.mean_x * m.mean_p;
    return m;
}

QuadratureMoments moments_numeric(const InputState& input, const ResourceSpec& res,
                                  const ChannelParams& params, double step, double tol) {
    return moments_from_chi(
        [&](ComplexPoint alpha) { return chi_output(input, res, params, alpha); }, step, tol);
}

} // namespace cvt
