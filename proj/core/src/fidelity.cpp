#include "cvteleport/fidelity.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include <gsl/gsl_integration.h>

#include "cvteleport/errors.hpp"

namespace cvt {

namespace {

bool near_angle(double angle, double target) {
    // compare modulo 2pi
    const double two_pi = 2.0 * M_PI;
    double d = std::fmod(angle - target, two_pi);
    if (d < 0.0) d += two_pi;
    return d < 1e-12 || two_pi - d < 1e-12;
}

void require_optimal_phases(const ResourceSpec& res) {
    if (!near_angle(res.phi_res, M_PI) || !near_angle(res.theta, 0.0)) {
        std::ostringstream msg;
        msg << "closed-form fidelity is derived for (phi_res, theta) = (pi, 0); got ("
            << res.phi_res << ", " << res.theta << ")";
        throw PhaseConventionError(msg.str());
    }
}

double check_range(double f) {
    if (!std::isfinite(f) || f < 0.0 || f > 1.0 + 1e-9)
        throw DomainError("fidelity fell outside [0, 1 + 1e-9]: formula misuse");
    return f;
}

struct GlTable {
    explicit GlTable(std::size_t n) : t(gsl_integration_glfixed_table_alloc(n)) {}
    ~GlTable() { gsl_integration_glfixed_table_free(t); }
    GlTable(const GlTable&) = delete;
    GlTable& operator=(const GlTable&) = delete;
    gsl_integration_glfixed_table* t;
};

double overlap_once(const InputState& input, const ResourceSpec& res,
                    const ChannelParams& params, int order, double half_width) {
    GlTable table(static_cast<std::size_t>(order));
    std::vector<double> nodes(order), weights(order);
    for (int i = 0; i < order; ++i)
        gsl_integration_glfixed_point(-half_width, half_width, static_cast<std::size_t>(i),
                                      &nodes[i], &weights[i], table.t);

    Complex acc{0.0, 0.0};
    for (int i = 0; i < order; ++i) {
        const double x = nodes[i];
        Complex row{0.0, 0.0};
        for (int j = 0; j < order; ++j) {
            const Complex alpha{x, nodes[j]};
            row += weights[j] * chi_input(input, alpha) * chi_output(input, res, params, -alpha);
        }
        acc += weights[i] * row;
    }
    return (acc / M_PI).real();
}

// Smallest curvature of the integrand's Gaussian envelope. The resource and
// loss factors are isotropic in alpha; the input factor contributes
// (1 + g~^2)/2 with eigenvalues e^{+-2s}.
double min_envelope_curvature(const InputState& input, const ResourceSpec& res,
                              const ChannelParams& params) {
    const double gt = params.effective_gain();
    const double et = std::exp(-0.5 * params.tau);
    const double ch = std::cosh(res.r);
    const Complex sh = std::polar(std::sinh(res.r), res.phi_res);
    const double u1 = std::norm(gt * ch + et * sh);
    const double u2 = std::norm(et * ch + gt * sh);
    return gamma_factor(params) + 0.5 * (u1 + u2) +
           0.5 * (1.0 + gt * gt) * std::exp(-2.0 * input.s);
}

} // namespace

DerivedQuantities derived_quantities(const InputState& input, const ResourceSpec& res,
                                     const ChannelParams& params) {
    const double gt = params.effective_gain();
    const double gamma = gamma_factor(params);
    const double e4r = std::exp(4.0 * res.r);
    const double et2 = std::exp(0.5 * params.tau);
    const double et = std::exp(params.tau);

    DerivedQuantities q;
    q.delta1 = 1.0 + e4r + 2.0 * et2 * (1.0 - e4r) * gt + et * (1.0 + e4r) * gt * gt;
    q.delta2 = 1.0 - e4r + 2.0 * et2 * (1.0 + e4r) * gt + et * (1.0 - e4r) * gt * gt;
    const double common = std::exp(-2.0 * res.r - params.tau) * q.delta1 + 4.0 * gamma;
    q.lambda1 = common + 2.0 * std::exp(2.0 * input.s) * (1.0 + gt * gt);
    q.lambda2 = common + 2.0 * std::exp(-2.0 * input.s) * (1.0 + gt * gt);
    // (beta -+ beta*)^2 as real signed quantities
    const double one_m_gt2 = (1.0 - gt) * (1.0 - gt);
    q.omega1_sq = -4.0 * one_m_gt2 * input.beta.imag() * input.beta.imag();
    q.omega2_sq = 4.0 * one_m_gt2 * input.beta.real() * input.beta.real();
    return q;
}

double fidelity_closed_form(const InputState& input, const ResourceSpec& res,
                            const ChannelParams& params) {
    require_optimal_phases(res);
    const DerivedQuantities q = derived_quantities(input, res, params);
    const double l1 = q.lambda1, l2 = q.lambda2;
    const double w1 = q.omega1_sq, w2 = q.omega2_sq;
    const double sd = std::sin(res.delta), cd = std::cos(res.delta);
    const double e1 = std::exp(-(2.0 * res.r + params.tau));

    const double pre = 4.0 / std::sqrt(l1 * l2) * std::exp(w1 / l1 - w2 / l2);
    const double t1 = e1 * sd * (q.delta2 * cd - q.delta1 * sd) *
                      ((1.0 + 2.0 * w1 / l1) / l1 + (1.0 - 2.0 * w2 / l2) / l2);
    const double t2 =
        0.25 * e1 * e1 * q.delta2 * q.delta2 * sd * sd *
        ((3.0 + 12.0 * w1 / l1 + 4.0 * w1 * w1 / (l1 * l1)) / (l1 * l1) +
         (3.0 - 12.0 * w2 / l2 + 4.0 * w2 * w2 / (l2 * l2)) / (l2 * l2) +
         2.0 / (l1 * l2) * (1.0 + 2.0 * w1 / l1 - 2.0 * w2 / l2 - 4.0 * w1 * w2 / (l1 * l2)));
    return check_range(pre * (1.0 + t1 + t2));
}

double fidelity_beta_independent(double input_s, const ResourceSpec& res,
                                 const ChannelParams& params) {
    require_optimal_phases(res);
    const ChannelParams unity = params.unity_effective_gain();
    const InputState input(Complex{0.0, 0.0}, input_s, 0.0);
    const DerivedQuantities q = derived_quantities(input, res, unity);
    const double l1 = q.lambda1, l2 = q.lambda2;
    const double sd = std::sin(res.delta), cd = std::cos(res.delta);
    const double e1 = std::exp(-(2.0 * res.r + unity.tau));

    const double t2 = 0.25 * e1 * e1 * q.delta2 * q.delta2 * sd * sd *
                      (3.0 / (l1 * l1) + 3.0 / (l2 * l2) + 2.0 / (l1 * l2));
    const double t1 = e1 * sd * (q.delta2 * cd - q.delta1 * sd) * (1.0 / l1 + 1.0 / l2);
    return check_range(4.0 / std::sqrt(l1 * l2) * (t2 + t1 + 1.0));
}

double fidelity_numeric(const InputState& input, const ResourceSpec& res,
                        const ChannelParams& params, QuadratureRule rule,
                        double convergence_tol) {
    if (rule.order < 8) throw DomainError("quadrature order must be >= 8");
    double half_width = rule.half_width;
    if (!(half_width > 0.0))
        half_width = 6.0 / std::sqrt(min_envelope_curvature(input, res, params));

    const double coarse = overlap_once(input, res, params, rule.order, half_width);
    const double fine = overlap_once(input, res, params, 2 * rule.order, half_width);
    if (!(std::abs(fine - coarse) < convergence_tol)) {
        std::ostringstream msg;
        msg << "fidelity quadrature did not converge: |F(" << rule.order << ") - F("
            << 2 * rule.order << ")| = " << std::abs(fine - coarse) << " > " << convergence_tol;
        throw ConvergenceError(msg.str());
    }
    return fine;
}

} // namespace cvt
