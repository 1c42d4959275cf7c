// twolevel.cpp

#include "cqed/twolevel.hpp"

#include <cmath>
#include <stdexcept>

#include "cqed/circuits.hpp"
#include "cqed/kernels.hpp"

namespace cqed {

namespace {
const PhysicalConstants kConst{};
}

double rabi_frequency(const TlsDriveParams& p) {
    return std::sqrt(p.delta * p.delta + 4.0 * p.rabi_g * p.rabi_g);
}

double rabi_population_gg(const TlsDriveParams& p, double t) {
    const double w = rabi_frequency(p);
    if (w == 0.0) return 1.0;
    const double s = std::sin(0.5 * w * t);
    const double c = std::cos(0.5 * w * t);
    const double dw = p.delta / w;
    return c * c + dw * dw * s * s;
}

TlsSteady tls_steady(const TlsDriveParams& p) {
    if (p.gamma <= 0.0)
        throw std::domain_error("tls_steady: no steady state without damping (gamma > 0)");
    const double den = p.gamma * p.gamma + p.delta * p.delta + 2.0 * p.rabi_g * p.rabi_g;
    TlsSteady s;
    s.rho_ee = p.rabi_g * p.rabi_g / den;
    s.rho_eg = cxd{0.0, p.rabi_g} * cxd{p.gamma, p.delta} / den;
    return s;
}

double susceptibility_prefactor(const TlsDriveParams& p) {
    return p.density * p.dipole * p.dipole / (kConst.hbar * kConst.eps0);
}

std::vector<cxd> tls_susceptibility(const TlsDriveParams& p,
                                    const std::vector<double>& delta_grid, int jobs) {
    if (p.gamma <= 0.0) throw std::domain_error("tls_susceptibility: gamma must be positive");
    const double pref = susceptibility_prefactor(p);
    std::vector<cxd> chi(delta_grid.size());
    kernels::parallel_for(static_cast<int>(delta_grid.size()), jobs, [&](int i) {
        const double d = delta_grid[i];
        const double den = p.gamma * p.gamma + d * d + 2.0 * p.rabi_g * p.rabi_g;
        chi[i] = pref * cxd{-d, p.gamma} / den;
    });
    return chi;
}

LineWidths tls_linewidths(const TlsDriveParams& p) {
    const double half = std::sqrt(p.gamma * p.gamma + 2.0 * p.rabi_g * p.rabi_g);
    return {half, 2.0 * half};
}

double dipole_from_decay(double gamma, double omega) {
    if (gamma <= 0.0 || omega <= 0.0)
        throw std::domain_error("dipole_from_decay: gamma and omega must be positive");
    const double d2 = 3.0 * kPi * kConst.eps0 * kConst.hbar *
                      kConst.c_light * kConst.c_light * kConst.c_light * (2.0 * gamma) /
                      (omega * omega * omega);
    return std::sqrt(d2);
}

LindbladModel make_tls_model(const TlsDriveParams& p) {
    Operator h(2);
    h(1, 1) = -p.delta;         // -Delta |e><e|
    h(0, 1) = -p.rabi_g;        // -G (|g><e| + |e><g|)
    h(1, 0) = -p.rabi_g;
    LindbladModel model(h);
    if (p.gamma > 0.0) model.add_channel(destroy(2), 2.0 * p.gamma);
    return model;
}

}  // namespace cqed
