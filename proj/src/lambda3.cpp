// lambda3.cpp

#include "cqed/lambda3.hpp"

#include <cmath>
#include <stdexcept>

#include "cqed/kernels.hpp"

namespace cqed {

// ------------------------------ EIT / ATS -------------------------------------

namespace {
using cd = std::complex<double>;

void validate_decays(const LambdaDecays& d) {
    if (d.gamma31 < 0.0 || d.gamma32 < 0.0 || d.gamma21 < 0.0)
        throw std::domain_error("LambdaDecays: rates must be >= 0");
}
}  // namespace

cd eit_chi1(const ProbeControlSpec& s, const LambdaDecays& d) {
    validate_decays(d);
    if (s.control_rabi < 0.0) throw std::domain_error("eit_chi1: Omega_c must be >= 0");
    const double delta = s.two_photon();
    const double g31 = d.gamma3_total();
    const cd num{delta, -0.5 * d.gamma21};
    const cd den = cd{delta, -0.5 * g31} * cd{delta + s.delta2, -0.5 * d.gamma21} -
                   0.25 * s.control_rabi * s.control_rabi;
    return num / den;
}

std::vector<cd> eit_chi1_grid(const ProbeControlSpec& s, const LambdaDecays& d,
                              const std::vector<double>& delta_grid, int jobs) {
    std::vector<cd> chi(delta_grid.size());
    kernels::parallel_for(static_cast<int>(delta_grid.size()), jobs, [&](int i) {
        ProbeControlSpec si = s;
        si.delta1 = delta_grid[i] + s.delta2;  // two-photon detuning = grid value
        chi[i] = eit_chi1(si, d);
    });
    return chi;
}

EitPoles eit_poles(double control_rabi, const LambdaDecays& d) {
    validate_decays(d);
    if (control_rabi < 0.0) throw std::domain_error("eit_poles: Omega_c must be >= 0");
    const double g31 = d.gamma3_total();
    const double gap = 0.5 * (g31 - d.gamma21);  // threshold control strength

    const cd offset{0.0, 0.25 * (d.gamma21 + g31)};
    const cd root = std::sqrt(cd{control_rabi * control_rabi - gap * gap, 0.0});
    EitPoles p;
    p.delta_plus = offset + 0.5 * root;
    p.delta_minus = offset - 0.5 * root;

    const double scale = std::max({control_rabi, std::abs(gap), 1e-300});
    if (std::abs(control_rabi - std::abs(gap)) <= 1e-12 * scale)
        p.regime = EitRegime::boundary;
    else if (control_rabi > std::abs(gap))
        p.regime = EitRegime::ats;
    else
        p.regime = EitRegime::eit;
    return p;
}

const char* to_string(EitRegime r) {
    switch (r) {
        case EitRegime::eit: return "EIT";
        case EitRegime::boundary: return "boundary";
        case EitRegime::ats: return "ATS";
    }
    return "?";
}

Operator lambda_hamiltonian(const ProbeControlSpec& s) {
    Operator h(3);
    h(2, 2) = -s.delta1;
    h(1, 1) = -s.two_photon();
    h(2, 0) = h(0, 2) = -0.5 * s.probe_rabi;
    h(2, 1) = h(1, 2) = -0.5 * s.control_rabi;
    return h;
}

LindbladModel make_lambda_model(const ProbeControlSpec& s, const LambdaDecays& d) {
    validate_decays(d);
    LindbladModel model(lambda_hamiltonian(s));
    if (d.gamma31 > 0.0) model.add_channel(ket_bra(3, 0, 2), d.gamma31);
    if (d.gamma32 > 0.0) model.add_channel(ket_bra(3, 1, 2), d.gamma32);
    if (d.gamma21 > 0.0) model.add_channel(ket_bra(3, 0, 1), d.gamma21);
    return model;
}

std::vector<cd> eit_numeric_spectrum(const ProbeControlSpec& s, const LambdaDecays& d,
                                     const std::vector<double>& delta_grid, int jobs) {
    validate_decays(d);
    const double g31 = d.gamma3_total();
    if (g31 <= 0.0)
        throw std::domain_error("eit_numeric_spectrum: upper level must decay");
    if (s.probe_rabi > g31 / 50.0)
        throw regime_error("eit_numeric_spectrum: probe too strong, need Omega_p <= Gamma_31/50");

    std::vector<cd> rho31(delta_grid.size());
    kernels::parallel_for(static_cast<int>(delta_grid.size()), jobs, [&](int i) {
        ProbeControlSpec si = s;
        si.delta1 = delta_grid[i] + s.delta2;
        const Operator rho = steady_state(make_lambda_model(si, d));
        rho31[i] = rho(2, 0);
    });
    return rho31;
}

// ------------------------------ STIRAP ----------------------------------------

double StirapConfig::pump_at(double t) const {
    const double u = t / sigma;
    return pump_peak * std::exp(-0.5 * u * u);
}

double StirapConfig::stokes_at(double t) const {
    const double u = (t - t_stokes) / sigma;
    return stokes_peak * std::exp(-0.5 * u * u);
}

void validate(const StirapConfig& cfg) {
    if (cfg.sigma <= 0.0) throw std::invalid_argument("StirapConfig: sigma must be positive");
    if (cfg.pump_peak < 0.0 || cfg.stokes_peak < 0.0)
        throw std::invalid_argument("StirapConfig: peak Rabi frequencies must be >= 0");
    const double lo = -4.0 * cfg.sigma + std::min(0.0, cfg.t_stokes);
    const double hi = 4.0 * cfg.sigma + std::max(0.0, cfg.t_stokes);
    if (cfg.t_start > lo || cfg.t_end < hi)
        throw std::invalid_argument("StirapConfig: t_span must cover the pulse sequence "
                                    "[-4 sigma + min(0, t_s), 4 sigma + max(0, t_s)]");
}

Operator stirap_hamiltonian(double t, const StirapConfig& cfg) {
    // Basis ordering (|1>, |3>, |2>).
    Operator h(3);
    const double wp = 0.5 * cfg.pump_at(t);
    const double ws = 0.5 * cfg.stokes_at(t);
    h(0, 1) = h(1, 0) = wp;
    h(1, 2) = h(2, 1) = ws;
    if (cfg.cd_enabled && cfg.t_stokes != 0.0) {
        const double wa = 0.5 * cd_amplitude(t, cfg);
        h(0, 2) = cxd{0.0, wa};
        h(2, 0) = cxd{0.0, -wa};
    }
    return h;
}

double cd_amplitude(double t, const StirapConfig& cfg) {
    if (cfg.pump_peak != cfg.stokes_peak)
        throw std::invalid_argument(
            "cd_amplitude: closed form assumes equal peak Rabi frequencies; "
            "use 2 * mixing_angle(t, cfg).theta_dot for unequal peaks");
    if (cfg.sigma <= 0.0) throw std::invalid_argument("cd_amplitude: sigma must be positive");
    const double rate = -cfg.t_stokes / (cfg.sigma * cfg.sigma);
    const double u = rate * (t - 0.5 * cfg.t_stokes);
    const double a = std::exp(-std::abs(u));
    return rate * 2.0 * a / (1.0 + a * a);
}

MixingAngle mixing_angle(double t, const StirapConfig& cfg) {
    const double wp = cfg.pump_at(t);
    const double ws = cfg.stokes_at(t);
    if (wp < 1e-300 && ws < 1e-300)
        throw std::domain_error("mixing_angle: both envelopes vanished, angle undefined");
    MixingAngle m;
    m.theta = std::atan2(wp, ws);
    m.omega0 = std::hypot(wp, ws);
    // For equal-width Gaussians d/dt atan(Wp/Ws) collapses to
    // -(t_s/sigma^2) Wp Ws / W0^2, for any peak ratio.
    m.theta_dot = -(cfg.t_stokes / (cfg.sigma * cfg.sigma)) * wp * ws / (m.omega0 * m.omega0);
    m.adiabaticity = std::abs(m.theta_dot) / m.omega0;
    return m;
}

std::vector<cxd> dark_state(double t, const StirapConfig& cfg) {
    const MixingAngle m = mixing_angle(t, cfg);
    return {cxd{std::cos(m.theta), 0.0}, cxd{0.0, 0.0}, cxd{-std::sin(m.theta), 0.0}};
}

ProtocolResult run_protocol(const StirapConfig& cfg, const LambdaDecays* decays, int n_times) {
    validate(cfg);
    if (n_times < 2) throw std::invalid_argument("run_protocol: need at least two times");

    // Drive terms in the (|1>, |3>, |2>) ordering; structure operators carry
    // the 1/2, envelopes carry the named Rabi amplitudes.
    LindbladModel model{Operator(3)};
    Operator pump(3), stokes(3);
    pump(0, 1) = pump(1, 0) = 0.5;
    stokes(1, 2) = stokes(2, 1) = 0.5;
    model.add_drive(pump, PulseEnvelope::gaussian(cfg.pump_peak, 0.0, cfg.sigma));
    model.add_drive(stokes, PulseEnvelope::gaussian(cfg.stokes_peak, cfg.t_stokes, cfg.sigma));
    if (cfg.cd_enabled && cfg.t_stokes != 0.0) {
        if (cfg.pump_peak != cfg.stokes_peak)
            throw std::invalid_argument("run_protocol: CD drive requires equal peaks");
        Operator cd_op(3);
        cd_op(0, 2) = cxd{0.0, 0.5};
        cd_op(2, 0) = cxd{0.0, -0.5};
        const double rate = -cfg.t_stokes / (cfg.sigma * cfg.sigma);
        model.add_drive(cd_op,
                        PulseEnvelope::sech(rate, 0.5 * cfg.t_stokes, 1.0 / std::abs(rate)));
    }
    if (decays != nullptr) {
        validate_decays(*decays);
        if (decays->gamma31 > 0.0) model.add_channel(ket_bra(3, 0, 1), decays->gamma31);
        if (decays->gamma32 > 0.0) model.add_channel(ket_bra(3, 2, 1), decays->gamma32);
        if (decays->gamma21 > 0.0) model.add_channel(ket_bra(3, 0, 2), decays->gamma21);
    }

    std::vector<double> times(n_times);
    for (int i = 0; i < n_times; ++i)
        times[i] = cfg.t_start + (cfg.t_end - cfg.t_start) * i / (n_times - 1.0);

    // Populations read off in state labels: |1> = idx 0, |3> = idx 1, |2> = idx 2.
    const std::vector<std::pair<std::string, Operator>> obs = {
        {"p1", projector(3, 0)}, {"p2", projector(3, 2)}, {"p3", projector(3, 1)}};

    ProtocolResult r{evolve(model, projector(3, 0), times, obs), 0.0, 0.0, 0.0};
    r.p1_final = r.trajectory.observables[0].back();
    r.p2_final = r.trajectory.observables[1].back();
    r.p3_final = r.trajectory.observables[2].back();
    return r;
}

}  // namespace cqed
