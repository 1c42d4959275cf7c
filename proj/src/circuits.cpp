// circuits.cpp

#include "cqed/circuits.hpp"

#include <cmath>
#include <stdexcept>

#include "cqed/eig.hpp"
#include "cqed/kernels.hpp"

namespace cqed {

namespace {
const PhysicalConstants kConst{};
}

// ------------------------------ LC oscillator --------------------------------

Operator OscillatorParams::flux_operator(int n_levels) const {
    const Operator a = destroy(n_levels);
    return phi_zpf * (a + a.adjoint());
}

Operator OscillatorParams::charge_operator(int n_levels) const {
    const Operator a = destroy(n_levels);
    return cxd{0.0, -q_zpf} * (a - a.adjoint());
}

OscillatorParams lc_quantize(double inductance, double capacitance) {
    if (inductance <= 0.0 || capacitance <= 0.0)
        throw std::domain_error("lc_quantize: L and C must be positive");
    OscillatorParams p{};
    p.inductance = inductance;
    p.capacitance = capacitance;
    p.omega = 1.0 / std::sqrt(inductance * capacitance);
    p.impedance = std::sqrt(inductance / capacitance);
    p.z = p.impedance / kConst.resistance_quantum();
    p.q_zpf = std::sqrt(kConst.hbar / (2.0 * p.impedance));
    p.phi_zpf = std::sqrt(kConst.hbar * p.impedance / 2.0);
    return p;
}

// ------------------------------ transmission line ----------------------------

std::vector<TlineMode> tline_modes(const TransmissionLineSpec& spec,
                                   const std::vector<double>& x_grid) {
    if (spec.ell <= 0.0 || spec.cap <= 0.0 || spec.length <= 0.0)
        throw std::domain_error("tline_modes: line parameters must be positive");
    if (spec.n_max < 1) throw std::domain_error("tline_modes: n_max must be >= 1");

    const double vp = 1.0 / std::sqrt(spec.ell * spec.cap);
    const double norm = std::sqrt(2.0 / spec.length);
    std::vector<TlineMode> modes;
    modes.reserve(spec.n_max);
    for (int n = 1; n <= spec.n_max; ++n) {
        TlineMode m;
        m.n = n;
        m.k = n * kPi / spec.length;
        m.omega = vp * m.k;
        m.phi.reserve(x_grid.size());
        for (double x : x_grid) m.phi.push_back(norm * std::cos(m.k * x));
        modes.push_back(std::move(m));
    }
    return modes;
}

// ------------------------------ Josephson junction ---------------------------

double josephson_inductance(double critical_current, double phase) {
    if (critical_current <= 0.0)
        throw std::domain_error("josephson_inductance: Ic must be positive");
    const double c = std::cos(phase);
    if (std::abs(c) < 1e-9)
        throw std::domain_error(
            "josephson_inductance: junction at +-pi/2, inductance singular");
    return kConst.flux_quantum() / (2.0 * kPi * critical_current * c);
}

// ------------------------------ Cooper-pair box -------------------------------

Operator cpb_hamiltonian(const CpbParams& p) {
    if (p.ec <= 0.0) throw std::domain_error("cpb_hamiltonian: Ec must be positive");
    if (p.ej < 0.0) throw std::domain_error("cpb_hamiltonian: Ej must be >= 0");
    if (p.n_max < 3) throw std::domain_error("cpb_hamiltonian: n_max must be >= 3");

    const int dim = 2 * p.n_max + 1;
    Operator h(dim);
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - p.n_max);
        h(i, i) = 4.0 * p.ec * (n - p.ng) * (n - p.ng);
        if (i + 1 < dim) {
            h(i, i + 1) = -0.5 * p.ej;
            h(i + 1, i) = -0.5 * p.ej;
        }
    }
    return h;
}

CpbBands cpb_bands(const CpbParams& p, const std::vector<double>& ng_grid, int n_levels,
                   int jobs) {
    const int dim = 2 * p.n_max + 1;
    if (n_levels < 1 || n_levels > dim)
        throw std::domain_error("cpb_bands: n_levels out of range for this cutoff");

    CpbBands out;
    out.ng = ng_grid;
    out.levels.assign(ng_grid.size(), {});
    std::vector<char> warn(ng_grid.size(), 0);

    kernels::parallel_for(static_cast<int>(ng_grid.size()), jobs, [&](int i) {
        CpbParams q = p;
        q.ng = ng_grid[i];
        const EigenSystem es = eig_hermitian(cpb_hamiltonian(q));
        out.levels[i].assign(es.values.begin(), es.values.begin() + n_levels);
        for (int b = 0; b < n_levels; ++b) {
            const double edge = std::norm(es.vectors(0, b)) + std::norm(es.vectors(dim - 1, b));
            if (edge > 1e-8) warn[i] = 1;
        }
    });

    double floor = out.levels.empty() ? 0.0 : out.levels[0][0];
    for (const auto& lv : out.levels) floor = std::min(floor, lv[0]);
    for (auto& lv : out.levels)
        for (double& e : lv) e -= floor;

    out.cutoff_warning = false;
    for (char w : warn) out.cutoff_warning |= (w != 0);
    return out;
}

// ------------------------------ transmon -------------------------------------

std::pair<TransmonDerived, Operator> transmon_effective(double ec, double ej, int n_trunc) {
    if (ec <= 0.0 || ej <= 0.0) throw std::domain_error("transmon_effective: Ec, Ej > 0");
    if (n_trunc < 2) throw std::domain_error("transmon_effective: n_trunc must be >= 2");
    const double ratio = ej / ec;
    if (ratio < 5.0)
        throw regime_error("transmon_effective: Ej/Ec < 5, bosonic expansion unreliable");

    TransmonDerived d{};
    d.omega_q = (std::sqrt(8.0 * ec * ej) - ec) / kConst.hbar;
    d.phi_zpf = std::pow(2.0 * ec / ej, 0.25);
    d.n_zpf = std::pow(ej / (32.0 * ec), 0.25);
    d.kerr = -0.5 * ec;
    d.regime_warning = ratio < 10.0;

    // hbar w_q b†b - (Ec/2) b†b†bb is diagonal on the number basis:
    // E_n = hbar w_q n - (Ec/2) n (n-1).
    Operator h(n_trunc);
    for (int n = 0; n < n_trunc; ++n)
        h(n, n) = kConst.hbar * d.omega_q * n - 0.5 * ec * n * (n - 1.0);
    return {d, h};
}

// ------------------------------ flux qubit -----------------------------------

double flux_potential(const FluxQubitParams& p, double phi_plus, double phi_minus) {
    return 2.0 + p.alpha - 2.0 * std::cos(phi_plus) * std::cos(phi_minus) -
           p.alpha * std::cos(2.0 * kPi * p.k + 2.0 * phi_minus);
}

Operator flux_tls(const FluxQubitParams& p) {
    if (p.ej <= 0.0) throw std::domain_error("flux_tls: Ej must be positive");
    const double eps = 2.0 * p.persistent_current * kConst.flux_quantum() * (p.k - 0.5);
    const double tunnel = kConst.hbar * p.tunnel_delta;
    Operator h(2);
    h(0, 0) = -0.5 * tunnel;
    h(1, 1) = 0.5 * tunnel;
    h(0, 1) = -0.5 * eps;
    h(1, 0) = -0.5 * eps;
    return h;
}

double flux_tls_splitting(const FluxQubitParams& p) {
    const double eps = 2.0 * p.persistent_current * kConst.flux_quantum() * (p.k - 0.5);
    return std::hypot(eps, kConst.hbar * p.tunnel_delta);
}

std::vector<std::string> flux_warnings(const FluxQubitParams& p) {
    std::vector<std::string> w;
    if (p.alpha <= 0.0 || p.alpha >= 1.0)
        w.push_back("flux qubit: alpha outside (0, 1)");
    else if (p.alpha < 0.5)
        w.push_back("flux qubit: alpha below the typical [0.5, 1] window");
    return w;
}

// ------------------------------ phase qubit ----------------------------------

double phase_potential(const PhaseQubitParams& p, double phi) {
    if (p.beta_l <= 0.0) throw std::domain_error("phase_potential: beta_L must be positive");
    const double x = phi - 2.0 * kPi * p.flux_bias;
    return 1.0 - std::cos(phi) + x * x / (2.0 * p.beta_l);
}

PhaseTls phase_tls(const PhaseQubitParams& p) {
    if (p.omega01 <= 0.0 || p.barrier_du <= 0.0 || p.cap <= 0.0)
        throw std::domain_error("phase_tls: omega01, barrier height, and C must be positive");
    const double chi = std::sqrt(kConst.hbar * p.omega01 / (3.0 * p.barrier_du));
    const double coupling = std::sqrt(kConst.hbar / (2.0 * p.omega01 * p.cap)) * p.di_circ;

    Operator h(2);
    h(0, 0) = -0.5 * (kConst.hbar * p.omega01 + coupling * chi);
    h(1, 1) = 0.5 * (kConst.hbar * p.omega01 + coupling * chi);
    h(0, 1) = -0.5 * coupling;
    h(1, 0) = -0.5 * coupling;
    return {h, chi};
}

bool phase_operation_range(const PhaseQubitParams& p) {
    return p.beta_l > 1.0 && p.beta_l < 4.6;
}

std::vector<std::string> phase_warnings(const PhaseQubitParams& p) {
    std::vector<std::string> w;
    if (!phase_operation_range(p))
        w.push_back("phase qubit: beta_L outside the operating window (1, 4.6)");
    return w;
}

}  // namespace cqed
