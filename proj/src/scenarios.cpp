// scenarios.cpp — scenario registry, config handling, and runners

#include "cqed/scenarios.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cqed/circuits.hpp"
#include "cqed/dynamics.hpp"
#include "cqed/eig.hpp"
#include "cqed/jcm.hpp"
#include "cqed/lambda3.hpp"
#include "cqed/twolevel.hpp"

namespace cqed {

std::vector<double> linspace(const GridSpec& g) {
    if (g.count < 2) throw std::invalid_argument("grid: count must be >= 2");
    std::vector<double> v(g.count);
    for (int i = 0; i < g.count; ++i)
        v[i] = g.start + (g.stop - g.start) * i / (g.count - 1.0);
    return v;
}

// ------------------------------ registry --------------------------------------

namespace {

ParamSpec num(const std::string& n, double def, const std::string& help) {
    return {n, ParamKind::number, def, "", help};
}
ParamSpec integer(const std::string& n, double def, const std::string& help) {
    return {n, ParamKind::integer, def, "", help};
}
ParamSpec toggle(const std::string& n, double def, const std::string& help) {
    return {n, ParamKind::toggle, def, "", help};
}
ParamSpec text(const std::string& n, const std::string& def, const std::string& help) {
    return {n, ParamKind::text, 0.0, def, help};
}

std::vector<ScenarioSpec> build_registry() {
    std::vector<ScenarioSpec> r;

    r.push_back({"lc",
                 "quantized LC oscillator parameters",
                 {num("inductance", 1e-9, "inductance in H"),
                  num("capacitance", 1e-12, "capacitance in F")},
                 {},
                 false});

    r.push_back({"tline",
                 "transmission-line standing modes",
                 {num("ell", 1.0, "inductance per length, H/m"),
                  num("cap", 1.0, "capacitance per length, F/m"),
                  num("length", 1.0, "line length, m"),
                  integer("n_max", 5, "number of modes"),
                  integer("samples", 0, "if > 0, emit mode functions on this many x points")},
                 {},
                 false});

    r.push_back({"cpb-bands",
                 "Cooper-pair box bands over gate charge",
                 {num("ec", 1.0, "charging energy (energy unit of the output)"),
                  num("ej_over_ec", 50.0, "Ej/Ec ratio"),
                  integer("n_charge", 10, "charge-basis cutoff n_max"),
                  integer("n_levels", 4, "bands to emit")},
                 {{"ng", {0.0, 1.0, 201}, false, "gate-charge grid"}},
                 false});

    r.push_back({"transmon",
                 "transmon / Duffing reduction of the CPB",
                 {num("ec", 1.0, "charging energy"),
                  num("ej_over_ec", 50.0, "Ej/Ec ratio"),
                  integer("n_trunc", 10, "Duffing truncation"),
                  integer("n_charge", 10, "charge cutoff for the cross-check")},
                 {},
                 true});

    r.push_back({"flux",
                 "three-junction flux qubit potential / TLS",
                 {num("alpha", 0.8, "small-junction ratio"),
                  num("k", 0.5, "external flux over Phi0"),
                  num("ip", 3e-7, "persistent current, A (tls)"),
                  num("tunnel_delta", 2.0 * kPi * 5e9, "tunneling Delta, rad/s (tls)"),
                  num("ej", 1e-22, "Josephson energy, J"),
                  text("emit", "potential", "potential | tls")},
                 {{"phi_plus", {-kPi, kPi, 61}, false, "phi_+ grid (potential)"},
                  {"phi_minus", {-kPi, kPi, 61}, false, "phi_- grid (potential)"}},
                 false});

    r.push_back({"phase",
                 "RF-SQUID phase qubit potential / TLS",
                 {num("beta_l", 4.5, "2 pi L Ic / Phi0"),
                  num("flux_bias", 0.5, "Phi_ext / Phi0"),
                  num("ej", 1e-22, "Josephson energy, J"),
                  num("omega01", 2.0 * kPi * 6e9, "qubit transition, rad/s (tls)"),
                  num("du_over_hw01", 5.0, "barrier height over hbar*omega01 (tls)"),
                  num("cap", 1e-12, "junction capacitance, F (tls)"),
                  num("di_circ", 0.0, "circulating-current bias, A (tls)"),
                  text("emit", "potential", "potential | tls")},
                 {{"phi", {-2.0 * kPi, 2.0 * kPi, 201}, false, "phase grid (potential)"}},
                 false});

    r.push_back({"rabi",
                 "two-level Rabi oscillation, analytic vs integrated",
                 {num("delta", 0.0, "drive detuning"),
                  num("rabi_g", 1.0, "Rabi frequency G"),
                  integer("n_times", 501, "time samples"),
                  num("periods", 10.0, "generalized Rabi periods to cover")},
                 {},
                 true});

    r.push_back({"susceptibility",
                 "two-level linear susceptibility (SI units)",
                 {num("gamma", 3.81e7, "coherence decay, 1/s"),
                  num("g_over_gamma", 0.5, "Rabi frequency over gamma"),
                  num("density", 1e18, "emitter density, 1/m^3"),
                  num("lambda_nm", 780.0, "transition wavelength, nm (sets the dipole)"),
                  num("dipole", 0.0, "dipole moment, C m; 0 derives it from gamma and lambda")},
                 {{"delta_over_gamma", {-10.0, 10.0, 401}, false, "detuning grid over gamma"}},
                 true});

    r.push_back({"jc-dressed",
                 "Jaynes-Cummings doublets",
                 {num("omega_r", 10.0, "cavity frequency"),
                  num("omega_q", 9.5, "qubit frequency"),
                  num("g", 0.1, "coupling"),
                  integer("n_manifolds", 6, "number of excitation manifolds")},
                 {},
                 true});

    r.push_back({"polariton",
                 "doubly-dressed polariton basis over drive frequency",
                 {num("omega_r", 10.0, "cavity frequency"),
                  num("omega_q", 9.0, "qubit frequency"),
                  num("g", 0.05, "coupling"),
                  num("drive_rabi", 0.00125, "drive Rabi Omega_d")},
                 {{"omega_d", {0.0, 0.0, 101}, true,
                   "drive-frequency grid; default spans the nesting window"}},
                 true});

    r.push_back({"eit",
                 "Lambda-system probe susceptibility",
                 {num("gamma31", 0.5, "decay |3> -> |1>"),
                  num("gamma32", 0.5, "decay |3> -> |2>"),
                  num("gamma21", 0.0, "decay |2> -> |1>"),
                  num("omega_c", 0.2, "control Rabi frequency"),
                  num("delta2", 0.0, "control detuning"),
                  num("omega_p", 0.0, "probe Rabi; 0 picks Gamma31/100 (numeric path)")},
                 {{"delta", {0.0, 0.0, 401}, true,
                   "two-photon detuning grid; default +-5 Gamma31"}},
                 true});

    r.push_back({"stirap",
                 "STIRAP / saSTIRAP population transfer",
                 {num("omega_peak", 15.0, "shared peak Rabi frequency"),
                  num("sigma", 1.0, "pulse width"),
                  num("t_s", -1.5, "Stokes center minus pump center"),
                  toggle("cd", 0.0, "enable the counterdiabatic drive"),
                  num("gamma31", 0.0, "decay |3> -> |1>"),
                  num("gamma32", 0.0, "decay |3> -> |2>"),
                  num("gamma21", 0.0, "decay |2> -> |1>"),
                  integer("n_times", 601, "time samples")},
                 {},
                 false});

    return r;
}

}  // namespace

const std::vector<ScenarioSpec>& scenario_registry() {
    static const std::vector<ScenarioSpec> reg = build_registry();
    return reg;
}

const ScenarioSpec* find_scenario(const std::string& name) {
    for (const auto& s : scenario_registry())
        if (s.name == name) return &s;
    return nullptr;
}

// ------------------------------ config parsing --------------------------------

namespace {

[[noreturn]] void unknown_key(const std::string& kind, const std::string& key,
                              const ScenarioSpec& spec) {
    std::ostringstream os;
    os << "unknown " << kind << " '" << key << "' for scenario '" << spec.name
       << "'; accepted:";
    if (kind == "grid") {
        for (const auto& g : spec.grids) os << " " << g.name;
        if (spec.grids.empty()) os << " (none)";
    } else {
        for (const auto& p : spec.params) os << " " << p.name;
    }
    throw std::invalid_argument(os.str());
}

const ParamSpec* find_param(const ScenarioSpec& spec, const std::string& name) {
    for (const auto& p : spec.params)
        if (p.name == name) return &p;
    return nullptr;
}

const GridDef* find_grid(const ScenarioSpec& spec, const std::string& name) {
    for (const auto& g : spec.grids)
        if (g.name == name) return &g;
    return nullptr;
}

double get(const ScenarioConfig& c, const std::string& key) {
    const auto it = c.numbers.find(key);
    if (it != c.numbers.end()) return it->second;
    const ScenarioSpec* spec = find_scenario(c.scenario);
    const ParamSpec* p = spec ? find_param(*spec, key) : nullptr;
    if (!p) throw std::invalid_argument("internal: no parameter '" + key + "'");
    return p->def;
}

std::string get_text(const ScenarioConfig& c, const std::string& key) {
    const auto it = c.texts.find(key);
    if (it != c.texts.end()) return it->second;
    const ScenarioSpec* spec = find_scenario(c.scenario);
    const ParamSpec* p = spec ? find_param(*spec, key) : nullptr;
    if (!p) throw std::invalid_argument("internal: no parameter '" + key + "'");
    return p->text_def;
}

GridSpec get_grid(const ScenarioConfig& c, const std::string& key, const GridSpec& fallback) {
    const auto it = c.grids.find(key);
    if (it != c.grids.end()) return it->second;
    return fallback;
}

int get_int(const ScenarioConfig& c, const std::string& key) {
    const double v = get(c, key);
    if (v != std::floor(v)) throw std::invalid_argument("parameter '" + key + "' must be an integer");
    return static_cast<int>(v);
}

void echo_params(Table& t, const ScenarioConfig& c) {
    const ScenarioSpec* spec = find_scenario(c.scenario);
    for (const auto& p : spec->params) {
        if (p.kind == ParamKind::text)
            t.add_param(p.name, get_text(c, p.name));
        else
            t.add_param(p.name, get(c, p.name));
    }
    if (c.cross_check) t.add_param("cross_check", std::string("true"));
}

// Runners echo the grid they actually swept, defaults included.
void echo_grid(Table& t, const std::string& name, const GridSpec& g) {
    t.add_param("grid." + name + ".start", g.start);
    t.add_param("grid." + name + ".stop", g.stop);
    t.add_param("grid." + name + ".count", static_cast<double>(g.count));
}

}  // namespace

ScenarioConfig config_from_json_text(const std::string& textdoc) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(textdoc);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }

    ScenarioConfig c;
    if (!j.contains("scenario") || !j["scenario"].is_string())
        throw std::invalid_argument("config: missing string field 'scenario'");
    c.scenario = j["scenario"].get<std::string>();
    const ScenarioSpec* spec = find_scenario(c.scenario);
    if (!spec) {
        std::ostringstream os;
        os << "config: unknown scenario '" << c.scenario << "'; available:";
        for (const auto& s : scenario_registry()) os << " " << s.name;
        throw std::invalid_argument(os.str());
    }

    for (const auto& [key, val] : j.items()) {
        if (key == "scenario") continue;
        if (key == "frequency_unit") {
            c.frequency_unit = val.get<double>();
        } else if (key == "cross_check") {
            c.cross_check = val.get<bool>();
        } else if (key == "jobs") {
            c.jobs = val.get<int>();
        } else if (key == "parameters") {
            for (const auto& [pk, pv] : val.items()) {
                const ParamSpec* p = find_param(*spec, pk);
                if (!p) unknown_key("parameter", pk, *spec);
                if (p->kind == ParamKind::text)
                    c.texts[pk] = pv.get<std::string>();
                else if (pv.is_boolean())
                    c.numbers[pk] = pv.get<bool>() ? 1.0 : 0.0;
                else
                    c.numbers[pk] = pv.get<double>();
            }
        } else if (key == "grid") {
            for (const auto& [gk, gv] : val.items()) {
                if (!find_grid(*spec, gk)) unknown_key("grid", gk, *spec);
                GridSpec g;
                g.start = gv.at("start").get<double>();
                g.stop = gv.at("stop").get<double>();
                g.count = gv.at("count").get<int>();
                c.grids[gk] = g;
            }
        } else if (key == "output") {
            // handled by the CLI layer; accepted here so one document drives a run
            if (!val.is_object()) throw std::invalid_argument("config: 'output' must be an object");
        } else {
            std::ostringstream os;
            os << "config: unknown top-level key '" << key
               << "'; accepted: scenario, frequency_unit, parameters, grid, output, "
                  "cross_check, jobs";
            throw std::invalid_argument(os.str());
        }
    }
    return c;
}

// ------------------------------ validation ------------------------------------

ValidationReport validate_scenario(const ScenarioConfig& c) {
    ValidationReport rep;
    const ScenarioSpec* spec = find_scenario(c.scenario);
    if (!spec) {
        rep.errors.push_back("unknown scenario '" + c.scenario + "'");
        return rep;
    }
    if (c.frequency_unit <= 0.0) rep.errors.push_back("frequency_unit must be positive");
    for (const auto& [name, g] : c.grids)
        if (g.count < 2) rep.errors.push_back("grid '" + name + "': count must be >= 2");

    auto geterr = [&](const std::string& key) { return get(c, key); };

    if (c.scenario == "eit" || c.scenario == "stirap") {
        for (const std::string key : {"gamma31", "gamma32", "gamma21"})
            if (geterr(key) < 0.0) rep.errors.push_back("negative decay rate '" + key + "'");
    }
    if (c.scenario == "eit") {
        const double g31 = geterr("gamma31") + geterr("gamma32");
        double wp = geterr("omega_p");
        if (wp == 0.0) wp = g31 / 100.0;
        if (g31 <= 0.0)
            rep.errors.push_back("upper level must decay (gamma31 + gamma32 > 0)");
        else if (wp > g31 / 50.0)
            rep.warnings.push_back("probe exceeds the weak-probe bound Gamma31/50; "
                                   "the numeric spectrum will refuse to run");
    }
    if (c.scenario == "polariton") {
        const double wr = geterr("omega_r"), wq = geterr("omega_q"), g = geterr("g");
        if (wr == wq) {
            rep.errors.push_back("omega_r == omega_q: no dispersive regime");
        } else {
            const double ratio = std::abs(g / (wr - wq));
            if (ratio > 0.1)
                rep.warnings.push_back("dispersive approximation unreliable: g/|detuning| = " +
                                       format_double(ratio) + " > 0.1");
            else if (ratio > 0.05)
                rep.warnings.push_back("dispersive ratio g/|detuning| = " + format_double(ratio) +
                                       " above the comfortable 0.05");
        }
        if (wr != wq) {
            const double chi = g * g / (wr - wq);
            const double lo = wq - 3.0 * chi, hi = wq - chi;
            const auto it = c.grids.find("omega_d");
            if (it != c.grids.end()) {
                const double lo_w = std::min(lo, hi), hi_w = std::max(lo, hi);
                if (it->second.start < lo_w || it->second.stop > hi_w)
                    rep.warnings.push_back(
                        "drive grid leaves the nesting window (" + format_double(lo_w) + ", " +
                        format_double(hi_w) + "); polaritons outside it are not nested");
            }
        }
    }
    if (c.scenario == "flux") {
        const double alpha = geterr("alpha");
        if (alpha <= 0.0 || alpha >= 1.0)
            rep.errors.push_back("alpha must lie in (0, 1)");
        else if (alpha < 0.5)
            rep.warnings.push_back("alpha below the typical [0.5, 1] window");
    }
    if (c.scenario == "phase") {
        const double bl = geterr("beta_l");
        if (bl <= 0.0)
            rep.errors.push_back("beta_l must be positive");
        else if (!(bl > 1.0 && bl < 4.6))
            rep.warnings.push_back("beta_L outside the phase-qubit operating window (1, 4.6)");
    }
    if (c.scenario == "transmon") {
        const double ratio = geterr("ej_over_ec");
        if (ratio < 5.0)
            rep.errors.push_back("Ej/Ec < 5: bosonic reduction invalid");
        else if (ratio < 10.0)
            rep.warnings.push_back("Ej/Ec < 10: bosonic reduction strained");
    }
    if (c.scenario == "stirap") {
        if (geterr("sigma") <= 0.0) rep.errors.push_back("sigma must be positive");
        if (geterr("t_s") > 0.0)
            rep.warnings.push_back("t_s > 0 puts the pump before the Stokes pulse "
                                   "(intuitive ordering; STIRAP wants t_s < 0)");
    }
    return rep;
}

// ------------------------------ runners ---------------------------------------

namespace {

Table run_lc(const ScenarioConfig& c) {
    const OscillatorParams p = lc_quantize(get(c, "inductance"), get(c, "capacitance"));
    Table t;
    t.columns = {"omega", "frequency_hz", "impedance", "z", "q_zpf", "phi_zpf"};
    t.rows = {{p.omega, p.omega / (2.0 * kPi), p.impedance, p.z, p.q_zpf, p.phi_zpf}};
    return t;
}

Table run_tline(const ScenarioConfig& c) {
    TransmissionLineSpec spec{get(c, "ell"), get(c, "cap"), get(c, "length"),
                              get_int(c, "n_max")};
    const int samples = get_int(c, "samples");
    Table t;
    if (samples > 0) {
        const GridSpec gx{0.0, spec.length, samples};
        const std::vector<double> xs = linspace(gx);
        const auto modes = tline_modes(spec, xs);
        t.columns = {"x"};
        for (const auto& m : modes) t.columns.push_back("phi_" + std::to_string(m.n));
        for (int i = 0; i < samples; ++i) {
            std::vector<double> row{xs[i]};
            for (const auto& m : modes) row.push_back(m.phi[i]);
            t.rows.push_back(std::move(row));
        }
    } else {
        const auto modes = tline_modes(spec);
        t.columns = {"n", "k", "omega"};
        for (const auto& m : modes)
            t.rows.push_back({static_cast<double>(m.n), m.k, m.omega});
    }
    return t;
}

Table run_cpb_bands(const ScenarioConfig& c) {
    const double ec = get(c, "ec");
    CpbParams p{ec, get(c, "ej_over_ec") * ec, 0.0, get_int(c, "n_charge")};
    const int n_levels = get_int(c, "n_levels");
    const GridSpec gspec = get_grid(c, "ng", find_grid(*find_scenario("cpb-bands"), "ng")->def);
    const std::vector<double> ng = linspace(gspec);
    const CpbBands bands = cpb_bands(p, ng, n_levels, c.jobs);

    Table t;
    echo_grid(t, "ng", gspec);
    t.add_info("energy_unit", std::string("ec"));
    t.add_info("cutoff_warning", std::string(bands.cutoff_warning ? "true" : "false"));
    t.columns = {"ng"};
    for (int b = 0; b < n_levels; ++b) t.columns.push_back("e" + std::to_string(b));
    for (std::size_t i = 0; i < ng.size(); ++i) {
        std::vector<double> row{ng[i]};
        for (double e : bands.levels[i]) row.push_back(e / ec);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_transmon(const ScenarioConfig& c) {
    const double ec = get(c, "ec");
    const double ej = get(c, "ej_over_ec") * ec;
    const auto [derived, h] = transmon_effective(ec, ej, get_int(c, "n_trunc"));
    const EigenSystem es = eig_hermitian(h);

    Table t;
    if (derived.regime_warning) t.add_info("regime_warning", std::string("Ej/Ec below 10"));
    t.columns = {"omega01_over_ec", "omega12_over_ec", "anharmonicity_over_ec",
                 "phi_zpf", "n_zpf", "kerr_over_ec"};
    const double w01 = (es.values[1] - es.values[0]) / ec;
    const double w12 = (es.values[2] - es.values[1]) / ec;
    std::vector<double> row{w01, w12, w12 - w01, derived.phi_zpf, derived.n_zpf,
                            derived.kerr / ec};
    if (c.cross_check) {
        // Charge-basis oracle at the charge sweet spot.
        CpbParams p{ec, ej, 0.0, get_int(c, "n_charge")};
        const EigenSystem ch = eig_hermitian(cpb_hamiltonian(p));
        const double w01_charge = (ch.values[1] - ch.values[0]) / ec;
        t.columns.push_back("omega01_charge_over_ec");
        t.columns.push_back("residual");
        row.push_back(w01_charge);
        row.push_back(std::abs(w01 - w01_charge));
    }
    t.rows = {std::move(row)};
    return t;
}

Table run_flux(const ScenarioConfig& c) {
    FluxQubitParams p{};
    p.alpha = get(c, "alpha");
    p.k = get(c, "k");
    p.ej = get(c, "ej");
    p.persistent_current = get(c, "ip");
    p.tunnel_delta = get(c, "tunnel_delta");

    Table t;
    const std::string emit = get_text(c, "emit");
    if (emit == "tls") {
        const PhysicalConstants k0{};
        const double eps = 2.0 * p.persistent_current * k0.flux_quantum() * (p.k - 0.5);
        t.columns = {"epsilon_j", "hbar_delta_j", "splitting_j"};
        t.rows = {{eps, k0.hbar * p.tunnel_delta, flux_tls_splitting(p)}};
    } else if (emit == "potential") {
        const auto spec = find_scenario("flux");
        const GridSpec gps = get_grid(c, "phi_plus", find_grid(*spec, "phi_plus")->def);
        const GridSpec gms = get_grid(c, "phi_minus", find_grid(*spec, "phi_minus")->def);
        echo_grid(t, "phi_plus", gps);
        echo_grid(t, "phi_minus", gms);
        const auto gp = linspace(gps);
        const auto gm = linspace(gms);
        t.columns = {"phi_plus", "phi_minus", "u_over_ej"};
        for (double pp : gp)
            for (double pm : gm) t.rows.push_back({pp, pm, flux_potential(p, pp, pm)});
    } else {
        throw std::invalid_argument("flux: emit must be 'potential' or 'tls'");
    }
    return t;
}

Table run_phase(const ScenarioConfig& c) {
    PhaseQubitParams p{};
    p.beta_l = get(c, "beta_l");
    p.flux_bias = get(c, "flux_bias");
    p.ej = get(c, "ej");
    p.omega01 = get(c, "omega01");
    p.cap = get(c, "cap");
    p.di_circ = get(c, "di_circ");
    const PhysicalConstants k0{};
    p.barrier_du = get(c, "du_over_hw01") * k0.hbar * p.omega01;

    Table t;
    t.add_info("operation_range", std::string(phase_operation_range(p) ? "true" : "false"));
    const std::string emit = get_text(c, "emit");
    if (emit == "tls") {
        const PhaseTls tls = phase_tls(p);
        const EigenSystem es = eig_hermitian(tls.h);
        t.columns = {"chi", "splitting_j", "splitting_over_hw01"};
        const double split = es.values[1] - es.values[0];
        t.rows = {{tls.chi, split, split / (k0.hbar * p.omega01)}};
    } else if (emit == "potential") {
        const auto spec = find_scenario("phase");
        const GridSpec gspec = get_grid(c, "phi", find_grid(*spec, "phi")->def);
        echo_grid(t, "phi", gspec);
        const auto phis = linspace(gspec);
        t.columns = {"phi", "u_over_ej"};
        for (double phi : phis) t.rows.push_back({phi, phase_potential(p, phi)});
    } else {
        throw std::invalid_argument("phase: emit must be 'potential' or 'tls'");
    }
    return t;
}

Table run_rabi(const ScenarioConfig& c) {
    TlsDriveParams p{};
    p.delta = get(c, "delta");
    p.rabi_g = get(c, "rabi_g");
    const double w = rabi_frequency(p);
    if (w <= 0.0) throw std::invalid_argument("rabi: need delta or rabi_g nonzero");
    const int n_times = get_int(c, "n_times");
    const double t_end = get(c, "periods") * 2.0 * kPi / w;

    std::vector<double> times(n_times);
    for (int i = 0; i < n_times; ++i) times[i] = t_end * i / (n_times - 1.0);

    Table t;
    t.columns = {"t", "p_gg"};
    std::vector<double> numeric;
    if (c.cross_check) {
        const LindbladModel model = make_tls_model(p);
        const Trajectory traj = evolve(model, projector(2, 0), times,
                                       {{"p_gg", projector(2, 0)}});
        numeric = traj.observables[0];
        t.columns.push_back("p_gg_numeric");
        t.columns.push_back("residual");
    }
    for (int i = 0; i < n_times; ++i) {
        const double exact = rabi_population_gg(p, times[i]);
        std::vector<double> row{times[i], exact};
        if (c.cross_check) {
            row.push_back(numeric[i]);
            row.push_back(std::abs(numeric[i] - exact));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_susceptibility(const ScenarioConfig& c) {
    TlsDriveParams p{};
    p.gamma = get(c, "gamma");
    p.rabi_g = get(c, "g_over_gamma") * p.gamma;
    p.density = get(c, "density");
    p.dipole = get(c, "dipole");
    if (p.dipole == 0.0) {
        const PhysicalConstants k0{};
        const double omega = 2.0 * kPi * k0.c_light / (get(c, "lambda_nm") * 1e-9);
        p.dipole = dipole_from_decay(p.gamma, omega);
    }

    const auto spec = find_scenario("susceptibility");
    const GridSpec gspec =
        get_grid(c, "delta_over_gamma", find_grid(*spec, "delta_over_gamma")->def);
    const auto du = linspace(gspec);
    std::vector<double> deltas(du.size());
    for (std::size_t i = 0; i < du.size(); ++i) deltas[i] = du[i] * p.gamma;

    if (c.cross_check && p.rabi_g <= 0.0)
        throw std::invalid_argument(
            "susceptibility: the numeric cross-check reads chi off the driven "
            "coherence and needs g_over_gamma > 0");

    const auto chi = tls_susceptibility(p, deltas, c.jobs);
    const LineWidths lw = tls_linewidths(p);
    const double pref = susceptibility_prefactor(p);

    Table t;
    echo_grid(t, "delta_over_gamma", gspec);
    t.add_info("dipole", p.dipole);
    t.add_info("halfwidth", lw.half);
    t.add_info("fullwidth", lw.full);
    t.columns = {"delta", "re_chi", "im_chi"};
    if (c.cross_check) {
        t.columns.push_back("re_chi_numeric");
        t.columns.push_back("im_chi_numeric");
        t.columns.push_back("residual");
    }
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        std::vector<double> row{deltas[i], chi[i].real(), chi[i].imag()};
        if (c.cross_check) {
            TlsDriveParams q = p;
            q.delta = deltas[i];
            // chi = pref * rho_eg / G for the steady coherence
            const Operator rho = steady_state(make_tls_model(q));
            const cxd chi_num = pref * rho(1, 0) / q.rabi_g;
            row.push_back(chi_num.real());
            row.push_back(chi_num.imag());
            row.push_back(std::abs(chi_num - chi[i]));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_jc_dressed(const ScenarioConfig& c) {
    JcmParams p{get(c, "omega_r"), get(c, "omega_q"), get(c, "g"), 3};
    const int n_manifolds = get_int(c, "n_manifolds");
    const double delta = p.omega_q - p.omega_r;

    Table t;
    t.columns = {"n", "e_plus", "e_minus", "theta"};
    if (c.cross_check) {
        t.columns.push_back("e_plus_numeric");
        t.columns.push_back("e_minus_numeric");
        t.columns.push_back("residual");
    }
    for (int n = 0; n < n_manifolds; ++n) {
        const JcDoublet d = jc_doublet(n, delta, p.g, p.omega_r);
        std::vector<double> row{static_cast<double>(n), d.e_plus, d.e_minus, d.theta};
        if (c.cross_check) {
            const EigenSystem es = eig_hermitian(jc_block(n, delta, p.g, p.omega_r));
            row.push_back(es.values[1]);
            row.push_back(es.values[0]);
            row.push_back(std::max(std::abs(es.values[1] - d.e_plus),
                                   std::abs(es.values[0] - d.e_minus)));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_polariton(const ScenarioConfig& c) {
    JcmParams p{get(c, "omega_r"), get(c, "omega_q"), get(c, "g"), 3};
    const double drive = get(c, "drive_rabi");

    const double chi = dispersive_shift(p);
    const GridSpec def{p.omega_q - 3.5 * chi, p.omega_q - 0.5 * chi, 101};
    const GridSpec gspec = get_grid(c, "omega_d", def);
    const auto omega_d = linspace(gspec);

    Table t;
    echo_grid(t, "omega_d", gspec);
    t.add_info("chi", chi);
    t.add_info("nesting_low", p.omega_q - 3.0 * chi);
    t.add_info("nesting_high", p.omega_q - chi);
    t.columns = {"omega_d", "theta_l", "theta_u", "omega_21", "omega_43", "nested"};
    if (c.cross_check) {
        t.columns.push_back("omega_21_numeric");
        t.columns.push_back("omega_43_numeric");
        t.columns.push_back("residual");
    }
    for (double wd : omega_d) {
        const DriveSpec d{wd, drive};
        const PolaritonBasis b = polariton_basis(p, d);
        std::vector<double> row{wd, b.theta_l, b.theta_u, b.omega_21, b.omega_43,
                                b.nested ? 1.0 : 0.0};
        if (c.cross_check) {
            const PolaritonNumeric num = polariton_numeric(p, d);
            row.push_back(num.omega_21);
            row.push_back(num.omega_43);
            row.push_back(std::max(std::abs(num.omega_21 - b.omega_21),
                                   std::abs(num.omega_43 - b.omega_43)));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_eit(const ScenarioConfig& c) {
    LambdaDecays d{get(c, "gamma31"), get(c, "gamma32"), get(c, "gamma21")};
    ProbeControlSpec s{};
    s.control_rabi = get(c, "omega_c");
    s.delta2 = get(c, "delta2");
    s.probe_rabi = get(c, "omega_p");
    const double g31 = d.gamma3_total();
    if (s.probe_rabi == 0.0) s.probe_rabi = g31 / 100.0;

    const GridSpec def{-5.0 * g31, 5.0 * g31, 401};
    const GridSpec gspec = get_grid(c, "delta", def);
    const auto deltas = linspace(gspec);

    const EitPoles poles = eit_poles(s.control_rabi, d);
    Table t;
    echo_grid(t, "delta", gspec);
    t.add_info("regime", to_string(poles.regime));
    t.add_info("threshold", 0.5 * (g31 - d.gamma21));
    t.add_info("delta_plus_re", poles.delta_plus.real());
    t.add_info("delta_plus_im", poles.delta_plus.imag());
    t.add_info("delta_minus_re", poles.delta_minus.real());
    t.add_info("delta_minus_im", poles.delta_minus.imag());

    const auto chi = eit_chi1_grid(s, d, deltas, c.jobs);
    std::vector<std::complex<double>> rho31;
    if (c.cross_check) rho31 = eit_numeric_spectrum(s, d, deltas, c.jobs);

    t.columns = {"delta", "re_chi", "im_chi"};
    if (c.cross_check) {
        t.columns.push_back("re_chi_numeric");
        t.columns.push_back("im_chi_numeric");
        t.columns.push_back("residual");
    }
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        std::vector<double> row{deltas[i], chi[i].real(), chi[i].imag()};
        if (c.cross_check) {
            // rho31 maps onto the analytic normalization as -(2/Wp) conj(rho31)
            const cxd chi_num = -2.0 / s.probe_rabi * std::conj(rho31[i]);
            row.push_back(chi_num.real());
            row.push_back(chi_num.imag());
            row.push_back(std::abs(chi_num - chi[i]));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_stirap(const ScenarioConfig& c) {
    StirapConfig cfg{};
    cfg.pump_peak = get(c, "omega_peak");
    cfg.stokes_peak = get(c, "omega_peak");
    cfg.sigma = get(c, "sigma");
    cfg.t_stokes = get(c, "t_s");
    cfg.cd_enabled = get(c, "cd") != 0.0;
    cfg.t_start = -4.0 * cfg.sigma + std::min(0.0, cfg.t_stokes);
    cfg.t_end = 4.0 * cfg.sigma + std::max(0.0, cfg.t_stokes);

    LambdaDecays d{get(c, "gamma31"), get(c, "gamma32"), get(c, "gamma21")};
    const bool open = d.gamma31 > 0.0 || d.gamma32 > 0.0 || d.gamma21 > 0.0;

    const ProtocolResult r = run_protocol(cfg, open ? &d : nullptr, get_int(c, "n_times"));

    Table t;
    t.add_info("p1_final", r.p1_final);
    t.add_info("p2_final", r.p2_final);
    t.add_info("p3_final", r.p3_final);
    t.columns = {"t", "p1", "p2", "p3"};
    const Trajectory& traj = r.trajectory;
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        t.rows.push_back({traj.times[i], traj.observables[0][i], traj.observables[1][i],
                          traj.observables[2][i]});
    return t;
}

}  // namespace

Table run_scenario(const ScenarioConfig& c) {
    const ScenarioSpec* spec = find_scenario(c.scenario);
    if (!spec) {
        std::ostringstream os;
        os << "unknown scenario '" << c.scenario << "'; available:";
        for (const auto& s : scenario_registry()) os << " " << s.name;
        throw std::invalid_argument(os.str());
    }
    for (const auto& [k, v] : c.numbers)
        if (!find_param(*spec, k)) unknown_key("parameter", k, *spec);
    for (const auto& [k, v] : c.texts)
        if (!find_param(*spec, k)) unknown_key("parameter", k, *spec);
    for (const auto& [k, v] : c.grids)
        if (!find_grid(*spec, k)) unknown_key("grid", k, *spec);
    if (c.frequency_unit <= 0.0)
        throw std::invalid_argument("frequency_unit must be positive");

    Table t;
    if (c.scenario == "lc") t = run_lc(c);
    else if (c.scenario == "tline") t = run_tline(c);
    else if (c.scenario == "cpb-bands") t = run_cpb_bands(c);
    else if (c.scenario == "transmon") t = run_transmon(c);
    else if (c.scenario == "flux") t = run_flux(c);
    else if (c.scenario == "phase") t = run_phase(c);
    else if (c.scenario == "rabi") t = run_rabi(c);
    else if (c.scenario == "susceptibility") t = run_susceptibility(c);
    else if (c.scenario == "jc-dressed") t = run_jc_dressed(c);
    else if (c.scenario == "polariton") t = run_polariton(c);
    else if (c.scenario == "eit") t = run_eit(c);
    else if (c.scenario == "stirap") t = run_stirap(c);
    else throw std::invalid_argument("scenario '" + c.scenario + "' not implemented");

    t.scenario = c.scenario;
    t.frequency_unit = c.frequency_unit;
    echo_params(t, c);
    return t;
}

}  // namespace cqed
