// cqed_lab_main.cpp — command-line front end: scenario configs in,
// CSV/JSON tables out. Exit codes: 0 success, 2 config error, 3 solver error.

#include <deque>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqed/errors.hpp"
#include "cqed/scenarios.hpp"
#include "cqed/table.hpp"

namespace {

struct CliState {
    cqed::ScenarioConfig overrides;  // values set explicitly on the command line
    std::optional<bool> cross_check;
    std::optional<int> jobs;
    std::optional<double> frequency_unit;
    std::string config_path;
    std::string output_path;
    std::string format;
    bool selected = false;
};

std::string dashed(const std::string& name) {
    std::string d = name;
    for (char& ch : d)
        if (ch == '_') ch = '-';
    return d;
}

cqed::GridSpec parse_grid_arg(const std::string& body) {
    // start:stop:count
    cqed::GridSpec g;
    std::istringstream is(body);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(is, part, ':')) parts.push_back(part);
    if (parts.size() != 3)
        throw std::invalid_argument("--grid expects NAME=START:STOP:COUNT");
    g.start = cqed::parse_double(parts[0]);
    g.stop = cqed::parse_double(parts[1]);
    g.count = static_cast<int>(cqed::parse_double(parts[2]));
    return g;
}

cqed::ScenarioConfig merge(const std::string& scenario, const CliState& st,
                           std::string& out_path, std::string& out_format) {
    cqed::ScenarioConfig cfg;
    cfg.scenario = scenario;

    if (!st.config_path.empty()) {
        std::ifstream in(st.config_path);
        if (!in) throw std::invalid_argument("cannot open config file '" + st.config_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = cqed::config_from_json_text(buf.str());
        if (cfg.scenario != scenario)
            throw std::invalid_argument("config file is for scenario '" + cfg.scenario +
                                        "', not '" + scenario + "'");
        // honor the config's output block unless flags override it below
        nlohmann::json j = nlohmann::json::parse(buf.str());
        if (j.contains("output")) {
            const auto& o = j["output"];
            if (o.contains("path")) out_path = o["path"].get<std::string>();
            if (o.contains("format")) out_format = o["format"].get<std::string>();
        }
    }

    for (const auto& [k, v] : st.overrides.numbers) cfg.numbers[k] = v;
    for (const auto& [k, v] : st.overrides.texts) cfg.texts[k] = v;
    for (const auto& [k, v] : st.overrides.grids) cfg.grids[k] = v;
    if (st.cross_check) cfg.cross_check = *st.cross_check;
    if (st.jobs) cfg.jobs = *st.jobs;
    if (st.frequency_unit) cfg.frequency_unit = *st.frequency_unit;
    if (!st.output_path.empty()) out_path = st.output_path;
    if (!st.format.empty()) out_format = st.format;
    return cfg;
}

int emit(const cqed::Table& t, const std::string& path, const std::string& format) {
    std::string text;
    if (format == "csv")
        text = cqed::render_csv(t);
    else if (format == "json")
        text = cqed::render_json(t);
    else
        throw std::invalid_argument("format must be csv or json");

    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cqed-lab: circuit-QED scenarios to CSV/JSON tables"};
    app.require_subcommand(0, 1);

    std::deque<CliState> states;
    std::string run_scenario_name;

    for (const auto& spec : cqed::scenario_registry()) {
        states.emplace_back();
        CliState& st = states.back();
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->callback([&st, &run_scenario_name, name = spec.name] {
            st.selected = true;
            run_scenario_name = name;
        });

        for (const auto& p : spec.params) {
            const std::string flag = "--" + dashed(p.name);
            switch (p.kind) {
                case cqed::ParamKind::number:
                case cqed::ParamKind::integer:
                    sub->add_option_function<double>(
                        flag, [&st, n = p.name](double v) { st.overrides.numbers[n] = v; },
                        p.help);
                    break;
                case cqed::ParamKind::toggle:
                    sub->add_flag_function(
                        flag, [&st, n = p.name](std::int64_t) { st.overrides.numbers[n] = 1.0; },
                        p.help);
                    break;
                case cqed::ParamKind::text:
                    sub->add_option_function<std::string>(
                        flag, [&st, n = p.name](const std::string& v) { st.overrides.texts[n] = v; },
                        p.help);
                    break;
            }
        }
        sub->add_option_function<std::string>(
            "--grid",
            [&st](const std::string& v) {
                const auto eq = v.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--grid expects NAME=START:STOP:COUNT");
                std::string name = v.substr(0, eq);
                for (char& ch : name)
                    if (ch == '-') ch = '_';  // accept the dashed spelling too
                st.overrides.grids[name] = parse_grid_arg(v.substr(eq + 1));
            },
            "override a grid as NAME=START:STOP:COUNT")
            ->take_all();
        sub->add_option("--config", st.config_path, "JSON config document");
        sub->add_option("--output", st.output_path, "output path (default stdout)");
        sub->add_option("--format", st.format, "csv | json (default csv)");
        sub->add_option_function<int>(
            "--jobs", [&st](int v) { st.jobs = v; }, "worker threads for grid sweeps");
        sub->add_flag_function(
            "--cross-check", [&st](std::int64_t) { st.cross_check = true; },
            "emit the numeric twin columns plus residuals");
        sub->add_option_function<double>(
            "--frequency-unit", [&st](double v) { st.frequency_unit = v; },
            "rad/s per config frequency unit (recorded in the header)");
    }

    std::string validate_path;
    CLI::App* val = app.add_subcommand("validate", "check a config file without running solvers");
    val->add_option("file", validate_path, "JSON config document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (val->parsed()) {
            std::ifstream in(validate_path);
            if (!in) throw std::invalid_argument("cannot open config file '" + validate_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            const cqed::ScenarioConfig cfg = cqed::config_from_json_text(buf.str());
            const cqed::ValidationReport rep = cqed::validate_scenario(cfg);
            for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
            for (const auto& e : rep.errors) std::cout << "error: " << e << "\n";
            if (!rep.ok()) return 2;
            std::cout << "ok: scenario '" << cfg.scenario << "' validates\n";
            return 0;
        }

        if (run_scenario_name.empty()) {
            std::cerr << app.help();
            return 2;
        }
        for (auto& st : states) {
            if (!st.selected) continue;
            std::string out_path, out_format = "csv";
            const cqed::ScenarioConfig cfg = merge(run_scenario_name, st, out_path, out_format);
            const cqed::ValidationReport rep = cqed::validate_scenario(cfg);
            for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
            if (!rep.ok()) {
                for (const auto& e : rep.errors) std::cerr << "error: " << e << "\n";
                return 2;
            }
            return emit(cqed::run_scenario(cfg), out_path, out_format);
        }
        return 2;
    } catch (const cqed::solver_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
