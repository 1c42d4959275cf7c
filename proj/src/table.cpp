// table.cpp

#include "cqed/table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef CQED_LAB_VERSION
#define CQED_LAB_VERSION "0.0.0"
#endif

namespace cqed {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double x = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{}) throw std::invalid_argument("parse_double: bad number '" + s + "'");
    return x;
}

void Table::add_param(const std::string& key, double value) {
    params.emplace_back(key, format_double(value));
}
void Table::add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}
void Table::add_info(const std::string& key, double value) {
    info.emplace_back(key, format_double(value));
}
void Table::add_info(const std::string& key, const std::string& value) {
    info.emplace_back(key, value);
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    os << "# cqed-lab " << CQED_LAB_VERSION << "\n";
    os << "# scenario: " << t.scenario << "\n";
    os << "# frequency_unit: " << format_double(t.frequency_unit) << "\n";

    auto params = t.params;
    std::sort(params.begin(), params.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, v] : params) os << "# param: " << k << "=" << v << "\n";
    for (const auto& [k, v] : t.info) os << "# info: " << k << "=" << v << "\n";

    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << t.columns[c];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << format_double(row[c]);
        os << "\n";
    }
    return os.str();
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json j;
    j["tool"] = std::string("cqed-lab ") + CQED_LAB_VERSION;
    j["scenario"] = t.scenario;
    j["frequency_unit"] = t.frequency_unit;

    auto params = t.params;
    std::sort(params.begin(), params.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::ordered_json jp = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) jp[k] = v;
    j["params"] = jp;
    nlohmann::ordered_json ji = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.info) ji[k] = v;
    j["info"] = ji;

    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j.dump(2) + "\n";
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream is(text);
    std::string line;
    bool header_done = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto put = [&](const std::string& prefix,
                                 std::vector<std::pair<std::string, std::string>>& dst) {
                const std::string body = line.substr(prefix.size());
                const auto eq = body.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("parse_csv: malformed line '" + line + "'");
                dst.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            };
            if (line.rfind("# scenario: ", 0) == 0)
                t.scenario = line.substr(12);
            else if (line.rfind("# frequency_unit: ", 0) == 0)
                t.frequency_unit = parse_double(line.substr(18));
            else if (line.rfind("# param: ", 0) == 0)
                put("# param: ", t.params);
            else if (line.rfind("# info: ", 0) == 0)
                put("# info: ", t.info);
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!header_done) {
            t.columns = cells;
            header_done = true;
        } else {
            std::vector<double> row;
            row.reserve(cells.size());
            for (const auto& c : cells) row.push_back(parse_double(c));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace cqed
