// table.hpp — result tables and their CSV / JSON renderings
//
// CSV layout is a contract: first line "# cqed-lab <version>", then
// "# scenario: <name>", "# frequency_unit: <value>", one "# param: key=value"
// line per parameter in sorted key order, optional "# info:" lines for
// derived outputs, the column header, and the rows. Floats are written as
// shortest round-trip decimals, so re-parsing reproduces the exact values
// and identical runs produce identical bytes.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cqed {

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

// Exact inverse of format_double for valid inputs.
double parse_double(const std::string& s);

struct Table {
    std::string scenario;
    double frequency_unit = 1.0;
    std::vector<std::pair<std::string, std::string>> params;  // echoed config
    std::vector<std::pair<std::string, std::string>> info;    // derived scalars
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_param(const std::string& key, double value);
    void add_param(const std::string& key, const std::string& value);
    void add_info(const std::string& key, double value);
    void add_info(const std::string& key, const std::string& value);
};

std::string render_csv(const Table& t);
std::string render_json(const Table& t);

// Parses a table back out of CSV text (header comments included).
Table parse_csv(const std::string& text);

}  // namespace cqed
