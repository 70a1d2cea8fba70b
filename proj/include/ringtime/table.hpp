// Deterministic table emission: CSV with unit-annotated headers and a JSON
// mirror carrying the same field names and byte-identical numbers.
#pragma once

#include <string>
#include <vector>

namespace ringtime {

std::string fmt_double(double x);  // %.17g, the single formatting used everywhere

struct Cell {
    enum class Kind { Num, Int, Text } kind = Kind::Num;
    double num = 0.0;
    long long i = 0;
    std::string text;

    static Cell number(double v) { return {Kind::Num, v, 0, {}}; }
    static Cell integer(long long v) { return {Kind::Int, 0.0, v, {}}; }
    static Cell str(std::string v) { return {Kind::Text, 0.0, 0, std::move(v)}; }
    std::string value_string() const;  // shared by both encoders
};

struct Column {
    std::string name;
    std::string unit;  // empty -> bare name; otherwise "name[unit]" in CSV headers
    std::string header() const { return unit.empty() ? name : name + "[" + unit + "]"; }
};

struct Table {
    std::string name;
    std::vector<Column> cols;
    std::vector<std::vector<Cell>> rows;

    Table() = default;
    Table(std::string n, std::vector<Column> c) : name(std::move(n)), cols(std::move(c)) {}

    void add_row(std::vector<Cell> cells);  // validates arity
};

std::string to_csv(const std::vector<Table>& tables);
std::string to_json(const std::vector<Table>& tables);

// Write via temp file + rename; no partial files on failure.
bool write_atomic(const std::string& path, const std::string& content);

}  // namespace ringtime
