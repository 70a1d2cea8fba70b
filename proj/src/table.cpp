#include "ringtime/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ringtime {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string Cell::value_string() const {
    switch (kind) {
        case Kind::Num: return fmt_double(num);
        case Kind::Int: return std::to_string(i);
        case Kind::Text: return text;
    }
    return {};
}

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != cols.size())
        throw std::logic_error("table '" + name + "': row arity mismatch");
    rows.push_back(std::move(cells));
}

std::string to_csv(const std::vector<Table>& tables) {
    std::string out;
    bool first = true;
    for (const Table& t : tables) {
        if (!first) out += "\n";
        first = false;
        out += "# table: " + t.name + "\n";
        for (size_t c = 0; c < t.cols.size(); ++c) {
            if (c) out += ",";
            out += t.cols[c].header();
        }
        out += "\n";
        for (const auto& row : t.rows) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c) out += ",";
                out += row[c].value_string();
            }
            out += "\n";
        }
    }
    return out;
}

namespace {

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += "\"";
    return out;
}

std::string json_cell(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Num:
            if (!std::isfinite(c.num)) return "null";
            return fmt_double(c.num);
        case Cell::Kind::Int: return std::to_string(c.i);
        case Cell::Kind::Text: return json_quote(c.text);
    }
    return "null";
}

}  // namespace

std::string to_json(const std::vector<Table>& tables) {
    std::string out = "{\"tables\":[";
    for (size_t ti = 0; ti < tables.size(); ++ti) {
        const Table& t = tables[ti];
        if (ti) out += ",";
        out += "{\"name\":" + json_quote(t.name) + ",\"columns\":[";
        for (size_t c = 0; c < t.cols.size(); ++c) {
            if (c) out += ",";
            out += json_quote(t.cols[c].header());
        }
        out += "],\"rows\":[";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            if (r) out += ",";
            out += "{";
            for (size_t c = 0; c < t.rows[r].size(); ++c) {
                if (c) out += ",";
                out += json_quote(t.cols[c].header()) + ":" + json_cell(t.rows[r][c]);
            }
            out += "}";
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

bool write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return false;
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::remove(tmp.c_str());
            return false;
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        return false;
    }
    return true;
}

}  // namespace ringtime
