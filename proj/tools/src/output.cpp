#include "output.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cgpot::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string render_table(const Table& t, const std::string& format) {
    if (format == "csv") {
        std::string out;
        for (size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out += ',';
            out += t.columns[c];
        }
        out += '\n';
        for (const auto& row : t.rows) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                if (row[c]) out += format_number(*row[c]);
            }
            out += '\n';
        }
        return out;
    }
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json obj;
            for (size_t c = 0; c < row.size(); ++c) {
                if (row[c]) obj[t.columns[c]] = *row[c];
                else obj[t.columns[c]] = nullptr;
            }
            rows.push_back(obj);
        }
        return rows.dump(2) + "\n";
    }
    throw std::domain_error("unknown output format: " + format);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << contents;
}

} // namespace cgpot::cli
