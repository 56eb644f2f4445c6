#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cgpot::cli {

/// One emitted curve table: a header plus rows of optional numeric cells;
/// absent cells mark infeasible entries and serialize as empty fields.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

std::string format_number(double v);

/// Serialize as CSV (with header) or as a JSON array of row objects.
std::string render_table(const Table& t, const std::string& format);

void write_file(const std::string& path, const std::string& contents);

} // namespace cgpot::cli
