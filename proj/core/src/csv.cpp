#include "qisf/csv.hpp"

#include <cstdio>

namespace qisf::csv {

std::string format(double value) {
    char buffer[32];
    const int n = std::snprintf(buffer, sizeof buffer, "%.8e", value);
    return std::string(buffer, static_cast<std::size_t>(n));
}

void write_header(std::ostream& out, std::initializer_list<std::string_view> columns) {
    bool first = true;
    for (auto c : columns) {
        if (!first) out << ',';
        out << c;
        first = false;
    }
    out << '\n';
}

void write_header(std::ostream& out, std::span<const std::string> columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ',';
        out << columns[i];
    }
    out << '\n';
}

void write_row(std::ostream& out, std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << format(values[i]);
    }
    out << '\n';
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
    write_row(out, std::span<const double>(values.begin(), values.size()));
}

}  // namespace qisf::csv
