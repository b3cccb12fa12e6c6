// csv.hpp: deterministic numeric formatting for emitted tables

#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace qisf::csv {

// 9 significant digits, scientific notation ("%.8e").
std::string format(double value);

void write_header(std::ostream& out, std::initializer_list<std::string_view> columns);
void write_header(std::ostream& out, std::span<const std::string> columns);
void write_row(std::ostream& out, std::span<const double> values);
void write_row(std::ostream& out, std::initializer_list<double> values);

}  // namespace qisf::csv
