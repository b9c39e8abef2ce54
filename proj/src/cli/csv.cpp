#include <cstdio>

#include "csv.hpp"

namespace ringdecay::cli {

std::string format_number(double value)
{
    char buffer[40];
    const int len = std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return std::string(buffer, static_cast<std::size_t>(len));
}

void CsvWriter::header(std::initializer_list<std::string_view> columns)
{
    bool first = true;
    for (std::string_view column : columns) {
        if (!first)
            out_ << ',';
        out_ << column;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::separator()
{
    if (row_open_)
        out_ << ',';
    row_open_ = true;
}

CsvWriter& CsvWriter::field(double value)
{
    separator();
    out_ << format_number(value);
    return *this;
}

CsvWriter& CsvWriter::field(int value)
{
    separator();
    out_ << value;
    return *this;
}

void CsvWriter::end_row()
{
    out_ << '\n';
    row_open_ = false;
}

} // namespace ringdecay::cli
