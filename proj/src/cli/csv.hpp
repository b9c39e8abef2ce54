#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace ringdecay::cli {

/// Shortest round-trip-safe text for a double: printf "%.17g".
std::string format_number(double value);

/// Comma-separated rows terminated by LF. Fields are numeric, so nothing is quoted.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(std::initializer_list<std::string_view> columns);

    CsvWriter& field(double value);
    CsvWriter& field(int value);
    void end_row();

private:
    void separator();

    std::ostream& out_;
    bool row_open_ = false;
};

} // namespace ringdecay::cli
