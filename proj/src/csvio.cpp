#include "csvio.hpp"

#include <charconv>

namespace chemoflow {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

std::string csv_row_doubles(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double x : cells)
        s.push_back(format_double(x));
    return csv_row(s);
}

}  // namespace chemoflow
