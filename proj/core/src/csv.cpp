#include "susyosc/csv.hpp"

#include <cstdio>

#include "susyosc/errors.hpp"

namespace susyosc::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Writer::Writer(std::vector<std::string> header) : columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ',';
        out_ += header[i];
    }
    out_ += '\n';
}

void Writer::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw DomainError("csv row width differs from the header");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ += ',';
        out_ += format_double(values[i]);
    }
    out_ += '\n';
}

} // namespace susyosc::csv
