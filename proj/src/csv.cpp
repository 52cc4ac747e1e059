#include "qradius/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "qradius/error.hpp"

namespace qradius {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";

    char sci[40];
    std::snprintf(sci, sizeof sci, "%.16e", x);
    const double mag = std::abs(x);
    if (mag < 1e-4 || mag >= 1e6) return sci;

    // Decimal exponent after rounding to 17 significant digits.
    const int exponent = std::atoi(std::strchr(sci, 'e') + 1);
    char fixed[64];
    std::snprintf(fixed, sizeof fixed, "%.*f", std::max(0, 16 - exponent), x);
    return fixed;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size()) {
    for (const auto& h : header) cell(h);
    end_row();
}

void CsvWriter::separator() {
    if (filled_ > 0) out_ << ',';
    ++filled_;
}

CsvWriter& CsvWriter::cell(double x) {
    separator();
    out_ << format_number(x);
    return *this;
}

CsvWriter& CsvWriter::cell(const std::string& s) {
    separator();
    out_ << s;
    return *this;
}

CsvWriter& CsvWriter::cell(long long n) {
    separator();
    out_ << n;
    return *this;
}

void CsvWriter::end_row() {
    if (filled_ != columns_) {
        throw Error(ErrorKind::InvalidArgument, "csv row has " + std::to_string(filled_) +
                                                    " cells, header has " + std::to_string(columns_));
    }
    out_ << '\n';
    filled_ = 0;
}

void CsvWriter::row(std::initializer_list<double> values) {
    for (double v : values) cell(v);
    end_row();
}

}  // namespace qradius
