#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace qradius {

// 17 significant digits; lowercase scientific when |x| < 1e-4 or |x| >= 1e6,
// fixed otherwise. Infinities print as "inf"/"-inf".
std::string format_number(double x);

class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header);

    CsvWriter& cell(double x);
    CsvWriter& cell(const std::string& s);
    CsvWriter& cell(long long n);
    CsvWriter& cell(int n) { return cell(static_cast<long long>(n)); }
    CsvWriter& cell(std::size_t n) { return cell(static_cast<long long>(n)); }
    void end_row();

    void row(std::initializer_list<double> values);

private:
    void separator();

    std::ostream& out_;
    std::size_t columns_;
    std::size_t filled_ = 0;
};

}  // namespace qradius
