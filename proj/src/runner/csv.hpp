#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "runner/format.hpp"

namespace wqed::runner {

// Comma-separated data file with '#'-prefixed header comments naming the
// experiment and the column units, followed by pure numeric rows.
class CsvBuilder {
public:
    void comment(const std::string& line) { buf_ << "# " << line << "\n"; }

    void row(std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) buf_ << ",";
            buf_ << format_double(v);
            first = false;
        }
        buf_ << "\n";
        ++rows_;
    }

    void row(const std::vector<double>& values) {
        bool first = true;
        for (double v : values) {
            if (!first) buf_ << ",";
            buf_ << format_double(v);
            first = false;
        }
        buf_ << "\n";
        ++rows_;
    }

    std::string str() const { return buf_.str(); }
    std::size_t rows() const { return rows_; }

private:
    std::ostringstream buf_;
    std::size_t rows_ = 0;
};

}  // namespace wqed::runner
