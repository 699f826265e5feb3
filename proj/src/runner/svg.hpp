#pragma once

#include <string>
#include <vector>

namespace wqed::runner {

struct SvgSeries {
    std::string name;
    const std::vector<double>* y;
};

// Minimal line plot (axes box, ticks, polylines, legend); enough to eyeball
// the produced curves without external tooling.
std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel, const std::vector<double>& x,
                          const std::vector<SvgSeries>& series);

}  // namespace wqed::runner
