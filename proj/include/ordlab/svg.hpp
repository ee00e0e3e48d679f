#ifndef ORDLAB_SVG_HPP_
#define ORDLAB_SVG_HPP_

#include <string>
#include <vector>

#include "ordlab/dynreal.hpp"
#include "ordlab/slope.hpp"

namespace ordlab {

// Graphs of the PL maps of the given elements over the action window.
std::string pl_graphs_svg(const PLAction& a, const std::vector<Word>& elements);

struct SlopeMark {
  Slope slope = Slope::of_fraction(0, 1);
  std::string label;
  std::string color = "#2266cc";
};

// The slope circle with marked slopes (certified slopes, excluded arcs etc.).
std::string slope_circle_svg(const std::vector<SlopeMark>& marks);

}  // namespace ordlab

#endif  // ORDLAB_SVG_HPP_
