#include "ordlab/svg.hpp"

#include <cmath>
#include <sstream>

namespace ordlab {

namespace {

double approx(const Rat& r) {
  return static_cast<double>(boost::multiprecision::numerator(r)) /
         static_cast<double>(boost::multiprecision::denominator(r));
}

double slope_angle(const Slope& s) {
  // direction angle in [0, pi), doubled onto the circle
  double v;
  if (s.rational) {
    if (s.q == 0) {
      return M_PI;  // vertical doubles to pi
    }
    v = static_cast<double>(s.p) / static_cast<double>(s.q);
  } else {
    v = (static_cast<double>(s.a) + static_cast<double>(s.b) * std::sqrt(double(s.d))) /
        static_cast<double>(s.c);
  }
  return 2.0 * std::atan(v);
}

}  // namespace

std::string pl_graphs_svg(const PLAction& a, const std::vector<Word>& elements) {
  const double lo = approx(a.window_lo) - 1, hi = approx(a.window_hi) + 1;
  const double scale = 560.0 / (hi - lo);
  auto px = [&](double x) { return 20 + (x - lo) * scale; };
  auto py = [&](double y) { return 580 - (y - lo) * scale; };
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='600' height='600' "
         "viewBox='0 0 600 600'>\n";
  out << "<rect width='600' height='600' fill='white'/>\n";
  out << "<line x1='" << px(lo) << "' y1='" << py(lo) << "' x2='" << px(hi) << "' y2='"
      << py(hi) << "' stroke='#bbbbbb' stroke-dasharray='4 3'/>\n";
  const char* colors[] = {"#cc3333", "#2266cc", "#22aa55", "#aa22aa", "#ee8800", "#116666"};
  int ci = 0;
  for (const auto& w : elements) {
    const PLHomeo f = element_map(a, w);
    std::vector<double> xs{lo};
    for (const Rat& b : f.breakpoints()) {
      const double x = approx(b);
      if (x > lo && x < hi) {
        xs.push_back(x);
      }
    }
    xs.push_back(hi);
    out << "<polyline fill='none' stroke='" << colors[ci % 6] << "' stroke-width='1.5' points='";
    for (double x : xs) {
      const Rat rx(static_cast<long long>(std::llround(x * 1000000.0)), 1000000);
      out << px(x) << "," << py(approx(f.eval(rx))) << " ";
    }
    out << "'/>\n";
    ++ci;
  }
  out << "</svg>\n";
  return out.str();
}

std::string slope_circle_svg(const std::vector<SlopeMark>& marks) {
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='400' height='400' "
         "viewBox='0 0 400 400'>\n";
  out << "<rect width='400' height='400' fill='white'/>\n";
  out << "<circle cx='200' cy='200' r='150' fill='none' stroke='#444444'/>\n";
  for (const auto& m : marks) {
    const double th = slope_angle(m.slope);
    const double x = 200 + 150 * std::cos(th), y = 200 - 150 * std::sin(th);
    out << "<circle cx='" << x << "' cy='" << y << "' r='5' fill='" << m.color << "'/>\n";
    const double lx = 200 + 175 * std::cos(th), ly = 200 - 175 * std::sin(th);
    out << "<text x='" << lx << "' y='" << ly
        << "' font-size='11' text-anchor='middle'>" << m.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}
}  // namespace ordlab
