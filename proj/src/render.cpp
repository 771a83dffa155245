#include "infgon/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace infgon {

namespace {

constexpr Int kUnit = 40;
constexpr Int kMargin = 40;

struct Frame {
  Window w;
  Int width;
  Int height;
  Int baseline;

  explicit Frame(Window win) : w(win) {
    width = (w.hi - w.lo) * kUnit + 2 * kMargin;
    height = (w.hi - w.lo) * kUnit / 2 + 2 * kMargin + 20;
    baseline = height - kMargin - 20;
  }

  Int x(Int v) const { return kMargin + (v - w.lo) * kUnit; }
};

void open(std::ostream& os, const Frame& fr) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fr.width << "\" height=\""
     << fr.height << "\" viewBox=\"0 0 " << fr.width << ' ' << fr.height << "\">\n"
     << "<style>.axis,.tick{stroke:#333}.arc{fill:none;stroke:#1f5fa8;stroke-width:2}"
        ".fountain{fill:#c0392b}.vertex{fill:#1f5fa8}.edge{stroke:#555;stroke-width:1.5}"
        "text{font:12px sans-serif;text-anchor:middle}</style>\n";
}

void number_line(std::ostream& os, const Frame& fr) {
  os << "<line class=\"axis\" x1=\"" << fr.x(fr.w.lo) - kMargin / 2 << "\" y1=\"" << fr.baseline
     << "\" x2=\"" << fr.x(fr.w.hi) + kMargin / 2 << "\" y2=\"" << fr.baseline << "\"/>\n";
  for (Int v = fr.w.lo; v <= fr.w.hi; ++v) {
    os << "<line class=\"tick\" x1=\"" << fr.x(v) << "\" y1=\"" << fr.baseline - 5 << "\" x2=\""
       << fr.x(v) << "\" y2=\"" << fr.baseline + 5 << "\"/>\n";
    os << "<text x=\"" << fr.x(v) << "\" y=\"" << fr.baseline + 20 << "\">" << v << "</text>\n";
  }
}

}  // namespace

std::string render_svg(const ArcFamily& f, Window w) {
  const Frame fr(w);
  std::ostringstream os;
  open(os, fr);
  number_line(os, fr);

  for (const auto& a : arcs_in_window(f, w)) {
    const Int r = (a.right - a.left) * kUnit / 2;
    os << "<path class=\"arc\" data-arc=\"" << a.left << ',' << a.right << "\" d=\"M "
       << fr.x(a.left) << ' ' << fr.baseline << " A " << r << ' ' << r << " 0 0 1 "
       << fr.x(a.right) << ' ' << fr.baseline << "\"/>\n";
  }

  const auto c = classify(f);
  std::set<Int> marked = c.left_fountains;
  marked.insert(c.right_fountains.begin(), c.right_fountains.end());
  for (Int v : marked) {
    if (!w.contains(v)) continue;
    const char* side = c.left_fountains.contains(v) && c.right_fountains.contains(v) ? "both"
                       : c.left_fountains.contains(v)                               ? "left"
                                                                                    : "right";
    os << "<polygon class=\"fountain\" data-vertex=\"" << v << "\" data-side=\"" << side
       << "\" points=\"" << fr.x(v) << ',' << fr.baseline + 24 << ' ' << fr.x(v) - 6 << ','
       << fr.baseline + 34 << ' ' << fr.x(v) + 6 << ',' << fr.baseline + 34 << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const Quiver& q, Window w) {
  const Frame fr(w);
  std::ostringstream os;
  open(os, fr);
  os << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
        "markerWidth=\"8\" markerHeight=\"8\" orient=\"auto\">"
        "<polygon points=\"0,0 10,5 0,10\" fill=\"#555\"/></marker></defs>\n";
  number_line(os, fr);

  // Apex of the arc's semicircle, in doubled coordinates to stay integral.
  auto cx = [&](Arc a) { return fr.x(a.left) + fr.x(a.right); };
  auto cy = [&](Arc a) { return 2 * fr.baseline - (a.right - a.left) * kUnit; };
  auto half = [](Int v) {
    std::ostringstream s;
    s << v / 2;
    if (v % 2) s << ".5";
    return s.str();
  };

  for (const auto& [e, m] : q.arrows()) {
    for (int i = 0; i < m; ++i)
      os << "<line class=\"edge\" data-from=\"" << e.first.left << ',' << e.first.right
         << "\" data-to=\"" << e.second.left << ',' << e.second.right << "\" x1=\""
         << half(cx(e.first)) << "\" y1=\"" << half(cy(e.first)) << "\" x2=\""
         << half(cx(e.second)) << "\" y2=\"" << half(cy(e.second))
         << "\" marker-end=\"url(#head)\"/>\n";
  }
  for (const auto& v : q.vertices())
    os << "<circle class=\"vertex\" data-arc=\"" << v.left << ',' << v.right << "\" cx=\""
       << half(cx(v)) << "\" cy=\"" << half(cy(v)) << "\" r=\"5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace infgon
