#include "frieze/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace frieze {

const RingElement& FriezeBand::at(int r, int i) const {
  const int j = ((i - first.at(r)) % n + n) % n;
  return rows.at(r).at(j);
}

FriezeBand make_band(const AFrieze& f) {
  const int n = f.n();
  FriezeBand b;
  b.n = n;
  for (int r = 0; r <= n - 2; ++r) {
    const int i0 = r == 0 ? 0 : -((r - 1) / 2);
    b.first.push_back(i0);
    std::vector<RingElement> row;
    for (int k = 0; k < n; ++k) {
      const int i = ((i0 + k) % n + n) % n;
      row.push_back(f.label(make_arc(i, (i + r + 1) % n)));
    }
    b.rows.push_back(std::move(row));
  }
  return b;
}

std::string band_text(const FriezeBand& b) {
  std::size_t width = 1;
  for (const auto& row : b.rows)
    for (const auto& v : row) width = std::max(width, v.to_string().size());
  const std::size_t cell = 2 * ((width + 2) / 2);
  std::ostringstream out;
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    std::string line(r % 2 == 0 ? cell / 2 : 0, ' ');
    for (const auto& v : b.rows[r]) {
      const std::string s = v.to_string();
      line += std::string(cell - s.size(), ' ') + s;
    }
    out << line << '\n';
  }
  return out.str();
}

std::vector<std::pair<int, int>> diamond_violations(const FriezeBand& b) {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r + 1 < static_cast<int>(b.rows.size()); ++r)
    for (int i = 0; i < b.n; ++i) {
      const RingElement& a = b.at(r - 1, i + 1);
      const RingElement& left = b.at(r, i);
      const RingElement& right = b.at(r, i + 1);
      const RingElement& d = b.at(r + 1, i);
      if (left * right - a * d != RingElement::one(a.ring())) out.emplace_back(r, i);
    }
  return out;
}

namespace {

constexpr double kCentre = 200, kRadius = 160;

struct Point {
  double x, y;
};

Point vertex(int k, int n) {
  const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * k / n;
  return {kCentre + kRadius * std::cos(t), kCentre - kRadius * std::sin(t)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
         "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
}

std::string text(Point p, const std::string& s) {
  return "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#b00\">" + s +
         "</text>\n";
}

std::string line(Point a, Point b, const char* colour) {
  return "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\" stroke=\"" +
         colour + "\" stroke-width=\"1.5\"/>\n";
}

std::string vertices(int n) {
  std::string s;
  for (int k = 0; k < n; ++k) {
    const Point p = vertex(k, n);
    s += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"3\" fill=\"black\"/>\n";
    const Point q{kCentre + (p.x - kCentre) * 1.09, kCentre + (p.y - kCentre) * 1.09};
    s += "<text x=\"" + fmt(q.x) + "\" y=\"" + fmt(q.y) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(k) +
         "</text>\n";
  }
  return s;
}

}  // namespace

std::string polygon_svg(int n, const std::vector<SvgArc>& arcs) {
  const auto all = all_arcs(n);
  std::string s = header();
  for (int k = 0; k < n; ++k) s += line(vertex(k, n), vertex(k + 1, n), "black");
  for (const auto& a : arcs) {
    const Arc arc = all.at(a.id);
    const Point p = vertex(arc.from, n), q = vertex(arc.to, n);
    if (!is_boundary(arc, n)) s += line(p, q, "#246");
    Point m{(p.x + q.x) / 2, (p.y + q.y) / 2};
    if (is_boundary(arc, n)) m = {kCentre + (m.x - kCentre) * 1.12, kCentre + (m.y - kCentre) * 1.12};
    if (!a.label.empty()) s += text(m, a.label);
  }
  return s + vertices(n) + "</svg>\n";
}

std::string punctured_svg(int n, const std::vector<SvgArc>& arcs) {
  const Point centre{kCentre, kCentre};
  std::string s = header();
  for (const auto& a : arcs) {
    const TaggedArc t = tagged_arc(a.id, n);
    Point m{};
    switch (t.kind) {
      case TaggedArc::Kind::Boundary: {
        const Point p = vertex(t.at, n), q = vertex(t.at + 1, n);
        m = {kCentre + ((p.x + q.x) / 2 - kCentre) * 1.12, kCentre + ((p.y + q.y) / 2 - kCentre) * 1.12};
        break;
      }
      case TaggedArc::Kind::Spoke:
      case TaggedArc::Kind::TaggedSpoke: {
        // Tagged spokes bow to one side and carry a notch near the puncture.
        const Point p = vertex(t.at, n);
        const bool tagged = t.kind == TaggedArc::Kind::TaggedSpoke;
        const double dx = p.x - kCentre, dy = p.y - kCentre;
        const Point c{kCentre + dx / 2 + (tagged ? -dy : dy) * 0.12, kCentre + dy / 2 + (tagged ? dx : -dx) * 0.12};
        s += "<path d=\"M " + fmt(p.x) + " " + fmt(p.y) + " Q " + fmt(c.x) + " " + fmt(c.y) + " " + fmt(kCentre) + " " +
             fmt(kCentre) + "\" fill=\"none\" stroke=\"#246\" stroke-width=\"1.5\"/>\n";
        if (tagged) {
          const Point q{kCentre + dx * 0.12 - dy * 0.03, kCentre + dy * 0.12 + dx * 0.03};
          s += "<text x=\"" + fmt(q.x) + "\" y=\"" + fmt(q.y) +
               "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">&#8904;</text>\n";
        }
        m = {(p.x + 2 * c.x + kCentre) / 4, (p.y + 2 * c.y + kCentre) / 4};
        break;
      }
      case TaggedArc::Kind::Chord: {
        const Point p = vertex(t.at, n), q = vertex(t.at + t.length, n);
        if (2 * t.length < n) {
          s += line(p, q, "#246");
          m = {(p.x + q.x) / 2, (p.y + q.y) / 2};
        } else {
          // Long chords pass on the far side of the puncture.
          const double mid = std::numbers::pi / 2 + 2 * std::numbers::pi * (t.at + t.length / 2.0) / n;
          const Point c{kCentre - 0.7 * kRadius * std::cos(mid), kCentre + 0.7 * kRadius * std::sin(mid)};
          s += "<path d=\"M " + fmt(p.x) + " " + fmt(p.y) + " Q " + fmt(c.x) + " " + fmt(c.y) + " " + fmt(q.x) + " " + fmt(q.y) +
               "\" fill=\"none\" stroke=\"#246\" stroke-width=\"1.5\"/>\n";
          m = {(p.x + 2 * c.x + q.x) / 4, (p.y + 2 * c.y + q.y) / 4};
        }
        break;
      }
    }
    if (!a.label.empty()) s += text(m, a.label);
  }
  for (int k = 0; k < n; ++k) s += line(vertex(k, n), vertex(k + 1, n), "black");
  s += "<circle cx=\"" + fmt(centre.x) + "\" cy=\"" + fmt(centre.y) + "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  return s + vertices(n) + "</svg>\n";
}

std::string frieze_svg(const AFrieze& f) {
  Triangulation t;
  try {
    t = find_unit_triangulation(f).triangulation;
  } catch (const std::exception&) {
    t = fan_triangulation(f.n());
  }
  std::vector<SvgArc> arcs;
  for (Arc a : boundary_arcs(f.n())) arcs.push_back({static_cast<int>(arc_index(a, f.n())), f.label(a).to_string()});
  for (Arc a : t.internal()) arcs.push_back({static_cast<int>(arc_index(a, f.n())), f.label(a).to_string()});
  return polygon_svg(f.n(), arcs);
}

std::string frieze_svg(const DFrieze& f) {
  std::vector<int> ids;
  try {
    ids = find_spoke_triangulation(f).triangulation.arcs();
  } catch (const std::exception&) {
    for (int v = 0; v < f.n(); ++v) ids.push_back(spoke_id(v, f.n()));
  }
  std::vector<SvgArc> arcs;
  for (int k = 0; k < f.n(); ++k) arcs.push_back({boundary_id(k, f.n()), f.label(boundary_id(k, f.n())).to_string()});
  for (int id : ids) arcs.push_back({id, f.label(id).to_string()});
  return punctured_svg(f.n(), arcs);
}

std::string labeling_svg(const SignLabeling& l) {
  const int n = l.n();
  auto sign = [](int s) { return std::string(s > 0 ? "+" : "−"); };
  std::vector<SvgArc> arcs;
  for (Arc a : boundary_arcs(n)) arcs.push_back({static_cast<int>(arc_index(a, n)), sign(l.sign(a))});
  for (Arc a : l.triangulation().internal()) arcs.push_back({static_cast<int>(arc_index(a, n)), sign(l.sign(a))});
  return polygon_svg(n, arcs);
}

}  // namespace frieze
