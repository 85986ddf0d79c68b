#include "meander/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace meander {

namespace {

// Column of vertex v. Mirror graphs on an even vertex count get a two-column
// gap at the axis so the ':' marker has its own column.
struct Layout {
  int V;
  bool gap;
  int col(int v) const { return (v - 1) * 2 + (gap && v > V / 2 ? 2 : 0); }
  int axis_col() const { return gap ? V : (V - 1); }
  int width() const { return col(V) + 1; }
};

// Greedy row assignment: wider arcs first, each arc on the outermost row
// where it does not share columns with an already placed arc. Nested arcs end
// up strictly closer to the vertex line; the two crossing arcs overlap and
// land on distinct rows.
std::vector<int> assign_rows(const std::vector<Arc>& arcs, int& rows) {
  std::vector<size_t> order(arcs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return arcs[x].second - arcs[x].first > arcs[y].second - arcs[y].first;
  });
  std::vector<int> row(arcs.size(), 0);
  std::vector<std::vector<Arc>> occupied;
  for (size_t i : order) {
    size_t r = 0;
    for (;; ++r) {
      if (r == occupied.size()) occupied.emplace_back();
      bool clash = false;
      for (const Arc& e : occupied[r])
        if (!(arcs[i].second < e.first || e.second < arcs[i].first)) { clash = true; break; }
      if (!clash) break;
    }
    occupied[r].push_back(arcs[i]);
    row[i] = static_cast<int>(r);
  }
  rows = static_cast<int>(occupied.size());
  return row;
}

}  // namespace

std::string render_ascii(const MeanderGraph& g, const std::string& title) {
  Layout lay{g.vertex_count, g.has_mirror && g.vertex_count % 2 == 0};
  if (g.vertex_count == 0) return title + "\n(empty graph)\n";
  int rows_above = 0, rows_below = 0;
  std::vector<int> row_above = assign_rows(g.arcs_above, rows_above);
  std::vector<int> row_below = assign_rows(g.arcs_below, rows_below);

  int height = rows_above + 1 + rows_below;
  std::vector<std::string> canvas(static_cast<size_t>(height), std::string(static_cast<size_t>(lay.width()), ' '));
  auto put = [&](int r, int c, char ch) { canvas[static_cast<size_t>(r)][static_cast<size_t>(c)] = ch; };

  int vrow = rows_above;
  for (int v = 1; v <= g.vertex_count; ++v) put(vrow, lay.col(v), 'o');

  // Outermost rows (index 0) sit at the top/bottom edge; deeper rows hug the
  // vertex line.
  for (size_t i = 0; i < g.arcs_above.size(); ++i) {
    const Arc& e = g.arcs_above[i];
    int r = row_above[i];
    int lc = lay.col(e.first), rc = lay.col(e.second);
    put(r, lc, '/');
    put(r, rc, '\\');
    for (int c = lc + 1; c < rc; ++c) put(r, c, '-');
  }
  for (size_t i = 0; i < g.arcs_below.size(); ++i) {
    const Arc& e = g.arcs_below[i];
    int r = vrow + rows_below - row_below[i];
    int lc = lay.col(e.first), rc = lay.col(e.second);
    put(r, lc, '\\');
    put(r, rc, '/');
    for (int c = lc + 1; c < rc; ++c) put(r, c, '_');
  }

  if (g.has_mirror) {
    int ac = lay.axis_col();
    for (int r = 0; r < height; ++r)
      if (canvas[static_cast<size_t>(r)][static_cast<size_t>(ac)] == ' ') put(r, ac, ':');
  }

  std::ostringstream out;
  if (!title.empty()) out << title << "\n";
  for (const std::string& line : canvas) {
    size_t end = line.find_last_not_of(' ');
    out << (end == std::string::npos ? "" : line.substr(0, end + 1)) << "\n";
  }
  return out.str();
}

std::string render_ascii(const SeaweedSpec& spec) {
  return render_ascii(build_meander(spec), spec.to_string());
}

std::string render_svg(const MeanderGraph& g, const std::string& title) {
  const int unit = 36, r = 4;
  const int V = std::max(g.vertex_count, 1);
  // Tallest arc: half the widest span, capped.
  int max_h = unit;
  auto arc_h = [&](const Arc& e) {
    return std::min((e.second - e.first) * unit / 2 + unit / 4, 5 * unit);
  };
  for (const auto* arcs : {&g.arcs_above, &g.arcs_below})
    for (const Arc& e : *arcs) max_h = std::max(max_h, arc_h(e));
  const int y0 = max_h + 2 * unit / 3;
  const int width = (V + 1) * unit;
  const int height = 2 * y0;
  auto x = [&](int v) { return v * unit; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <title>" << title << "</title>\n";
  svg << "  <text x=\"" << unit / 2 << "\" y=\"" << unit / 2
      << "\" font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n";
  if (g.has_mirror) {
    double ax = g.mirror_position() * unit;
    svg << "  <line x1=\"" << ax << "\" y1=\"" << unit / 2 << "\" x2=\"" << ax << "\" y2=\""
        << height - unit / 4 << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  }
  auto draw_arcs = [&](const std::vector<Arc>& arcs, bool above, const char* color) {
    for (const Arc& e : arcs) {
      int x1 = x(e.first), x2 = x(e.second), h = arc_h(e);
      svg << "  <path d=\"M " << x1 << " " << y0 << " A " << (x2 - x1) / 2.0 << " " << h
          << " 0 0 " << (above ? 1 : 0) << " " << x2 << " " << y0 << "\" fill=\"none\" stroke=\""
          << color << "\" stroke-width=\"1.5\"/>\n";
    }
  };
  draw_arcs(g.arcs_above, true, "#1f77b4");
  draw_arcs(g.arcs_below, false, "#d62728");
  for (int v = 1; v <= g.vertex_count; ++v) {
    svg << "  <circle cx=\"" << x(v) << "\" cy=\"" << y0 << "\" r=\"" << r << "\" fill=\"#222\"/>\n";
    svg << "  <text x=\"" << x(v) << "\" y=\"" << y0 + unit / 2
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_svg(const SeaweedSpec& spec) {
  return render_svg(build_meander(spec), spec.to_string());
}

}  // namespace meander
