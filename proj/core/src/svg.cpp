#include "nv/svg.hpp"

#include <algorithm>
#include <sstream>

namespace nv {

namespace {

struct Rect {
    double x, y, w, h; // unit-square coordinates, y up
};

Rect address_rect(const Address& a) {
    Rect r{0.0, 0.0, 1.0, 1.0};
    const Word& horizontal = a.coord(1);
    for (std::size_t i = 0; i < horizontal.size(); ++i) {
        r.w /= 2;
        if (horizontal.bit(i) == 1)
            r.x += r.w;
    }
    const Word& vertical = a.coord(2);
    for (std::size_t i = 0; i < vertical.size(); ++i) {
        r.h /= 2;
        if (vertical.bit(i) == 1)
            r.y += r.h;
    }
    return r;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

void emit_panel(std::ostringstream& out, const Element& e, bool domain, double x0, double y0,
                double side) {
    out << "  <g fill=\"none\" stroke=\"#000\" stroke-width=\"1\">\n";
    out << "    <rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(side)
        << "\" height=\"" << fmt(side) << "\"/>\n";
    for (std::size_t i = 0; i < e.cell_count(); ++i) {
        const Address& a = domain ? e.cell(i).dom : e.cell(i).cod;
        Rect r = address_rect(a);
        double px = x0 + r.x * side;
        double py = y0 + (1.0 - r.y - r.h) * side; // flip: SVG y grows down
        out << "    <rect x=\"" << fmt(px) << "\" y=\"" << fmt(py) << "\" width=\""
            << fmt(r.w * side) << "\" height=\"" << fmt(r.h * side) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"#333\">\n";
    for (std::size_t i = 0; i < e.cell_count(); ++i) {
        const Address& a = domain ? e.cell(i).dom : e.cell(i).cod;
        Rect r = address_rect(a);
        double cx = x0 + (r.x + r.w / 2) * side;
        double cy = y0 + (1.0 - r.y - r.h / 2) * side;
        double font = std::clamp(std::min(r.w, r.h) * side * 0.35, 6.0, 18.0);
        out << "    <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy + font / 3) << "\" font-size=\""
            << fmt(font) << "\">" << i << "</text>\n";
    }
    out << "  </g>\n";
}

} // namespace

std::string render_partition_svg(const Element& e) {
    if (e.arity() != 2)
        throw BadDimension("partition rendering is only defined for arity 2");
    const double side = 256, margin = 16, gap = 48;
    const double width = 2 * side + 2 * margin + gap;
    const double height = side + 2 * margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    emit_panel(out, e, true, margin, margin, side);
    // arrow between the panels
    double ax0 = margin + side + 8, ax1 = margin + side + gap - 8, ay = margin + side / 2;
    out << "  <g stroke=\"#000\" stroke-width=\"1.5\">\n";
    out << "    <line x1=\"" << fmt(ax0) << "\" y1=\"" << fmt(ay) << "\" x2=\"" << fmt(ax1)
        << "\" y2=\"" << fmt(ay) << "\"/>\n";
    out << "    <line x1=\"" << fmt(ax1 - 8) << "\" y1=\"" << fmt(ay - 5) << "\" x2=\""
        << fmt(ax1) << "\" y2=\"" << fmt(ay) << "\"/>\n";
    out << "    <line x1=\"" << fmt(ax1 - 8) << "\" y1=\"" << fmt(ay + 5) << "\" x2=\""
        << fmt(ax1) << "\" y2=\"" << fmt(ay) << "\"/>\n";
    out << "  </g>\n";
    emit_panel(out, e, false, margin + side + gap, margin, side);
    out << "</svg>\n";
    return out.str();
}

std::string render_cells_text(const Element& e) {
    std::ostringstream out;
    out << "n=" << e.arity() << " cells=" << e.cell_count() << "\n";
    for (std::size_t i = 0; i < e.cell_count(); ++i)
        out << "  " << i << ": " << e.cell(i).dom.str() << " -> " << e.cell(i).cod.str() << "\n";
    return out.str();
}

} // namespace nv
