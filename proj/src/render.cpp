#include "udg/render.hpp"

#include <algorithm>
#include <sstream>

namespace udg {
namespace {

struct Frame {
    double min_x, max_y, scale;

    double x(double v) const { return (v - min_x) * scale; }
    double y(double v) const { return (max_y - v) * scale; }
};

std::string num(double v) {
    // Fixed precision keeps the text stable and short.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

std::string render_svg(const Instance& inst, const ResultFile* result, RenderOptions options) {
    double min_x = std::min(inst.s.x, inst.t.x), max_x = std::max(inst.s.x, inst.t.x);
    double min_y = std::min(inst.s.y, inst.t.y), max_y = std::max(inst.s.y, inst.t.y);
    for (const Point& p : inst.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    min_x -= 1.0;
    min_y -= 1.0;
    max_x += 1.0;
    max_y += 1.0;
    const Frame f{min_x, max_y, options.pixels_per_unit};
    const double width = (max_x - min_x) * f.scale, height = (max_y - min_y) * f.scale;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
        << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" fill=\"white\"/>\n";

    const auto n = inst.points.size();
    auto valid = [n](index_type v) { return v < n; };

    if (options.disks) {
        out << "<g fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#4a90d9\" stroke-width=\"0.5\">\n";
        for (const Point& p : inst.points) {
            out << "<circle class=\"disk\" cx=\"" << num(f.x(p.x)) << "\" cy=\"" << num(f.y(p.y))
                << "\" r=\"" << num(0.5 * f.scale) << "\"/>\n";
        }
        out << "</g>\n";
    }

    if (result && result->kind == ResultFile::Kind::sssp) {
        const auto& tree = result->tree;
        if (tree.parent.size() != n) {
            throw Error(ErrorCode::ParseError, "result does not match the instance size");
        }
        out << "<g stroke=\"#555555\" stroke-width=\"1\">\n";
        for (index_type p = 0; p < n; ++p) {
            const index_type q = tree.parent[p];
            if (q == kNoIndex) continue;
            if (!valid(q)) throw Error(ErrorCode::IndexOutOfRange, "parent index out of range");
            out << "<line class=\"tree\" x1=\"" << num(f.x(inst.points[q].x)) << "\" y1=\""
                << num(f.y(inst.points[q].y)) << "\" x2=\"" << num(f.x(inst.points[p].x))
                << "\" y2=\"" << num(f.y(inst.points[p].y)) << "\"/>\n";
        }
        out << "</g>\n";
    }
    if (result && result->kind == ResultFile::Kind::separation && !result->cycle.empty()) {
        out << "<polygon class=\"cycle\" fill=\"none\" stroke=\"#d9534f\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < result->cycle.size(); ++k) {
            const index_type v = result->cycle[k];
            if (!valid(v)) throw Error(ErrorCode::IndexOutOfRange, "cycle index out of range");
            if (k) out << ' ';
            out << num(f.x(inst.points[v].x)) << ',' << num(f.y(inst.points[v].y));
        }
        out << "\"/>\n";
    }

    out << "<line class=\"st\" x1=\"" << num(f.x(inst.s.x)) << "\" y1=\"" << num(f.y(inst.s.y))
        << "\" x2=\"" << num(f.x(inst.t.x)) << "\" y2=\"" << num(f.y(inst.t.y))
        << "\" stroke=\"#2a9d2a\" stroke-width=\"2\"/>\n";

    out << "<g fill=\"black\">\n";
    for (const Point& p : inst.points) {
        out << "<circle class=\"point\" cx=\"" << num(f.x(p.x)) << "\" cy=\"" << num(f.y(p.y))
            << "\" r=\"2\"/>\n";
    }
    out << "</g>\n";
    for (const auto& [label, p] : {std::pair{"s", inst.s}, std::pair{"t", inst.t}}) {
        out << "<circle class=\"terminal\" cx=\"" << num(f.x(p.x)) << "\" cy=\"" << num(f.y(p.y))
            << "\" r=\"4\" fill=\"#2a9d2a\"/>\n";
        out << "<text x=\"" << num(f.x(p.x) + 6) << "\" y=\"" << num(f.y(p.y) - 6)
            << "\" font-size=\"12\" font-family=\"sans-serif\">" << label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace udg
