#include "udg/geom.hpp"

#include <algorithm>
#include <cmath>

namespace udg {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DegenerateTerminals: return "DegenerateTerminals";
        case ErrorCode::DuplicatePoints: return "DuplicatePoints";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::TerminalCovered: return "TerminalCovered";
        case ErrorCode::OnAxis: return "OnAxis";
        case ErrorCode::WrongSide: return "WrongSide";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidDimensions: return "InvalidDimensions";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool crosses_terminal(Point p, Point q, double tau) noexcept {
    const bool p_left = is_left(p);
    if (p_left == is_left(q)) {
        return false;
    }
    const Point a = p_left ? p : q;
    const Point b = p_left ? q : p;
    if (b.x == 0.0) {
        return 0.0 < b.y && b.y < tau;
    }
    return slope_to_s(a) < slope_to_s(b) && slope_to_t(a, tau) > slope_to_t(b, tau);
}

Point RigidTransform::apply(Point p) const noexcept {
    const double dx = p.x - origin.x;
    const double dy = p.y - origin.y;
    return {c * dx - s * dy, s * dx + c * dy};
}

Point RigidTransform::invert(Point p) const noexcept {
    return {c * p.x + s * p.y + origin.x, -s * p.x + c * p.y + origin.y};
}

NormalizedInstance normalize(std::span<const Point> points, Point s, Point t) {
    if (s == t) {
        throw Error(ErrorCode::DegenerateTerminals, "s and t coincide");
    }
    const double len = std::hypot(t.x - s.x, t.y - s.y);
    const double ux = (t.x - s.x) / len;
    const double uy = (t.y - s.y) / len;

    NormalizedInstance out;
    out.tau = len;
    out.transform = RigidTransform{s, uy, ux};
    out.points.reserve(points.size());
    for (const Point& p : points) {
        out.points.push_back(out.transform.apply(p));
    }
    return out;
}

bool terminal_covered(std::span<const Point> points, Point terminal) noexcept {
    return std::any_of(points.begin(), points.end(),
                       [&](const Point& p) { return dist_sq(p, terminal) <= 0.25; });
}

void require_uncovered(std::span<const Point> points, double tau) {
    if (terminal_covered(points, {0.0, 0.0})) {
        throw Error(ErrorCode::TerminalCovered, "s lies inside a disk");
    }
    if (terminal_covered(points, {0.0, tau})) {
        throw Error(ErrorCode::TerminalCovered, "t lies inside a disk");
    }
}

void check_index(index_type i, std::size_t n) {
    if (i >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(i) + " >= " + std::to_string(n));
    }
}

void require_distinct(std::span<const Point> points) {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::DuplicatePoints, "two input points are equal");
    }
}

}  // namespace udg
