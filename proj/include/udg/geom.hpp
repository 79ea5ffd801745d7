#pragma once

// Points, the unit-disk edge test, the crossing predicate against the
// terminal segment, and the rigid normalization that puts s at the origin
// and t on the positive y-axis.
//
// Disks have radius 1/2, so two centers are adjacent iff their squared
// distance is at most 1. All predicates are plain double comparisons.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace udg {

using index_type = std::uint32_t;
inline constexpr index_type kNoIndex = std::numeric_limits<index_type>::max();

enum class ErrorCode {
    DegenerateTerminals,
    DuplicatePoints,
    IndexOutOfRange,
    EmptySet,
    TerminalCovered,
    OnAxis,
    WrongSide,
    TooLarge,
    InvalidDimensions,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

struct Segment {
    Point a;
    Point b;
};

inline double dist_sq(Point p, Point q) noexcept {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

inline bool within_unit(Point p, Point q) noexcept { return dist_sq(p, q) <= 1.0; }

// Half-open side rule: x = 0 counts as the right side.
inline bool is_left(Point p) noexcept { return p.x < 0.0; }

// Slope of the line through p and s = (0,0). Undefined for p.x == 0.
inline double slope_to_s(Point p) noexcept { return p.y / p.x; }

// Slope of the line through p and t = (0,tau). Undefined for p.x == 0.
inline double slope_to_t(Point p, double tau) noexcept { return (p.y - tau) / p.x; }

/// True iff segment pq crosses the open segment {(0,y) : 0 < y < tau}.
///
/// Expects a normalized instance. A left/right pair crosses iff the slope
/// pair of the left point strictly dominates the right point's in the
/// dual plane; a right endpoint on the axis crosses iff it lies strictly
/// between the terminals. Symmetric in p and q.
bool crosses_terminal(Point p, Point q, double tau) noexcept;

// Rotation about `origin` followed by translation of origin to (0,0):
//   apply(p) = R * (p - origin),  R = [[c, -s], [s, c]].
struct RigidTransform {
    Point origin;
    double c = 1.0;
    double s = 0.0;

    Point apply(Point p) const noexcept;
    Point invert(Point p) const noexcept;
};

struct NormalizedInstance {
    PointSet points;
    double tau = 0.0;
    RigidTransform transform;
};

/// Maps s to (0,0) and t to (0,|st|) with the counterclockwise rotation
/// that turns direction st into +y. Throws DegenerateTerminals if s == t.
NormalizedInstance normalize(std::span<const Point> points, Point s, Point t);

/// True iff some disk (radius 1/2) centered at a point of `points`
/// contains `terminal`, i.e. dist_sq <= 1/4.
bool terminal_covered(std::span<const Point> points, Point terminal) noexcept;

/// Throws TerminalCovered if s = (0,0) or t = (0,tau) lies in a disk.
void require_uncovered(std::span<const Point> points, double tau);

/// Throws IndexOutOfRange unless i < n.
void check_index(index_type i, std::size_t n);

/// Throws DuplicatePoints if two points coincide.
void require_distinct(std::span<const Point> points);

}  // namespace udg
