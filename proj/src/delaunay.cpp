#include "udg/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

namespace udg {
namespace {

using half_index = std::int64_t;
constexpr half_index kNone = -1;

// Positive when a, b, c turn clockwise (y axis up).
double orient(Point a, Point b, Point c) {
    return (a.y - c.y) * (b.x - c.x) - (a.x - c.x) * (b.y - c.y);
}

bool in_circle(Point a, Point b, Point c, Point p) {
    const double dx = a.x - p.x, dy = a.y - p.y;
    const double ex = b.x - p.x, ey = b.y - p.y;
    const double fx = c.x - p.x, fy = c.y - p.y;
    const double ap = dx * dx + dy * dy;
    const double bp = ex * ex + ey * ey;
    const double cp = fx * fx + fy * fy;
    return dx * (ey * cp - bp * fy) - dy * (ex * cp - bp * fx) + ap * (ex * fy - ey * fx) < 0.0;
}

double circumradius_sq(Point a, Point b, Point c) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double ex = c.x - a.x, ey = c.y - a.y;
    const double bl = dx * dx + dy * dy;
    const double cl = ex * ex + ey * ey;
    const double d = 0.5 / (dx * ey - dy * ex);
    const double x = (ey * bl - dy * cl) * d;
    const double y = (dx * cl - ex * bl) * d;
    return x * x + y * y;
}

Point circumcenter(Point a, Point b, Point c) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double ex = c.x - a.x, ey = c.y - a.y;
    const double bl = dx * dx + dy * dy;
    const double cl = ex * ex + ey * ey;
    const double d = 0.5 / (dx * ey - dy * ex);
    return {a.x + (ey * bl - dy * cl) * d, a.y + (dx * cl - ex * bl) * d};
}

// Monotone in the angle around the origin, in [0, 1).
double pseudo_angle(double dx, double dy) {
    if (dx == 0.0 && dy == 0.0) {
        return 0.0;
    }
    const double p = dx / (std::abs(dx) + std::abs(dy));
    return (dy > 0.0 ? 3.0 - p : 1.0 + p) / 4.0;
}

half_index next_half(half_index e) { return e % 3 == 2 ? e - 2 : e + 1; }

class SweepHull {
public:
    explicit SweepHull(std::span<const Point> pts) : pts_(pts) {}

    // Returns false when all points are collinear.
    bool run();

    const std::vector<half_index>& triangles() const { return tri_; }
    const std::vector<half_index>& halfedges() const { return half_; }

private:
    std::size_t hash_key(Point p) const {
        const double a = pseudo_angle(p.x - center_.x, p.y - center_.y);
        return static_cast<std::size_t>(std::floor(a * static_cast<double>(hash_size_))) %
               hash_size_;
    }

    void link(half_index a, half_index b) {
        half_[a] = b;
        if (b != kNone) {
            half_[b] = a;
        }
    }

    half_index add_triangle(half_index i0, half_index i1, half_index i2, half_index a,
                            half_index b, half_index c) {
        const auto t = static_cast<half_index>(tri_.size());
        tri_.insert(tri_.end(), {i0, i1, i2});
        half_.resize(tri_.size(), kNone);
        link(t, a);
        link(t + 1, b);
        link(t + 2, c);
        return t;
    }

    half_index legalize(half_index a);

    Point at(half_index i) const { return pts_[static_cast<std::size_t>(i)]; }

    std::span<const Point> pts_;
    std::vector<half_index> tri_;
    std::vector<half_index> half_;
    std::vector<half_index> hull_prev_, hull_next_, hull_tri_, hull_hash_;
    std::vector<half_index> edge_stack_;
    half_index hull_start_ = 0;
    std::size_t hash_size_ = 1;
    Point center_;
};

half_index SweepHull::legalize(half_index a) {
    half_index ar = 0;
    while (true) {
        const half_index b = half_[a];
        const half_index a0 = a - a % 3;
        ar = a0 + (a + 2) % 3;

        if (b == kNone) {
            if (edge_stack_.empty()) break;
            a = edge_stack_.back();
            edge_stack_.pop_back();
            continue;
        }

        const half_index b0 = b - b % 3;
        const half_index al = a0 + (a + 1) % 3;
        const half_index bl = b0 + (b + 2) % 3;

        const half_index p0 = tri_[ar];
        const half_index pr = tri_[a];
        const half_index pl = tri_[al];
        const half_index p1 = tri_[bl];

        if (in_circle(at(p0), at(pr), at(pl), at(p1))) {
            tri_[a] = p1;
            tri_[b] = p0;

            const half_index hbl = half_[bl];
            // The flipped edge was on the hull; repoint the hull triangle.
            if (hbl == kNone) {
                half_index e = hull_start_;
                do {
                    if (hull_tri_[e] == bl) {
                        hull_tri_[e] = a;
                        break;
                    }
                    e = hull_prev_[e];
                } while (e != hull_start_);
            }
            link(a, hbl);
            link(b, half_[ar]);
            link(ar, bl);
            edge_stack_.push_back(b0 + (b + 1) % 3);
        } else {
            if (edge_stack_.empty()) break;
            a = edge_stack_.back();
            edge_stack_.pop_back();
        }
    }
    return ar;
}

bool SweepHull::run() {
    const std::size_t n = pts_.size();

    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x;
    for (const Point& p : pts_) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const Point mid{(min_x + max_x) / 2.0, (min_y + max_y) / 2.0};

    half_index i0 = 0, i1 = kNone, i2 = kNone;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dist_sq(mid, pts_[i]);
        if (d < best) {
            i0 = static_cast<half_index>(i);
            best = d;
        }
    }
    best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<half_index>(i) == i0) continue;
        const double d = dist_sq(at(i0), pts_[i]);
        if (d < best && d > 0.0) {
            i1 = static_cast<half_index>(i);
            best = d;
        }
    }
    double min_radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<half_index>(i);
        if (ii == i0 || ii == i1) continue;
        const double r = circumradius_sq(at(i0), at(i1), pts_[i]);
        if (r < min_radius) {
            i2 = ii;
            min_radius = r;
        }
    }
    if (i2 == kNone) {
        return false;
    }
    if (orient(at(i0), at(i1), at(i2)) < 0.0) {
        std::swap(i1, i2);
    }
    center_ = circumcenter(at(i0), at(i1), at(i2));

    std::vector<double> dists(n);
    for (std::size_t i = 0; i < n; ++i) {
        dists[i] = dist_sq(pts_[i], center_);
    }
    std::vector<half_index> ids(n);
    std::iota(ids.begin(), ids.end(), half_index{0});
    std::sort(ids.begin(), ids.end(), [&](half_index a, half_index b) {
        return dists[a] < dists[b] || (dists[a] == dists[b] && a < b);
    });

    hash_size_ = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    hull_prev_.assign(n, kNone);
    hull_next_.assign(n, kNone);
    hull_tri_.assign(n, kNone);
    hull_hash_.assign(hash_size_, kNone);

    hull_start_ = i0;
    hull_next_[i0] = hull_prev_[i2] = i1;
    hull_next_[i1] = hull_prev_[i0] = i2;
    hull_next_[i2] = hull_prev_[i1] = i0;
    hull_tri_[i0] = 0;
    hull_tri_[i1] = 1;
    hull_tri_[i2] = 2;
    hull_hash_[hash_key(at(i0))] = i0;
    hull_hash_[hash_key(at(i1))] = i1;
    hull_hash_[hash_key(at(i2))] = i2;

    tri_.reserve(6 * n);
    half_.reserve(6 * n);
    add_triangle(i0, i1, i2, kNone, kNone, kNone);

    for (const half_index i : ids) {
        if (i == i0 || i == i1 || i == i2) continue;
        const Point p = at(i);

        half_index start = 0;
        const std::size_t key = hash_key(p);
        for (std::size_t j = 0; j < hash_size_; ++j) {
            start = hull_hash_[(key + j) % hash_size_];
            if (start != kNone && start != hull_next_[start]) break;
        }
        start = hull_prev_[start];

        half_index e = start;
        for (half_index q = hull_next_[e]; orient(p, at(e), at(q)) >= 0.0; q = hull_next_[e]) {
            e = q;
            if (e == start) {
                e = kNone;
                break;
            }
        }
        if (e == kNone) {
            throw std::runtime_error("delaunay: point could not be inserted (degenerate input)");
        }

        half_index t = add_triangle(e, i, hull_next_[e], kNone, kNone, hull_tri_[e]);
        hull_tri_[i] = legalize(t + 2);
        hull_tri_[e] = t;

        half_index nx = hull_next_[e];
        for (half_index q = hull_next_[nx]; orient(p, at(nx), at(q)) < 0.0; q = hull_next_[nx]) {
            t = add_triangle(nx, i, q, hull_tri_[i], kNone, hull_tri_[nx]);
            hull_tri_[i] = legalize(t + 2);
            hull_next_[nx] = nx;
            nx = q;
        }

        if (e == start) {
            for (half_index q = hull_prev_[e]; orient(p, at(q), at(e)) < 0.0; q = hull_prev_[e]) {
                t = add_triangle(q, i, e, kNone, hull_tri_[e], hull_tri_[q]);
                legalize(t + 2);
                hull_tri_[q] = t;
                hull_next_[e] = e;
                e = q;
            }
        }

        hull_start_ = hull_prev_[i] = e;
        hull_next_[e] = hull_prev_[nx] = i;
        hull_next_[i] = nx;

        hull_hash_[hash_key(p)] = i;
        hull_hash_[hash_key(at(e))] = e;
    }
    return true;
}

}  // namespace

Triangulation build_delaunay(std::span<const Point> points) {
    require_distinct(points);
    const std::size_t n = points.size();

    std::vector<std::pair<index_type, index_type>> edges;
    Triangulation dt;

    if (n == 2) {
        edges.emplace_back(0, 1);
    } else if (n >= 3) {
        SweepHull hull(points);
        if (hull.run()) {
            const auto& tri = hull.triangles();
            const auto& half = hull.halfedges();
            dt.triangles_.reserve(tri.size());
            for (const half_index v : tri) {
                dt.triangles_.push_back(static_cast<index_type>(v));
            }
            for (std::size_t e = 0; e < tri.size(); ++e) {
                const auto ee = static_cast<half_index>(e);
                if (half[e] == kNone || half[e] < ee) {
                    edges.emplace_back(static_cast<index_type>(tri[e]),
                                       static_cast<index_type>(tri[next_half(ee)]));
                }
            }
        } else {
            // All collinear: lexicographic order is the order along the line.
            std::vector<index_type> order(n);
            std::iota(order.begin(), order.end(), index_type{0});
            std::sort(order.begin(), order.end(), [&](index_type a, index_type b) {
                const Point& pa = points[a];
                const Point& pb = points[b];
                return pa.x < pb.x || (pa.x == pb.x && pa.y < pb.y);
            });
            for (std::size_t k = 0; k + 1 < n; ++k) {
                edges.emplace_back(order[k], order[k + 1]);
            }
        }
    }

    dt.offsets_.assign(n + 1, 0);
    for (const auto& [a, b] : edges) {
        ++dt.offsets_[a + 1];
        ++dt.offsets_[b + 1];
    }
    std::partial_sum(dt.offsets_.begin(), dt.offsets_.end(), dt.offsets_.begin());
    dt.adjacency_.resize(2 * edges.size());
    std::vector<std::size_t> fill(dt.offsets_.begin(), dt.offsets_.end() - 1);
    for (const auto& [a, b] : edges) {
        dt.adjacency_[fill[a]++] = b;
        dt.adjacency_[fill[b]++] = a;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(dt.adjacency_.begin() + static_cast<std::ptrdiff_t>(dt.offsets_[v]),
                  dt.adjacency_.begin() + static_cast<std::ptrdiff_t>(dt.offsets_[v + 1]));
    }
    return dt;
}

std::span<const index_type> neighbors(const Triangulation& dt, index_type p) {
    check_index(p, dt.size());
    return dt.adjacent(p);
}

}  // namespace udg
