#include "doctest.h"
#include "udg/datagen.hpp"

#include <array>

using namespace udg;

namespace {

bool same_rect(const Rect& r, double x0, double y0, double x1, double y1) {
    return r.min_x == x0 && r.min_y == y0 && r.max_x == x1 && r.max_y == y1;
}

}  // namespace

TEST_CASE("domains") {
    CHECK(make_domain(HoleStyle::none, 4, 1).holes.empty());

    const auto l1 = make_domain(HoleStyle::large1, 32, 8);
    REQUIRE(l1.holes.size() == 1);
    CHECK(same_rect(l1.holes[0], 8, 2, 24, 6));

    const auto s1 = make_domain(HoleStyle::small1, 8, 2);
    REQUIRE(s1.holes.size() == 1);
    CHECK(same_rect(s1.holes[0], 3, 0.5, 5, 1.5));

    const auto s4 = make_domain(HoleStyle::small4, 32, 8);
    REQUIRE(s4.holes.size() == 4);
    CHECK(same_rect(s4.holes[0], 6, 5.5, 10, 6.5));  // upper left first
    for (const Rect& h : s4.holes) {
        CHECK(h.width() == 4);
        CHECK(h.height() == 1);
    }
    const auto l4 = make_domain(HoleStyle::large4, 32, 8);
    for (const Rect& h : l4.holes) CHECK(h.width() == 8);

    const auto custom = make_domain(HoleStyle::small1, 8, 2, HoleSize{1, 1});
    CHECK(same_rect(custom.holes[0], 3.5, 0.5, 4.5, 1.5));

    CHECK_THROWS_AS(make_domain(HoleStyle::none, 0, 1), Error);
    CHECK_THROWS_AS(make_domain(HoleStyle::small1, 8, 2, HoleSize{8, 1}), Error);
    CHECK_THROWS_AS(make_domain(HoleStyle::small4, 8, 2, HoleSize{4.5, 0.5}), Error);

    CHECK(parse_hole_style("large4") == HoleStyle::large4);
    CHECK_FALSE(parse_hole_style("big"));
}

TEST_CASE("generation") {
    const auto spec = make_domain(HoleStyle::small1, 8, 2);
    const auto empty = generate(spec, 0, 1);
    CHECK(empty.points.empty());
    CHECK(empty.s == Point{4, 1});
    CHECK(empty.t == Point{4, 3});
    CHECK_FALSE(empty.terminal_covered);

    const auto a = generate(spec, 1000, 42);
    const auto b = generate(spec, 1000, 42);
    CHECK(a.points == b.points);
    CHECK(a.points != generate(spec, 1000, 43).points);
    for (const Point& p : a.points) CHECK(spec.contains(p));
    CHECK_FALSE(a.terminal_covered);

    auto c = a;
    add_strip_clutter(c, 500, 42);
    REQUIRE(c.points.size() == 1500);
    CHECK(std::equal(a.points.begin(), a.points.end(), c.points.begin()));
    for (std::size_t k = 1000; k < 1500; ++k) {
        CHECK(std::abs(c.points[k].x - c.s.x) <= 0.5);
        CHECK(spec.contains(c.points[k]));
    }

    const auto open = generate(make_domain(HoleStyle::none, 4, 1), 500, 3);
    CHECK(open.s == Point{2, 0.5});
    CHECK(open.terminal_covered);
}

TEST_CASE("uniform density") {
    const auto g = generate(make_domain(HoleStyle::none, 4, 1), 10000, 2024);
    std::array<int, 16> cells{};
    for (const Point& p : g.points) {
        const int cx = std::min(3, static_cast<int>(p.x));
        const int cy = std::min(3, static_cast<int>(p.y * 4));
        ++cells[cx * 4 + cy];
    }
    const double expected = 10000.0 / 16;
    double chi = 0;
    for (const int c : cells) chi += (c - expected) * (c - expected) / expected;
    // chi-square, 15 degrees of freedom, alpha = 0.001
    CHECK(chi < 37.697);
}

TEST_CASE("rng helpers") {
    CHECK(mix_seed(1, 1) != mix_seed(1, 2));
    CHECK(mix_seed(1, 1) == mix_seed(1, 1));
    Rng rng(9);
    for (int k = 0; k < 1000; ++k) {
        const double u = rng.uniform();
        CHECK((0.0 <= u && u < 1.0));
        CHECK(rng.below(7) < 7);
    }
}
