#include "doctest.h"
#include "udg/compact.hpp"
#include "udg/oracle.hpp"

#include <algorithm>

#include "helpers.hpp"

using namespace udg;

namespace {

std::vector<index_type> ids(std::size_t n) {
    std::vector<index_type> v(n);
    for (index_type k = 0; k < n; ++k) v[k] = k;
    return v;
}

std::optional<std::uint32_t> size_of(const PointSet& raw, double tau, CompactOptions opt = {}) {
    return separation_compact(normalize(raw, {0, 0}, {0, tau}), opt).size;
}

}  // namespace

TEST_CASE("level groups") {
    const PointSet pts{{-0.5, 1}, {0.5, 1}};
    const auto spr = sssp_explicit_bfs(pts, 0);
    const auto g = build_level_groups(spr, pts, 2);
    REQUIRE(g.level_count() == 2);
    CHECK(std::ranges::equal(g.group(0, Side::Left, 0), std::vector<index_type>{0}));
    CHECK(std::ranges::equal(g.group(1, Side::Right, 1), std::vector<index_type>{1}));
    CHECK(g.group(1, Side::Right, 0).empty());
    CHECK(g.group(5, Side::Left, 0).empty());

    const PointSet left{{-1, 0}, {-1.5, 0.5}, {-2, 1}};
    const auto gl = build_level_groups(sssp_explicit_bfs(left, 0), left, 2);
    for (std::size_t i = 0; i < gl.level_count(); ++i) {
        for (int j = 0; j < 2; ++j) CHECK(gl.group(i, Side::Right, j).empty());
    }
}

TEST_CASE("level groups partition the reached points") {
    const auto raw = testing::ring_instance(150, 8, 2, 3);
    const auto inst = normalize(raw, {0, 0}, {0, 2});
    const auto spr = sssp_explicit_bfs(inst.points, 5);
    const auto g = build_level_groups(spr, inst.points, inst.tau);
    const auto n = compute_parities(spr, inst.points, inst.tau);
    std::size_t total = 0;
    for (std::size_t i = 0; i < g.level_count(); ++i) {
        for (const Side side : {Side::Left, Side::Right}) {
            for (int j = 0; j < 2; ++j) {
                for (const index_type p : g.group(i, side, j)) {
                    ++total;
                    CHECK(spr.dist[p] == i);
                    CHECK(side_of(inst.points[p]) == side);
                    CHECK(n[p] == j);
                }
            }
        }
    }
    std::size_t reached = 0;
    for (index_type p = 0; p < inst.points.size(); ++p) reached += spr.reached(p);
    CHECK(total == reached);
}

TEST_CASE("search examples") {
    const PointSet pts{{-0.5, 0}, {-0.5, 0.9}, {-0.5, 2}, {-0.4, 1}, {0.4, 1}, {-0.4, 5}, {0.4, 5}};
    const std::vector<index_type> a{0}, near{1}, far{2};
    const auto hit = search_same_side(pts, a, near);
    REQUIRE(hit);
    CHECK(hit->a == 0);
    CHECK(hit->b == 1);
    CHECK_FALSE(search_same_side(pts, a, far));
    const std::vector<index_type> l1{3}, r1{4}, l5{5}, r5{6};
    CHECK(search_cross_side(pts, l1, r1, true, 2));
    CHECK_FALSE(search_cross_side(pts, l1, r1, false, 2));
    CHECK_FALSE(search_cross_side(pts, l5, r5, true, 2));
    CHECK(search_cross_side(pts, l5, r5, false, 2));
    CHECK_FALSE(search_same_side(pts, {}, near));
}

TEST_CASE("searches match quadratic scans") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        udg::Rng rng(seed);
        const double tau = rng.uniform(0.5, 3);
        PointSet pts;
        std::vector<index_type> left, right, left2;
        for (index_type k = 0; k < 120; ++k) {
            Point p{rng.uniform(-1.5, 1.5), rng.uniform(-1, tau + 1)};
            if (k % 10 == 0) p.x = 0;  // on the axis: right side
            pts.push_back(p);
            if (is_left(p)) {
                (k % 2 ? left : left2).push_back(k);
            } else {
                right.push_back(k);
            }
        }
        const auto want_same = [&] {
            for (const index_type x : left)
                for (const index_type y : left2)
                    if (within_unit(pts[x], pts[y])) return true;
            return false;
        }();
        const auto same = search_same_side(pts, left, left2);
        CHECK(same.has_value() == want_same);
        if (same) CHECK(within_unit(pts[same->a], pts[same->b]));
        for (const bool want : {true, false}) {
            bool expected = false;
            for (const index_type x : left)
                for (const index_type y : right)
                    expected = expected || (within_unit(pts[x], pts[y]) && crosses_terminal(pts[x], pts[y], tau) == want);
            const auto got = search_cross_side(pts, left, right, want, tau);
            CHECK(got.has_value() == expected);
            if (got) {
                CHECK(std::find(left.begin(), left.end(), got->a) != left.end());
                CHECK(std::find(right.begin(), right.end(), got->b) != right.end());
                CHECK(within_unit(pts[got->a], pts[got->b]));
                CHECK(crosses_terminal(pts[got->a], pts[got->b], tau) == want);
            }
        }
    }
}

TEST_CASE("candidate families") {
    const auto fams = candidate_families();
    CHECK(fams.size() == 18);
    // all even-length families come first
    const auto first_odd = std::find_if(fams.begin(), fams.end(), [](const auto& f) { return f.extra_length == 1; });
    CHECK(std::all_of(first_odd, fams.end(), [](const auto& f) { return f.extra_length == 1; }));
    CHECK(first_odd - fams.begin() == 12);
}

TEST_CASE("every odd edge lies in exactly one family of the right length") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto raw = testing::ring_instance(80, 8, 2, seed);
        const auto inst = normalize(raw, {0, 0}, {0, 2});
        const auto& pts = inst.points;
        for (index_type root = 0; root < pts.size(); root += 9) {
            const auto spr = sssp_explicit_bfs(pts, root);
            const auto par = compute_parities(spr, pts, inst.tau);
            for (index_type p = 0; p < pts.size(); ++p) {
                for (index_type q = p + 1; q < pts.size(); ++q) {
                    if (!spr.reached(p) || !within_unit(pts[p], pts[q])) continue;
                    const auto fams = families_containing(spr, par, pts, p, q, inst.tau);
                    if (walk_parity(par, pts, p, q, inst.tau) == 0) {
                        CHECK(fams.empty());
                        continue;
                    }
                    REQUIRE(fams.size() == 1);
                    const auto& f = candidate_families()[fams[0]];
                    const auto i = std::max(spr.dist[p], spr.dist[q]);
                    CHECK(2 * i + f.extra_length == spr.dist[p] + spr.dist[q] + 1);
                }
            }
        }
    }
}

TEST_CASE("compact examples") {
    const PointSet tri{{0.4763, 0.275}, {-0.4763, 0.275}, {0, -0.55}};
    CHECK(size_of(tri, 5) == 3u);
    CHECK(size_of(tri, 5, {false}) == 3u);
    CHECK_FALSE(size_of(PointSet{{-1, 1}, {-1.5, 1.2}, {-1.2, 0.3}}, 2));
    CHECK_FALSE(size_of(PointSet{}, 2));
    CHECK_THROWS_AS(size_of(PointSet{{0.2, 0}}, 2), Error);
}

TEST_CASE("compact equals generic") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const double tau = 1.5 + 0.05 * static_cast<double>(seed);
        const auto raw = testing::ring_instance(20 + 9 * seed, 5 + seed % 6, tau, seed);
        const auto inst = normalize(raw, {0, 0}, {0, tau});
        const auto g = separation_generic(inst);
        const auto c = separation_compact(inst);
        CHECK(c.size == g.size);
        CHECK(separation_compact(inst, {false}).size == g.size);
        if (c.witness) {
            const auto& w = *c.witness;
            const auto spr = sssp_explicit_bfs(inst.points, w.root);
            CHECK(within_unit(inst.points[w.p], inst.points[w.q]));
            CHECK(spr.dist[w.p] + spr.dist[w.q] + 1 == *c.size);
        }
    }
}
