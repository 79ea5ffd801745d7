#include "doctest.h"
#include "udg/oracle.hpp"
#include "udg/separation.hpp"

#include <cmath>

#include "helpers.hpp"

using namespace udg;

namespace {

const PointSet kTriangle{{0.4763, 0.275}, {-0.4763, 0.275}, {0, -0.55}};

// Crossing parity of the closed polyline through `walk`, counted segment by segment.
int walk_crossings(const PointSet& pts, const std::vector<index_type>& walk, double tau) {
    int c = 0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
        c ^= crosses_terminal(pts[walk[k]], pts[walk[(k + 1) % walk.size()]], tau) ? 1 : 0;
    }
    return c;
}

std::vector<index_type> path_to_root(const ShortestPathResult& spr, index_type p) {
    std::vector<index_type> path{p};
    while (spr.parent[path.back()] != kNoIndex) path.push_back(spr.parent[path.back()]);
    return path;
}

}  // namespace

TEST_CASE("parities along a chain") {
    SUBCASE("one crossing edge") {
        const PointSet pts{{-0.5, 1}, {0.5, 1}};
        const auto spr = sssp_explicit_bfs(pts, 0);
        const auto n = compute_parities(spr, pts, 2);
        CHECK(n[0] == 0);
        CHECK(n[1] == 1);
    }
    SUBCASE("same side") {
        const PointSet pts{{-1, 1}, {-1, 2}};
        const auto n = compute_parities(sssp_explicit_bfs(pts, 0), pts, 2);
        CHECK(n[1] == 0);
    }
    SUBCASE("two crossings cancel") {
        const PointSet pts{{-0.4, 1}, {0.4, 1}, {-0.4, 1.5}};
        ShortestPathResult spr;
        spr.root = 0;
        spr.dist = {0, 1, 2};
        spr.parent = {kNoIndex, 0, 1};
        const auto n = compute_parities(spr, pts, 2);
        CHECK(n[1] == 1);
        CHECK(n[2] == 0);
    }
    SUBCASE("unreached") {
        const PointSet pts{{-1, 1}, {5, 5}};
        CHECK(compute_parities(sssp_explicit_bfs(pts, 0), pts, 2)[1] == ParityTable::kNoParity);
    }
}

TEST_CASE("triangle around s") {
    const auto inst = normalize(kTriangle, {0, 0}, {0, 5});
    const auto g = separation_generic(inst);
    REQUIRE(g.size);
    CHECK(*g.size == 3);
    REQUIRE(g.witness);
    const auto cycle = witness_cycle(inst.points, build_delaunay(inst.points), *g.witness);
    CHECK(cycle.size() == 3);
    CHECK(walk_crossings(inst.points, cycle, inst.tau) == 1);
    CHECK(is_separating(kTriangle, 5));
    CHECK(*oracle_separation(kTriangle, 5).size == 3);
}

TEST_CASE("infeasible instances") {
    CHECK_FALSE(separation_generic(normalize(PointSet{{-1, 1}, {-1.5, 1.2}}, {0, 0}, {0, 2})).feasible());
    CHECK_FALSE(separation_generic(normalize(PointSet{{1, 1}}, {0, 0}, {0, 2})).feasible());
    CHECK_FALSE(separation_generic(normalize(PointSet{}, {0, 0}, {0, 2})).feasible());
    CHECK_FALSE(is_separating(PointSet{{-1, 1}, {-0.5, 0.5}, {-1.2, 0.2}}, 2));
    CHECK_FALSE(is_separating(PointSet{}, 2));
}

TEST_CASE("a ring around both terminals does not separate them") {
    PointSet ring;
    for (int k = 0; k < 8; ++k) {
        const double a = 2 * M_PI * (k + 0.1) / 8;
        ring.push_back({0.8 * std::cos(a), 0.25 + std::sin(a)});
    }
    CHECK_FALSE(is_separating(ring, 0.5));
    CHECK_FALSE(separation_generic(normalize(ring, {0, 0}, {0, 0.5})).feasible());
    // move t outside and the same ring separates
    CHECK(is_separating(ring, 3));
}

TEST_CASE("covered terminal") {
    const PointSet pts{{0.1, 0.1}, {1, 1}};
    try {
        separation_generic(normalize(pts, {0, 0}, {0, 3}));
        FAIL("expected TerminalCovered");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TerminalCovered);
    }
}

TEST_CASE("edge parity formula equals the walked crossing parity") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto raw = testing::ring_instance(40 + 5 * seed, 8, 2.5, seed);
        const auto inst = normalize(raw, {0, 0}, {0, 2.5});
        const auto& pts = inst.points;
        for (index_type root = 0; root < pts.size(); root += 7) {
            const auto spr = sssp_explicit_bfs(pts, root);
            const auto n = compute_parities(spr, pts, inst.tau);
            for (index_type p = 0; p < pts.size(); ++p) {
                if (!spr.reached(p)) continue;
                for (index_type q = p + 1; q < pts.size(); ++q) {
                    if (!within_unit(pts[p], pts[q])) continue;
                    auto walk = path_to_root(spr, p);
                    std::reverse(walk.begin(), walk.end());
                    for (const index_type v : path_to_root(spr, q)) walk.push_back(v);
                    walk.pop_back();  // closing edge back to the root
                    CHECK(walk_parity(n, pts, p, q, inst.tau) == walk_crossings(pts, walk, inst.tau));
                    if (spr.parent[q] == p || spr.parent[p] == q) CHECK(walk_parity(n, pts, p, q, inst.tau) == 0);
                }
            }
        }
    }
}

TEST_CASE("generic matches the subset oracle on small instances") {
    int feasible = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 4 + seed % 10;
        const double tau = 1.5 + 0.1 * static_cast<double>(seed % 7);
        const auto raw = testing::ring_instance(n, 6 + seed % 4, tau, seed);
        const auto inst = normalize(raw, {0, 0}, {0, tau});
        const auto want = oracle_separation(inst.points, inst.tau);
        const auto got = separation_generic(inst);
        CHECK(got.size == want.size);
        feasible += want.feasible();
        if (got.witness) {
            const auto cycle = witness_cycle(inst.points, build_delaunay(inst.points), *got.witness);
            CHECK(cycle.size() == *got.size);
            CHECK(walk_crossings(inst.points, cycle, inst.tau) == 1);
        }
    }
    CHECK(feasible > 10);
    CHECK(feasible < 60);
}
