#include "doctest.h"
#include "udg/neighbor.hpp"

#include <numeric>

#include "helpers.hpp"

using namespace udg;

namespace {

NNIndex index_over(const PointSet& pts) {
    std::vector<index_type> ids(pts.size());
    std::iota(ids.begin(), ids.end(), index_type{0});
    return build_nn(pts, ids);
}

}  // namespace

TEST_CASE("small indexes") {
    const PointSet one{{0, 0}};
    CHECK(index_over(one).size() == 1);
    const PointSet two{{0, 0}, {5, 5}};
    CHECK(index_over(two).nearest({1, 1}).id == 0);
    const PointSet pair{{0, 0}, {2, 0}};
    const auto idx = index_over(pair);
    const auto nb = idx.nearest({0.9, 0});
    CHECK(nb.id == 0);
    CHECK(nb.dist_sq == doctest::Approx(0.81));
    const auto tie = idx.nearest({1, 0});
    CHECK(tie.dist_sq == 1.0);
    CHECK(tie.id == 0);  // ties go to the smaller id
    CHECK(idx.nearest({1, 0}, Point{2, 0}).id == 0);
    CHECK_THROWS_AS(NNIndex(std::vector<NNIndex::Entry>{}), Error);
}

TEST_CASE("any_within_unit") {
    CHECK(index_over(PointSet{{0.5, 0}}).any_within_unit({0, 0})->id == 0);
    CHECK_FALSE(index_over(PointSet{{2, 0}}).any_within_unit({0, 0}));
    CHECK(index_over(PointSet{{1, 0}}).any_within_unit({0, 0}));
}

TEST_CASE("nearest matches a linear scan, with and without hints") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pts = testing::random_points(100, 3, 3, seed);
        // duplicate coordinates under different ids exercise the tie rule
        pts.push_back(pts[3]);
        pts.push_back(pts[50]);
        const auto idx = index_over(pts);
        const auto queries = testing::random_points(100, 3, 3, seed + 1000);
        for (std::size_t k = 0; k < queries.size(); ++k) {
            const Point q = queries[k];
            index_type best = 0;
            for (index_type p = 1; p < pts.size(); ++p) {
                if (dist_sq(q, pts[p]) < dist_sq(q, pts[best])) best = p;
            }
            const auto got = idx.nearest(q);
            CHECK(got.id == best);
            CHECK(got.dist_sq == dist_sq(q, pts[best]));
            CHECK(idx.nearest(q, pts[k % pts.size()]).id == best);
            CHECK(idx.nearest(q, Point{100, -100}).id == best);

            bool any = false;
            for (const Point& p : pts) any = any || within_unit(q, p);
            const auto w = idx.any_within_unit(q);
            CHECK(w.has_value() == any);
            if (w) CHECK(within_unit(q, pts[w->id]));
        }
    }
}

TEST_CASE("ids are the caller's") {
    const PointSet pts{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    const std::vector<index_type> ids{3, 1};
    const auto idx = build_nn(pts, ids);
    CHECK(idx.size() == 2);
    CHECK(idx.nearest({2.9, 3}).id == 3);
    CHECK(idx.nearest({0, 0}).id == 1);
}
