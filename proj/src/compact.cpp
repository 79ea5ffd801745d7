#include "udg/compact.hpp"

#include <map>
#include <memory>
#include <tuple>

#include "udg/delaunay.hpp"
#include "udg/dual_index.hpp"
#include "udg/neighbor.hpp"

namespace udg {
namespace {

constexpr Side L = Side::Left;
constexpr Side R = Side::Right;

constexpr std::array<CandidateFamily, 18> kFamilies{{
    // length 2i, within each side
    {{0, L, 0}, {-1, L, 1}, Relation::SameSide, 0},
    {{0, L, 1}, {-1, L, 0}, Relation::SameSide, 0},
    {{0, R, 0}, {-1, R, 1}, Relation::SameSide, 0},
    {{0, R, 1}, {-1, R, 0}, Relation::SameSide, 0},
    // length 2i, across the axis, crossing st
    {{0, L, 0}, {-1, R, 0}, Relation::Crossing, 0},
    {{0, L, 1}, {-1, R, 1}, Relation::Crossing, 0},
    {{-1, L, 0}, {0, R, 0}, Relation::Crossing, 0},
    {{-1, L, 1}, {0, R, 1}, Relation::Crossing, 0},
    // length 2i, across the axis, not crossing st
    {{0, L, 0}, {-1, R, 1}, Relation::NonCrossing, 0},
    {{0, L, 1}, {-1, R, 0}, Relation::NonCrossing, 0},
    {{-1, L, 0}, {0, R, 1}, Relation::NonCrossing, 0},
    {{-1, L, 1}, {0, R, 0}, Relation::NonCrossing, 0},
    // length 2i+1
    {{0, L, 0}, {0, L, 1}, Relation::SameSide, 1},
    {{0, R, 0}, {0, R, 1}, Relation::SameSide, 1},
    {{0, L, 0}, {0, R, 0}, Relation::Crossing, 1},
    {{0, L, 1}, {0, R, 1}, Relation::Crossing, 1},
    {{0, L, 0}, {0, R, 1}, Relation::NonCrossing, 1},
    {{0, L, 1}, {0, R, 0}, Relation::NonCrossing, 1},
}};

std::optional<CandidateEdge> probe_same_side(std::span<const Point> points,
                                             std::span<const index_type> A, const NNIndex& b_index) {
    for (const index_type a : A) {
        if (const auto hit = b_index.any_within_unit(points[a])) {
            return CandidateEdge{a, hit->id};
        }
    }
    return std::nullopt;
}

// Right group split into the part the dual index can hold and the part on
// the axis.
struct RightGroupIndex {
    DualIndex dual;
    std::vector<index_type> on_axis;
};

RightGroupIndex index_right_group(std::span<const Point> points, std::span<const index_type> B,
                                  double tau) {
    RightGroupIndex out;
    std::vector<NNIndex::Entry> positive;
    positive.reserve(B.size());
    for (const index_type b : B) {
        if (points[b].x > 0.0) {
            positive.push_back({points[b], b});
        } else {
            out.on_axis.push_back(b);
        }
    }
    out.dual = DualIndex(std::move(positive), tau);
    return out;
}

std::optional<CandidateEdge> probe_cross_side(std::span<const Point> points,
                                              std::span<const index_type> A,
                                              const RightGroupIndex& index, bool want_crossing,
                                              double tau) {
    for (const index_type a : A) {
        const Point pa = points[a];
        if (!index.dual.empty()) {
            const auto hit = want_crossing ? index.dual.query_crossing(pa)
                                           : index.dual.query_noncrossing(pa);
            if (hit) {
                return CandidateEdge{a, hit->id};
            }
        }
        for (const index_type b : index.on_axis) {
            if (within_unit(pa, points[b]) && crosses_terminal(pa, points[b], tau) == want_crossing) {
                return CandidateEdge{a, b};
            }
        }
    }
    return std::nullopt;
}

// Per-root lazily built search structures, keyed by group.
class GroupIndexCache {
public:
    GroupIndexCache(std::span<const Point> points, const LevelGroups& groups, double tau)
        : points_(points), groups_(groups), tau_(tau) {}

    const NNIndex& nn(std::size_t level, Side side, int parity) {
        auto& slot = nn_[{level, static_cast<int>(side), parity}];
        if (!slot) {
            slot = std::make_unique<NNIndex>(
                NNIndex::over(points_, groups_.group(level, side, parity)));
        }
        return *slot;
    }

    const RightGroupIndex& right(std::size_t level, int parity) {
        auto& slot = right_[{level, parity}];
        if (!slot) {
            slot = std::make_unique<RightGroupIndex>(
                index_right_group(points_, groups_.group(level, Side::Right, parity), tau_));
        }
        return *slot;
    }

    // Structures for levels below `level` are never referenced again.
    void drop_below(std::size_t level) {
        nn_.erase(nn_.begin(), nn_.lower_bound({level, 0, 0}));
        right_.erase(right_.begin(), right_.lower_bound({level, 0}));
    }

private:
    std::span<const Point> points_;
    const LevelGroups& groups_;
    double tau_;
    std::map<std::tuple<std::size_t, int, int>, std::unique_ptr<NNIndex>> nn_;
    std::map<std::pair<std::size_t, int>, std::unique_ptr<RightGroupIndex>> right_;
};

}  // namespace

std::span<const index_type> LevelGroups::group(std::size_t level, Side side,
                                                int parity_bit) const noexcept {
    if (level >= groups.size()) return {};
    return groups[level][static_cast<std::size_t>(side)][static_cast<std::size_t>(parity_bit)];
}

LevelGroups build_level_groups(const ShortestPathResult& spr, std::span<const Point> points,
                               double tau) {
    LevelGroups out;
    out.parity = compute_parities(spr, points, tau);
    out.levels = levels_of(spr);
    out.groups.resize(out.levels.size());
    for (std::size_t i = 0; i < out.levels.size(); ++i) {
        for (const index_type p : out.levels[i]) {
            out.groups[i][static_cast<std::size_t>(side_of(points[p]))][out.parity[p]].push_back(p);
        }
    }
    return out;
}

std::optional<CandidateEdge> search_same_side(std::span<const Point> points,
                                              std::span<const index_type> A,
                                              std::span<const index_type> B) {
    if (A.empty() || B.empty()) return std::nullopt;
    return probe_same_side(points, A, NNIndex::over(points, B));
}

std::optional<CandidateEdge> search_cross_side(std::span<const Point> points,
                                               std::span<const index_type> A,
                                               std::span<const index_type> B, bool want_crossing,
                                               double tau) {
    if (A.empty() || B.empty()) return std::nullopt;
    return probe_cross_side(points, A, index_right_group(points, B, tau), want_crossing, tau);
}

std::span<const CandidateFamily> candidate_families() noexcept { return kFamilies; }

std::vector<std::size_t> families_containing(const ShortestPathResult& spr,
                                             const ParityTable& parity,
                                             std::span<const Point> points, index_type p,
                                             index_type q, double tau) {
    std::vector<std::size_t> out;
    if (!spr.reached(p) || !spr.reached(q)) return out;
    const hop_count i = std::max(spr.dist[p], spr.dist[q]);
    const bool crosses = crosses_terminal(points[p], points[q], tau);

    auto member = [&](index_type v, const GroupRef& g) {
        const auto level = static_cast<std::int64_t>(i) + g.level_offset;
        return static_cast<std::int64_t>(spr.dist[v]) == level && side_of(points[v]) == g.side &&
               parity[v] == g.parity;
    };
    for (std::size_t k = 0; k < kFamilies.size(); ++k) {
        const CandidateFamily& f = kFamilies[k];
        if (f.relation == Relation::Crossing && !crosses) continue;
        if (f.relation == Relation::NonCrossing && crosses) continue;
        if ((member(p, f.first) && member(q, f.second)) ||
            (member(q, f.first) && member(p, f.second))) {
            out.push_back(k);
        }
    }
    return out;
}

SeparationAnswer separation_compact(const NormalizedInstance& inst, CompactOptions options) {
    const auto& points = inst.points;
    const double tau = inst.tau;
    require_uncovered(points, tau);
    const Triangulation dt = build_delaunay(points);

    const auto n = static_cast<index_type>(points.size());
    std::uint32_t best = n + 1;
    SeparationAnswer answer;

    for (index_type r = 0; r < n; ++r) {
        const ShortestPathResult spr = sssp_delaunay(points, dt, r);
        const LevelGroups groups = build_level_groups(spr, points, tau);
        GroupIndexCache cache(points, groups, tau);

        bool done = false;
        for (std::size_t i = 1; i < groups.level_count() && !done; ++i) {
            if (options.early_exit && !(2 * i < best)) break;
            cache.drop_below(i - 1);

            for (const CandidateFamily& f : kFamilies) {
                const auto len = static_cast<std::uint32_t>(2 * i) + static_cast<std::uint32_t>(f.extra_length);
                if (options.early_exit && len >= best) continue;

                const std::size_t la = f.first.level_offset == 0 ? i : i - 1;
                const std::size_t lb = f.second.level_offset == 0 ? i : i - 1;
                const auto A = groups.group(la, f.first.side, f.first.parity);
                const auto B = groups.group(lb, f.second.side, f.second.parity);
                if (A.empty() || B.empty()) continue;

                std::optional<CandidateEdge> edge;
                if (f.relation == Relation::SameSide) {
                    edge = probe_same_side(points, A, cache.nn(lb, f.second.side, f.second.parity));
                } else {
                    edge = probe_cross_side(points, A, cache.right(lb, f.second.parity),
                                            f.relation == Relation::Crossing, tau);
                }
                if (!edge) continue;

                if (len < best) {
                    best = len;
                    answer.witness = SeparationWitness{r, edge->a, edge->b};
                }
                // Families come in non-decreasing length, so the first hit is
                // this root's optimum.
                if (options.early_exit) {
                    done = true;
                    break;
                }
            }
        }
    }
    if (best <= n) {
        answer.size = best;
    }
    return answer;
}

}  // namespace udg
