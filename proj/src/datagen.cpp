#include "udg/datagen.hpp"

#include <array>
#include <bit>
#include <unordered_set>

namespace udg {
namespace {

constexpr std::uint64_t kPointStream = 1;
constexpr std::uint64_t kClutterStream = 2;

struct PointBitsHash {
    std::size_t operator()(const Point& p) const noexcept {
        return static_cast<std::size_t>(
            mix_seed(std::bit_cast<std::uint64_t>(p.x), std::bit_cast<std::uint64_t>(p.y)));
    }
};

using PointHashSet = std::unordered_set<Point, PointBitsHash>;

bool separated(const Rect& a, const Rect& b) {
    return a.max_x < b.min_x || b.max_x < a.min_x || a.max_y < b.min_y || b.max_y < a.min_y;
}

Rect centered(Point c, double w, double h) {
    return {c.x - w / 2.0, c.y - h / 2.0, c.x + w / 2.0, c.y + h / 2.0};
}

void place_terminals(GeneratedInstance& inst) {
    const DomainSpec& spec = inst.spec;
    inst.s = spec.holes.empty() ? Point{spec.width / 2.0, spec.height / 2.0}
                                : spec.holes.front().center();
    inst.t = {inst.s.x, spec.height + 1.0};
}

void refresh_coverage(GeneratedInstance& inst) {
    inst.terminal_covered = udg::terminal_covered(inst.points, inst.s) ||
                            udg::terminal_covered(inst.points, inst.t);
}

}  // namespace

const char* to_string(HoleStyle style) noexcept {
    switch (style) {
        case HoleStyle::none: return "none";
        case HoleStyle::small1: return "small1";
        case HoleStyle::large1: return "large1";
        case HoleStyle::small4: return "small4";
        case HoleStyle::large4: return "large4";
    }
    return "none";
}

std::optional<HoleStyle> parse_hole_style(const std::string& name) {
    for (const HoleStyle s : {HoleStyle::none, HoleStyle::small1, HoleStyle::large1,
                              HoleStyle::small4, HoleStyle::large4}) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

bool DomainSpec::contains(Point p) const noexcept {
    if (!(0.0 <= p.x && p.x <= width && 0.0 <= p.y && p.y <= height)) return false;
    for (const Rect& h : holes) {
        if (h.contains(p)) return false;
    }
    return true;
}

DomainSpec make_domain(HoleStyle style, double width, double height, std::optional<HoleSize> hole) {
    if (!(width > 0.0) || !(height > 0.0)) {
        throw Error(ErrorCode::InvalidDimensions, "domain width and height must be positive");
    }
    DomainSpec spec;
    spec.width = width;
    spec.height = height;
    spec.style = style;
    const Point mid{width / 2.0, height / 2.0};

    auto size_or = [&](double fw, double fh) {
        return hole.value_or(HoleSize{width * fw, height * fh});
    };
    switch (style) {
        case HoleStyle::none:
            break;
        case HoleStyle::small1:
        case HoleStyle::large1: {
            const HoleSize hs = style == HoleStyle::small1 ? size_or(0.25, 0.5) : size_or(0.5, 0.5);
            spec.holes.push_back(centered(mid, hs.width, hs.height));
            break;
        }
        case HoleStyle::small4:
        case HoleStyle::large4: {
            const HoleSize hs = style == HoleStyle::small4 ? size_or(0.125, 0.125) : size_or(0.25, 0.25);
            const double dx = width / 4.0, dy = height / 4.0;
            for (const auto& [sx, sy] : std::array<std::pair<double, double>, 4>{
                     {{-1.0, 1.0}, {1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}}) {
                spec.holes.push_back(centered({mid.x + sx * dx, mid.y + sy * dy}, hs.width, hs.height));
            }
            break;
        }
    }

    for (std::size_t a = 0; a < spec.holes.size(); ++a) {
        const Rect& h = spec.holes[a];
        if (!(h.width() > 0.0 && h.height() > 0.0 && 0.0 < h.min_x && h.max_x < width &&
              0.0 < h.min_y && h.max_y < height)) {
            throw Error(ErrorCode::InvalidDimensions, "hole must lie strictly inside the rectangle");
        }
        for (std::size_t b = a + 1; b < spec.holes.size(); ++b) {
            if (!separated(h, spec.holes[b])) {
                throw Error(ErrorCode::InvalidDimensions, "holes must be pairwise disjoint");
            }
        }
    }
    return spec;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

GeneratedInstance generate(const DomainSpec& spec, std::size_t n, std::uint64_t seed) {
    GeneratedInstance inst;
    inst.seed = seed;
    inst.spec = spec;
    place_terminals(inst);

    Rng rng(mix_seed(seed, kPointStream));
    PointHashSet seen;
    inst.points.reserve(n);
    while (inst.points.size() < n) {
        const Point p{rng.uniform(0.0, spec.width), rng.uniform(0.0, spec.height)};
        if (!spec.contains(p) || !seen.insert(p).second) continue;
        inst.points.push_back(p);
    }
    refresh_coverage(inst);
    return inst;
}

void add_strip_clutter(GeneratedInstance& inst, std::size_t k, std::uint64_t seed) {
    Rng rng(mix_seed(seed, kClutterStream));
    PointHashSet seen(inst.points.begin(), inst.points.end());
    const double lo = std::max(0.0, inst.s.x - 0.5);
    const double hi = std::min(inst.spec.width, inst.s.x + 0.5);
    for (std::size_t added = 0; added < k;) {
        const Point p{rng.uniform(lo, hi), rng.uniform(0.0, inst.spec.height)};
        if (!inst.spec.contains(p) || !seen.insert(p).second) continue;
        inst.points.push_back(p);
        ++added;
    }
    refresh_coverage(inst);
}

}  // namespace udg
