#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

enum class HoleStyle { none, small1, large1, small4, large4 };

const char* to_string(HoleStyle style) noexcept;
std::optional<HoleStyle> parse_hole_style(const std::string& name);

struct Rect {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

    double width() const noexcept { return max_x - min_x; }
    double height() const noexcept { return max_y - min_y; }
    Point center() const noexcept { return {(min_x + max_x) / 2.0, (min_y + max_y) / 2.0}; }
    // Closed rectangle.
    bool contains(Point p) const noexcept {
        return min_x <= p.x && p.x <= max_x && min_y <= p.y && p.y <= max_y;
    }
};

// Outer rectangle [0,width] x [0,height] minus closed holes.
struct DomainSpec {
    double width = 4.0;
    double height = 1.0;
    std::vector<Rect> holes;
    HoleStyle style = HoleStyle::none;

    bool contains(Point p) const noexcept;
};

struct HoleSize {
    double width = 0.0;
    double height = 0.0;
};

/// Hole layout relative to the domain center (w, h = outer dimensions):
///   small1: one (w/4 x h/2) hole at the center
///   large1: one (w/2 x h/2) hole at the center
///   small4: four (w/8 x h/8) holes centered at (+-w/4, +-h/4)
///   large4: four (w/4 x h/4) holes centered at (+-w/4, +-h/4)
/// Four-hole layouts list the upper-left hole first. `hole` overrides the
/// hole dimensions. Throws InvalidDimensions if a hole leaves the rectangle
/// or two holes touch.
DomainSpec make_domain(HoleStyle style, double width, double height,
                       std::optional<HoleSize> hole = std::nullopt);

struct GeneratedInstance {
    PointSet points;
    Point s;
    Point t;
    std::uint64_t seed = 0;
    DomainSpec spec;
    // Set when a disk covers s or t; such an instance has no separation.
    bool terminal_covered = false;
};

/// splitmix64 finalizer; derives independent stream seeds from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// mt19937_64 with an explicit 53-bit double conversion, so streams are
// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::mt19937_64 engine_;
};

/// Uniform rejection sampling in the domain; duplicates are resampled.
/// s sits at the center of the first hole (or of the domain), t one unit
/// above the outer rectangle on the same vertical.
GeneratedInstance generate(const DomainSpec& spec, std::size_t n, std::uint64_t seed);

/// Adds k uniform domain points within horizontal distance 1/2 of s.
void add_strip_clutter(GeneratedInstance& inst, std::size_t k, std::uint64_t seed);

}  // namespace udg
