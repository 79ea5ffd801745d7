#pragma once

#include <cmath>
#include <vector>

#include "udg/datagen.hpp"
#include "udg/geom.hpp"

namespace testing {

inline udg::PointSet random_points(std::size_t n, double w, double h, std::uint64_t seed) {
    udg::Rng rng(udg::mix_seed(seed, 77));
    udg::PointSet pts;
    while (pts.size() < n) pts.push_back({rng.uniform(0.0, w), rng.uniform(0.0, h)});
    return pts;
}

// Points around s = (0,0) with t = (0,tau) far enough away; a planted ring
// of `ring` points around s makes most instances feasible.
inline udg::PointSet ring_instance(std::size_t n, std::size_t ring, double tau, std::uint64_t seed) {
    udg::Rng rng(udg::mix_seed(seed, 78));
    udg::PointSet pts;
    const double rx = rng.uniform(0.55, 0.9), ry = rng.uniform(0.55, 0.9);
    for (std::size_t k = 0; k < ring && pts.size() < n; ++k) {
        const double a = 2.0 * M_PI * (static_cast<double>(k) + rng.uniform(-0.3, 0.3)) / static_cast<double>(ring);
        const udg::Point p{rx * std::cos(a), ry * std::sin(a)};
        if (udg::dist_sq(p, {0, 0}) <= 0.25 || udg::dist_sq(p, {0, tau}) <= 0.25) continue;
        pts.push_back(p);
    }
    while (pts.size() < n) {
        const udg::Point p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, tau + 1.0)};
        if (udg::dist_sq(p, {0, 0}) <= 0.25 || udg::dist_sq(p, {0, tau}) <= 0.25) continue;
        pts.push_back(p);
    }
    return pts;
}

}  // namespace testing
