#pragma once

#include <string>

#include "udg/io.hpp"

namespace udg {

struct RenderOptions {
    bool disks = false;        // draw the radius-1/2 disks
    double pixels_per_unit = 40.0;
};

// SVG 1.1 scene. Elements carry a class so they can be styled or counted:
// "point", "disk", "tree", "cycle", "st", "terminal". y points up.
std::string render_svg(const Instance& inst, const ResultFile* result, RenderOptions options = {});

}  // namespace udg
