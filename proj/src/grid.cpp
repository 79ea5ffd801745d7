#include "udg/grid.hpp"

namespace udg {

CellMap bucket_points(std::span<const Point> points) {
    CellMap cells;
    cells.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        cells[cell_of(points[i])].push_back(static_cast<index_type>(i));
    }
    return cells;
}

}  // namespace udg
