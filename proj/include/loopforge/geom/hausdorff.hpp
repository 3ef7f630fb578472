#pragma once

#include <vector>

#include "loopforge/geom/point.hpp"

namespace loopforge::geom {

/// Symmetric Hausdorff distance between two closed polygonal images,
/// estimated by sampling each curve at spacing <= sample_step and measuring
/// exact point-to-segment distances against the other curve. The true value
/// lies within [returned, returned + sample_step/2]. sample_step <= 0 picks
/// a step from the curve geometry (1/4 of the median edge length).
double hausdorff_gap(const std::vector<Point>& c1, const std::vector<Point>& c2,
                     double sample_step = -1.0);

/// One-sided variant: sup over points of `from` of the distance to `to`.
double directed_hausdorff(const std::vector<Point>& from, const std::vector<Point>& to,
                          double sample_step = -1.0);

} // namespace loopforge::geom
